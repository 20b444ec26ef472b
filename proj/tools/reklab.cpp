// reklab: restricted edge-connectivity lab.
//
// Subcommands: compute, invariants, product, gen, verify, sweep.
// Exit codes: 0 ok/confirmed, 1 violated, 2 input error, 3 +infinity,
// 4 oracle/budget refusal.

#include <CLI11.hpp>

#include "reklab/connectivity.hpp"
#include "reklab/generators.hpp"
#include "reklab/invariants.hpp"
#include "reklab/io.hpp"
#include "reklab/products.hpp"
#include "reklab/report.hpp"
#include "reklab/sweep.hpp"
#include "reklab/theorems.hpp"

#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfinity = 3;
constexpr int kExitRefusal = 4;

reklab::GraphFormat parse_format(const std::string& name) {
    if (name == "el" || name == "edge-list") return reklab::GraphFormat::edge_list;
    if (name == "g6" || name == "graph6") return reklab::GraphFormat::graph6;
    throw reklab::input_error("unknown format `" + name + "` (expected el or g6)");
}

reklab::Graph load_graph(const std::string& path, const std::string& format_override) {
    const reklab::GraphFormat format = format_override.empty()
                                           ? reklab::format_from_extension(path)
                                           : parse_format(format_override);
    return reklab::read_graph_file(path, format);
}

void emit(const reklab::OrderedJson& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw reklab::input_error("cannot open `" + out_path + "` for writing");
    out << j.dump(2) << "\n";
}

struct ComputeArgs {
    std::string file, format, method = "flow";
    int k = 1;
    bool json = false;
    int oracle_limit = 24;
    int threads = 0;
};

int run_compute(const ComputeArgs& args) {
    const reklab::Graph g = load_graph(args.file, args.format);
    reklab::EngineOptions opts;
    opts.oracle_limit = args.oracle_limit;
    opts.threads = args.threads;
    const auto rc = reklab::restricted_connectivity(
        g, args.k, reklab::cut_method_from_string(args.method), opts);

    if (args.json) {
        reklab::OrderedJson j;
        j["file"] = args.file;
        j["k"] = args.k;
        j["method"] = args.method;
        j["graph"] = {{"order", g.order()}, {"size", g.edge_count()}};
        const auto rj = reklab::json_of(rc);
        j["value"] = rj.at("value");
        j["witness"] = rj.at("witness");
        std::cout << j.dump(2) << "\n";
    } else if (rc.infinite()) {
        std::cout << "lambda_" << args.k << " = infinity\n";
    } else {
        std::cout << "lambda_" << args.k << " = " << rc.value() << "\n";
        const auto side = rc.cut->side_x.to_vector();
        std::cout << "witness side (" << side.size() << " vertices):";
        for (int v : side) std::cout << " " << v;
        std::cout << "\n";
    }
    return rc.infinite() ? kExitInfinity : kExitOk;
}

int run_invariants(const std::string& file, const std::string& format) {
    const reklab::Graph g = load_graph(file, format);
    std::cout << reklab::json_of(reklab::degree_profile(g)).dump(2) << "\n";
    return kExitOk;
}

struct ProductArgs {
    std::string op, left, right, out, format, out_format, map_out;
};

int run_product(const ProductArgs& args) {
    const reklab::ProductKind kind = reklab::product_kind_from_string(args.op);
    std::optional<reklab::ProductGraph> product;
    if (kind == reklab::ProductKind::k2odot) {
        if (!args.right.empty())
            throw reklab::input_error("k2odot takes a single factor file");
        product = reklab::k2_odot(load_graph(args.left, args.format));
    } else {
        if (args.right.empty())
            throw reklab::input_error("product `" + args.op + "` needs two factor files");
        const reklab::Graph g = load_graph(args.left, args.format);
        const reklab::Graph h = load_graph(args.right, args.format);
        switch (kind) {
            case reklab::ProductKind::strong: product = reklab::strong_product(g, h); break;
            case reklab::ProductKind::cartesian: product = reklab::cartesian_product(g, h); break;
            case reklab::ProductKind::direct: product = reklab::direct_product(g, h); break;
            default: break;
        }
    }

    if (args.out.empty()) {
        reklab::write_edge_list(product->graph(), std::cout);
    } else {
        const reklab::GraphFormat f = args.out_format.empty()
                                          ? reklab::format_from_extension(args.out)
                                          : parse_format(args.out_format);
        reklab::write_graph_file(product->graph(), args.out, f);
    }

    std::string map_path = args.map_out;
    if (map_path.empty() && !args.out.empty()) map_path = args.out + ".map.json";
    if (!map_path.empty()) {
        reklab::OrderedJson map;
        map["kind"] = reklab::to_string(product->kind());
        map["m"] = product->left_order();
        map["n"] = product->right_order();
        auto pairs = reklab::OrderedJson::array();
        for (int v = 0; v < product->graph().order(); ++v) {
            const auto [x, y] = product->project(v);
            pairs.push_back({x, y});
        }
        map["pairs"] = std::move(pairs);
        emit(map, map_path);
    }
    return kExitOk;
}

struct GenArgs {
    std::string family, out, out_format;
    int order = 0, degree = 0, edge_index = 0;
    std::vector<int> offsets;
    std::uint64_t seed = 0;
};

int run_gen(const GenArgs& args) {
    reklab::gen::GeneratorSpec spec;
    spec.family = args.family;
    spec.order = args.order;
    spec.degree = args.degree;
    spec.offsets = args.offsets;
    spec.edge_index = args.edge_index;
    spec.seed = args.seed;
    const reklab::Graph g = spec.build();
    if (args.out.empty()) {
        reklab::write_edge_list(g, std::cout);
    } else {
        const reklab::GraphFormat f = args.out_format.empty()
                                          ? reklab::format_from_extension(args.out)
                                          : parse_format(args.out_format);
        reklab::write_graph_file(g, args.out, f);
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string theorem, file, format;
    int n = 4;
    bool json = false;
    int budget_oracle = 24;
    int budget_flow = 2000;
    int threads = 0;
};

int run_verify(const VerifyArgs& args) {
    const reklab::Graph g = load_graph(args.file, args.format);
    reklab::Budget budget{args.budget_oracle, args.budget_flow};
    reklab::EngineOptions opts;
    opts.threads = args.threads;
    const auto report =
        reklab::check_theorem(reklab::theorem_from_string(args.theorem), g, args.n, budget, opts);

    if (args.json) {
        std::cout << reklab::json_of(report).dump(2) << "\n";
    } else {
        std::cout << "theorem " << reklab::to_string(report.theorem) << "\n";
        for (const auto& h : report.hypotheses)
            std::cout << "  [" << (h.holds ? "ok" : "FAIL") << "] " << h.name << "\n";
        std::cout << "  predicted (" << reklab::to_string(report.predicted.relation)
                  << "): " << report.predicted.value << "\n";
        if (report.has_computed)
            std::cout << "  computed: "
                      << (report.computed_infinite ? std::string("infinity")
                                                   : std::to_string(report.computed_value))
                      << "  [" << report.method << "]\n";
        if (!report.note.empty()) std::cout << "  note: " << report.note << "\n";
        std::cout << "  verdict: " << reklab::to_string(report.verdict) << "\n";
    }
    switch (report.verdict) {
        case reklab::Verdict::violated: return kExitViolated;
        case reklab::Verdict::oracle_too_large: return kExitRefusal;
        default: return kExitOk;
    }
}

struct SweepArgs {
    std::string config_file, out;
    std::uint64_t seed = 1;
    int instances = 10;
    std::vector<std::string> theorems, families;
    int factor_order_min = 5, factor_order_max = 8;
    int n_min = 4, n_max = 5;
    int budget_oracle = 24, budget_flow = 2000;
    int threads = 0;
};

int run_sweep_cmd(const SweepArgs& args) {
    reklab::SweepConfig cfg;
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in) throw reklab::input_error("cannot open `" + args.config_file + "`");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw reklab::input_error("bad sweep config: " + std::string(e.what()));
        }
        cfg = reklab::SweepConfig::from_json(j);
    } else {
        cfg.seed = args.seed;
        cfg.instances = args.instances;
        for (const auto& t : args.theorems) cfg.theorems.push_back(reklab::theorem_from_string(t));
        cfg.families = args.families;
        cfg.factor_order_min = args.factor_order_min;
        cfg.factor_order_max = args.factor_order_max;
        cfg.n_min = args.n_min;
        cfg.n_max = args.n_max;
        cfg.budget.oracle = args.budget_oracle;
        cfg.budget.flow = args.budget_flow;
        cfg.threads = args.threads;
    }

    const auto summary = reklab::run_sweep(cfg);
    const std::string out_path = args.out.empty() ? cfg.output : args.out;
    emit(summary.to_json(), out_path);
    if (!out_path.empty())
        std::cerr << "sweep: " << cfg.instances << " instances, "
                  << (summary.any_violation() ? "violations found" : "no violations") << "\n";
    return summary.any_violation() ? kExitViolated : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted edge-connectivity lab"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "lambda / lambda_2 / lambda_3 of a graph");
    c->add_option("file", compute.file, "graph file (.el or .g6)")->required();
    c->add_option("--k", compute.k, "restriction level")->check(CLI::Range(1, 3));
    c->add_option("--method", compute.method, "flow or oracle");
    c->add_option("--format", compute.format, "input format override (el|g6)");
    c->add_flag("--json", compute.json, "emit a JSON report");
    c->add_option("--oracle-limit", compute.oracle_limit, "max order for the oracle");
    c->add_option("--threads", compute.threads, "worker threads (0: REK_LAB_THREADS/auto)");

    std::string inv_file, inv_format;
    auto* i = app.add_subcommand("invariants", "degree profile (delta, Delta, xi, xi3)");
    i->add_option("file", inv_file, "graph file")->required();
    i->add_option("--format", inv_format, "input format override (el|g6)");

    ProductArgs product;
    auto* p = app.add_subcommand("product", "strong/cartesian/direct product or K2 (.) H");
    p->add_option("--op", product.op, "strong|cartesian|direct|k2odot")->required();
    p->add_option("left", product.left, "left factor file")->required();
    p->add_option("right", product.right, "right factor file (omit for k2odot)");
    p->add_option("-o,--out", product.out, "output graph file");
    p->add_option("--format", product.format, "input format override (el|g6)");
    p->add_option("--out-format", product.out_format, "output format override (el|g6)");
    p->add_option("--map-out", product.map_out, "index-map JSON path");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate a factor graph");
    g->add_option("--family", gen.family, "cycle|complete|path|star|harary|circulant|random-regular|subdivided-complete")
        ->required();
    g->add_option("--order", gen.order, "vertex count");
    g->add_option("--degree", gen.degree, "degree (harary k, random-regular d)");
    g->add_option("--offsets", gen.offsets, "circulant offsets")->delimiter(',');
    g->add_option("--edge-index", gen.edge_index, "subdivided-complete edge index");
    g->add_option("--seed", gen.seed, "random-regular seed");
    g->add_option("-o,--out", gen.out, "output file");
    g->add_option("--out-format", gen.out_format, "output format override (el|g6)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check a theorem against the engine");
    v->add_option("--theorem", verify.theorem, "t1.1|t1.2|l2.4|l2.5|t3.1|t3.2|c3.3")->required();
    v->add_option("file", verify.file, "factor graph file")->required();
    v->add_option("--n", verify.n, "cycle/complete factor order");
    v->add_option("--format", verify.format, "input format override (el|g6)");
    v->add_flag("--json", verify.json, "emit the TheoremReport as JSON");
    v->add_option("--budget-oracle", verify.budget_oracle, "oracle budget (product order)");
    v->add_option("--budget-flow", verify.budget_flow, "flow budget (product order)");
    v->add_option("--threads", verify.threads, "worker threads");

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep", "generator x theorem verification grid");
    s->add_option("--config", sweep.config_file, "sweep config JSON (overrides other flags)");
    s->add_option("--seed", sweep.seed, "sweep seed");
    s->add_option("--instances", sweep.instances, "instance count");
    s->add_option("--theorems", sweep.theorems, "theorem ids")->delimiter(',');
    s->add_option("--families", sweep.families, "generator families")->delimiter(',');
    s->add_option("--factor-order-min", sweep.factor_order_min, "smallest factor order");
    s->add_option("--factor-order-max", sweep.factor_order_max, "largest factor order");
    s->add_option("--n-min", sweep.n_min, "smallest cycle/complete order");
    s->add_option("--n-max", sweep.n_max, "largest cycle/complete order");
    s->add_option("--budget-oracle", sweep.budget_oracle, "oracle budget (product order)");
    s->add_option("--budget-flow", sweep.budget_flow, "flow budget (product order)");
    s->add_option("--threads", sweep.threads, "worker threads");
    s->add_option("-o,--out", sweep.out, "summary JSON path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c) return run_compute(compute);
        if (*i) return run_invariants(inv_file, inv_format);
        if (*p) return run_product(product);
        if (*g) return run_gen(gen);
        if (*v) return run_verify(verify);
        if (*s) return run_sweep_cmd(sweep);
    } catch (const reklab::oracle_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const reklab::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
