#include "reklab/sweep.hpp"

#include "parallel.hpp"
#include "reklab/rng.hpp"

#include <algorithm>

namespace reklab {

namespace {

// Deterministic instance recipe drawn from the per-instance stream. Family
// parameters are clamped into valid shapes so every synthesized spec builds.
gen::GeneratorSpec synthesize_spec(SplitMix64& rng, const SweepConfig& cfg) {
    gen::GeneratorSpec spec;
    spec.family = cfg.families[rng.below(cfg.families.size())];
    const int span = cfg.factor_order_max - cfg.factor_order_min + 1;
    spec.order = cfg.factor_order_min + static_cast<int>(rng.below(span));

    if (spec.family == "cycle") {
        spec.order = std::max(spec.order, 3);
    } else if (spec.family == "harary") {
        spec.order = std::max(spec.order, 4);
        std::vector<int> valid;
        for (int k = 2; k < spec.order && k <= 5; ++k)
            if ((static_cast<long long>(k) * spec.order) % 2 == 0) valid.push_back(k);
        spec.degree = valid[rng.below(valid.size())];
    } else if (spec.family == "circulant") {
        spec.order = std::max(spec.order, 4);
        const int want = 1 + static_cast<int>(rng.below(2));
        std::vector<int> pool;
        for (int s = 1; s <= spec.order / 2; ++s) pool.push_back(s);
        for (int i = 0; i < want && !pool.empty(); ++i) {
            const std::size_t pick = rng.below(pool.size());
            spec.offsets.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<long>(pick));
        }
        std::sort(spec.offsets.begin(), spec.offsets.end());
    } else if (spec.family == "random-regular") {
        spec.order = std::max(spec.order, 4);
        std::vector<int> valid;
        for (int d = 2; d < spec.order && d <= 5; ++d)
            if ((static_cast<long long>(d) * spec.order) % 2 == 0) valid.push_back(d);
        spec.degree = valid[rng.below(valid.size())];
        spec.seed = rng.next();
    } else if (spec.family == "subdivided-complete") {
        spec.order = std::max(spec.order - 1, 4); // order of the base K_n
        spec.edge_index = static_cast<int>(rng.below(spec.order * (spec.order - 1) / 2));
    }
    return spec;
}

struct InstanceOutcome {
    gen::GeneratorSpec spec;
    int n = 0;
    std::vector<TheoremReport> reports; // aligned with config.theorems
};

} // namespace

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
    SweepConfig cfg;
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.instances = j.value("instances", 10);
    for (const auto& name : j.value("theorems", std::vector<std::string>{}))
        cfg.theorems.push_back(theorem_from_string(name));
    cfg.families = j.value("families", std::vector<std::string>{});
    cfg.factor_order_min = j.value("factor_order_min", 5);
    cfg.factor_order_max = j.value("factor_order_max", 8);
    cfg.n_min = j.value("n_min", 4);
    cfg.n_max = j.value("n_max", 5);
    cfg.budget.oracle = j.value("budget_oracle", 24);
    cfg.budget.flow = j.value("budget_flow", 2000);
    cfg.threads = j.value("threads", 0);
    cfg.output = j.value("output", std::string{});
    return cfg;
}

OrderedJson SweepConfig::to_json() const {
    OrderedJson j;
    j["seed"] = seed;
    j["instances"] = instances;
    std::vector<std::string> names;
    for (auto id : theorems) names.push_back(to_string(id));
    j["theorems"] = names;
    j["families"] = families;
    j["factor_order_min"] = factor_order_min;
    j["factor_order_max"] = factor_order_max;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["budget_oracle"] = budget.oracle;
    j["budget_flow"] = budget.flow;
    j["threads"] = threads;
    j["output"] = output;
    return j;
}

OrderedJson SweepSummary::to_json() const {
    OrderedJson j;
    j["config"] = config.to_json();
    j["instances"] = config.instances;
    OrderedJson per;
    for (auto id : config.theorems) {
        const auto& c = per_theorem.at(to_string(id));
        OrderedJson cj;
        cj["confirmed"] = c.confirmed;
        cj["violated"] = c.violated;
        cj["hypotheses_unmet"] = c.hypotheses_unmet;
        cj["oracle_too_large"] = c.oracle_too_large;
        per[to_string(id)] = std::move(cj);
    }
    j["per_theorem"] = std::move(per);
    auto viols = OrderedJson::array();
    for (const auto& v : violations) {
        OrderedJson vj;
        vj["instance"] = v.instance;
        vj["theorem"] = to_string(v.theorem);
        vj["generator"] = json_of(v.spec);
        vj["n"] = v.n;
        vj["report"] = json_of(v.report);
        viols.push_back(std::move(vj));
    }
    j["violations"] = std::move(viols);
    return j;
}

SweepSummary run_sweep(const SweepConfig& input) {
    SweepConfig cfg = input;
    if (cfg.instances < 0) throw input_error("sweep instance count must be nonnegative");
    if (cfg.factor_order_min < 1 || cfg.factor_order_min > cfg.factor_order_max)
        throw input_error("bad factor order range");
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw input_error("bad n range");
    if (cfg.theorems.empty()) cfg.theorems = all_theorems();
    if (cfg.families.empty()) cfg.families = gen::known_families();
    for (const auto& f : cfg.families) {
        bool known = false;
        for (const auto& k : gen::known_families()) known = known || k == f;
        if (!known) throw input_error("unknown generator family `" + f + "` in sweep config");
    }

    // per-instance seeds drawn up front so instances stay independent
    std::vector<std::uint64_t> seeds(cfg.instances);
    SplitMix64 seeder(cfg.seed);
    for (auto& s : seeds) s = seeder.next();

    std::vector<InstanceOutcome> outcomes(cfg.instances);
    const int threads = resolve_threads(cfg.threads);
    EngineOptions opts;
    opts.oracle_limit = cfg.budget.oracle;
    opts.threads = 1; // parallelism lives at the instance level here

    detail::run_chunks(cfg.instances, threads, [&](long long, long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            SplitMix64 rng(seeds[i]);
            InstanceOutcome& out = outcomes[i];
            out.spec = synthesize_spec(rng, cfg);
            out.n = cfg.n_min + static_cast<int>(rng.below(cfg.n_max - cfg.n_min + 1));
            const Graph graph = out.spec.build();
            for (auto id : cfg.theorems)
                out.reports.push_back(check_theorem(id, graph, out.n, cfg.budget, opts));
        }
    });

    SweepSummary summary;
    summary.config = cfg;
    for (auto id : cfg.theorems) summary.per_theorem[to_string(id)] = VerdictCounts{};
    for (int i = 0; i < cfg.instances; ++i) {
        const auto& out = outcomes[i];
        for (std::size_t t = 0; t < cfg.theorems.size(); ++t) {
            const auto& report = out.reports[t];
            auto& counts = summary.per_theorem[to_string(cfg.theorems[t])];
            switch (report.verdict) {
                case Verdict::confirmed: ++counts.confirmed; break;
                case Verdict::violated: ++counts.violated; break;
                case Verdict::hypotheses_unmet: ++counts.hypotheses_unmet; break;
                case Verdict::oracle_too_large: ++counts.oracle_too_large; break;
            }
            if (report.verdict == Verdict::violated)
                summary.violations.push_back({i, cfg.theorems[t], out.spec, out.n, report});
        }
    }
    return summary;
}

} // namespace reklab
