#include "reklab/report.hpp"

namespace reklab {

OrderedJson json_of(const CutResult& cut) {
    OrderedJson j;
    j["value"] = cut.value;
    j["side_x"] = cut.side_x.to_vector();
    auto edges = OrderedJson::array();
    for (const auto& [u, v] : cut.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

OrderedJson json_of(const RestrictedCut& rc) {
    OrderedJson j;
    j["k"] = rc.k;
    if (rc.infinite()) {
        j["value"] = "infinity";
        j["witness"] = nullptr;
    } else {
        j["value"] = rc.value();
        j["witness"] = json_of(*rc.cut);
    }
    return j;
}

OrderedJson json_of(const DegreeProfile& profile) {
    OrderedJson j;
    j["min_degree"] = profile.min_degree;
    j["max_degree"] = profile.max_degree;
    if (profile.xi)
        j["xi"] = *profile.xi;
    else
        j["xi"] = "undefined";
    if (profile.xi3)
        j["xi3"] = *profile.xi3;
    else
        j["xi3"] = "undefined";
    return j;
}

OrderedJson json_of(const TheoremReport& report) {
    OrderedJson j;
    j["theorem"] = to_string(report.theorem);
    auto hyps = OrderedJson::array();
    for (const auto& h : report.hypotheses) {
        OrderedJson hj;
        hj["name"] = h.name;
        hj["holds"] = h.holds;
        hyps.push_back(std::move(hj));
    }
    j["hypotheses"] = std::move(hyps);
    j["predicted"] = {{"relation", to_string(report.predicted.relation)},
                      {"value", report.predicted.value}};
    if (!report.has_computed)
        j["computed"] = nullptr;
    else if (report.computed_infinite)
        j["computed"] = "infinity";
    else
        j["computed"] = report.computed_value;
    j["method"] = report.method;
    j["verdict"] = to_string(report.verdict);
    j["note"] = report.note;
    return j;
}

OrderedJson json_of(const ClassifierVerdict& verdict) {
    OrderedJson j;
    j["property"] = to_string(verdict.property);
    j["applicable"] = verdict.applicable;
    j["holds"] = verdict.holds;
    j["computed"] = verdict.computed ? OrderedJson(*verdict.computed) : OrderedJson(nullptr);
    j["reference"] = verdict.reference ? OrderedJson(*verdict.reference) : OrderedJson(nullptr);
    j["certificate"] =
        verdict.certificate ? json_of(*verdict.certificate) : OrderedJson(nullptr);
    j["note"] = verdict.note;
    return j;
}

OrderedJson json_of(const gen::GeneratorSpec& spec) {
    OrderedJson j;
    j["family"] = spec.family;
    j["order"] = spec.order;
    j["degree"] = spec.degree;
    j["offsets"] = spec.offsets;
    j["edge_index"] = spec.edge_index;
    j["seed"] = spec.seed;
    return j;
}

gen::GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
    gen::GeneratorSpec spec;
    spec.family = j.at("family").get<std::string>();
    spec.order = j.value("order", 0);
    spec.degree = j.value("degree", 0);
    spec.offsets = j.value("offsets", std::vector<int>{});
    spec.edge_index = j.value("edge_index", 0);
    spec.seed = j.value("seed", std::uint64_t{0});
    return spec;
}

} // namespace reklab
