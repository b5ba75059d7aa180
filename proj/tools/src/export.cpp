#include "sextic_cli/export.hpp"

#include <map>

namespace sextic::cli {

using nlohmann::json;

namespace {

// construction lookup by printed code
std::map<std::string, std::optional<ConstructionRecord>> constructions(CubicAmbient a) {
    std::map<std::string, std::optional<ConstructionRecord>> out;
    for (const auto& e : ground_truth(a)) out.emplace(to_string(e.scheme), e.construction);
    return out;
}

}  // namespace

json scheme_json(const Scheme& s, const Verdict& v, const std::optional<ConstructionRecord>& construction) {
    const auto c = classify_shape(s);
    json j;
    j["code"] = to_string(s);
    j["family"] = c.tag;
    j["params"] = c.params ? json{{"alpha", c.params->alpha}, {"beta", c.params->beta}, {"gamma", c.params->gamma}}
                           : json(nullptr);
    j["b0"] = b0(s);
    // sides are only well defined when one coloring survives
    const auto halves = colorings(s);
    if (halves.size() == 1) {
        j["chi_plus"] = halves.front().chi_plus();
        j["chi_minus"] = halves.front().chi_minus();
    } else {
        j["chi_plus"] = nullptr;
        j["chi_minus"] = nullptr;
    }
    j["status"] = v.admitted() ? "admitted" : "excluded";
    j["rules"] = v.violated;
    if (construction)
        j["construction"] = {{"method", std::string(to_string(construction->method))},
                             {"source", construction->source ? json(*construction->source) : json(nullptr)}};
    else
        j["construction"] = nullptr;
    return j;
}

json classification_json(const ClassifyResult& r, bool with_admitted, bool with_excluded) {
    const auto known = constructions(r.ambient);
    json list = json::array();
    if (with_admitted)
        for (const auto& s : r.admitted) {
            auto it = known.find(to_string(s));
            list.push_back(scheme_json(s, Verdict{}, it == known.end() ? std::nullopt : it->second));
        }
    if (with_excluded) {
        auto excluded = r.excluded;
        std::stable_sort(excluded.begin(), excluded.end(),
                         [](const auto& a, const auto& b) { return scheme_less(a.first, b.first); });
        for (const auto& [s, v] : excluded) list.push_back(scheme_json(s, v, std::nullopt));
    }
    return {{"ambient", std::string(to_string(r.ambient))}, {"chi", euler_characteristic(r.ambient)}, {"schemes", list}};
}

json catalog_json(CubicAmbient ambient) {
    json list = json::array();
    for (const auto& e : ground_truth(ambient)) list.push_back(scheme_json(e.scheme, evaluate(e.scheme), e.construction));
    return {{"ambient", std::string(to_string(ambient))}, {"chi", euler_characteristic(ambient)}, {"schemes", list}};
}

}  // namespace sextic::cli
