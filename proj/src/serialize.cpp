#include "qbill/serialize.hpp"

namespace qbill {

using nlohmann::json;

json to_json(const CycleStructure& s) {
    json j = {{"n", s.params.n}, {"q", s.params.q}, {"b", s.params.b}, {"r", s.params.r}};
    if (s.offset != 0) j["offset"] = s.offset;
    j["cycles"] = json::array();
    for (const Cycle& c : s.cycles) j["cycles"].push_back({{"min", c.min}, {"elements", c.elements}});
    return j;
}

json to_json(const Word& w) {
    return {{"m", w.m}, {"period", w.period()}, {"digits", to_string(w)}};
}

json to_json(const RecognitionResult& r) {
    if (!r.accepted) return {{"verdict", "reject"}, {"reason", reason_code(r.reason)}};
    return {{"verdict", "accept"}, {"n", r.params.n},       {"q", r.params.q},
            {"b", r.params.b},     {"r", r.params.r},       {"rotation", r.rotation},
            {"offset", r.offset},  {"recognized", r.recognized}};
}

json to_json(const TranslationClass& c) {
    json j = {{"n", c.params.n}, {"q", c.params.q}, {"members", json::array()}};
    for (const ClassMember& m : c.members)
        j["members"].push_back(
            {{"offset", m.structure.offset}, {"lengths", lengths(m.structure)}, {"word", to_string(m.word)}});
    return j;
}

json to_json(const std::vector<CrossingEvent>& events, const RationalRay& ray) {
    json j = {{"p0", {format_rational(ray.p0.u), format_rational(ray.p0.v)}},
              {"v0", {format_rational(ray.v0.u), format_rational(ray.v0.v)}},
              {"events", json::array()}};
    std::string labels;
    for (const CrossingEvent& e : events) {
        j["events"].push_back({{"t", format_rational(e.t)}, {"family", e.family}, {"label", e.label}});
        labels.push_back(static_cast<char>('0' + e.label));
    }
    j["labels"] = labels;
    return j;
}

}  // namespace qbill
