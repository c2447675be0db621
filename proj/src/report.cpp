#include "polyfun/report.hpp"

namespace polyfun {

ordered_json subset_json(const SubsetSpec& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : s.elements()) arr.push_back(e.coords());
    return arr;
}

ordered_json witness_json(const ClosureWitness& w, Side side) {
    ordered_json j;
    j["f"] = w.kernel_poly.to_string();
    j["constant"] = w.constant.coords();
    j["product"] = side == Side::kRight ? "f*b" : "b*f";
    j["at"] = w.at.coords();
    j["value"] = w.value.coords();
    return j;
}

ordered_json classification_record(const std::string& ring_id, const SubsetSpec& s,
                                   const Classification& c, double ms) {
    ordered_json j;
    j["type"] = "classification";
    j["ring"] = ring_id;
    j["subset"] = subset_json(s);
    j["side"] = side_name(c.side);
    j["null_ideal_set"] = c.is_null_ideal_set;
    j["dstar"] = c.degree_used;
    j["witness"] = c.witness ? witness_json(*c.witness, c.side) : ordered_json(nullptr);
    j["ms"] = ms;
    return j;
}

ordered_json ringset_record(const IntSubset& s, Side side, const RingsetVerdict& v, double ms) {
    ordered_json j;
    j["type"] = "ringset";
    j["family"] = family_name(s.context().family);
    j["n"] = s.context().n;
    ordered_json elems = ordered_json::array();
    for (const auto& a : s.elements()) elems.push_back(ordered_json::parse(a.to_string()));
    j["subset"] = std::move(elems);
    j["side"] = side_name(side);
    if (v.not_ringset) {
        j["verdict"] = "NotRingset";
        j["modulus"] = v.failing_modulus;
        const LiftedCounterexample& ce = *v.counterexample;
        j["F"] = ce.f.to_string();
        j["G"] = ce.g.to_string();
        j["at"] = ordered_json::parse(ce.at.to_string());
        j["product_value"] = ce.product_value.to_string();
    } else {
        j["verdict"] = "NoObstruction";
        j["moduli_checked"] = v.moduli_checked;
    }
    j["ms"] = ms;
    return j;
}

ordered_json theorem_record(const std::string& ring_id, const std::string& theorem,
                            const SubsetSpec& s, Side side, const TheoremReport& r, double ms) {
    ordered_json j;
    j["type"] = "theorem";
    j["theorem"] = theorem;
    j["ring"] = ring_id;
    j["subset"] = subset_json(s);
    j["side"] = side_name(side);
    j["hypothesis_holds"] = r.hypothesis_holds;
    j["conclusion_checked"] = r.conclusion_checked;
    j["conclusion_holds"] = r.conclusion_holds;
    j["detail"] = r.detail;
    j["ms"] = ms;
    return j;
}

ordered_json count_record(const std::string& ring_id, Side side, const mpz_class& count,
                          double ms) {
    ordered_json j;
    j["type"] = "count";
    j["ring"] = ring_id;
    j["side"] = side_name(side);
    j["functions"] = count.get_str();
    j["ms"] = ms;
    return j;
}

ordered_json search_record(const std::string& ring_id, const std::string& status,
                           const Classification& right, const Classification& left, double ms) {
    ordered_json j;
    j["type"] = "search";
    j["ring"] = ring_id;
    j["status"] = status;
    j["right_null_ideal"] = right.is_null_ideal_set;
    j["left_null_ideal"] = left.is_null_ideal_set;
    j["right_witness"] = right.witness ? witness_json(*right.witness, Side::kRight) : ordered_json(nullptr);
    j["left_witness"] = left.witness ? witness_json(*left.witness, Side::kLeft) : ordered_json(nullptr);
    j["ms"] = ms;
    return j;
}

ordered_json search_skip_record(const std::string& ring_id, const std::string& error) {
    ordered_json j;
    j["type"] = "search";
    j["ring"] = ring_id;
    j["status"] = "skipped";
    j["error"] = error;
    return j;
}

std::string strip_timing(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    j.erase("ms");
    return j.dump();
}

} // namespace polyfun
