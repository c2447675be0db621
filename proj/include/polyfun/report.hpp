#ifndef POLYFUN_REPORT_HPP
#define POLYFUN_REPORT_HPP

#include <string>

#include "json.hpp"
#include "polyfun/framework.hpp"
#include "polyfun/ivp.hpp"
#include "polyfun/nullmod.hpp"

namespace polyfun {

using ordered_json = nlohmann::ordered_json;

// Single-line JSON records. Field order is fixed so that identical inputs
// produce byte-identical lines; "ms" carries wall time and is the one field
// determinism checks ignore.

ordered_json subset_json(const SubsetSpec& s);
ordered_json witness_json(const ClosureWitness& w, Side side);

ordered_json classification_record(const std::string& ring_id, const SubsetSpec& s,
                                   const Classification& c, double ms);

ordered_json ringset_record(const IntSubset& s, Side side, const RingsetVerdict& v, double ms);

ordered_json theorem_record(const std::string& ring_id, const std::string& theorem,
                            const SubsetSpec& s, Side side, const TheoremReport& r, double ms);

ordered_json count_record(const std::string& ring_id, Side side, const mpz_class& count,
                          double ms);

ordered_json search_record(const std::string& ring_id, const std::string& status,
                           const Classification& right, const Classification& left, double ms);
ordered_json search_skip_record(const std::string& ring_id, const std::string& error);

// The same record with the "ms" field removed (for determinism compares).
std::string strip_timing(const std::string& line);

} // namespace polyfun

#endif
