#ifndef POLYFUN_NULLMOD_HPP
#define POLYFUN_NULLMOD_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "polyfun/caps.hpp"
#include "polyfun/poly.hpp"
#include "polyfun/ring.hpp"

namespace polyfun {

// Eventual periodicity data of the power sequences s^0, s^1, ... over a
// subset: s^{k+p} = s^k for all k >= n0. Aggregated over the subset this
// makes degree truncation lossless: every polynomial can be folded to
// degree < preperiod + period without changing any evaluation on S.
struct ElementProfile {
    RingElement element;
    unsigned preperiod = 0; // n0
    u64 period = 1;         // p
};

struct PowerProfile {
    std::vector<ElementProfile> per_element;
    unsigned preperiod = 0; // N0 = max n0
    u64 period_lcm = 1;     // P = lcm of periods

    // Degree D* = N0 + P - 1: the truncated module at D* decides questions
    // about all degrees.
    unsigned exact_degree() const { return preperiod + static_cast<unsigned>(period_lcm) - 1; }
};

PowerProfile power_profile(const SubsetSpec& s, const Caps& caps = default_caps());

// Exponent folding k -> N0 + ((k - N0) mod P) for k >= N0, colliding
// coefficients summed. Preserves every evaluation on the profiled subset
// and commutes with coefficientwise constant multiplication.
Poly collapse(const Poly& f, const PowerProfile& profile);

// Canonical basis of {f : deg f <= d, f_side(s) in I for all s in S},
// coefficients flattened as slot (k, i) -> k*rank + i.
class KernelModule {
  public:
    KernelModule(FiniteRing ring, SubsetSpec subset, HowellBasis ideal_span, Side side,
                 unsigned degree, HowellBasis basis);

    const FiniteRing& ring() const { return ring_; }
    const SubsetSpec& subset() const { return subset_; }
    const HowellBasis& ideal_span() const { return ideal_span_; }
    Side side() const { return side_; }
    unsigned degree_bound() const { return degree_; }
    const HowellBasis& basis() const { return basis_; }

    mpz_class size() const { return basis_.span_size(); }
    std::vector<Poly> basis_polys() const;
    Poly row_poly(std::size_t i) const;

    bool value_in_ideal(const RingElement& v) const;

    Row flatten(const Poly& f) const; // throws on degree overflow

    bool operator==(const KernelModule& o) const { return basis_ == o.basis_; }

  private:
    FiniteRing ring_;
    SubsetSpec subset_;
    HowellBasis ideal_span_;
    Side side_;
    unsigned degree_;
    HowellBasis basis_;
};

// Kernel of the side-evaluation map into prod_{s in S} R/I at degree d.
// I is given as the module span of an ideal (empty span = the zero ideal).
KernelModule truncated_pol_module(const FiniteRing& ring, const SubsetSpec& s,
                                  const HowellBasis& ideal_span, unsigned d, Side side);
KernelModule truncated_pol_module(const FiniteRing& ring, const SubsetSpec& s,
                                  const IdealDesc& ideal, unsigned d, Side side);
// I = (0) convenience.
KernelModule truncated_null_module(const FiniteRing& ring, const SubsetSpec& s, unsigned d,
                                   Side side);

// True iff f lies in the span of K's basis. Degree overflow throws; callers
// with higher-degree polynomials collapse first.
bool module_membership(const KernelModule& k, const Poly& f);

struct ClosureWitness {
    Poly kernel_poly;     // f in the kernel
    RingElement constant; // b with f*b (right) or b*f (left) outside
    RingElement at;       // s in S where it shows
    RingElement value;    // the offending evaluation, not in I
};

struct ClosureCheck {
    bool closed = true;
    std::optional<ClosureWitness> witness;
};

// Tests closure of K under constant multiplication on K's side (right side:
// f*b; left side: b*f) for every basis row f and every generator b. The
// generators must span the acting ring (or subring) as a Z/m-module;
// bilinearity extends the check to everything. Deterministic witness: first
// failing basis row, then first failing generator.
ClosureCheck closure_under_constants(const KernelModule& k, const std::vector<RingElement>& gens);

struct Classification {
    Side side = Side::kRight;
    bool is_null_ideal_set = true;
    std::optional<ClosureWitness> witness;
    unsigned degree_used = 0; // D* for the exact classifier, dmax for the oracle
};

// Exact classifier: is N^side_R(S) (mod I) an ideal of R[x]? Decides via
// the truncated module at D* plus closure under constants; collapse makes
// the verdict exact for all degrees. Witnesses re-verify by evaluation.
Classification classify_null_ideal_set(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                       const HowellBasis& ideal_span,
                                       const Caps& caps = default_caps());
Classification classify_null_ideal_set(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                       const Caps& caps = default_caps());

// Number of distinct side-evaluation functions induced by R[x] on R:
// m^{r(D*+1)} / |kernel at D*|.
mpz_class count_poly_functions(const FiniteRing& ring, Side side, const Caps& caps = default_caps());
// Same number by the image route: the span size of the evaluation image.
mpz_class count_poly_functions_via_image(const FiniteRing& ring, Side side,
                                         const Caps& caps = default_caps());

// Independent oracle: enumerates polynomials of degree <= dmax, builds the
// null set by direct evaluation, and tests closure under constants against
// that set. No Howell forms, no collapse. Verdicts agree with the exact
// classifier whenever dmax >= D*(S).
Classification brute_force_classify(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                    unsigned dmax, const Caps& caps = default_caps());

// Null-set size found by the oracle at the given degree (for span
// cross-checks against the kernel).
mpz_class brute_force_null_count(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                 unsigned dmax, const Caps& caps = default_caps());

} // namespace polyfun

#endif
