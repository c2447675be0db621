#ifndef POLYFUN_FRAMEWORK_HPP
#define POLYFUN_FRAMEWORK_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyfun/nullmod.hpp"

namespace polyfun {

// The unified object pol^side(R, S, I): polynomials over R mapping every
// element of S (a subset of the subring T) into the ideal I of T.
struct PolContext {
    FiniteRing ring;    // R
    SubringDesc subring; // T
    IdealDesc ideal;    // I, an ideal of T
    SubsetSpec subset;  // S, contained in T
    Side side = Side::kRight;

    PolContext(FiniteRing r, SubringDesc t, IdealDesc i, SubsetSpec s, Side sd);

    static PolContext null_context(const FiniteRing& r, const SubsetSpec& s, Side side);
};

KernelModule pol_module(const PolContext& ctx, unsigned d);

// Profile-driven degree at which truncation is exact for this context.
unsigned exact_degree(const PolContext& ctx, const Caps& caps = default_caps());

// Closure of pol_module under constant multiplication by T's module basis
// (right side: f*t, left side: t*f). By Z/m-bilinearity this decides the
// full T-module question at the given degree.
ClosureCheck is_right_T_module(const PolContext& ctx, unsigned d);

struct TheoremReport {
    bool hypothesis_holds = false;
    bool conclusion_checked = false;
    bool conclusion_holds = false;
    std::string detail;
};

// Images criterion: if pol^side(R,S,I) is closed under constants c_side(s)
// for c in C, s in S, it must be closed under right (resp. left)
// multiplication by every c in C. The conclusion is verified by direct
// evaluation; a counterexample would falsify the theorem and aborts via
// CheckFailed.
TheoremReport images_criterion_check(const PolContext& ctx, const std::vector<Poly>& cs,
                                     unsigned d);

// Units theorem: if T is generated by units over its center and S is closed
// under conjugation by units of T, then pol^side(R,S,I) is a T-module.
// Hypothesis failure draws no conclusion; a verified hypothesis with a
// failing closure aborts via CheckFailed.
TheoremReport units_theorem_check(const PolContext& ctx, unsigned d,
                                  const Caps& caps = default_caps());

// Transports a subset to the opposite ring (same coordinates).
SubsetSpec transport_subset(const SubsetSpec& s, const FiniteRing& opposite);
// Transports a polynomial coefficientwise to the opposite ring.
Poly transport_poly(const Poly& f, const FiniteRing& opposite);

} // namespace polyfun

#endif
