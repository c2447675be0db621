#include "polyfun/framework.hpp"

#include <set>

#include "polyfun/errors.hpp"

namespace polyfun {

PolContext::PolContext(FiniteRing r, SubringDesc t, IdealDesc i, SubsetSpec s, Side sd)
    : ring(std::move(r)), subring(std::move(t)), ideal(std::move(i)), subset(std::move(s)),
      side(sd) {
    if (!subring.ring().same_as(ring) || !subset.ring().same_as(ring) ||
        !ideal.subring().ring().same_as(ring))
        throw std::invalid_argument("pol context: mixed rings");
    for (const auto& row : ideal.basis().rows())
        if (!subring.basis().contains(row))
            throw std::invalid_argument("pol context: ideal does not lie in the subring");
    for (const auto& s_el : subset.elements())
        if (!subring.contains(s_el))
            throw std::invalid_argument("pol context: subset element outside the subring");
}

PolContext PolContext::null_context(const FiniteRing& r, const SubsetSpec& s, Side side) {
    SubringDesc full = SubringDesc::full(r);
    return PolContext(r, full, IdealDesc::zero(full), s, side);
}

KernelModule pol_module(const PolContext& ctx, unsigned d) {
    return truncated_pol_module(ctx.ring, ctx.subset, ctx.ideal.basis(), d, ctx.side);
}

unsigned exact_degree(const PolContext& ctx, const Caps& caps) {
    return power_profile(ctx.subset, caps).exact_degree();
}

ClosureCheck is_right_T_module(const PolContext& ctx, unsigned d) {
    KernelModule k = pol_module(ctx, d);
    return closure_under_constants(k, ctx.subring.module_basis());
}

TheoremReport images_criterion_check(const PolContext& ctx, const std::vector<Poly>& cs,
                                     unsigned d) {
    KernelModule k = pol_module(ctx, d);

    // Image set {c_side(s)}.
    std::set<RingElement> images;
    for (const auto& c : cs)
        for (const auto& s_el : ctx.subset.elements()) images.insert(eval_side(c, s_el, ctx.side));

    TheoremReport rep;
    ClosureCheck under_images =
        closure_under_constants(k, std::vector<RingElement>(images.begin(), images.end()));
    rep.hypothesis_holds = under_images.closed;
    if (!rep.hypothesis_holds) {
        rep.detail = "not closed under the images; criterion draws no conclusion";
        return rep;
    }

    // Conclusion: closure under multiplication by each full polynomial c,
    // verified by direct evaluation (degrees may exceed the module bound).
    rep.conclusion_checked = true;
    for (const auto& f : k.basis_polys())
        for (const auto& c : cs) {
            Poly fc = ctx.side == Side::kRight ? f * c : c * f;
            for (const auto& s_el : ctx.subset.elements()) {
                RingElement v = eval_side(fc, s_el, ctx.side);
                if (!k.value_in_ideal(v))
                    throw CheckFailed("images criterion violated: f=" + f.to_string() +
                                      " c=" + c.to_string() + " at s=" + s_el.coords_string() +
                                      " value=" + v.coords_string());
            }
        }
    rep.conclusion_holds = true;
    rep.detail = "closed under images; closure under C verified";
    return rep;
}

TheoremReport units_theorem_check(const PolContext& ctx, unsigned d, const Caps& caps) {
    TheoremReport rep;
    UnitGeneratedReport ug = is_unit_generated_over_center(ctx.subring, caps);
    auto unit_pairs = ctx.subring.units(caps);
    bool stable = is_conjugation_stable(ctx.subset, unit_pairs);
    rep.hypothesis_holds = ug.generated && stable;
    if (!rep.hypothesis_holds) {
        rep.detail = std::string("hypothesis not met: ") +
                     (ug.generated ? "" : "T is not unit-generated over its center; ") +
                     (stable ? "" : "S is not closed under conjugation by units of T");
        return rep;
    }
    rep.conclusion_checked = true;
    ClosureCheck cc = is_right_T_module(ctx, d);
    if (!cc.closed) {
        const ClosureWitness& w = *cc.witness;
        throw CheckFailed("units theorem violated: f=" + w.kernel_poly.to_string() +
                          " b=" + w.constant.coords_string() + " s=" + w.at.coords_string() +
                          " value=" + w.value.coords_string());
    }
    rep.conclusion_holds = true;
    rep.detail = "unit-generated and conjugation-stable; module closure verified";
    return rep;
}

SubsetSpec transport_subset(const SubsetSpec& s, const FiniteRing& opposite) {
    std::vector<RingElement> xs;
    xs.reserve(s.size());
    for (const auto& e : s.elements()) xs.push_back(opposite.element(Row(e.coords())));
    return SubsetSpec(opposite, std::move(xs));
}

Poly transport_poly(const Poly& f, const FiniteRing& opposite) {
    std::vector<RingElement> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(opposite.element(Row(c.coords())));
    return Poly(opposite, std::move(cs));
}

} // namespace polyfun
