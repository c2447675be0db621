#include "polyfun/ivp.hpp"

#include <algorithm>

#include "polyfun/errors.hpp"

namespace polyfun {

namespace {

bool is_prime_u64(u64 p) {
    if (p < 2) return false;
    for (u64 q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

IntMat unreduce(const RingElement& e) {
    const FiniteRing& ring = e.ring();
    const unsigned n = ring.matrix_dim();
    IntMat a(n);
    std::size_t slot = 0;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            bool in_pattern = ring.family() == RingFamily::kMatrix || j >= i;
            if (in_pattern) a.at(i, j) = static_cast<unsigned long>(e.coords()[slot++]);
        }
    return a;
}

IntPoly lift_poly(const Poly& f) {
    std::vector<IntMat> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(unreduce(c));
    if (coeffs.empty()) return IntPoly::zero(f.ring().matrix_dim());
    return IntPoly(f.ring().matrix_dim(), std::move(coeffs));
}

FracMat eval_frac_side(const FracPoly& f, const IntMat& s, Side side) {
    return side == Side::kRight ? f.eval_right(s) : f.eval_left(s);
}

bool frac_valued_on(const FracPoly& f, const IntSubset& subset, Side side) {
    for (const auto& s : subset.elements()) {
        IntMat v = side == Side::kRight ? f.num.eval_right(s) : f.num.eval_left(s);
        if (!v.divisible_by(f.den)) return false;
    }
    return true;
}

} // namespace

FiniteRing AlgebraContext::quotient_ring(u64 d, const Caps& caps) const {
    if (d < 2) throw ConfigError("quotient modulus must be >= 2");
    return family == MatrixFamily::kFull ? FiniteRing::matrix_ring(n, d, caps)
                                         : FiniteRing::triangular_ring(n, d, caps);
}

bool AlgebraContext::admits(const IntMat& a) const {
    if (a.dim() != n) return false;
    return family == MatrixFamily::kFull || a.is_upper_triangular();
}

std::vector<IntMat> AlgebraContext::basis_matrices() const {
    std::vector<IntMat> out;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (family == MatrixFamily::kFull || j >= i) out.push_back(IntMat::basis(n, i, j));
    return out;
}

IntSubset::IntSubset(AlgebraContext ctx, std::vector<IntMat> elements)
    : ctx_(ctx), elems_(std::move(elements)) {
    for (const auto& a : elems_)
        if (!ctx_.admits(a))
            throw std::invalid_argument("subset element outside the declared algebra " +
                                        std::string(family_name(ctx_.family)) + "(" +
                                        std::to_string(ctx_.n) + ")");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool frac_eval_check(const FracPoly& f, const IntSubset& s) {
    return frac_valued_on(f, s, Side::kRight);
}

ReducedSubset reduce_subset(const IntSubset& s, const FiniteRing& quotient) {
    std::vector<std::pair<RingElement, std::size_t>> reduced;
    reduced.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        reduced.emplace_back(reduce_mod(s.elements()[i], quotient), i);
    std::stable_sort(reduced.begin(), reduced.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RingElement> elems;
    std::vector<std::size_t> preimage;
    for (const auto& [e, idx] : reduced) {
        if (!elems.empty() && elems.back() == e) continue;
        elems.push_back(e);
        preimage.push_back(idx);
    }
    return {SubsetSpec(quotient, std::move(elems)), std::move(preimage)};
}

Classification check_ringset_mod(const IntSubset& s, u64 d, Side side, const Caps& caps) {
    FiniteRing quotient = s.context().quotient_ring(d, caps);
    ReducedSubset rs = reduce_subset(s, quotient);
    return classify_null_ideal_set(quotient, rs.subset, side, caps);
}

LiftedCounterexample counterexample_lift(const IntSubset& s, const IntPoly& f, const IntPoly& g,
                                         u64 d, const IntMat& at, Side side) {
    FracPoly cap_f(f, mpz_class(static_cast<unsigned long>(d)));
    FracPoly cap_g(g, 1);
    if (!frac_valued_on(cap_f, s, side))
        throw CheckFailed("counterexample_lift: F is not integer-valued on S");
    if (!frac_valued_on(cap_g, s, side))
        throw CheckFailed("counterexample_lift: G is not integer-valued on S");
    FracPoly product = side == Side::kRight ? cap_f * cap_g : cap_g * cap_f;
    FracMat value = eval_frac_side(product, at, side);
    if (value.is_integral())
        throw CheckFailed("counterexample_lift: the product evaluates integrally at the witness");
    return {std::move(cap_f), std::move(cap_g), at, std::move(value)};
}

RingsetVerdict ringset_scan(const IntSubset& s, Side side, const std::vector<u64>& moduli,
                            const Caps& caps) {
    if (moduli.empty()) throw ConfigError("ringset scan: empty moduli list");
    RingsetVerdict verdict;
    for (u64 d : moduli) {
        FiniteRing quotient = s.context().quotient_ring(d, caps);
        ReducedSubset rs = reduce_subset(s, quotient);
        Classification cls = classify_null_ideal_set(quotient, rs.subset, side, caps);
        if (cls.is_null_ideal_set) {
            verdict.moduli_checked.push_back(d);
            continue;
        }
        const ClosureWitness& w = *cls.witness;
        IntPoly f = lift_poly(w.kernel_poly);
        IntPoly g = IntPoly::constant(unreduce(w.constant));
        auto it = std::lower_bound(rs.subset.elements().begin(), rs.subset.elements().end(), w.at);
        if (it == rs.subset.elements().end() || !(*it == w.at))
            throw CheckFailed("ringset_scan: witness element missing from the reduced subset");
        std::size_t idx = static_cast<std::size_t>(it - rs.subset.elements().begin());
        IntMat at = s.elements()[rs.preimage[idx]];
        verdict.not_ringset = true;
        verdict.failing_modulus = d;
        verdict.counterexample = counterexample_lift(s, f, g, d, at, side);
        return verdict;
    }
    return verdict;
}

std::vector<u64> prime_powers_upto(u64 bound) {
    std::vector<u64> out;
    for (u64 q = 2; q <= bound; ++q) {
        u64 p = 2;
        while (q % p != 0) ++p;
        u64 v = q;
        while (v % p == 0) v /= p;
        if (v == 1) out.push_back(q);
    }
    return out;
}

SingletonVerdict singleton_classify(const AlgebraContext& ctx, const IntMat& s) {
    if (!ctx.admits(s)) throw std::invalid_argument("singleton_classify: element outside the algebra");
    SingletonVerdict verdict;
    for (const IntMat& t : ctx.basis_matrices()) {
        if (t.commutes_with(s)) continue;
        IntMat c = t * s - s * t;
        // First nonzero entry of c, row-major; d = the smallest prime not
        // dividing it, so c is outside dA.
        mpz_class entry = 0;
        for (unsigned i = 0; i < c.dim() && entry == 0; ++i)
            for (unsigned j = 0; j < c.dim(); ++j)
                if (c.at(i, j) != 0) {
                    entry = c.at(i, j);
                    break;
                }
        u64 d = 2;
        while (entry % mpz_class(static_cast<unsigned long>(d)) == 0 || !is_prime_u64(d)) ++d;
        IntPoly x_minus_s(ctx.n, {-s, IntMat::identity(ctx.n)});
        verdict.is_ringset = false;
        verdict.denominator = d;
        verdict.noncommuting = t;
        verdict.f = FracPoly(x_minus_s, mpz_class(static_cast<unsigned long>(d)));
        FracPoly ft = verdict.f * FracPoly(IntPoly::constant(t), 1);
        verdict.value = ft.eval_right(s);
        FracMat direct(c, mpz_class(static_cast<unsigned long>(d)));
        if (!(verdict.value == direct) || verdict.value.is_integral())
            throw CheckFailed("singleton_classify: witness failed re-verification");
        return verdict;
    }
    verdict.is_ringset = true;
    return verdict;
}

} // namespace polyfun
