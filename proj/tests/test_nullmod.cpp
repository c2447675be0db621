#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "polyfun/errors.hpp"
#include "polyfun/nullmod.hpp"
#include "polyfun/ringspec_io.hpp"

using namespace polyfun;

namespace {

Poly random_poly(std::mt19937_64& rng, const FiniteRing& ring, int max_deg) {
    int d = static_cast<int>(rng() % static_cast<u64>(max_deg + 1));
    std::vector<RingElement> cs;
    for (int k = 0; k <= d; ++k) {
        Row coords(ring.rank());
        for (auto& x : coords) x = rng() % ring.modulus();
        cs.push_back(ring.element(std::move(coords)));
    }
    return Poly(ring, std::move(cs));
}

RingElement random_element(std::mt19937_64& rng, const FiniteRing& ring) {
    Row coords(ring.rank());
    for (auto& x : coords) x = rng() % ring.modulus();
    return ring.element(std::move(coords));
}

SubsetSpec subset_from_mask(const FiniteRing& ring, u64 mask) {
    std::vector<RingElement> xs;
    u64 n = ring.element_count_checked(default_caps());
    for (u64 i = 0; i < n; ++i)
        if (mask & (u64{1} << i)) xs.push_back(ring.element_at(i));
    return SubsetSpec(ring, std::move(xs));
}

// Span size of the kernel equals the oracle's null-set count.
bool k_sizes_match(const FiniteRing& ring, const SubsetSpec& s, Side side, unsigned dmax) {
    KernelModule k = truncated_null_module(ring, s, dmax, side);
    return k.size() == brute_force_null_count(ring, s, side, dmax);
}

// All degree <= d polynomials of a small ring, by coefficient odometer.
std::vector<Poly> all_polys(const FiniteRing& ring, unsigned d) {
    std::vector<Poly> out;
    std::size_t slots = (d + 1) * ring.rank();
    Row digits(slots, 0);
    for (;;) {
        std::vector<RingElement> cs;
        for (unsigned k = 0; k <= d; ++k)
            cs.push_back(ring.element(Row(digits.begin() + k * ring.rank(),
                                          digits.begin() + (k + 1) * ring.rank())));
        out.push_back(Poly(ring, std::move(cs)));
        std::size_t pos = 0;
        while (pos < slots && ++digits[pos] == ring.modulus()) digits[pos++] = 0;
        if (pos == slots) break;
    }
    return out;
}

} // namespace

TEST_CASE("power profiles") {
    FiniteRing m2z2 = FiniteRing::matrix_ring(2, 2);
    RingElement e11 = m2z2.basis_element(0), e12 = m2z2.basis_element(1);

    PowerProfile one_prof = power_profile(SubsetSpec(m2z2, {m2z2.one()}));
    CHECK(one_prof.per_element[0].preperiod == 0);
    CHECK(one_prof.per_element[0].period == 1);
    CHECK(one_prof.exact_degree() == 0);

    PowerProfile nil = power_profile(SubsetSpec(m2z2, {e12}));
    CHECK(nil.per_element[0].preperiod == 2); // 1, e12, 0, 0, ...
    CHECK(nil.per_element[0].period == 1);

    PowerProfile idem = power_profile(SubsetSpec(m2z2, {e11}));
    CHECK(idem.per_element[0].preperiod == 1);
    CHECK(idem.per_element[0].period == 1);

    // Oracle: recompute preperiod/period by direct power iteration for every
    // element of a few small rings.
    for (const auto& ring : {FiniteRing::matrix_ring(2, 2), FiniteRing::triangular_ring(2, 4),
                             FiniteRing::matrix_ring(1, 9)}) {
        u64 n = ring.element_count_checked(default_caps());
        for (u64 i = 0; i < n; ++i) {
            RingElement s = ring.element_at(i);
            PowerProfile p = power_profile(SubsetSpec(ring, {s}));
            unsigned n0 = p.per_element[0].preperiod;
            u64 period = p.per_element[0].period;
            // s^{k+p} = s^k for all k >= n0, and p is minimal.
            RingElement a = s.pow(n0), b = s.pow(n0 + period);
            CHECK(a == b);
            if (period > 1) CHECK(s.pow(n0) != s.pow(n0 + period - 1));
            if (n0 > 0) CHECK(s.pow(n0 - 1) != s.pow(n0 - 1 + period));
        }
    }

    // Empty subset: trivial profile, exact degree 0.
    CHECK(power_profile(SubsetSpec(m2z2, {})).exact_degree() == 0);

    // Aggregates: max preperiod, lcm of periods.
    FiniteRing z16 = ring_by_name("z16");
    PowerProfile agg = power_profile(SubsetSpec(z16, {z16.from_int(2), z16.from_int(3)}));
    CHECK(agg.preperiod == 4);  // 2^4 = 0 mod 16
    CHECK(agg.period_lcm == 4); // ord(3) = 4 mod 16
}

TEST_CASE("collapse preserves evaluations and commutes with constants") {
    FiniteRing z2 = ring_by_name("z2");
    SubsetSpec all_z2 = SubsetSpec::full(z2);
    PowerProfile prof = power_profile(all_z2); // N0 = 1, P = 1
    CHECK(prof.preperiod == 1);
    CHECK(prof.period_lcm == 1);

    Poly x3 = Poly::monomial(z2.one(), 3);
    Poly folded = collapse(x3, prof);
    CHECK(folded == Poly::x(z2));
    for (const auto& s : all_z2.elements()) CHECK(eval_right(folded, s) == eval_right(x3, s));

    // Degree below the bound: unchanged.
    Poly low = Poly::x(z2);
    CHECK(collapse(low, prof) == low);

    FiniteRing t2z4 = FiniteRing::triangular_ring(2, 4);
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 100; ++rep) {
        SubsetSpec s(t2z4, {random_element(rng, t2z4), random_element(rng, t2z4)});
        PowerProfile p = power_profile(s);
        Poly f = random_poly(rng, t2z4, 9);
        Poly c = collapse(f, p);
        CHECK(c.degree() < static_cast<int>(p.preperiod + p.period_lcm));
        for (const auto& el : s.elements()) {
            CHECK(eval_right(c, el) == eval_right(f, el));
            CHECK(eval_left(c, el) == eval_left(f, el));
        }
        RingElement r = random_element(rng, t2z4);
        CHECK(collapse(f.mul_const_right(r), p) == c.mul_const_right(r));
        CHECK(collapse(f.mul_const_left(r), p) == c.mul_const_left(r));
    }
}

TEST_CASE("truncated modules against enumeration") {
    // R = Z/4, S = {0, 2}, I = (0), d = 1: exactly {0, 2x}.
    FiniteRing z4 = ring_by_name("z4");
    SubsetSpec s02(z4, {z4.zero(), z4.from_int(2)});
    KernelModule k = truncated_null_module(z4, s02, 1, Side::kRight);
    CHECK(k.size() == 2);
    std::size_t member_count = 0;
    for (const auto& f : all_polys(z4, 1)) {
        bool null_f = eval_right(f, z4.zero()).is_zero() && eval_right(f, z4.from_int(2)).is_zero();
        CHECK(module_membership(k, f) == null_f);
        if (null_f) ++member_count;
    }
    CHECK(member_count == 2);

    // R = Z/2, S = {0, 1}, d = 2: generated by x^2 + x.
    FiniteRing z2 = ring_by_name("z2");
    KernelModule k2 = truncated_null_module(z2, SubsetSpec::full(z2), 2, Side::kRight);
    CHECK(k2.size() == 2);
    Poly fermat = Poly::monomial(z2.one(), 2) + Poly::x(z2);
    CHECK(module_membership(k2, fermat));

    // Empty subset: the full module.
    FiniteRing t2z2 = ring_by_name("t2z2");
    KernelModule kfull = truncated_null_module(t2z2, SubsetSpec(t2z2, {}), 2, Side::kRight);
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 2, 9); // m^{r(d+1)} = 2^{3*3}
    CHECK(kfull.size() == expect);

    // Degree overflow on membership.
    CHECK_THROWS_AS(module_membership(k, Poly::monomial(z4.one(), 5)), std::invalid_argument);

    // Membership agrees with direct evaluation on a non-commutative ring,
    // both sides, random subsets.
    FiniteRing m2z2 = ring_by_name("m2z2");
    std::mt19937_64 rng(202);
    for (Side side : {Side::kRight, Side::kLeft}) {
        SubsetSpec s(m2z2, {random_element(rng, m2z2), random_element(rng, m2z2),
                            random_element(rng, m2z2)});
        KernelModule km = truncated_null_module(m2z2, s, 3, side);
        std::size_t in_kernel = 0, sampled = 0;
        for (int rep = 0; rep < 400; ++rep) {
            Poly f = random_poly(rng, m2z2, 3);
            bool is_null = true;
            for (const auto& el : s.elements())
                if (!eval_side(f, el, side).is_zero()) is_null = false;
            CHECK(module_membership(km, f) == is_null);
            ++sampled;
            if (is_null) ++in_kernel;
        }
        CHECK(sampled == 400);
        CHECK(module_membership(km, Poly::zero(m2z2)));
        for (const auto& row : km.basis_polys()) CHECK(module_membership(km, row));
        (void)in_kernel;
    }
}

TEST_CASE("pol module with a nonzero ideal") {
    // R = T = Z/4, I = (2), S = {1}, degree 1: {a + bx : a + b in {0, 2}},
    // 8 elements.
    FiniteRing z4 = ring_by_name("z4");
    SubringDesc full = SubringDesc::full(z4);
    IdealDesc two = IdealDesc::span(full, {z4.from_int(2)});
    SubsetSpec s1(z4, {z4.from_int(1)});
    KernelModule k = truncated_pol_module(z4, s1, two, 1, Side::kRight);
    CHECK(k.size() == 8);
    std::size_t count = 0;
    for (const auto& f : all_polys(z4, 1)) {
        u64 a = f.coeff(0).coords()[0], b = f.coeff(1).coords()[0];
        bool expect = (a + b) % 2 == 0;
        CHECK(module_membership(k, f) == expect);
        if (expect) ++count;
    }
    CHECK(count == 8);

    // I = T: everything maps into T.
    IdealDesc all_ideal = IdealDesc::span(full, {z4.one()});
    KernelModule kfull = truncated_pol_module(z4, s1, all_ideal, 1, Side::kRight);
    CHECK(kfull.size() == 16);
}

TEST_CASE("closure under constants with witnesses") {
    // Commutative: every kernel is closed.
    FiniteRing z8 = ring_by_name("z8");
    std::mt19937_64 rng(303);
    for (int rep = 0; rep < 10; ++rep) {
        SubsetSpec s(z8, {random_element(rng, z8), random_element(rng, z8)});
        Classification c = classify_null_ideal_set(z8, s, Side::kRight);
        CHECK(c.is_null_ideal_set);
    }

    // M_2(Z/2), S = {e11}: not a right null-ideal set; witness re-verifies.
    FiniteRing m2z2 = ring_by_name("m2z2");
    RingElement e11 = m2z2.basis_element(0), e12 = m2z2.basis_element(1);
    SubsetSpec s11(m2z2, {e11});
    Classification c = classify_null_ideal_set(m2z2, s11, Side::kRight);
    CHECK_FALSE(c.is_null_ideal_set);
    REQUIRE(c.witness.has_value());
    const ClosureWitness& w = *c.witness;
    CHECK(w.constant == e12);
    CHECK(w.at == e11);
    CHECK(w.value == e12);
    // Re-verify: f in the kernel, f*b evaluates outside (0) at s.
    for (const auto& el : s11.elements()) CHECK(eval_right(w.kernel_poly, el).is_zero());
    CHECK(eval_right(w.kernel_poly.mul_const_right(w.constant), w.at) == w.value);

    // Deterministic output.
    Classification c2 = classify_null_ideal_set(m2z2, s11, Side::kRight);
    CHECK(c2.witness->kernel_poly == w.kernel_poly);
    CHECK(c2.witness->constant == w.constant);

    // The full ring is a right null-ideal set (no known counterexamples).
    Classification cfull = classify_null_ideal_set(m2z2, SubsetSpec::full(m2z2), Side::kRight);
    CHECK(cfull.is_null_ideal_set);
}

TEST_CASE("classifier agrees with the brute-force oracle") {
    // All 16 subsets of Z/4.
    FiniteRing z4 = ring_by_name("z4");
    for (u64 mask = 0; mask < 16; ++mask) {
        SubsetSpec s = subset_from_mask(z4, mask);
        Classification fast = classify_null_ideal_set(z4, s, Side::kRight);
        unsigned dmax = power_profile(s).exact_degree();
        Classification slow = brute_force_classify(z4, s, Side::kRight, dmax);
        CHECK(fast.is_null_ideal_set == slow.is_null_ideal_set);
        CHECK(fast.is_null_ideal_set); // commutative
        // Null-set sizes agree with the kernel span.
        KernelModule k = truncated_null_module(z4, s, dmax, Side::kRight);
        CHECK(k.size() == brute_force_null_count(z4, s, Side::kRight, dmax));
    }

    // A sample of subsets of T_2(Z/2), both sides (the full sweep is in the
    // acceptance suite).
    FiniteRing t2z2 = ring_by_name("t2z2");
    std::mt19937_64 rng(404);
    int negatives = 0;
    for (int rep = 0; rep < 40; ++rep) {
        SubsetSpec s = subset_from_mask(t2z2, rng() % 256);
        for (Side side : {Side::kRight, Side::kLeft}) {
            unsigned dmax = power_profile(s).exact_degree();
            Classification fast = classify_null_ideal_set(t2z2, s, side);
            Classification slow = brute_force_classify(t2z2, s, side, dmax);
            CHECK(fast.is_null_ideal_set == slow.is_null_ideal_set);
            CHECK(k_sizes_match(t2z2, s, side, dmax));
            if (!fast.is_null_ideal_set) ++negatives;
        }
    }
    CHECK(negatives > 0); // the sweep must exercise real failures

    // M_2(Z/2): a singleton, a mixed pair (meet tier), and {e11}.
    FiniteRing m2z2 = ring_by_name("m2z2");
    RingElement e11 = m2z2.basis_element(0);
    RingElement order3 = m2z2.basis_element(1) + m2z2.basis_element(2) + m2z2.basis_element(3);
    for (const SubsetSpec& s :
         {SubsetSpec(m2z2, {e11}), SubsetSpec(m2z2, {e11, order3}),
          SubsetSpec(m2z2, {m2z2.one() + m2z2.basis_element(1), order3})}) {
        unsigned dmax = power_profile(s).exact_degree();
        Classification fast = classify_null_ideal_set(m2z2, s, Side::kRight);
        Classification slow = brute_force_classify(m2z2, s, Side::kRight, dmax);
        CHECK(fast.is_null_ideal_set == slow.is_null_ideal_set);
        CHECK(k_sizes_match(m2z2, s, Side::kRight, dmax));
    }
}

TEST_CASE("function counting") {
    FiniteRing z2 = ring_by_name("z2");
    CHECK(count_poly_functions(z2, Side::kRight) == 4);

    FiniteRing z4 = ring_by_name("z4");
    CHECK(count_poly_functions(z4, Side::kRight) == 64);

    // Kempner-style brute force for Z/4: distinct value tables over all
    // degree <= D* polynomials.
    SubsetSpec all4 = SubsetSpec::full(z4);
    unsigned dstar = power_profile(all4).exact_degree();
    std::set<std::vector<Row>> tables;
    for (const auto& f : all_polys(z4, dstar)) {
        std::vector<Row> table;
        for (const auto& s : all4.elements()) table.push_back(eval_right(f, s).coords());
        tables.insert(table);
    }
    CHECK(tables.size() == 64);

    // Image route equals the kernel route everywhere we can afford it.
    for (const auto& name : {"z2", "z4", "z6", "t2z2", "m2z2", "t2z3"}) {
        FiniteRing ring = ring_by_name(name);
        for (Side side : {Side::kRight, Side::kLeft})
            CHECK(count_poly_functions(ring, side) == count_poly_functions_via_image(ring, side));
    }

    // Literal function-table enumeration for T_2(Z/2), right side.
    FiniteRing t2z2 = ring_by_name("t2z2");
    SubsetSpec allt = SubsetSpec::full(t2z2);
    unsigned dt = power_profile(allt).exact_degree();
    std::set<std::vector<Row>> ttables;
    for (const auto& f : all_polys(t2z2, dt)) {
        std::vector<Row> table;
        for (const auto& s : allt.elements()) table.push_back(eval_right(f, s).coords());
        ttables.insert(table);
    }
    CHECK(count_poly_functions(t2z2, Side::kRight) ==
          mpz_class(static_cast<unsigned long>(ttables.size())));
}

TEST_CASE("kernels are one-sided ideals and unions intersect") {
    // Right kernels: closed under left multiplication by basis elements and
    // by x (the always-one-sided-ideal fact), checked by membership and by
    // direct evaluation.
    for (const auto& name : {"z4", "t2z2"}) {
        FiniteRing ring = ring_by_name(name);
        u64 n = ring.element_count_checked(default_caps());
        std::mt19937_64 rng(505);
        for (int rep = 0; rep < 25; ++rep) {
            SubsetSpec s = subset_from_mask(ring, rng() % (u64{1} << n));
            PowerProfile prof = power_profile(s);
            KernelModule k = truncated_null_module(ring, s, prof.exact_degree(), Side::kRight);
            for (const auto& f : k.basis_polys()) {
                for (std::size_t i = 0; i < ring.rank(); ++i) {
                    Poly bf = f.mul_const_left(ring.basis_element(i));
                    CHECK(module_membership(k, bf));
                    for (const auto& el : s.elements()) CHECK(eval_right(bf, el).is_zero());
                }
                Poly xf = collapse(f.shifted(1), prof);
                CHECK(module_membership(k, xf));
                for (const auto& el : s.elements()) CHECK(eval_right(f.shifted(1), el).is_zero());
            }
        }
    }

    // N(S u S') = N(S) n N(S') as canonical spans, at a common degree.
    FiniteRing m2z2 = ring_by_name("m2z2");
    std::mt19937_64 rng(606);
    for (int rep = 0; rep < 12; ++rep) {
        SubsetSpec s1(m2z2, {random_element(rng, m2z2), random_element(rng, m2z2)});
        SubsetSpec s2(m2z2, {random_element(rng, m2z2), random_element(rng, m2z2)});
        SubsetSpec u = s1.united_with(s2);
        unsigned d = power_profile(u).exact_degree();
        KernelModule ku = truncated_null_module(m2z2, u, d, Side::kRight);
        KernelModule k1 = truncated_null_module(m2z2, s1, d, Side::kRight);
        KernelModule k2 = truncated_null_module(m2z2, s2, d, Side::kRight);
        CHECK(ku.basis() == intersect(k1.basis(), k2.basis()));
    }
}

TEST_CASE("caps are honored") {
    Caps tight;
    tight.period_lcm = 2;
    FiniteRing z16 = ring_by_name("z16");
    SubsetSpec s(z16, {z16.from_int(3)}); // period 4
    CHECK_THROWS_AS(power_profile(s, tight), CapError);

    Caps tiny;
    tiny.brute_direct = 4;
    tiny.brute_meet = 8.0;
    FiniteRing z4 = ring_by_name("z4");
    CHECK_THROWS_AS(
        brute_force_classify(z4, SubsetSpec(z4, {z4.one()}), Side::kRight, 3, tiny), CapError);
}
