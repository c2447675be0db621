#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "polyfun/howell.hpp"

using namespace polyfun;

namespace {

// Every Z/m-combination of the generators, by exhaustive coefficient
// enumeration. The independent span oracle for everything below.
std::set<Row> enumerate_span(const std::vector<Row>& gens, u64 m, std::size_t cols) {
    std::set<Row> span;
    std::vector<u64> digits(gens.size(), 0);
    for (;;) {
        Row v(cols, 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (digits[i] != 0) row_addmul(v, gens[i], digits[i], m);
        span.insert(v);
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == m) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return span;
}

std::vector<Row> random_rows(std::mt19937_64& rng, std::size_t count, std::size_t cols, u64 m) {
    std::vector<Row> rows(count, Row(cols));
    for (auto& r : rows)
        for (auto& x : r) x = rng() % m;
    return rows;
}

std::vector<Row> all_vectors(std::size_t cols, u64 m) {
    std::vector<Row> out;
    Row v(cols, 0);
    for (;;) {
        out.push_back(v);
        std::size_t pos = 0;
        while (pos < cols && ++v[pos] == m) v[pos++] = 0;
        if (pos == cols) break;
    }
    return out;
}

} // namespace

TEST_CASE("xgcd and unit normalization") {
    CHECK(xgcd(12, 8).g == 4);
    CHECK(xgcd(0, 5).g == 5);
    for (u64 m : {4u, 6u, 12u, 16u, 9u}) {
        for (u64 a = 1; a < m; ++a) {
            u64 w = stabilizing_unit(a, m);
            CHECK(std::gcd(w, m) == 1);
            CHECK(mul_mod(w, a, m) == std::gcd(a, m));
        }
    }
}

TEST_CASE("Howell form decides span membership with zero divisors") {
    std::mt19937_64 rng(20240811);
    for (u64 m : {4u, 6u, 8u, 12u}) {
        for (int rep = 0; rep < 8; ++rep) {
            std::size_t cols = 3;
            auto gens = random_rows(rng, 2 + rep % 3, cols, m);
            auto span = enumerate_span(gens, m, cols);
            HowellBasis h(gens, m, cols);
            CHECK(h.span_size() == mpz_class(static_cast<unsigned long>(span.size())));
            for (const auto& v : all_vectors(cols, m))
                CHECK(h.contains(v) == (span.count(v) > 0));
        }
    }
}

TEST_CASE("Howell form is canonical across generating sets") {
    std::mt19937_64 rng(7);
    for (u64 m : {4u, 6u, 9u, 8u}) {
        std::size_t cols = 4;
        auto gens = random_rows(rng, 3, cols, m);
        HowellBasis h(gens, m, cols);

        // Shuffle, add redundant combinations, scale by units.
        std::vector<Row> noisy = gens;
        Row combo(cols, 0);
        row_addmul(combo, gens[0], 3 % m, m);
        row_addmul(combo, gens[2], 1, m);
        noisy.push_back(combo);
        std::shuffle(noisy.begin(), noisy.end(), rng);
        for (u64 unit = 1; unit < m; ++unit) {
            if (std::gcd(unit, m) != 1) continue;
            Row scaled = gens[1];
            row_scale(scaled, unit, m);
            noisy.push_back(scaled);
        }
        HowellBasis h2(noisy, m, cols);
        CHECK(h.rows() == h2.rows());
    }
}

TEST_CASE("Howell reduce yields canonical coset representatives") {
    std::mt19937_64 rng(99);
    u64 m = 12;
    std::size_t cols = 3;
    auto gens = random_rows(rng, 2, cols, m);
    HowellBasis h(gens, m, cols);
    auto span = enumerate_span(gens, m, cols);
    for (int rep = 0; rep < 40; ++rep) {
        Row v(cols), w(cols);
        for (auto& x : v) x = rng() % m;
        for (auto& x : w) x = rng() % m;
        Row diff(cols);
        for (std::size_t i = 0; i < cols; ++i) diff[i] = sub_mod(v[i], w[i], m);
        bool same_coset = span.count(diff) > 0;
        CHECK((h.reduce(v) == h.reduce(w)) == same_coset);
    }
}

TEST_CASE("preimage basis matches exhaustive search") {
    std::mt19937_64 rng(4242);
    for (u64 m : {4u, 6u, 8u}) {
        std::size_t n = 3, cols = 2;
        auto a_rows = random_rows(rng, n, cols, m);
        auto j_gens = random_rows(rng, 1, cols, m);
        auto j_span = enumerate_span(j_gens, m, cols);

        HowellBasis pre = preimage_basis(a_rows, j_gens, m, cols);
        std::size_t count = 0;
        for (const auto& x : all_vectors(n, m)) {
            Row img(cols, 0);
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != 0) row_addmul(img, a_rows[i], x[i], m);
            bool in_pre = j_span.count(img) > 0;
            CHECK(pre.contains(x) == in_pre);
            if (in_pre) ++count;
        }
        CHECK(pre.span_size() == mpz_class(static_cast<unsigned long>(count)));
    }
}

TEST_CASE("solve_preimage finds particular solutions exactly when they exist") {
    std::mt19937_64 rng(555);
    u64 m = 8;
    std::size_t n = 3, cols = 3;
    auto a_rows = random_rows(rng, n, cols, m);
    int solvable = 0;
    for (const auto& target : all_vectors(cols, m)) {
        auto sol = solve_preimage(a_rows, {}, target, m, cols);
        bool exists = false;
        for (const auto& x : all_vectors(n, m)) {
            Row img(cols, 0);
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != 0) row_addmul(img, a_rows[i], x[i], m);
            if (img == target) {
                exists = true;
                break;
            }
        }
        CHECK(sol.has_value() == exists);
        if (sol) {
            ++solvable;
            Row img(cols, 0);
            for (std::size_t i = 0; i < n; ++i)
                if ((*sol)[i] != 0) row_addmul(img, a_rows[i], (*sol)[i], m);
            CHECK(img == target);
        }
    }
    CHECK(solvable > 0);
}

TEST_CASE("intersection of spans") {
    std::mt19937_64 rng(31337);
    for (u64 m : {4u, 6u}) {
        std::size_t cols = 3;
        auto gu = random_rows(rng, 2, cols, m);
        auto gv = random_rows(rng, 2, cols, m);
        HowellBasis u(gu, m, cols), v(gv, m, cols);
        auto su = enumerate_span(gu, m, cols);
        auto sv = enumerate_span(gv, m, cols);
        HowellBasis w = intersect(u, v);
        std::size_t count = 0;
        for (const auto& x : all_vectors(cols, m)) {
            bool both = su.count(x) > 0 && sv.count(x) > 0;
            CHECK(w.contains(x) == both);
            if (both) ++count;
        }
        CHECK(w.span_size() == mpz_class(static_cast<unsigned long>(count)));
    }
}

TEST_CASE("empty and degenerate inputs") {
    HowellBasis empty({}, 6, 4);
    CHECK(empty.num_rows() == 0);
    CHECK(empty.span_size() == 1);
    CHECK(empty.contains(Row(4, 0)));
    CHECK_FALSE(empty.contains(Row{1, 0, 0, 0}));

    HowellBasis zero_cols(std::vector<Row>{}, 6, 0);
    CHECK(zero_cols.contains(Row{}));
}
