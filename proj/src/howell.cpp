#include "polyfun/howell.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "polyfun/errors.hpp"

namespace polyfun {

namespace {

std::size_t leading_col(const Row& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return j;
    return r.size();
}

// Unimodular 2x2 combination clearing column j of r2 into r1's pivot.
// After the call r1[j] = gcd of the old entries and r2[j] = 0; the joint
// span of the two rows is unchanged.
void pair_reduce(Row& r1, Row& r2, std::size_t j, u64 m) {
    u64 a = r1[j], b = r2[j];
    if (b == 0) return;
    if (a == 0) { std::swap(r1, r2); return; }
    XGcd e = xgcd(static_cast<i64>(a), static_cast<i64>(b));
    u64 g = static_cast<u64>(e.g);
    u64 u = reduce_signed(e.x, m), v = reduce_signed(e.y, m);
    u64 bg = b / g, ag = a / g;
    Row n1(r1.size()), n2(r1.size());
    for (std::size_t k = 0; k < r1.size(); ++k) {
        n1[k] = (u * r1[k] + v * r2[k]) % m;
        n2[k] = sub_mod((bg % m) * r1[k] % m, (ag % m) * r2[k] % m, m);
    }
    r1 = std::move(n1);
    r2 = std::move(n2);
}

} // namespace

HowellBasis::HowellBasis(std::vector<Row> generators, u64 modulus, std::size_t cols)
    : m_(modulus), cols_(cols) {
    if (modulus < 2 || modulus > kMaxModulus)
        throw CapError("HowellBasis: modulus out of range");
    std::vector<Row> pool;
    pool.reserve(generators.size());
    for (auto& g : generators) {
        if (g.size() != cols) throw std::invalid_argument("HowellBasis: row length mismatch");
        for (auto& x : g) x %= m_;
        if (!row_is_zero(g)) pool.push_back(std::move(g));
    }

    for (std::size_t j = 0; j < cols_; ++j) {
        // All pool rows have zeros left of column j at this point.
        std::size_t pivot_idx = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (pool[i][j] == 0) continue;
            if (pivot_idx == pool.size()) {
                pivot_idx = i;
            } else {
                pair_reduce(pool[pivot_idx], pool[i], j, m_);
            }
        }
        if (pivot_idx == pool.size()) continue;

        Row piv = std::move(pool[pivot_idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pivot_idx));

        // Normalize so the pivot entry is gcd(entry, m), a divisor of m.
        u64 w = stabilizing_unit(piv[j], m_);
        row_scale(piv, w, m_);
        assert(piv[j] == std::gcd(piv[j], m_));

        // Keep the annihilator multiple: it spans the part of R*piv that
        // vanishes at column j, which later columns must still see.
        u64 t = m_ / std::gcd(piv[j], m_);
        if (t != 1) {
            Row ann = piv;
            row_scale(ann, t, m_);
            assert(ann[j] == 0);
            if (!row_is_zero(ann)) pool.push_back(std::move(ann));
        }

        rows_.push_back(std::move(piv));
        pivot_cols_.push_back(j);

        // Drop rows the elimination zeroed out entirely.
        pool.erase(std::remove_if(pool.begin(), pool.end(),
                                  [](const Row& r) { return row_is_zero(r); }),
                   pool.end());
    }

    // Reduce entries above each pivot modulo the pivot value.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        u64 p = rows_[i][pivot_cols_[i]];
        for (std::size_t k = 0; k < i; ++k) {
            u64 c = rows_[k][pivot_cols_[i]];
            u64 q = c / p;
            if (q != 0) row_submul(rows_[k], rows_[i], q, m_);
        }
    }
    (void)leading_col; // debug helper
}

Row HowellBasis::reduce(Row v) const {
    if (v.size() != cols_) throw std::invalid_argument("reduce: length mismatch");
    for (auto& x : v) x %= m_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        u64 p = rows_[i][pivot_cols_[i]];
        u64 c = v[pivot_cols_[i]];
        u64 q = c / p;
        if (q != 0) row_submul(v, rows_[i], q, m_);
    }
    return v;
}

bool HowellBasis::contains(const Row& v) const { return row_is_zero(reduce(v)); }

mpz_class HowellBasis::span_size() const {
    mpz_class n = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        n *= mpz_class(static_cast<unsigned long>(m_ / rows_[i][pivot_cols_[i]]));
    return n;
}

HowellBasis preimage_basis(const std::vector<Row>& a_rows,
                           const std::vector<Row>& j_gens,
                           u64 modulus, std::size_t cols) {
    const std::size_t n = a_rows.size();
    std::vector<Row> stacked;
    stacked.reserve(n + j_gens.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a_rows[i].size() != cols) throw std::invalid_argument("preimage: row length mismatch");
        Row r(cols + n, 0);
        std::copy(a_rows[i].begin(), a_rows[i].end(), r.begin());
        r[cols + i] = 1;
        stacked.push_back(std::move(r));
    }
    for (const auto& g : j_gens) {
        if (g.size() != cols) throw std::invalid_argument("preimage: gen length mismatch");
        Row r(cols + n, 0);
        std::copy(g.begin(), g.end(), r.begin());
        stacked.push_back(std::move(r));
    }
    HowellBasis h(std::move(stacked), modulus, cols + n);

    // Rows supported purely on the tail block carry exactly the x with
    // x*A in span(J); the Howell property makes this exhaustive.
    std::vector<Row> tail;
    for (std::size_t i = 0; i < h.num_rows(); ++i) {
        if (h.pivot_cols()[i] < cols) continue;
        tail.emplace_back(h.rows()[i].begin() + static_cast<std::ptrdiff_t>(cols),
                          h.rows()[i].end());
    }
    return HowellBasis(std::move(tail), modulus, n);
}

std::optional<Row> solve_preimage(const std::vector<Row>& a_rows,
                                  const std::vector<Row>& j_gens,
                                  const Row& target,
                                  u64 modulus, std::size_t cols) {
    const std::size_t n = a_rows.size();
    std::vector<Row> stacked;
    stacked.reserve(n + j_gens.size());
    for (std::size_t i = 0; i < n; ++i) {
        Row r(cols + n, 0);
        std::copy(a_rows[i].begin(), a_rows[i].end(), r.begin());
        r[cols + i] = 1;
        stacked.push_back(std::move(r));
    }
    for (const auto& g : j_gens) {
        Row r(cols + n, 0);
        std::copy(g.begin(), g.end(), r.begin());
        stacked.push_back(std::move(r));
    }
    HowellBasis h(std::move(stacked), modulus, cols + n);

    Row probe(cols + n, 0);
    std::copy(target.begin(), target.end(), probe.begin());
    Row residual = h.reduce(std::move(probe));
    for (std::size_t j = 0; j < cols; ++j)
        if (residual[j] != 0) return std::nullopt;
    Row x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = neg_mod(residual[cols + i], modulus);
    return x;
}

HowellBasis intersect(const HowellBasis& u, const HowellBasis& v) {
    if (u.modulus() != v.modulus() || u.cols() != v.cols())
        throw std::invalid_argument("intersect: incompatible bases");
    // Coefficient vectors a with a*U inside span(V), mapped back through U.
    HowellBasis coeffs = preimage_basis(u.rows(), v.rows(), u.modulus(), u.cols());
    std::vector<Row> image;
    for (const auto& a : coeffs.rows()) {
        Row x(u.cols(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0) row_addmul(x, u.rows()[i], a[i], u.modulus());
        image.push_back(std::move(x));
    }
    return HowellBasis(std::move(image), u.modulus(), u.cols());
}

} // namespace polyfun
