#ifndef POLYFUN_HOWELL_HPP
#define POLYFUN_HOWELL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "polyfun/zmod.hpp"

namespace polyfun {

// Canonical basis of a row-space submodule of (Z/m)^n. Unlike echelon forms
// over fields, the Howell form stays membership-complete in the presence of
// zero divisors: greedy reduction against the basis decides span membership
// for composite m. Canonical shape:
//   - pivots strictly increase by column,
//   - every pivot divides m,
//   - entries above a pivot are reduced modulo that pivot.
// Two generating sets span the same submodule iff their HowellBasis rows
// are identical.
class HowellBasis {
  public:
    HowellBasis(std::vector<Row> generators, u64 modulus, std::size_t cols);

    u64 modulus() const { return m_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
    std::size_t num_rows() const { return rows_.size(); }

    // Canonical coset representative of v + span.
    Row reduce(Row v) const;
    bool contains(const Row& v) const;

    // Number of elements of the span: prod over pivots p of m/p.
    mpz_class span_size() const;

    bool operator==(const HowellBasis& other) const {
        return m_ == other.m_ && cols_ == other.cols_ && rows_ == other.rows_;
    }

  private:
    u64 m_;
    std::size_t cols_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivot_cols_;
};

// Solution set of x*A in span(J), for row vectors x of length `rows(A)`.
// A is given by rows (the map sends e_i to A[i]); J by generators inside
// (Z/m)^cols. With empty J this is the kernel of A.
HowellBasis preimage_basis(const std::vector<Row>& a_rows,
                           const std::vector<Row>& j_gens,
                           u64 modulus, std::size_t cols);

// One x with x*A = target + span(J), if any.
std::optional<Row> solve_preimage(const std::vector<Row>& a_rows,
                                  const std::vector<Row>& j_gens,
                                  const Row& target,
                                  u64 modulus, std::size_t cols);

// Canonical basis of span(U) intersected with span(V).
HowellBasis intersect(const HowellBasis& u, const HowellBasis& v);

} // namespace polyfun

#endif
