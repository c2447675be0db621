#ifndef POLYFUN_ZMOD_HPP
#define POLYFUN_ZMOD_HPP

#include <cstdint>
#include <vector>

namespace polyfun {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Residue arithmetic mod m, m >= 2. Values live in [0, m). Moduli are
// capped at 2^31 so products and sums fit in u64 without tricks.
inline constexpr u64 kMaxModulus = u64{1} << 31;

inline u64 add_mod(u64 a, u64 b, u64 m) { u64 s = a + b; return s >= m ? s - m : s; }
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 mul_mod(u64 a, u64 b, u64 m) { return (a * b) % m; }
inline u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

// Reduces any signed integer into [0, m).
inline u64 reduce_signed(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

struct XGcd {
    i64 g; // gcd(a, b) >= 0
    i64 x;
    i64 y; // a*x + b*y = g
};
XGcd xgcd(i64 a, i64 b);

// Inverse of a mod m; requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

// For a in [1, m): a unit w of Z/m with w*a = gcd(a, m) (mod m).
// This is the pivot normalizer for canonical forms over Z/m.
u64 stabilizing_unit(u64 a, u64 m);

// Coordinate-vector helpers used throughout the linear algebra.
using Row = std::vector<u64>;

void row_addmul(Row& dst, const Row& src, u64 c, u64 m);       // dst += c*src
void row_submul(Row& dst, const Row& src, u64 c, u64 m);       // dst -= c*src
void row_scale(Row& r, u64 c, u64 m);
bool row_is_zero(const Row& r);

} // namespace polyfun

#endif
