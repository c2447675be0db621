#include "polyfun/zmod.hpp"

#include <numeric>
#include <stdexcept>

namespace polyfun {

XGcd xgcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

u64 inv_mod(u64 a, u64 m) {
    XGcd e = xgcd(static_cast<i64>(a % m), static_cast<i64>(m));
    if (e.g != 1) throw std::domain_error("inv_mod: argument is not a unit");
    return reduce_signed(e.x, m);
}

u64 stabilizing_unit(u64 a, u64 m) {
    u64 g = std::gcd(a % m, m);
    if (g == m) return 1; // a = 0 mod m
    u64 ahat = (a % m) / g, mhat = m / g;
    u64 w = inv_mod(ahat % mhat, mhat);
    // Lift to a unit of Z/m; a valid lift exists below m.
    while (std::gcd(w, m) != 1) w += mhat;
    return w;
}

void row_addmul(Row& dst, const Row& src, u64 c, u64 m) {
    c %= m;
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = (dst[i] + c * src[i]) % m;
}

void row_submul(Row& dst, const Row& src, u64 c, u64 m) {
    row_addmul(dst, src, neg_mod(c % m, m), m);
}

void row_scale(Row& r, u64 c, u64 m) {
    c %= m;
    for (auto& x : r) x = (x * c) % m;
}

bool row_is_zero(const Row& r) {
    for (u64 x : r)
        if (x != 0) return false;
    return true;
}

} // namespace polyfun
