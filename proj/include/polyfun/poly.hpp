#ifndef POLYFUN_POLY_HPP
#define POLYFUN_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "polyfun/ring.hpp"

namespace polyfun {

// Polynomial over a finite ring with central variable: f = sum_k c_k x^k
// = sum_k x^k c_k. Canonical form strips trailing zeros, so equality is
// coefficient-sequence equality; the zero polynomial has no coefficients
// and degree -1.
class Poly {
  public:
    Poly() = default;
    Poly(FiniteRing ring, std::vector<RingElement> coeffs);

    static Poly zero(const FiniteRing& ring) { return Poly(ring, {}); }
    static Poly constant(const RingElement& c) { return Poly(c.ring(), {c}); }
    static Poly x(const FiniteRing& ring);
    static Poly monomial(const RingElement& c, unsigned k);

    const FiniteRing& ring() const { return ring_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    RingElement coeff(unsigned k) const; // zero beyond degree
    const std::vector<RingElement>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const; // convolution; coefficient order a before b
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly mul_const_right(const RingElement& b) const; // f * b, coefficientwise c_k b
    Poly mul_const_left(const RingElement& b) const;  // b * f, coefficientwise b c_k
    Poly shifted(unsigned k) const;                   // f * x^k

    std::string to_string() const; // [c0] + [c1]*x + ..., coordinates in brackets

  private:
    FiniteRing ring_;
    std::vector<RingElement> coeffs_;
    void check_same_ring(const Poly& o) const;
};

// Right and left polynomial functions: powers of the argument to the right
// resp. left of the coefficients.
RingElement eval_right(const Poly& f, const RingElement& s);
RingElement eval_left(const Poly& f, const RingElement& s);

enum class Side { kRight, kLeft };

inline const char* side_name(Side s) { return s == Side::kRight ? "right" : "left"; }
RingElement eval_side(const Poly& f, const RingElement& s, Side side);
// Side-oriented constant action: right side appends b (f*b), left side
// prepends it (b*f).
Poly mul_const_side(const Poly& f, const RingElement& b, Side side);

// f = q*(x - s) + rem with rem = eval_right(f, s); a right factor (x - s)
// exists iff rem is zero.
std::pair<Poly, RingElement> divrem_linear_right(const Poly& f, const RingElement& s);

// Checks (g f)_r(s) = sum_k b_k (f_r(s)) s^k with both sides computed
// independently. An identity: false means a broken ring or a broken
// evaluator.
bool middle_expansion_check(const Poly& g, const Poly& f, const RingElement& s);

// Textual round-trip partner of Poly::to_string.
Poly parse_poly(const FiniteRing& ring, const std::string& text);

} // namespace polyfun

#endif
