#ifndef POLYFUN_INTMAT_HPP
#define POLYFUN_INTMAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polyfun {

// Dense n x n integer matrix with arbitrary-precision entries. Element of
// M_n(Z); the upper-triangular subring is a usage pattern, not a type.
class IntMat {
  public:
    IntMat() : n_(0) {}
    explicit IntMat(unsigned n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static IntMat identity(unsigned n);
    static IntMat basis(unsigned n, unsigned i, unsigned j); // e_ij, 0-indexed
    static IntMat scalar(unsigned n, const mpz_class& k);

    unsigned dim() const { return n_; }
    const mpz_class& at(unsigned i, unsigned j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    mpz_class& at(unsigned i, unsigned j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_zero() const;
    bool is_upper_triangular() const;
    bool commutes_with(const IntMat& other) const;

    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator*(const mpz_class& k) const;
    IntMat operator-() const;
    bool operator==(const IntMat& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool operator<(const IntMat& o) const; // lexicographic, for canonical ordering

    // True iff every entry is divisible by d.
    bool divisible_by(const mpz_class& d) const;

    // gcd of |entries| and g; unchanged when the matrix is zero.
    mpz_class content_gcd(mpz_class g) const;

    std::string to_string() const; // [[a,b],[c,d]]

  private:
    unsigned n_;
    std::vector<mpz_class> a_;
};

// Polynomial with IntMat coefficients, trailing zeros stripped.
class IntPoly {
  public:
    IntPoly() : n_(0) {}
    IntPoly(unsigned n, std::vector<IntMat> coeffs);

    static IntPoly zero(unsigned n) { return IntPoly(n, {}); }
    static IntPoly constant(const IntMat& c);
    static IntPoly monomial(const IntMat& c, unsigned k);

    unsigned dim() const { return n_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    IntMat coeff(unsigned k) const; // zero beyond degree
    const std::vector<IntMat>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    // Right evaluation sum_k C_k s^k, left evaluation sum_k s^k C_k.
    IntMat eval_right(const IntMat& s) const;
    IntMat eval_left(const IntMat& s) const;

    std::string to_string() const;

  private:
    unsigned n_;
    std::vector<IntMat> coeffs_;
};

// Rational matrix represented as an integer matrix over a positive
// denominator, reduced so no prime divides both.
struct FracMat {
    IntMat num;
    mpz_class den = 1;

    FracMat() = default;
    FracMat(IntMat n, mpz_class d); // reduces; d must be positive
    bool is_integral() const { return den == 1; }
    bool operator==(const FracMat& o) const { return den == o.den && num == o.num; }
    std::string to_string() const;
};

// Element of B[x] = (matrices over Q)[x]: integer-matrix polynomial over a
// positive denominator, reduced by content gcd.
struct FracPoly {
    IntPoly num;
    mpz_class den = 1;

    FracPoly() = default;
    FracPoly(IntPoly n, mpz_class d); // reduces

    FracPoly operator*(const FracPoly& o) const;
    bool operator==(const FracPoly& o) const { return den == o.den && num == o.num; }

    FracMat eval_right(const IntMat& s) const;
    FracMat eval_left(const IntMat& s) const;
    std::string to_string() const;
};

} // namespace polyfun

#endif
