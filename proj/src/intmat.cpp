#include "polyfun/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace polyfun {

IntMat IntMat::identity(unsigned n) {
    IntMat r(n);
    for (unsigned i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

IntMat IntMat::basis(unsigned n, unsigned i, unsigned j) {
    IntMat r(n);
    r.at(i, j) = 1;
    return r;
}

IntMat IntMat::scalar(unsigned n, const mpz_class& k) {
    IntMat r(n);
    for (unsigned i = 0; i < n; ++i) r.at(i, i) = k;
    return r;
}

bool IntMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMat::is_upper_triangular() const {
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < i; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

bool IntMat::commutes_with(const IntMat& other) const {
    return *this * other == other * *this;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat r(n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned k = 0; k < n_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (unsigned j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator*(const mpz_class& k) const {
    IntMat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
    return r;
}

IntMat IntMat::operator-() const {
    IntMat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

bool IntMat::operator<(const IntMat& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        int c = cmp(a_[i], o.a_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool IntMat::divisible_by(const mpz_class& d) const {
    for (const auto& x : a_)
        if (x % d != 0) return false;
    return true;
}

mpz_class IntMat::content_gcd(mpz_class g) const {
    for (const auto& x : a_) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < n_; ++i) {
        if (i) os << ",";
        os << "[";
        for (unsigned j = 0; j < n_; ++j) {
            if (j) os << ",";
            os << at(i, j).get_str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

IntPoly::IntPoly(unsigned n, std::vector<IntMat> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.dim() != n_) throw std::invalid_argument("IntPoly: coefficient dimension mismatch");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const IntMat& c) { return IntPoly(c.dim(), {c}); }

IntPoly IntPoly::monomial(const IntMat& c, unsigned k) {
    std::vector<IntMat> v(k + 1, IntMat(c.dim()));
    v[k] = c;
    return IntPoly(c.dim(), std::move(v));
}

IntMat IntPoly::coeff(unsigned k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return IntMat(n_);
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntPoly: dimension mismatch");
    std::vector<IntMat> v(std::max(coeffs_.size(), o.coeffs_.size()), IntMat(n_));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(static_cast<unsigned>(k)) + o.coeff(static_cast<unsigned>(k));
    return IntPoly(n_, std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntPoly: dimension mismatch");
    std::vector<IntMat> v(std::max(coeffs_.size(), o.coeffs_.size()), IntMat(n_));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(static_cast<unsigned>(k)) - o.coeff(static_cast<unsigned>(k));
    return IntPoly(n_, std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntPoly: dimension mismatch");
    if (coeffs_.empty() || o.coeffs_.empty()) return zero(n_);
    std::vector<IntMat> v(coeffs_.size() + o.coeffs_.size() - 1, IntMat(n_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(n_, std::move(v));
}

IntMat IntPoly::eval_right(const IntMat& s) const {
    if (s.dim() != n_) throw std::invalid_argument("IntPoly: argument dimension mismatch");
    IntMat acc(n_);
    IntMat power = IntMat::identity(n_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) power = power * s;
        if (!coeffs_[k].is_zero()) acc = acc + coeffs_[k] * power;
    }
    return acc;
}

IntMat IntPoly::eval_left(const IntMat& s) const {
    if (s.dim() != n_) throw std::invalid_argument("IntPoly: argument dimension mismatch");
    IntMat acc(n_);
    IntMat power = IntMat::identity(n_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) power = power * s;
        if (!coeffs_[k].is_zero()) acc = acc + power * coeffs_[k];
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k].to_string();
        if (k == 1) os << "*x";
        else if (k > 1) os << "*x^" << k;
    }
    return os.str();
}

FracMat::FracMat(IntMat n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
    if (den <= 0) throw std::invalid_argument("FracMat: denominator must be positive");
    mpz_class g = num.content_gcd(den);
    if (g > 1) {
        den /= g;
        for (unsigned i = 0; i < num.dim(); ++i)
            for (unsigned j = 0; j < num.dim(); ++j)
                num.at(i, j) /= g;
    }
}

std::string FracMat::to_string() const {
    if (den == 1) return num.to_string();
    return num.to_string() + "/" + den.get_str();
}

FracPoly::FracPoly(IntPoly n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
    if (den <= 0) throw std::invalid_argument("FracPoly: denominator must be positive");
    mpz_class g = den;
    for (const auto& c : num.coeffs()) {
        g = c.content_gcd(g);
        if (g == 1) break;
    }
    if (g > 1) {
        den /= g;
        std::vector<IntMat> v = num.coeffs();
        for (auto& c : v)
            for (unsigned i = 0; i < c.dim(); ++i)
                for (unsigned j = 0; j < c.dim(); ++j) c.at(i, j) /= g;
        num = IntPoly(num.dim(), std::move(v));
    }
}

FracPoly FracPoly::operator*(const FracPoly& o) const {
    return FracPoly(num * o.num, den * o.den);
}

FracMat FracPoly::eval_right(const IntMat& s) const {
    return FracMat(num.eval_right(s), den);
}

FracMat FracPoly::eval_left(const IntMat& s) const {
    return FracMat(num.eval_left(s), den);
}

std::string FracPoly::to_string() const {
    if (den == 1) return num.to_string();
    return "(" + num.to_string() + ")/" + den.get_str();
}

} // namespace polyfun
