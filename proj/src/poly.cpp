#include "polyfun/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "polyfun/errors.hpp"

namespace polyfun {

Poly::Poly(FiniteRing ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!c.ring().same_as(ring_))
            throw std::invalid_argument("polynomial coefficient from wrong ring");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::x(const FiniteRing& ring) { return Poly(ring, {ring.zero(), ring.one()}); }

Poly Poly::monomial(const RingElement& c, unsigned k) {
    std::vector<RingElement> v(k + 1, c.ring().zero());
    v[k] = c;
    return Poly(c.ring(), std::move(v));
}

RingElement Poly::coeff(unsigned k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return ring_.zero();
}

void Poly::check_same_ring(const Poly& o) const {
    if (!ring_.same_as(o.ring_))
        throw std::invalid_argument("polynomial operands belong to different rings");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    std::vector<RingElement> v;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        v.push_back(coeff(static_cast<unsigned>(k)) + o.coeff(static_cast<unsigned>(k)));
    return Poly(ring_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ring(o);
    std::vector<RingElement> v;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        v.push_back(coeff(static_cast<unsigned>(k)) - o.coeff(static_cast<unsigned>(k)));
    return Poly(ring_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    if (coeffs_.empty() || o.coeffs_.empty()) return zero(ring_);
    std::vector<RingElement> v(coeffs_.size() + o.coeffs_.size() - 1, ring_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return Poly(ring_, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_.same_as(o.ring_)) return false;
    return coeffs_ == o.coeffs_;
}

Poly Poly::mul_const_right(const RingElement& b) const {
    std::vector<RingElement> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c * b);
    return Poly(ring_, std::move(v));
}

Poly Poly::mul_const_left(const RingElement& b) const {
    std::vector<RingElement> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(b * c);
    return Poly(ring_, std::move(v));
}

Poly Poly::shifted(unsigned k) const {
    if (coeffs_.empty() || k == 0) return k == 0 ? *this : zero(ring_);
    std::vector<RingElement> v(coeffs_.size() + k, ring_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return Poly(ring_, std::move(v));
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k].coords_string();
        if (k == 1) os << "*x";
        else if (k > 1) os << "*x^" << k;
    }
    return os.str();
}

RingElement eval_right(const Poly& f, const RingElement& s) {
    if (!f.ring().same_as(s.ring()))
        throw std::invalid_argument("eval: argument from wrong ring");
    RingElement acc = f.ring().zero();
    RingElement power = f.ring().one();
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (k > 0) power = power * s;
        if (!f.coeffs()[k].is_zero()) acc = acc + f.coeffs()[k] * power;
    }
    return acc;
}

RingElement eval_left(const Poly& f, const RingElement& s) {
    if (!f.ring().same_as(s.ring()))
        throw std::invalid_argument("eval: argument from wrong ring");
    RingElement acc = f.ring().zero();
    RingElement power = f.ring().one();
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (k > 0) power = power * s;
        if (!f.coeffs()[k].is_zero()) acc = acc + power * f.coeffs()[k];
    }
    return acc;
}

RingElement eval_side(const Poly& f, const RingElement& s, Side side) {
    return side == Side::kRight ? eval_right(f, s) : eval_left(f, s);
}

Poly mul_const_side(const Poly& f, const RingElement& b, Side side) {
    return side == Side::kRight ? f.mul_const_right(b) : f.mul_const_left(b);
}

std::pair<Poly, RingElement> divrem_linear_right(const Poly& f, const RingElement& s) {
    if (!f.ring().same_as(s.ring()))
        throw std::invalid_argument("divrem: argument from wrong ring");
    int d = f.degree();
    if (d < 1) return {Poly::zero(f.ring()), d == 0 ? f.coeff(0) : f.ring().zero()};
    // f = q*(x - s) + rem with q*(x - s) having coefficients q_{k-1} - q_k s.
    std::vector<RingElement> q(static_cast<std::size_t>(d), f.ring().zero());
    q[static_cast<std::size_t>(d - 1)] = f.coeff(static_cast<unsigned>(d));
    for (int k = d - 1; k >= 1; --k)
        q[static_cast<std::size_t>(k - 1)] = f.coeff(static_cast<unsigned>(k)) + q[static_cast<std::size_t>(k)] * s;
    RingElement rem = f.coeff(0) + q[0] * s;
    return {Poly(f.ring(), std::move(q)), rem};
}

bool middle_expansion_check(const Poly& g, const Poly& f, const RingElement& s) {
    if (!g.ring().same_as(f.ring()) || !f.ring().same_as(s.ring()))
        throw std::invalid_argument("middle_expansion_check: mixed rings");
    RingElement lhs = eval_right(g * f, s);
    RingElement fs = eval_right(f, s);
    RingElement rhs = g.ring().zero();
    RingElement power = g.ring().one();
    for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
        if (k > 0) power = power * s;
        if (!g.coeffs()[k].is_zero()) rhs = rhs + g.coeffs()[k] * fs * power;
    }
    return lhs == rhs;
}

namespace {

std::vector<std::string> split_top(const std::string& text, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

RingElement parse_coords_bracket(const FiniteRing& ring, const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ConfigError("polynomial coefficient must be a bracketed coordinate tuple: " + text);
    Row coords;
    for (const auto& part : split_top(t.substr(1, t.size() - 2), ',')) {
        std::string p = strip(part);
        if (p.empty()) throw ConfigError("empty coordinate in " + text);
        coords.push_back(reduce_signed(std::stoll(p), ring.modulus()));
    }
    if (coords.size() != ring.rank())
        throw ConfigError("coordinate tuple has wrong length for ring '" + ring.name() + "': " + text);
    return ring.element(std::move(coords));
}

} // namespace

Poly parse_poly(const FiniteRing& ring, const std::string& text) {
    std::string t = strip(text);
    if (t == "0") return Poly::zero(ring);
    Poly acc = Poly::zero(ring);
    for (const auto& term : split_top(t, '+')) {
        std::string tt = strip(term);
        unsigned k = 0;
        std::string coeff_part = tt;
        std::size_t star = tt.rfind("*x");
        if (star != std::string::npos && tt.find(']', star) == std::string::npos) {
            coeff_part = strip(tt.substr(0, star));
            std::string xp = strip(tt.substr(star + 2));
            if (xp.empty()) k = 1;
            else if (xp[0] == '^') k = static_cast<unsigned>(std::stoul(xp.substr(1)));
            else throw ConfigError("bad power suffix in polynomial term: " + tt);
        }
        acc = acc + Poly::monomial(parse_coords_bracket(ring, coeff_part), k);
    }
    return acc;
}

} // namespace polyfun
