#include "polyfun/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polyfun/errors.hpp"

namespace polyfun {

namespace detail {
struct RingData {
    u64 m = 0;
    std::size_t r = 0;
    std::vector<std::string> labels;
    std::vector<u64> tensor; // (i*r + j)*r + k
    Row one;
    std::string name;
    RingFamily family = RingFamily::kTable;
    unsigned dim = 0;
};
} // namespace detail

namespace {

constexpr std::size_t kMaxRank = 128;

// b_i b_j coordinates, straight out of the tensor.
inline const u64* tensor_row(const detail::RingData& d, std::size_t i, std::size_t j) {
    return d.tensor.data() + (i * d.r + j) * d.r;
}

Row mul_coords_raw(const detail::RingData& d, const Row& a, const Row& b) {
    Row out(d.r, 0);
    for (std::size_t i = 0; i < d.r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d.r; ++j) {
            if (b[j] == 0) continue;
            u64 c = (a[i] * b[j]) % d.m;
            if (c == 0) continue;
            const u64* t = tensor_row(d, i, j);
            for (std::size_t k = 0; k < d.r; ++k)
                out[k] = (out[k] + c * t[k]) % d.m;
        }
    }
    return out;
}

void validate_algebra(const detail::RingData& d) {
    const std::size_t r = d.r;
    // one * b_i = b_i * one = b_i
    for (std::size_t i = 0; i < r; ++i) {
        Row e(r, 0);
        e[i] = 1;
        if (mul_coords_raw(d, d.one, e) != e || mul_coords_raw(d, e, d.one) != e)
            throw ConfigError("ring '" + d.name + "': unit violation at basis element '" +
                              d.labels[i] + "'");
    }
    // (b_i b_j) b_k = b_i (b_j b_k)
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Row ij(tensor_row(d, i, j), tensor_row(d, i, j) + r);
            for (std::size_t k = 0; k < r; ++k) {
                Row ek(r, 0);
                ek[k] = 1;
                Row lhs = mul_coords_raw(d, ij, ek);
                Row jk(tensor_row(d, j, k), tensor_row(d, j, k) + r);
                Row ei(r, 0);
                ei[i] = 1;
                Row rhs = mul_coords_raw(d, ei, jk);
                if (lhs != rhs)
                    throw ConfigError("ring '" + d.name + "': associativity violation at triple (" +
                                      d.labels[i] + ", " + d.labels[j] + ", " + d.labels[k] + ")");
            }
        }
}

std::shared_ptr<const detail::RingData> make_data(detail::RingData d) {
    if (d.m < 2) throw ConfigError("ring modulus must be >= 2");
    if (d.m > kMaxModulus) throw CapError("ring modulus exceeds supported range");
    if (d.r == 0) throw ConfigError("ring rank must be positive");
    if (d.r > kMaxRank) throw CapError("ring rank exceeds supported range");
    if (d.labels.size() != d.r || d.one.size() != d.r || d.tensor.size() != d.r * d.r * d.r)
        throw ConfigError("ring '" + d.name + "': inconsistent table sizes");
    for (auto& x : d.one) x %= d.m;
    for (auto& x : d.tensor) x %= d.m;
    validate_algebra(d);
    return std::make_shared<const detail::RingData>(std::move(d));
}

} // namespace

FiniteRing FiniteRing::matrix_ring(unsigned n, u64 m, const Caps& caps) {
    if (n < 1) throw ConfigError("matrix ring: n must be >= 1");
    if (n > caps.matrix_dim || m > caps.builder_modulus)
        throw CapError("matrix ring: size cap exceeded (n <= " + std::to_string(caps.matrix_dim) +
                       ", m <= " + std::to_string(caps.builder_modulus) + ")");
    detail::RingData d;
    d.m = m;
    d.r = static_cast<std::size_t>(n) * n;
    d.family = RingFamily::kMatrix;
    d.dim = n;
    d.name = "m" + std::to_string(n) + "z" + std::to_string(m);
    if (n == 1) d.name = "z" + std::to_string(m);
    d.labels.resize(d.r);
    d.one.assign(d.r, 0);
    auto idx = [n](unsigned i, unsigned j) { return static_cast<std::size_t>(i) * n + j; };
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            d.labels[idx(i, j)] = n == 1 ? "1" : "e" + std::to_string(i + 1) + std::to_string(j + 1);
        d.one[idx(i, i)] = 1;
    }
    // e_ab e_cd = [b == c] e_ad
    d.tensor.assign(d.r * d.r * d.r, 0);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned e = 0; e < n; ++e)
                    if (b == c)
                        d.tensor[(idx(a, b) * d.r + idx(c, e)) * d.r + idx(a, e)] = 1 % m;
    return FiniteRing(make_data(std::move(d)));
}

FiniteRing FiniteRing::triangular_ring(unsigned n, u64 m, const Caps& caps) {
    if (n < 1) throw ConfigError("triangular ring: n must be >= 1");
    if (n > caps.matrix_dim || m > caps.builder_modulus)
        throw CapError("triangular ring: size cap exceeded");
    detail::RingData d;
    d.m = m;
    d.r = static_cast<std::size_t>(n) * (n + 1) / 2;
    d.family = RingFamily::kTriangular;
    d.dim = n;
    d.name = "t" + std::to_string(n) + "z" + std::to_string(m);
    if (n == 1) d.name = "z" + std::to_string(m);
    std::map<std::pair<unsigned, unsigned>, std::size_t> idx;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            idx[{i, j}] = d.labels.size();
            d.labels.push_back(n == 1 ? "1" : "e" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    d.one.assign(d.r, 0);
    for (unsigned i = 0; i < n; ++i) d.one[idx[{i, i}]] = 1;
    d.tensor.assign(d.r * d.r * d.r, 0);
    for (auto& [ab, p] : idx)
        for (auto& [ce, q] : idx)
            if (ab.second == ce.first)
                d.tensor[(p * d.r + q) * d.r + idx[{ab.first, ce.second}]] = 1 % m;
    return FiniteRing(make_data(std::move(d)));
}

FiniteRing FiniteRing::from_table(std::string name, u64 m, std::vector<std::string> labels,
                                  Row one, std::vector<u64> tensor) {
    detail::RingData d;
    d.m = m;
    d.r = labels.size();
    d.labels = std::move(labels);
    d.one = std::move(one);
    d.tensor = std::move(tensor);
    d.name = std::move(name);
    d.family = RingFamily::kTable;
    return FiniteRing(make_data(std::move(d)));
}

u64 FiniteRing::modulus() const { return data_->m; }
std::size_t FiniteRing::rank() const { return data_->r; }
const std::vector<std::string>& FiniteRing::labels() const { return data_->labels; }
const std::string& FiniteRing::name() const { return data_->name; }
RingFamily FiniteRing::family() const { return data_->family; }
unsigned FiniteRing::matrix_dim() const { return data_->dim; }

mpz_class FiniteRing::size() const {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(data_->m),
                  static_cast<unsigned long>(data_->r));
    return s;
}

RingElement FiniteRing::zero() const { return RingElement(*this, Row(data_->r, 0)); }
RingElement FiniteRing::one() const { return RingElement(*this, data_->one); }

RingElement FiniteRing::basis_element(std::size_t i) const {
    if (i >= data_->r) throw std::out_of_range("basis_element");
    Row c(data_->r, 0);
    c[i] = 1 % data_->m;
    return RingElement(*this, std::move(c));
}

RingElement FiniteRing::element(Row coords) const {
    if (coords.size() != data_->r) throw std::invalid_argument("element: wrong coordinate count");
    for (auto& x : coords) x %= data_->m;
    return RingElement(*this, std::move(coords));
}

RingElement FiniteRing::from_int(i64 k) const {
    Row c = data_->one;
    row_scale(c, reduce_signed(k, data_->m), data_->m);
    return RingElement(*this, std::move(c));
}

RingElement FiniteRing::element_at(u64 index) const {
    Row c(data_->r);
    for (std::size_t i = 0; i < data_->r; ++i) {
        c[i] = index % data_->m;
        index /= data_->m;
    }
    return RingElement(*this, std::move(c));
}

u64 FiniteRing::element_count_checked(const Caps& caps) const {
    mpz_class s = size();
    if (s > mpz_class(static_cast<unsigned long>(caps.ring_size)))
        throw CapError("ring '" + name() + "' too large to enumerate (" + s.get_str() + " > " +
                       std::to_string(caps.ring_size) + ")");
    return s.get_ui();
}

FiniteRing FiniteRing::opposite() const {
    const detail::RingData& d = *data_;
    detail::RingData op;
    op.m = d.m;
    op.r = d.r;
    op.labels = d.labels;
    op.one = d.one;
    op.name = d.name + "^op";
    op.family = RingFamily::kTable;
    op.tensor.resize(d.tensor.size());
    for (std::size_t i = 0; i < d.r; ++i)
        for (std::size_t j = 0; j < d.r; ++j)
            for (std::size_t k = 0; k < d.r; ++k)
                op.tensor[(i * d.r + j) * d.r + k] = d.tensor[(j * d.r + i) * d.r + k];
    return FiniteRing(make_data(std::move(op)));
}

Row FiniteRing::mul_coords(const Row& a, const Row& b) const { return mul_coords_raw(*data_, a, b); }

// --- RingElement ---

RingElement::RingElement(FiniteRing ring, Row coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {}

void RingElement::check_same_ring(const RingElement& o) const {
    if (!ring_.same_as(o.ring_))
        throw std::invalid_argument("ring element operands belong to different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_same_ring(o);
    Row c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = add_mod(coords_[i], o.coords_[i], ring_.modulus());
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_same_ring(o);
    Row c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = sub_mod(coords_[i], o.coords_[i], ring_.modulus());
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ring(o);
    return RingElement(ring_, ring_.mul_coords(coords_, o.coords_));
}

RingElement RingElement::operator-() const {
    Row c = coords_;
    for (auto& x : c) x = neg_mod(x, ring_.modulus());
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::scaled(u64 c) const {
    Row r = coords_;
    row_scale(r, c, ring_.modulus());
    return RingElement(ring_, std::move(r));
}

RingElement RingElement::pow(u64 e) const {
    RingElement acc = ring_.one();
    RingElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool RingElement::operator==(const RingElement& o) const {
    return ring_.same_as(o.ring()) && coords_ == o.coords_;
}

bool RingElement::operator<(const RingElement& o) const { return coords_ < o.coords_; }

std::string RingElement::coords_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i];
    }
    os << "]";
    return os.str();
}

std::string RingElement::label_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (coords_[i] != 1) os << coords_[i] << "*";
        os << ring_.labels()[i];
    }
    if (first) return "0";
    return os.str();
}

// --- SubringDesc / IdealDesc ---

namespace {

std::vector<Row> coords_of(const std::vector<RingElement>& xs) {
    std::vector<Row> rows;
    rows.reserve(xs.size());
    for (const auto& x : xs) rows.push_back(x.coords());
    return rows;
}

// Closes a module span under the given binary products of basis rows.
HowellBasis close_under_products(const FiniteRing& ring, std::vector<Row> rows) {
    HowellBasis h(std::move(rows), ring.modulus(), ring.rank());
    for (;;) {
        std::vector<Row> add;
        const auto& basis = h.rows();
        for (const auto& x : basis)
            for (const auto& y : basis) {
                Row p = ring.mul_coords(x, y);
                if (!h.contains(p)) add.push_back(std::move(p));
            }
        if (add.empty()) break;
        std::vector<Row> next = h.rows();
        next.insert(next.end(), add.begin(), add.end());
        h = HowellBasis(std::move(next), ring.modulus(), ring.rank());
    }
    return h;
}

} // namespace

SubringDesc SubringDesc::span(const FiniteRing& ring, const std::vector<RingElement>& gens) {
    std::vector<Row> rows = coords_of(gens);
    for (const auto& g : gens)
        if (!g.ring().same_as(ring)) throw std::invalid_argument("subring generator from wrong ring");
    rows.push_back(ring.one().coords());
    HowellBasis h = close_under_products(ring, std::move(rows));
    return SubringDesc(ring, gens, std::move(h));
}

SubringDesc SubringDesc::full(const FiniteRing& ring) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < ring.rank(); ++i) rows.push_back(ring.basis_element(i).coords());
    return SubringDesc(ring, {}, HowellBasis(std::move(rows), ring.modulus(), ring.rank()));
}

std::vector<RingElement> SubringDesc::module_basis() const {
    std::vector<RingElement> out;
    out.reserve(basis_.num_rows());
    for (const auto& r : basis_.rows()) out.push_back(ring_.element(Row(r)));
    return out;
}

bool SubringDesc::contains(const RingElement& x) const { return basis_.contains(x.coords()); }

bool SubringDesc::is_full() const { return order() == ring_.size(); }

std::vector<RingElement> SubringDesc::elements(const Caps& caps) const {
    mpz_class n = order();
    if (n > mpz_class(static_cast<unsigned long>(caps.ring_size)))
        throw CapError("subring too large to enumerate");
    // Unique coefficients: row i admits multipliers in [0, m/pivot_i).
    std::vector<u64> radix;
    const u64 m = ring_.modulus();
    for (std::size_t i = 0; i < basis_.num_rows(); ++i)
        radix.push_back(m / basis_.rows()[i][basis_.pivot_cols()[i]]);
    std::vector<RingElement> out;
    out.reserve(n.get_ui());
    std::vector<u64> digits(radix.size(), 0);
    for (;;) {
        Row acc(ring_.rank(), 0);
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (digits[i] != 0) row_addmul(acc, basis_.rows()[i], digits[i], m);
        out.push_back(ring_.element(std::move(acc)));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == radix[pos]) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<RingElement, RingElement>> SubringDesc::units(const Caps& caps) const {
    std::vector<std::pair<RingElement, RingElement>> out;
    std::vector<RingElement> mb = module_basis();
    std::vector<RingElement> all = elements(caps);
    const u64 m = ring_.modulus();
    for (const auto& u : all) {
        // Solve u * (sum l_i g_i) = 1 with the g_i the module basis.
        std::vector<Row> a_rows;
        a_rows.reserve(mb.size());
        for (const auto& g : mb) a_rows.push_back(ring_.mul_coords(u.coords(), g.coords()));
        auto sol = solve_preimage(a_rows, {}, ring_.one().coords(), m, ring_.rank());
        if (!sol) continue;
        Row v(ring_.rank(), 0);
        for (std::size_t i = 0; i < sol->size(); ++i)
            if ((*sol)[i] != 0) row_addmul(v, mb[i].coords(), (*sol)[i], m);
        RingElement inv = ring_.element(std::move(v));
        if ((u * inv).coords() != ring_.one().coords()) continue;
        if ((inv * u).coords() != ring_.one().coords())
            throw CheckFailed("one-sided inverse in a finite ring");
        out.emplace_back(u, inv);
    }
    return out;
}

IdealDesc IdealDesc::span(const SubringDesc& subring, const std::vector<RingElement>& gens) {
    const FiniteRing& ring = subring.ring();
    for (const auto& g : gens)
        if (!subring.contains(g))
            throw std::invalid_argument("ideal generator outside the subring");
    std::vector<Row> rows = coords_of(gens);
    std::vector<RingElement> tb = subring.module_basis();
    HowellBasis h(rows, ring.modulus(), ring.rank());
    for (;;) {
        std::vector<Row> add;
        for (const auto& x : h.rows())
            for (const auto& b : tb) {
                Row l = ring.mul_coords(b.coords(), x);
                Row r = ring.mul_coords(x, b.coords());
                if (!h.contains(l)) add.push_back(std::move(l));
                if (!h.contains(r)) add.push_back(std::move(r));
            }
        if (add.empty()) break;
        std::vector<Row> next = h.rows();
        next.insert(next.end(), add.begin(), add.end());
        h = HowellBasis(std::move(next), ring.modulus(), ring.rank());
    }
    return IdealDesc(std::make_shared<const SubringDesc>(subring), std::move(h));
}

IdealDesc IdealDesc::zero(const SubringDesc& subring) {
    return IdealDesc(std::make_shared<const SubringDesc>(subring),
                     HowellBasis({}, subring.ring().modulus(), subring.ring().rank()));
}

bool IdealDesc::contains(const RingElement& x) const { return basis_.contains(x.coords()); }

// --- SubsetSpec ---

SubsetSpec::SubsetSpec(FiniteRing ring, std::vector<RingElement> elements)
    : ring_(std::move(ring)), elems_(std::move(elements)) {
    for (const auto& e : elems_)
        if (!e.ring().same_as(ring_))
            throw std::invalid_argument("subset element from wrong ring");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

SubsetSpec SubsetSpec::full(const FiniteRing& ring, const Caps& caps) {
    u64 n = ring.element_count_checked(caps);
    std::vector<RingElement> xs;
    xs.reserve(n);
    for (u64 i = 0; i < n; ++i) xs.push_back(ring.element_at(i));
    return SubsetSpec(ring, std::move(xs));
}

bool SubsetSpec::contains(const RingElement& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

SubsetSpec SubsetSpec::united_with(const SubsetSpec& o) const {
    if (!ring_.same_as(o.ring_)) throw std::invalid_argument("subset union across rings");
    std::vector<RingElement> xs = elems_;
    xs.insert(xs.end(), o.elems_.begin(), o.elems_.end());
    return SubsetSpec(ring_, std::move(xs));
}

bool SubsetSpec::operator==(const SubsetSpec& o) const {
    return ring_.same_as(o.ring_) && elems_ == o.elems_;
}

// --- operations ---

SubringDesc center(const FiniteRing& ring) {
    const std::size_t r = ring.rank();
    const u64 m = ring.modulus();
    // Rows of the map z -> (z b_i - b_i z)_i, one row per basis z = b_j.
    std::vector<Row> a_rows(r, Row(r * r, 0));
    for (std::size_t j = 0; j < r; ++j) {
        Row ej(r, 0);
        ej[j] = 1;
        for (std::size_t i = 0; i < r; ++i) {
            Row ei(r, 0);
            ei[i] = 1;
            Row zi = ring.mul_coords(ej, ei);
            Row iz = ring.mul_coords(ei, ej);
            for (std::size_t k = 0; k < r; ++k)
                a_rows[j][i * r + k] = sub_mod(zi[k], iz[k], m);
        }
    }
    HowellBasis ker = preimage_basis(a_rows, {}, m, r * r);
    std::vector<RingElement> gens;
    for (const auto& row : ker.rows()) gens.push_back(ring.element(Row(row)));
    return SubringDesc::span(ring, gens);
}

std::vector<std::pair<RingElement, RingElement>> units(const FiniteRing& ring, const Caps& caps) {
    return SubringDesc::full(ring).units(caps);
}

UnitGeneratedReport is_unit_generated_over_center(const SubringDesc& subring, const Caps& caps) {
    const FiniteRing& ring = subring.ring();
    // Center of the subring itself: z in T with z t = t z for all t in T.
    std::vector<RingElement> tb = subring.module_basis();
    std::vector<Row> a_rows;
    const std::size_t r = ring.rank();
    const u64 m = ring.modulus();
    for (const auto& g : tb) {
        Row row(tb.size() * r, 0);
        for (std::size_t i = 0; i < tb.size(); ++i) {
            Row zi = ring.mul_coords(g.coords(), tb[i].coords());
            Row iz = ring.mul_coords(tb[i].coords(), g.coords());
            for (std::size_t k = 0; k < r; ++k) row[i * r + k] = sub_mod(zi[k], iz[k], m);
        }
        a_rows.push_back(std::move(row));
    }
    HowellBasis lambda = preimage_basis(a_rows, {}, m, tb.size() * r);
    std::vector<Row> gens;
    for (const auto& l : lambda.rows()) {
        Row z(r, 0);
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l[i] != 0) row_addmul(z, tb[i].coords(), l[i], m);
        gens.push_back(std::move(z));
    }
    for (const auto& [u, v] : subring.units(caps)) {
        gens.push_back(u.coords());
        (void)v;
    }
    HowellBasis closure = close_under_products(ring, std::move(gens));
    UnitGeneratedReport rep{closure.span_size() == subring.order(), std::move(closure), 0};
    rep.closure_order = rep.closure.span_size();
    return rep;
}

UnitGeneratedReport is_unit_generated_over_center(const FiniteRing& ring, const Caps& caps) {
    return is_unit_generated_over_center(SubringDesc::full(ring), caps);
}

SubsetSpec conjugation_closure(const SubsetSpec& s, const Caps& caps) {
    auto unit_pairs = units(s.ring(), caps);
    std::set<RingElement> seen(s.elements().begin(), s.elements().end());
    std::vector<RingElement> work(s.elements().begin(), s.elements().end());
    while (!work.empty()) {
        RingElement x = work.back();
        work.pop_back();
        for (const auto& [u, uinv] : unit_pairs) {
            RingElement y = uinv * x * u;
            if (seen.insert(y).second) work.push_back(y);
        }
    }
    return SubsetSpec(s.ring(), std::vector<RingElement>(seen.begin(), seen.end()));
}

bool is_conjugation_stable(const SubsetSpec& s,
                           const std::vector<std::pair<RingElement, RingElement>>& unit_pairs) {
    for (const auto& x : s.elements())
        for (const auto& [u, uinv] : unit_pairs)
            if (!s.contains(uinv * x * u)) return false;
    return true;
}

RingElement reduce_mod(const IntMat& a, const FiniteRing& target) {
    const u64 d = target.modulus();
    const unsigned n = target.matrix_dim();
    if (target.family() == RingFamily::kTable || n == 0 || a.dim() != n)
        throw std::invalid_argument("reduce_mod: target is not a matching matrix ring");
    Row coords(target.rank(), 0);
    std::size_t slot = 0;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            bool in_pattern = target.family() == RingFamily::kMatrix || j >= i;
            mpz_class e = a.at(i, j) % static_cast<long>(d);
            if (e < 0) e += static_cast<long>(d);
            if (in_pattern) {
                coords[slot++] = e.get_ui();
            } else if (e != 0) {
                throw std::invalid_argument("reduce_mod: entry below the diagonal of a triangular ring");
            }
        }
    return target.element(std::move(coords));
}

} // namespace polyfun
