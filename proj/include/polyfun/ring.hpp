#ifndef POLYFUN_RING_HPP
#define POLYFUN_RING_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyfun/caps.hpp"
#include "polyfun/howell.hpp"
#include "polyfun/intmat.hpp"
#include "polyfun/zmod.hpp"

namespace polyfun {

class RingElement;

namespace detail {
struct RingData;
}

enum class RingFamily { kTable, kMatrix, kTriangular };

// Finite unital ring presented as a free Z/m-module of rank r with
// structure constants: b_i * b_j = sum_k tensor[i][j][k] b_k. Associativity
// and unitality are verified eagerly; a FiniteRing that exists is valid.
// Handles are cheap to copy and share immutable data.
class FiniteRing {
  public:
    FiniteRing() = default;

    static FiniteRing matrix_ring(unsigned n, u64 m, const Caps& caps = default_caps());
    static FiniteRing triangular_ring(unsigned n, u64 m, const Caps& caps = default_caps());
    static FiniteRing from_table(std::string name, u64 m, std::vector<std::string> labels,
                                 Row one, std::vector<u64> tensor);

    bool valid() const { return data_ != nullptr; }
    u64 modulus() const;
    std::size_t rank() const;
    const std::vector<std::string>& labels() const;
    const std::string& name() const;
    RingFamily family() const;
    unsigned matrix_dim() const; // n for matrix/triangular families, 0 for tables
    mpz_class size() const;      // m^r

    RingElement zero() const;
    RingElement one() const;
    RingElement basis_element(std::size_t i) const;
    RingElement element(Row coords) const;   // reduces mod m
    RingElement from_int(i64 k) const;       // k * one

    // Elements indexed 0 .. m^r-1 by base-m digits of the coordinates.
    RingElement element_at(u64 index) const;
    u64 element_count_checked(const Caps& caps) const; // CapError beyond caps.ring_size

    // Same module, reversed multiplication.
    FiniteRing opposite() const;

    bool same_as(const FiniteRing& o) const { return data_ == o.data_; }

    // Coordinate-level product, the innermost loop of everything above it.
    Row mul_coords(const Row& a, const Row& b) const;

  private:
    std::shared_ptr<const detail::RingData> data_;
    explicit FiniteRing(std::shared_ptr<const detail::RingData> d) : data_(std::move(d)) {}
};

class RingElement {
  public:
    RingElement() = default;
    RingElement(FiniteRing ring, Row coords);

    const FiniteRing& ring() const { return ring_; }
    const Row& coords() const { return coords_; }
    bool is_zero() const { return row_is_zero(coords_); }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement scaled(u64 c) const; // scalar from Z/m
    RingElement pow(u64 e) const;    // s^0 = 1 for every s, including 0

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    bool operator<(const RingElement& o) const; // coordinate lex, same ring only

    std::string coords_string() const; // [1,0,2]
    std::string label_string() const;  // 1*e11+2*e12 style, "0" for zero

  private:
    FiniteRing ring_;
    Row coords_;
    void check_same_ring(const RingElement& o) const;
};

// Subring presented by generators, stored as a canonical module basis
// closed under multiplication and containing one.
class SubringDesc {
  public:
    static SubringDesc span(const FiniteRing& ring, const std::vector<RingElement>& gens);
    static SubringDesc full(const FiniteRing& ring);

    const FiniteRing& ring() const { return ring_; }
    const std::vector<RingElement>& generators() const { return gens_; }
    const HowellBasis& basis() const { return basis_; }
    std::vector<RingElement> module_basis() const;
    bool contains(const RingElement& x) const;
    mpz_class order() const { return basis_.span_size(); }
    bool is_full() const;

    // All elements of the subring, in canonical coefficient order.
    std::vector<RingElement> elements(const Caps& caps = default_caps()) const;

    // Two-sided units of the subring (as a ring in its own right),
    // paired with inverses.
    std::vector<std::pair<RingElement, RingElement>> units(const Caps& caps = default_caps()) const;

  private:
    FiniteRing ring_;
    std::vector<RingElement> gens_;
    HowellBasis basis_;
    SubringDesc(FiniteRing r, std::vector<RingElement> g, HowellBasis b)
        : ring_(std::move(r)), gens_(std::move(g)), basis_(std::move(b)) {}
};

// Ideal of a subring T, stored as a canonical module basis closed under
// multiplication by T on both sides.
class IdealDesc {
  public:
    static IdealDesc span(const SubringDesc& subring, const std::vector<RingElement>& gens);
    static IdealDesc zero(const SubringDesc& subring);

    const SubringDesc& subring() const { return *subring_; }
    const HowellBasis& basis() const { return basis_; }
    bool contains(const RingElement& x) const;
    bool is_zero_ideal() const { return basis_.num_rows() == 0; }
    mpz_class order() const { return basis_.span_size(); }

  private:
    std::shared_ptr<const SubringDesc> subring_;
    HowellBasis basis_;
    IdealDesc(std::shared_ptr<const SubringDesc> t, HowellBasis b)
        : subring_(std::move(t)), basis_(std::move(b)) {}
};

// Finite subset of a ring; deduplicated and kept in coordinate order, so
// equal subsets compare equal and reports are deterministic.
class SubsetSpec {
  public:
    SubsetSpec(FiniteRing ring, std::vector<RingElement> elements);

    static SubsetSpec full(const FiniteRing& ring, const Caps& caps = default_caps());

    const FiniteRing& ring() const { return ring_; }
    const std::vector<RingElement>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(const RingElement& x) const;
    SubsetSpec united_with(const SubsetSpec& o) const;
    bool operator==(const SubsetSpec& o) const;

  private:
    FiniteRing ring_;
    std::vector<RingElement> elems_;
};

// --- ring-level operations ---

// Module basis of {z : z b_i = b_i z for all i}; contains one, closed
// under multiplication.
SubringDesc center(const FiniteRing& ring);

// All two-sided invertible elements with inverses, in element-index order.
std::vector<std::pair<RingElement, RingElement>> units(const FiniteRing& ring,
                                                       const Caps& caps = default_caps());

struct UnitGeneratedReport {
    bool generated = false;
    HowellBasis closure;     // module basis of the subring generated by center + units
    mpz_class closure_order; // |closure span|
};
UnitGeneratedReport is_unit_generated_over_center(const FiniteRing& ring,
                                                  const Caps& caps = default_caps());
UnitGeneratedReport is_unit_generated_over_center(const SubringDesc& subring,
                                                  const Caps& caps = default_caps());

// Smallest superset of S fixed by every u^-1 (.) u with u a unit.
SubsetSpec conjugation_closure(const SubsetSpec& s, const Caps& caps = default_caps());
bool is_conjugation_stable(const SubsetSpec& s,
                           const std::vector<std::pair<RingElement, RingElement>>& unit_pairs);

// Entrywise residue of an integer matrix in the matching quotient ring
// M_n(Z/d) or T_n(Z/d). `target` fixes which one (and shares element
// identity across calls).
RingElement reduce_mod(const IntMat& a, const FiniteRing& target);

} // namespace polyfun

#endif
