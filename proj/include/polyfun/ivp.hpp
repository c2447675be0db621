#ifndef POLYFUN_IVP_HPP
#define POLYFUN_IVP_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyfun/intmat.hpp"
#include "polyfun/nullmod.hpp"
#include "polyfun/ring.hpp"

namespace polyfun {

enum class MatrixFamily { kFull, kTriangular };

inline const char* family_name(MatrixFamily f) {
    return f == MatrixFamily::kFull ? "full" : "triangular";
}

// The integer-valued setting over D = Z, K = Q: A is M_n(Z) or T_n(Z),
// coefficients of integer-valued polynomials live in the Q-span of A.
struct AlgebraContext {
    MatrixFamily family = MatrixFamily::kFull;
    unsigned n = 1;

    FiniteRing quotient_ring(u64 d, const Caps& caps = default_caps()) const;
    bool admits(const IntMat& a) const;
    std::vector<IntMat> basis_matrices() const; // e_ij in the pattern, row-major
};

// Finite subset of A; deduplicated, kept in a canonical order.
class IntSubset {
  public:
    IntSubset(AlgebraContext ctx, std::vector<IntMat> elements);

    const AlgebraContext& context() const { return ctx_; }
    const std::vector<IntMat>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

  private:
    AlgebraContext ctx_;
    std::vector<IntMat> elems_;
};

// Whether F maps every element of S into A: each numerator evaluation must
// be divisible by the denominator.
bool frac_eval_check(const FracPoly& f, const IntSubset& s);

struct ReducedSubset {
    SubsetSpec subset;                  // S + dA inside A/dA (deduplicated)
    std::vector<std::size_t> preimage;  // first original index per reduced element
};
ReducedSubset reduce_subset(const IntSubset& s, const FiniteRing& quotient);

// Classifies S + dA as a subset of A/dA (Theorem link, one modulus).
Classification check_ringset_mod(const IntSubset& s, u64 d, Side side,
                                 const Caps& caps = default_caps());

struct LiftedCounterexample {
    FracPoly f;            // integer-valued on S, denominator d
    FracPoly g;            // integer polynomial (denominator 1)
    IntMat at;             // s in S where the product fails
    FracMat product_value; // (FG)(s), not integral
};

struct RingsetVerdict {
    bool not_ringset = false;
    u64 failing_modulus = 0;
    std::optional<LiftedCounterexample> counterexample;
    std::vector<u64> moduli_checked; // all-pass list for NoObstruction
};

// Lifts a quotient-ring closure witness to an explicit pair F = f/d, G = g
// of integer-valued polynomials on S whose product is not integer-valued.
// Every claim is re-verified; failure to verify is an internal error.
LiftedCounterexample counterexample_lift(const IntSubset& s, const IntPoly& f, const IntPoly& g,
                                         u64 d, const IntMat& at, Side side);

// Scans the moduli in order; the first failing modulus yields NotRingset
// with a lifted counterexample. All-pass means "no obstruction up to the
// bound", not a ringset proof.
RingsetVerdict ringset_scan(const IntSubset& s, Side side, const std::vector<u64>& moduli,
                            const Caps& caps = default_caps());

// Prime powers 2..bound in increasing order (the CRT-sufficient default
// moduli list).
std::vector<u64> prime_powers_upto(u64 bound);

struct SingletonVerdict {
    bool is_ringset = false;   // iff s is central in A
    // Witness fields for the non-central case:
    u64 denominator = 0;       // d
    IntMat noncommuting;       // t, first basis matrix with ts != st
    FracPoly f;                // (x - s)/d
    FracMat value;             // (f t)(s) = (ts - st)/d, not integral
};

// Werner's singleton criterion: {s} is a (right or left) ringset iff s is
// central; otherwise an explicit denominator-d counterexample exists.
SingletonVerdict singleton_classify(const AlgebraContext& ctx, const IntMat& s);

} // namespace polyfun

#endif
