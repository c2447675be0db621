#include "polyfun/nullmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "polyfun/errors.hpp"

namespace polyfun {

PowerProfile power_profile(const SubsetSpec& s, const Caps& caps) {
    PowerProfile profile;
    for (const auto& elem : s.elements()) {
        std::map<Row, unsigned> seen;
        RingElement cur = s.ring().one();
        unsigned idx = 0;
        for (;;) {
            auto it = seen.find(cur.coords());
            if (it != seen.end()) {
                profile.per_element.push_back({elem, it->second, idx - it->second});
                break;
            }
            seen.emplace(cur.coords(), idx);
            cur = cur * elem;
            ++idx;
            if (idx > caps.ring_size + 1)
                throw CapError("power sequence exceeds the enumeration cap");
        }
        const ElementProfile& ep = profile.per_element.back();
        profile.preperiod = std::max(profile.preperiod, ep.preperiod);
        profile.period_lcm = std::lcm(profile.period_lcm, ep.period);
        if (profile.period_lcm > caps.period_lcm)
            throw CapError("aggregate power period exceeds the period-lcm cap");
    }
    if (profile.preperiod + profile.period_lcm > (u64{1} << 30))
        throw CapError("collapse degree out of range");
    return profile;
}

Poly collapse(const Poly& f, const PowerProfile& profile) {
    const unsigned n0 = profile.preperiod;
    const u64 p = profile.period_lcm;
    if (f.degree() < static_cast<int>(n0 + p)) return f;
    std::vector<RingElement> out(n0 + p, f.ring().zero());
    for (unsigned k = 0; k < f.coeffs().size(); ++k) {
        unsigned tgt = k < n0 ? k : n0 + static_cast<unsigned>((k - n0) % p);
        out[tgt] = out[tgt] + f.coeffs()[k];
    }
    return Poly(f.ring(), std::move(out));
}

KernelModule::KernelModule(FiniteRing ring, SubsetSpec subset, HowellBasis ideal_span, Side side,
                           unsigned degree, HowellBasis basis)
    : ring_(std::move(ring)), subset_(std::move(subset)), ideal_span_(std::move(ideal_span)),
      side_(side), degree_(degree), basis_(std::move(basis)) {}

std::vector<Poly> KernelModule::basis_polys() const {
    std::vector<Poly> out;
    out.reserve(basis_.num_rows());
    for (std::size_t i = 0; i < basis_.num_rows(); ++i) out.push_back(row_poly(i));
    return out;
}

Poly KernelModule::row_poly(std::size_t i) const {
    const Row& row = basis_.rows().at(i);
    const std::size_t r = ring_.rank();
    std::vector<RingElement> coeffs;
    coeffs.reserve(degree_ + 1);
    for (unsigned k = 0; k <= degree_; ++k)
        coeffs.push_back(ring_.element(Row(row.begin() + static_cast<std::ptrdiff_t>(k * r),
                                           row.begin() + static_cast<std::ptrdiff_t>((k + 1) * r))));
    return Poly(ring_, std::move(coeffs));
}

bool KernelModule::value_in_ideal(const RingElement& v) const {
    if (ideal_span_.num_rows() == 0) return v.is_zero();
    return ideal_span_.contains(v.coords());
}

Row KernelModule::flatten(const Poly& f) const {
    if (f.degree() > static_cast<int>(degree_))
        throw std::invalid_argument("polynomial degree exceeds the module bound");
    const std::size_t r = ring_.rank();
    Row flat((degree_ + 1) * r, 0);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        const Row& c = f.coeffs()[k].coords();
        std::copy(c.begin(), c.end(), flat.begin() + static_cast<std::ptrdiff_t>(k * r));
    }
    return flat;
}

KernelModule truncated_pol_module(const FiniteRing& ring, const SubsetSpec& s,
                                  const HowellBasis& ideal_span, unsigned d, Side side) {
    const std::size_t r = ring.rank();
    const u64 m = ring.modulus();
    const std::size_t cols = s.size() * r;

    // Power ladders per subset element.
    std::vector<std::vector<RingElement>> powers(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) {
        powers[t].reserve(d + 1);
        powers[t].push_back(ring.one());
        for (unsigned k = 1; k <= d; ++k) powers[t].push_back(powers[t].back() * s.elements()[t]);
    }

    std::vector<Row> a_rows;
    a_rows.reserve((d + 1) * r);
    for (unsigned k = 0; k <= d; ++k)
        for (std::size_t i = 0; i < r; ++i) {
            Row row(cols, 0);
            RingElement bi = ring.basis_element(i);
            for (std::size_t t = 0; t < s.size(); ++t) {
                RingElement v = side == Side::kRight ? bi * powers[t][k] : powers[t][k] * bi;
                std::copy(v.coords().begin(), v.coords().end(),
                          row.begin() + static_cast<std::ptrdiff_t>(t * r));
            }
            a_rows.push_back(std::move(row));
        }

    std::vector<Row> j_gens;
    for (const auto& ir : ideal_span.rows())
        for (std::size_t t = 0; t < s.size(); ++t) {
            Row row(cols, 0);
            std::copy(ir.begin(), ir.end(), row.begin() + static_cast<std::ptrdiff_t>(t * r));
            j_gens.push_back(std::move(row));
        }

    HowellBasis kernel = preimage_basis(a_rows, j_gens, m, cols);
    return KernelModule(ring, s, ideal_span, side, d, std::move(kernel));
}

KernelModule truncated_pol_module(const FiniteRing& ring, const SubsetSpec& s,
                                  const IdealDesc& ideal, unsigned d, Side side) {
    return truncated_pol_module(ring, s, ideal.basis(), d, side);
}

KernelModule truncated_null_module(const FiniteRing& ring, const SubsetSpec& s, unsigned d,
                                   Side side) {
    return truncated_pol_module(ring, s, HowellBasis({}, ring.modulus(), ring.rank()), d, side);
}

bool module_membership(const KernelModule& k, const Poly& f) {
    return k.basis().contains(k.flatten(f));
}

ClosureCheck closure_under_constants(const KernelModule& k, const std::vector<RingElement>& gens) {
    for (std::size_t i = 0; i < k.basis().num_rows(); ++i) {
        Poly f = k.row_poly(i);
        for (const auto& b : gens) {
            Poly g = mul_const_side(f, b, k.side());
            if (k.basis().contains(k.flatten(g))) continue;
            for (const auto& s : k.subset().elements()) {
                RingElement v = eval_side(g, s, k.side());
                if (!k.value_in_ideal(v)) return {false, ClosureWitness{f, b, s, v}};
            }
            throw CheckFailed("closure_under_constants: membership failed but every evaluation "
                              "landed in the ideal");
        }
    }
    return {true, std::nullopt};
}

Classification classify_null_ideal_set(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                       const HowellBasis& ideal_span, const Caps& caps) {
    PowerProfile profile = power_profile(s, caps);
    unsigned dstar = profile.exact_degree();
    if (dstar > caps.degree)
        throw CapError("collapse degree " + std::to_string(dstar) + " exceeds the degree cap");
    KernelModule k = truncated_pol_module(ring, s, ideal_span, dstar, side);
    std::vector<RingElement> gens;
    gens.reserve(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) gens.push_back(ring.basis_element(i));
    ClosureCheck cc = closure_under_constants(k, gens);
    return Classification{side, cc.closed, cc.witness, dstar};
}

Classification classify_null_ideal_set(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                       const Caps& caps) {
    return classify_null_ideal_set(ring, s, side,
                                   HowellBasis({}, ring.modulus(), ring.rank()), caps);
}

mpz_class count_poly_functions(const FiniteRing& ring, Side side, const Caps& caps) {
    SubsetSpec full = SubsetSpec::full(ring, caps);
    PowerProfile profile = power_profile(full, caps);
    unsigned dstar = profile.exact_degree();
    if (dstar > caps.degree) throw CapError("collapse degree exceeds the degree cap");
    KernelModule k = truncated_null_module(ring, full, dstar, side);
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(ring.modulus()),
                  static_cast<unsigned long>(ring.rank() * (dstar + 1)));
    mpz_class kernel_size = k.size();
    mpz_class count;
    mpz_divexact(count.get_mpz_t(), total.get_mpz_t(), kernel_size.get_mpz_t());
    return count;
}

mpz_class count_poly_functions_via_image(const FiniteRing& ring, Side side, const Caps& caps) {
    SubsetSpec full = SubsetSpec::full(ring, caps);
    PowerProfile profile = power_profile(full, caps);
    unsigned dstar = profile.exact_degree();
    if (dstar > caps.degree) throw CapError("collapse degree exceeds the degree cap");
    const std::size_t r = ring.rank();
    const std::size_t cols = full.size() * r;
    std::vector<std::vector<RingElement>> powers(full.size());
    for (std::size_t t = 0; t < full.size(); ++t) {
        powers[t].push_back(ring.one());
        for (unsigned k = 1; k <= dstar; ++k)
            powers[t].push_back(powers[t].back() * full.elements()[t]);
    }
    std::vector<Row> rows;
    for (unsigned k = 0; k <= dstar; ++k)
        for (std::size_t i = 0; i < r; ++i) {
            Row row(cols, 0);
            RingElement bi = ring.basis_element(i);
            for (std::size_t t = 0; t < full.size(); ++t) {
                RingElement v = side == Side::kRight ? bi * powers[t][k] : powers[t][k] * bi;
                std::copy(v.coords().begin(), v.coords().end(),
                          row.begin() + static_cast<std::ptrdiff_t>(t * r));
            }
            rows.push_back(std::move(row));
        }
    return HowellBasis(std::move(rows), ring.modulus(), cols).span_size();
}

// ---------------- brute-force oracle ----------------

namespace {

unsigned ceil_log2(u64 m) {
    unsigned b = 0;
    u64 v = 1;
    while (v < m) {
        v <<= 1;
        ++b;
    }
    return b;
}

struct BruteSetup {
    const FiniteRing& ring;
    const SubsetSpec& subset;
    Side side;
    unsigned dmax;
    std::size_t r;
    u64 m;
    std::size_t slots;                       // (dmax+1)*r
    unsigned bits;                           // per packed digit
    std::vector<std::vector<Row>> contrib;   // [slot][t] -> r coords
};

BruteSetup make_setup(const FiniteRing& ring, const SubsetSpec& s, Side side, unsigned dmax) {
    BruteSetup b{ring, s, side, dmax, ring.rank(), ring.modulus(),
                 (static_cast<std::size_t>(dmax) + 1) * ring.rank(), ceil_log2(ring.modulus()), {}};
    std::vector<std::vector<RingElement>> powers(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) {
        powers[t].push_back(ring.one());
        for (unsigned k = 1; k <= dmax; ++k) powers[t].push_back(powers[t].back() * s.elements()[t]);
    }
    b.contrib.resize(b.slots);
    for (unsigned k = 0; k <= dmax; ++k)
        for (std::size_t i = 0; i < b.r; ++i) {
            std::vector<Row> per_t;
            RingElement bi = ring.basis_element(i);
            for (std::size_t t = 0; t < s.size(); ++t) {
                RingElement v = side == Side::kRight ? bi * powers[t][k] : powers[t][k] * bi;
                per_t.push_back(v.coords());
            }
            b.contrib[k * b.r + i] = std::move(per_t);
        }
    return b;
}

u64 pack_digits(const Row& digits, unsigned bits) {
    u64 key = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) key |= digits[i] << (i * bits);
    return key;
}

Poly poly_from_digits(const BruteSetup& b, const Row& digits) {
    std::vector<RingElement> coeffs;
    for (unsigned k = 0; k <= b.dmax; ++k)
        coeffs.push_back(b.ring.element(Row(digits.begin() + static_cast<std::ptrdiff_t>(k * b.r),
                                            digits.begin() + static_cast<std::ptrdiff_t>((k + 1) * b.r))));
    return Poly(b.ring, std::move(coeffs));
}

Row digits_from_key(const BruteSetup& b, u64 key) {
    Row digits(b.slots);
    u64 mask = (u64{1} << b.bits) - 1;
    for (std::size_t i = 0; i < b.slots; ++i) digits[i] = (key >> (i * b.bits)) & mask;
    return digits;
}

// Enumerates all digit tuples over the slot range [lo, hi), invoking
// visit(digits, flat_evals) for every tuple. Evaluations are maintained
// incrementally: one contribution-row addition per odometer step.
template <typename Visit>
void enumerate_range(const BruteSetup& b, std::size_t lo, std::size_t hi, Visit&& visit) {
    const std::size_t nslots = hi - lo;
    const std::size_t tcount = b.subset.size();
    Row digits(nslots, 0);
    Row evals(tcount * b.r, 0);
    for (;;) {
        visit(static_cast<const Row&>(digits), static_cast<const Row&>(evals));
        std::size_t pos = 0;
        for (;;) {
            if (pos == nslots) return;
            ++digits[pos];
            const auto& per_t = b.contrib[lo + pos];
            for (std::size_t t = 0; t < tcount; ++t) {
                const Row& c = per_t[t];
                for (std::size_t q = 0; q < b.r; ++q) {
                    std::size_t at = t * b.r + q;
                    evals[at] = add_mod(evals[at], c[q], b.m);
                }
            }
            if (digits[pos] == b.m) {
                digits[pos] = 0;
                ++pos;
            } else {
                break;
            }
        }
    }
}

struct NullSet {
    std::vector<u64> keys;            // deterministic enumeration order
    std::unordered_set<u64> index;
};

NullSet enumerate_null_set(const BruteSetup& b, const Caps& caps) {
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(b.m),
                  static_cast<unsigned long>(b.slots));
    if (b.slots * b.bits > 64)
        throw CapError("oracle cannot pack coefficient tuples into a machine word");
    if (b.subset.size() * b.r * b.bits > 64)
        throw CapError("oracle cannot pack evaluation vectors into a machine word");

    NullSet out;
    if (total <= mpz_class(static_cast<unsigned long>(caps.brute_direct))) {
        enumerate_range(b, 0, b.slots, [&](const Row& digits, const Row& evals) {
            if (row_is_zero(evals)) {
                u64 key = pack_digits(digits, b.bits);
                out.keys.push_back(key);
                out.index.insert(key);
            }
        });
        return out;
    }
    if (mpz_get_d(total.get_mpz_t()) > caps.brute_meet)
        throw CapError("polynomial space " + total.get_str() + " exceeds the oracle cap");

    // Meet in the middle: f = f_A + f_B slotwise, f null iff
    // evals(f_A) = -evals(f_B).
    const std::size_t half = b.slots / 2;
    std::unordered_map<u64, std::vector<u64>> a_by_val;
    enumerate_range(b, 0, half, [&](const Row& digits, const Row& evals) {
        a_by_val[pack_digits(evals, b.bits)].push_back(pack_digits(digits, b.bits));
    });
    enumerate_range(b, half, b.slots, [&](const Row& digits, const Row& evals) {
        Row neg(evals.size());
        for (std::size_t i = 0; i < evals.size(); ++i) neg[i] = neg_mod(evals[i], b.m);
        auto it = a_by_val.find(pack_digits(neg, b.bits));
        if (it == a_by_val.end()) return;
        u64 bkey = pack_digits(digits, b.bits) << (half * b.bits);
        for (u64 akey : it->second) {
            if (out.keys.size() >= caps.brute_kernel)
                throw CapError("null set exceeds the oracle walk cap");
            u64 key = akey | bkey;
            out.keys.push_back(key);
            out.index.insert(key);
        }
    });
    return out;
}

// Per-generator transform of one packed coefficient block (right: c -> c*b,
// left: c -> b*c). Usable when a whole block packs into 16 bits.
std::vector<u64> block_table(const BruteSetup& b, const RingElement& gen) {
    const u64 block_vals = u64{1} << (b.r * b.bits);
    std::vector<u64> tbl(block_vals, 0);
    u64 mask = (u64{1} << b.bits) - 1;
    for (u64 v = 0; v < block_vals; ++v) {
        Row c(b.r);
        bool valid = true;
        for (std::size_t i = 0; i < b.r; ++i) {
            c[i] = (v >> (i * b.bits)) & mask;
            if (c[i] >= b.m) valid = false;
        }
        if (!valid) continue;
        Row t = b.side == Side::kRight ? b.ring.mul_coords(c, gen.coords())
                                       : b.ring.mul_coords(gen.coords(), c);
        tbl[v] = pack_digits(t, b.bits);
    }
    return tbl;
}

} // namespace

Classification brute_force_classify(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                    unsigned dmax, const Caps& caps) {
    if (s.empty()) return Classification{side, true, std::nullopt, dmax};
    BruteSetup b = make_setup(ring, s, side, dmax);
    NullSet nulls = enumerate_null_set(b, caps);

    const std::size_t block_bits = b.r * b.bits;
    if (block_bits > 16) throw CapError("oracle block transform does not fit a table");
    const u64 block_mask = (u64{1} << block_bits) - 1;

    for (std::size_t gi = 0; gi < ring.rank(); ++gi) {
        RingElement gen = ring.basis_element(gi);
        std::vector<u64> tbl = block_table(b, gen);
        for (u64 key : nulls.keys) {
            u64 out = 0;
            for (unsigned k = 0; k <= dmax; ++k)
                out |= tbl[(key >> (k * block_bits)) & block_mask] << (k * block_bits);
            if (nulls.index.count(out)) continue;
            // Found a violation; report it with a direct re-evaluation.
            Poly f = poly_from_digits(b, digits_from_key(b, key));
            Poly g = mul_const_side(f, gen, side);
            for (const auto& se : s.elements()) {
                RingElement v = eval_side(g, se, side);
                if (!v.is_zero())
                    return Classification{side, false, ClosureWitness{f, gen, se, v}, dmax};
            }
            throw CheckFailed("brute_force_classify: transform left the null set but every "
                              "evaluation is zero");
        }
    }
    return Classification{side, true, std::nullopt, dmax};
}

mpz_class brute_force_null_count(const FiniteRing& ring, const SubsetSpec& s, Side side,
                                 unsigned dmax, const Caps& caps) {
    if (s.empty()) {
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(ring.modulus()),
                      static_cast<unsigned long>(ring.rank() * (dmax + 1)));
        return total;
    }
    BruteSetup b = make_setup(ring, s, side, dmax);
    NullSet nulls = enumerate_null_set(b, caps);
    return mpz_class(static_cast<unsigned long>(nulls.keys.size()));
}

} // namespace polyfun
