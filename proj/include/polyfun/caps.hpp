#ifndef POLYFUN_CAPS_HPP
#define POLYFUN_CAPS_HPP

#include <cstdint>
#include <string>

namespace polyfun {

// Enumeration and size limits. All soft: breaching one raises CapError.
// Defaults are desk-scale; override programmatically, via POLYFUN_CAPS
// (JSON object in the environment), or per CLI flags.
struct Caps {
    std::uint64_t ring_size = 1u << 20;         // unit/element enumeration bound |R| = m^r
    std::uint64_t period_lcm = 1u << 16;        // aggregate power-period bound P
    std::uint64_t modulus = 1u << 20;           // largest residue modulus m
    unsigned matrix_dim = 4;                    // n in M_n / T_n builders
    std::uint64_t builder_modulus = 256;        // m in M_n / T_n builders
    unsigned degree = 512;                      // kernel degree bound d
    std::uint64_t brute_direct = 1u << 21;      // full poly enumeration bound m^{r(d+1)}
    double brute_meet = 68719476736.0;          // 2^36: meet-in-the-middle poly space bound
    std::uint64_t brute_kernel = 1u << 23;      // largest null set the oracle will walk
    std::uint64_t subset_exhaustion = 16;       // --all-subsets only when |R| <= this
};

const Caps& default_caps();

// Parses a POLYFUN_CAPS-style JSON object ({"ring_size": ..., ...}) on top
// of `base`. Unknown keys are rejected.
Caps caps_from_json(const std::string& text, const Caps& base);

// Reads the POLYFUN_CAPS environment variable if present.
Caps caps_from_env(const Caps& base);

} // namespace polyfun

#endif
