#ifndef POLYFUN_RINGSPEC_IO_HPP
#define POLYFUN_RINGSPEC_IO_HPP

#include <string>
#include <vector>

#include "polyfun/caps.hpp"
#include "polyfun/ring.hpp"

namespace polyfun {

// Ring-spec document: a JSON object with fields `modulus`, `rank`,
// `basis`, `one`, `mul`. Loading is total: anything short of a valid
// associative unital table is rejected with a diagnostic.
FiniteRing load_ring_spec(const std::string& text, const std::string& name = "spec");
FiniteRing load_ring_spec_file(const std::string& path);

// Canonical single-line form; load followed by emit is byte-identical on
// canonical input.
std::string emit_ring_spec(const FiniteRing& ring);

// Builtin names: z{m}, m{n}z{m}, t{n}z{m}, plus the named table rings
// below. "@path" loads a spec file.
FiniteRing ring_by_name(const std::string& name, const Caps& caps = default_caps());

// Table rings shipped with the tool (exercised by the loader): the group
// ring F2[S3], Z/9 with a square-zero adjoint, Z/4 with a square root of -1.
std::vector<std::string> builtin_table_ring_names();
FiniteRing builtin_table_ring(const std::string& name);

// Element syntax: sums of terms over basis labels, e.g. "e11+2*e12", a bare
// integer k meaning k*1, or a coordinate tuple "[1,0,2]".
RingElement parse_element(const FiniteRing& ring, const std::string& text);

// Subset syntax: "[elem, elem, ...]"; "[]" is the empty subset.
SubsetSpec parse_subset(const FiniteRing& ring, const std::string& text);

} // namespace polyfun

#endif
