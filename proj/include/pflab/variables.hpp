#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pflab {

// A variable is an index into the process-wide registry. Comparisons on the
// hot paths (monomial ordering) use only the index; the name is looked up for
// printing and parsing. Registration order defines the canonical variable
// order, with the series/alphabet variables pre-registered as
//   q < a < b < c < t < z < x1 < x2 < ... < y1 < y2 < ... < s
// Further names are appended in first-registration order.
using VarId = std::uint32_t;

namespace vars {

// Returns the id for `name`, registering it if unseen. Thread-safe,
// append-only; a name maps to exactly one id for the process lifetime.
VarId id(const std::string& name);

// Inverse lookup. Throws IndexOutOfRange for an unregistered id.
const std::string& name(VarId v);

// Number of pre-registered x_i / y_i variables.
constexpr int kIndexedCount = 24;

VarId q();
VarId a();
VarId b();
VarId c();
VarId t();
VarId z();
VarId s(); // pre-registered after the y block
VarId x(int i); // x(1) == "x1"; valid for 1 <= i <= kIndexedCount
VarId y(int i);

std::vector<VarId> x_block(int n); // {x1, ..., xn}
std::vector<VarId> y_block(int n);

} // namespace vars

} // namespace pflab
