#pragma once

#include <vector>

#include "shk/field.hpp"

namespace shk {

// Dense integer matrix used for boundary maps; entries are small (±1) but
// rank computation over the rationals is fraction-free, so intermediate
// values are arbitrary-precision internally.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  int& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

// Exact rank over the given field: Bareiss fraction-free elimination over the
// integers for the rationals, modular Gaussian elimination for GF(p).
long rank_over(const IntMatrix& m, const FieldSpec& field);

}  // namespace shk
