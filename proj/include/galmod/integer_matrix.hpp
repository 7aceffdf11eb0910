#pragma once

#include <vector>

#include "galmod/rational.hpp"

namespace galmod {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Row-style Hermite normal form: H = U*M with U unimodular, H upper
/// echelon with positive pivots and entries above each pivot reduced into
/// [0, pivot). Zero rows are kept at the bottom.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

HermiteResult hermite_normal_form(const IntMatrix& m);

/// Basis of { v : v*M = 0 } in Hermite form.
IntMatrix left_kernel(const IntMatrix& m);

/// Absolute determinant of a square integer matrix.
Integer abs_determinant(const IntMatrix& m);

}  // namespace galmod
