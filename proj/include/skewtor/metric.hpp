#pragma once

#include "skewtor/rational.hpp"

#include <vector>

namespace skewtor {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Constant pseudo-Riemannian metric on an n-dimensional frame: the matrix
// g_ij = g(X_i, X_j), its exact inverse, and the signature.  Entries are
// parameter-free rationals so the inverse stays rational.
struct MetricData {
  int n = 0;
  RationalMatrix g;
  RationalMatrix ginv;
  int plus = 0;   // number of positive squares
  int minus = 0;  // number of negative squares

  bool operator==(const MetricData& o) const { return n == o.n && g == o.g; }
};

// Validates symmetry and nondegeneracy, inverts exactly, and computes the
// signature by congruence diagonalization.  Throws ValidationError on a
// non-symmetric or degenerate matrix.
MetricData make_metric(const RationalMatrix& g);

// Exact inverse of a square rational matrix (Gauss-Jordan); throws
// ValidationError if singular.
RationalMatrix invert_matrix(const RationalMatrix& m);

}  // namespace skewtor
