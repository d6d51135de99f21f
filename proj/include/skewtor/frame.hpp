#pragma once

#include "skewtor/metric.hpp"
#include "skewtor/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewtor {

// Left-invariant data of a Lie group in a fixed global frame X_1..X_n:
// structure constants c^k_{ij} with [X_i, X_j] = c^k_{ij} X_k (entries are
// polynomials in the declared parameters) and a constant metric.
struct LieFrame {
  std::string name;
  int n = 0;
  // Declared parameter names in order, with their global ids.
  std::vector<std::string> param_names;
  std::vector<int> param_ids;
  // kinds (Contra, Cov, Cov); c.at({k, i, j}) = c^k_{ij}.
  Tensor c;
  MetricData metric;

  // Components of [X_i, X_j] as a vector of n Scalars.
  std::vector<Scalar> bracket(int i, int j) const;
  // g([X_i, X_j], X_k).
  Scalar g_bracket(int i, int j, int k) const;

  bool operator==(const LieFrame& o) const {
    return n == o.n && c == o.c && metric == o.metric && param_names == o.param_names;
  }
};

// Checks c^k_{ij} = -c^k_{ji} identically; returns the first violating (i,j,k)
// if any.
std::optional<std::vector<int>> antisymmetry_violation(const LieFrame& f);

// True iff the Jacobi identity holds as a polynomial identity for all index
// triples (antisymmetry of c is a precondition).
bool jacobi_check(const LieFrame& f);

// First nonzero Jacobi residual as ((i,j,k,m), polynomial), if any.
struct JacobiWitness {
  int i, j, k, m;
  Scalar residual;
};
std::optional<JacobiWitness> jacobi_witness(const LieFrame& f);

}  // namespace skewtor
