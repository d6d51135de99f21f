#include "skewtor/frame.hpp"

namespace skewtor {

std::vector<Scalar> LieFrame::bracket(int i, int j) const {
  std::vector<Scalar> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = c.at({k, i, j});
  return out;
}

Scalar LieFrame::g_bracket(int i, int j, int k) const {
  Scalar sum;
  for (int m = 1; m <= n; ++m) {
    const Rational& gmk =
        metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)];
    if (gmk == 0) continue;
    Scalar term = c.at({m, i, j});
    term *= gmk;
    sum += term;
  }
  return sum;
}

std::optional<std::vector<int>> antisymmetry_violation(const LieFrame& f) {
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j)
      for (int k = 1; k <= f.n; ++k)
        if (f.c.at({k, i, j}) + f.c.at({k, j, i}) != Scalar())
          return std::vector<int>{i, j, k};
  return std::nullopt;
}

std::optional<JacobiWitness> jacobi_witness(const LieFrame& f) {
  // cyclic sum of [[X_i,X_j],X_k]: sum_s c^s_{ij} c^m_{sk} + cyclic
  for (int i = 1; i <= f.n; ++i) {
    for (int j = 1; j <= f.n; ++j) {
      for (int k = 1; k <= f.n; ++k) {
        for (int m = 1; m <= f.n; ++m) {
          Scalar sum;
          for (int s = 1; s <= f.n; ++s) {
            sum += f.c.at({s, i, j}) * f.c.at({m, s, k});
            sum += f.c.at({s, j, k}) * f.c.at({m, s, i});
            sum += f.c.at({s, k, i}) * f.c.at({m, s, j});
          }
          if (!sum.is_zero()) return JacobiWitness{i, j, k, m, sum};
        }
      }
    }
  }
  return std::nullopt;
}

bool jacobi_check(const LieFrame& f) { return !jacobi_witness(f).has_value(); }

}  // namespace skewtor
