#include "skewtor/metric.hpp"

#include "skewtor/error.hpp"

namespace skewtor {

RationalMatrix invert_matrix(const RationalMatrix& m) {
  const int n = static_cast<int>(m.size());
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw ValidationError("metric matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

namespace {

// Signature via Lagrange congruence diagonalization: always apply matching
// row and column operations so the matrix stays symmetric and the diagonal
// sign count is congruence-invariant (Sylvester).
void signature(RationalMatrix a, int& plus, int& minus) {
  const int n = static_cast<int>(a.size());
  plus = minus = 0;
  auto row_add = [&](int dst, int src, const Rational& f) {
    for (int c = 0; c < n; ++c) a[dst][c] += f * a[src][c];
  };
  auto col_add = [&](int dst, int src, const Rational& f) {
    for (int r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
  };
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int jdiag = -1, joff = -1;
      for (int j = k + 1; j < n; ++j) {
        if (jdiag < 0 && a[j][j] != 0) jdiag = j;
        if (joff < 0 && a[k][j] != 0) joff = j;
      }
      if (jdiag >= 0) {
        std::swap(a[k], a[jdiag]);
        for (int r = 0; r < n; ++r) std::swap(a[r][k], a[r][jdiag]);
      } else if (joff >= 0) {
        row_add(k, joff, Rational(1));
        col_add(k, joff, Rational(1));
      } else {
        continue;  // zero row: rank-deficient direction (degenerate metrics are caught by inversion)
      }
    }
    Rational p = a[k][k];
    if (p > 0)
      ++plus;
    else
      ++minus;
    for (int r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      Rational f = -a[r][k] / p;
      row_add(r, k, f);
      col_add(r, k, f);
    }
  }
}

}  // namespace

MetricData make_metric(const RationalMatrix& g) {
  const int n = static_cast<int>(g.size());
  if (n == 0) throw ValidationError("empty metric matrix");
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("metric matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g[i][j] != g[j][i])
        throw ValidationError("metric matrix is not symmetric at (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ")");
    }
  }
  MetricData m;
  m.n = n;
  m.g = g;
  m.ginv = invert_matrix(g);  // throws if degenerate
  signature(g, m.plus, m.minus);
  return m;
}

}  // namespace skewtor
