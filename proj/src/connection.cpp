#include "skewtor/connection.hpp"

#include "skewtor/error.hpp"

#include <algorithm>

namespace skewtor {

Connection levi_civita(const LieFrame& f) {
  if (auto bad = antisymmetry_violation(f))
    throw ValidationError("structure constants violate antisymmetry at (" +
                          std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                          std::to_string((*bad)[2]) + ")");
  if (!jacobi_check(f))
    throw ValidationError("Jacobi identity fails; the frame is not a Lie algebra");
  Connection conn{f, Tensor::make(f.n, 1, 2)};
  for (int i = 1; i <= f.n; ++i) {
    for (int j = 1; j <= f.n; ++j) {
      // lowered coefficient L_k = g(nabla_{X_i} X_j, X_k)
      for (int m = 1; m <= f.n; ++m) {
        Scalar acc;
        for (int k = 1; k <= f.n; ++k) {
          const Rational& w =
              f.metric.ginv[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)];
          if (w == 0) continue;
          Scalar lowered = f.g_bracket(i, j, k) - f.g_bracket(j, k, i) + f.g_bracket(k, i, j);
          lowered /= Rational(2);
          lowered *= w;
          acc += lowered;
        }
        conn.gamma.at({m, i, j}) = acc;
      }
    }
  }
  return conn;
}

Tensor covariant_derivative(const Connection& conn, const Tensor& t) {
  const LieFrame& f = conn.frame;
  if (t.dim() != f.n) throw Error("covariant_derivative: frame dimension mismatch");
  const auto& kinds = t.kinds();
  // Insert the derivative slot before the first covariant slot.
  std::size_t ins = kinds.size();
  for (std::size_t s = 0; s < kinds.size(); ++s) {
    if (kinds[s] == SlotKind::Cov) {
      ins = s;
      break;
    }
  }
  std::vector<SlotKind> out_kinds = kinds;
  out_kinds.insert(out_kinds.begin() + static_cast<std::ptrdiff_t>(ins), SlotKind::Cov);
  Tensor out(f.n, out_kinds);
  out.for_each_index([&](const std::vector<int>& oidx) {
    int d = oidx[ins];  // direction of differentiation
    std::vector<int> base;
    base.reserve(kinds.size());
    for (std::size_t s = 0; s < oidx.size(); ++s)
      if (s != ins) base.push_back(oidx[s]);
    Scalar acc;
    std::vector<int> idx = base;
    for (std::size_t s = 0; s < kinds.size(); ++s) {
      for (int m = 1; m <= f.n; ++m) {
        idx[s] = m;
        const Scalar& comp = t.at(idx);
        if (!comp.is_zero()) {
          if (kinds[s] == SlotKind::Contra)
            acc += conn.gamma.at({base[s], d, m}) * comp;
          else
            acc -= conn.gamma.at({m, d, base[s]}) * comp;
        }
      }
      idx[s] = base[s];
    }
    out.at(oidx) = acc;
  });
  return out;
}

Tensor torsion_of(const Connection& conn) {
  const LieFrame& f = conn.frame;
  Tensor t = Tensor::make(f.n, 1, 2);
  for (int k = 1; k <= f.n; ++k)
    for (int i = 1; i <= f.n; ++i)
      for (int j = 1; j <= f.n; ++j)
        t.at({k, i, j}) = conn.gamma.at({k, i, j}) - conn.gamma.at({k, j, i}) - f.c.at({k, i, j});
  return t;
}

Tensor curvature(const Connection& conn) {
  const LieFrame& f = conn.frame;
  Tensor r = Tensor::make(f.n, 0, 4);
  std::vector<Scalar> up(static_cast<std::size_t>(f.n));
  for (int i = 1; i <= f.n; ++i) {
    for (int j = 1; j <= f.n; ++j) {
      for (int k = 1; k <= f.n; ++k) {
        for (int m = 1; m <= f.n; ++m) {
          Scalar acc;
          for (int s = 1; s <= f.n; ++s) {
            acc += conn.gamma.at({s, j, k}) * conn.gamma.at({m, i, s});
            acc -= conn.gamma.at({s, i, k}) * conn.gamma.at({m, j, s});
            acc -= f.c.at({s, i, j}) * conn.gamma.at({m, s, k});
          }
          up[static_cast<std::size_t>(m - 1)] = acc;
        }
        for (int w = 1; w <= f.n; ++w) {
          Scalar low;
          for (int m = 1; m <= f.n; ++m) {
            const Rational& gmw =
                f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(w - 1)];
            if (gmw == 0) continue;
            Scalar term = up[static_cast<std::size_t>(m - 1)];
            term *= gmw;
            low += term;
          }
          r.at({i, j, k, w}) = low;
        }
      }
    }
  }
  return r;
}

RicciScalar ricci_scalar(const Tensor& r4, const MetricData& m) {
  const int n = m.n;
  RicciScalar out{Tensor::make(n, 0, 2), Scalar()};
  for (int y = 1; y <= n; ++y) {
    for (int z = 1; z <= n; ++z) {
      Scalar acc;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const Rational& gij =
              m.ginv[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
          if (gij == 0) continue;
          Scalar term = r4.at({i, y, z, j});
          term *= gij;
          acc += term;
        }
      }
      out.rho.at({y, z}) = acc;
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const Rational& gjk =
          m.ginv[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
      if (gjk == 0) continue;
      Scalar term = out.rho.at({j, k});
      term *= gjk;
      out.tau += term;
    }
  }
  return out;
}

}  // namespace skewtor
