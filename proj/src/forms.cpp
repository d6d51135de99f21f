#include "skewtor/forms.hpp"

#include "skewtor/error.hpp"

namespace skewtor {

Tensor exterior_derivative(const LieFrame& f, const Tensor& w) {
  if (!is_skew(w)) throw Error("exterior_derivative: input form is not skew");
  const int p = w.rank();  // input is a p-form, output a (p+1)-form
  Tensor out = Tensor::make(f.n, 0, p + 1);
  out.for_each_index([&](const std::vector<int>& idx) {
    Scalar acc;
    for (int a = 0; a <= p; ++a) {
      for (int b = a + 1; b <= p; ++b) {
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(p));
        for (int r = 0; r <= p; ++r)
          if (r != a && r != b) rest.push_back(idx[static_cast<std::size_t>(r)]);
        // first argument of w is [x_a, x_b]
        Scalar inner;
        for (int s = 1; s <= f.n; ++s) {
          const Scalar& cs = f.c.at({s, idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]});
          if (cs.is_zero()) continue;
          std::vector<int> warg;
          warg.reserve(static_cast<std::size_t>(p));
          warg.push_back(s);
          warg.insert(warg.end(), rest.begin(), rest.end());
          inner += cs * w.at(warg);
        }
        if ((a + b) % 2 == 0)
          acc += inner;
        else
          acc -= inner;
      }
    }
    out.at(idx) = acc;
  });
  return out;
}

Tensor codifferential_3form(const LieFrame& f, const Connection& conn, const Tensor& t3) {
  if (t3.rank() != 3 || !is_skew(t3)) throw Error("codifferential_3form: input is not a 3-form");
  Tensor nt = covariant_derivative(conn, t3);  // slots (d, x, y, z)
  Tensor out = Tensor::make(f.n, 0, 2);
  for (int y = 1; y <= f.n; ++y) {
    for (int z = 1; z <= f.n; ++z) {
      Scalar acc;
      for (int i = 1; i <= f.n; ++i) {
        for (int j = 1; j <= f.n; ++j) {
          const Rational& gij =
              f.metric.ginv[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
          if (gij == 0) continue;
          Scalar term = nt.at({i, j, y, z});
          term *= gij;
          acc -= term;
        }
      }
      out.at({y, z}) = acc;
    }
  }
  return out;
}

Scalar square_norm(const MetricData& m, const Tensor& s) {
  if (s.valence().first != 0) throw Error("square_norm: input must be fully covariant");
  const int k = s.rank();
  // Collect nonzero components once; the double sum then pairs them through
  // one inverse-metric factor per slot.
  struct Entry {
    std::vector<int> idx;
    const Scalar* value;
  };
  std::vector<Entry> entries;
  s.for_each_index([&](const std::vector<int>& idx) {
    const Scalar& v = s.at(idx);
    if (!v.is_zero()) entries.push_back({idx, &v});
  });
  Scalar acc;
  for (const auto& a : entries) {
    for (const auto& b : entries) {
      Rational w(1);
      for (int t = 0; t < k; ++t) {
        const Rational& gab = m.ginv[static_cast<std::size_t>(a.idx[static_cast<std::size_t>(t)] - 1)]
                                    [static_cast<std::size_t>(b.idx[static_cast<std::size_t>(t)] - 1)];
        if (gab == 0) {
          w = 0;
          break;
        }
        w *= gab;
      }
      if (w == 0) continue;
      Scalar term = *a.value * *b.value;
      term *= w;
      acc += term;
    }
  }
  return acc;
}

}  // namespace skewtor
