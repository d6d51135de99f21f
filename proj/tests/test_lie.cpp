#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtor/error.hpp"
#include "skewtor/connection.hpp"
#include "skewtor/connections_kt.hpp"
#include "skewtor/examples.hpp"
#include "skewtor/forms.hpp"
#include "skewtor/rng.hpp"

using namespace skewtor;

namespace {

void set_bracket(LieFrame& f, int i, int j, const std::vector<Rational>& comps) {
  for (int k = 1; k <= f.n; ++k) {
    f.c.at({k, i, j}) = Scalar(comps[static_cast<std::size_t>(k - 1)]);
    f.c.at({k, j, i}) = -Scalar(comps[static_cast<std::size_t>(k - 1)]);
  }
}

LieFrame so3_frame() {
  LieFrame f;
  f.name = "so3";
  f.n = 3;
  f.c = Tensor(3, {SlotKind::Contra, SlotKind::Cov, SlotKind::Cov});
  set_bracket(f, 1, 2, {0, 0, 1});
  set_bracket(f, 2, 3, {1, 0, 0});
  set_bracket(f, 3, 1, {0, 1, 0});
  RationalMatrix g(3, std::vector<Rational>(3, Rational(0)));
  for (int i = 0; i < 3; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  f.metric = make_metric(g);
  return f;
}

Scalar q_poly(const LieFrame& f4) {
  auto P = [&](int i) { return Scalar::param(f4.param_ids[static_cast<std::size_t>(i)]); };
  return P(0) * P(0) + P(1) * P(1) - P(2) * P(2) - P(3) * P(3);
}

}  // namespace

TEST_CASE("jacobi identity holds on so(3) and fails after tampering") {
  LieFrame f = so3_frame();
  CHECK_FALSE(antisymmetry_violation(f).has_value());
  CHECK(jacobi_check(f));
  CHECK_FALSE(jacobi_witness(f).has_value());
  // [X1,X2] = X3 + X1 is no longer a Lie bracket
  f.c.at({1, 1, 2}) += Scalar(Rational(1));
  f.c.at({1, 2, 1}) -= Scalar(Rational(1));
  CHECK_FALSE(antisymmetry_violation(f).has_value());
  CHECK_FALSE(jacobi_check(f));
  auto w = jacobi_witness(f);
  REQUIRE(w.has_value());
  CHECK_FALSE(w->residual.is_zero());
}

TEST_CASE("bracket accessor matches the structure constants") {
  ManifoldSpec spec = build_example_4d();
  const LieFrame& f = spec.frame;
  auto P = [&](int i) { return Scalar::param(f.param_ids[static_cast<std::size_t>(i)]); };
  std::vector<Scalar> b12 = f.bracket(1, 2);
  CHECK(b12[0] == P(0));
  CHECK(b12[1] == P(1));
  CHECK(b12[2].is_zero());
  CHECK(b12[3].is_zero());
  // g([X1,X2],X1) with metric diag(1,1,-1,-1)
  CHECK(f.g_bracket(1, 2, 1) == P(0));
  CHECK(f.g_bracket(1, 2, 3).is_zero());
  CHECK(jacobi_check(f));
}

TEST_CASE("levi_civita on a bi-invariant metric halves the bracket") {
  LieFrame f = so3_frame();
  Connection lc = levi_civita(f);
  CHECK(lc.gamma.at({3, 1, 2}) == Scalar(Rational(1, 2)));
  CHECK(lc.gamma.at({3, 2, 1}) == -Scalar(Rational(1, 2)));
  CHECK(lc.gamma.at({1, 1, 2}).is_zero());
  CHECK(torsion_of(lc).is_zero());
}

TEST_CASE("levi_civita requires the jacobi identity") {
  LieFrame f = so3_frame();
  f.c.at({1, 1, 2}) += Scalar(Rational(1));
  f.c.at({1, 2, 1}) -= Scalar(Rational(1));
  CHECK_THROWS_AS(levi_civita(f), ValidationError);
}

TEST_CASE("levi_civita is torsion-free and metric on the symbolic families") {
  for (ManifoldSpec spec : {build_example_4d(), build_example_5d()}) {
    Connection lc = levi_civita(spec.frame);
    CHECK(torsion_of(lc).is_zero());
    CHECK(covariant_derivative(lc, metric_tensor(spec.frame)).is_zero());
  }
}

TEST_CASE("four-dimensional family: levi_civita spot values") {
  ManifoldSpec spec = build_example_4d();
  const LieFrame& f = spec.frame;
  auto P = [&](int i) { return Scalar::param(f.param_ids[static_cast<std::size_t>(i)]); };
  Connection lc = levi_civita(f);
  CHECK(lc.gamma.at({1, 1, 2}) == P(0));
  CHECK(lc.gamma.at({1, 2, 3}) == P(2) * Rational(1, 2));
  CHECK(lc.gamma.at({2, 3, 4}) == -P(1) * Rational(1, 2));
  CHECK(lc.gamma.at({4, 4, 3}) == -P(3));
}

TEST_CASE("four-dimensional family: curvature symmetries, ricci and tau") {
  ManifoldSpec spec = build_example_4d();
  const LieFrame& f = spec.frame;
  auto P = [&](int i) { return Scalar::param(f.param_ids[static_cast<std::size_t>(i)]); };
  Connection lc = levi_civita(f);
  Tensor r4 = curvature(lc);
  const int n = f.n;
  bool sym_ok = true, bianchi_ok = true;
  for (int x = 1; x <= n && sym_ok && bianchi_ok; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          if (!(r4.at({x, y, z, w}) + r4.at({y, x, z, w})).is_zero()) sym_ok = false;
          if (!(r4.at({x, y, z, w}) + r4.at({x, y, w, z})).is_zero()) sym_ok = false;
          if (!(r4.at({x, y, z, w}) - r4.at({z, w, x, y})).is_zero()) sym_ok = false;
          Scalar cyc = r4.at({x, y, z, w}) + r4.at({y, z, x, w}) + r4.at({z, x, y, w});
          if (!cyc.is_zero()) bianchi_ok = false;
        }
  CHECK(sym_ok);
  CHECK(bianchi_ok);

  RicciScalar rs = ricci_scalar(r4, f.metric);
  auto p1 = P(0), p2 = P(1), p3 = P(2), p4 = P(3);
  CHECK(rs.rho.at({1, 1}) ==
        -p1 * p1 * Rational(1, 2) - p2 * p2 * Rational(2) + p3 * p3 * Rational(1, 2) -
            p4 * p4 * Rational(1, 2));
  CHECK(rs.rho.at({1, 2}) == p1 * p2 * Rational(3, 2) + p3 * p4);
  CHECK(rs.rho.at({3, 4}) == p1 * p2 + p3 * p4 * Rational(3, 2));
  CHECK(rs.tau == q_poly(f) * Rational(-5, 2));
}

TEST_CASE("five-dimensional family: covariant derivative at a bound point") {
  ManifoldSpec spec = build_example_5d();
  spec.bindings = {{"l1", 0}, {"l2", 0}, {"l3", 0}, {"l4", 0}, {"m1", 1}, {"m2", 0}};
  ManifoldSpec bound = bind_params(spec, {});
  Connection lc = levi_civita(bound.frame);
  // nabla_{X1} X2 = X5 at this point
  for (int m = 1; m <= 5; ++m)
    CHECK(lc.gamma.at({m, 1, 2}) == (m == 5 ? Scalar(Rational(1)) : Scalar()));
}

TEST_CASE("exterior derivative: d eta on the five-dimensional family") {
  ManifoldSpec spec = build_example_5d();
  const LieFrame& f = spec.frame;
  const auto& cs = std::get<ContactBStructure>(spec.pack);
  Tensor deta = exterior_derivative(f, cs.eta);
  Scalar m1 = Scalar::param(f.param_ids[4]);
  Scalar m2 = Scalar::param(f.param_ids[5]);
  CHECK(deta.at({1, 2}) == m1 * Rational(-2));
  CHECK(deta.at({3, 4}) == m1 * Rational(2));
  CHECK(deta.at({1, 4}) == m2 * Rational(-2));
  CHECK(is_skew(deta));
}

TEST_CASE("d squared vanishes on random invariant forms") {
  ManifoldSpec spec = build_example_4d();
  RationalSampler rng(71);
  Tensor w1 = Tensor::make(4, 0, 1);
  for (int i = 1; i <= 4; ++i) w1.at({i}) = Scalar(rng.next());
  CHECK(exterior_derivative(spec.frame, exterior_derivative(spec.frame, w1)).is_zero());
  Tensor w2 = Tensor::make(4, 0, 2);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      Scalar v = Scalar(rng.next());
      w2.at({i, j}) = v;
      w2.at({j, i}) = -v;
    }
  CHECK(exterior_derivative(spec.frame, exterior_derivative(spec.frame, w2)).is_zero());
  Tensor notskew = Tensor::make(4, 0, 2);
  notskew.at({1, 1}) = Scalar(Rational(1));
  CHECK_THROWS_AS(exterior_derivative(spec.frame, notskew), Error);
}

TEST_CASE("square_norm is invariant under the compatible rescaling") {
  ManifoldSpec spec = build_example_4d();
  RationalSampler rng(72);
  Tensor t = Tensor::make(4, 0, 3);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) assign_skew3(t, i, j, k, Scalar(rng.next()));
  const MetricData& m = spec.frame.metric;
  Rational a(2, 3);
  RationalMatrix scaled = m.g;
  for (auto& row : scaled)
    for (auto& v : row) v *= a * a;
  MetricData m2 = make_metric(scaled);
  Tensor t2 = t;
  t2 *= a * a * a;
  CHECK(square_norm(m2, t2) == square_norm(m, t));
  CHECK_FALSE(square_norm(m, t).is_zero());
}
