#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtor/error.hpp"
#include "skewtor/examples.hpp"
#include "skewtor/structures.hpp"

using namespace skewtor;

namespace {

Scalar P(const LieFrame& f, int i) {
  return Scalar::param(f.param_ids[static_cast<std::size_t>(i)]);
}

}  // namespace

TEST_CASE("every built-in pack satisfies its structure axioms") {
  for (ManifoldSpec spec : {build_example_4d(), build_example_5d(), build_flat_hyper(2)}) {
    ValidationReport rep = validate_structure(spec.frame, spec.pack);
    CHECK(rep.pass());
    for (const auto& item : rep.items) CHECK(item.ok);
  }
}

TEST_CASE("a Euclidean metric breaks the anti-isometry axiom") {
  ManifoldSpec spec = build_example_4d();
  RationalMatrix id(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 4; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  spec.frame.metric = make_metric(id);
  ValidationReport rep = validate_structure(spec.frame, spec.pack);
  CHECK_FALSE(rep.pass());
  bool some_failed_with_witness = false;
  for (const auto& item : rep.items)
    if (!item.ok && !item.witness.empty()) some_failed_with_witness = true;
  CHECK(some_failed_with_witness);
}

TEST_CASE("structure kind and frame dimension must match") {
  ManifoldSpec odd = build_example_5d();
  NordenStructure bogus;
  bogus.J = Tensor::make(5, 1, 1);
  CHECK_THROWS_AS(validate_structure(odd.frame, StructurePack{bogus}), ValidationError);
  ManifoldSpec even = build_example_4d();
  ContactBStructure bogus2;
  bogus2.phi = Tensor::make(4, 1, 1);
  bogus2.xi = Tensor::make(4, 1, 0);
  bogus2.eta = Tensor::make(4, 0, 1);
  CHECK_THROWS_AS(validate_structure(even.frame, StructurePack{bogus2}), ValidationError);
}

TEST_CASE("endo_matrix and coefficient_vector read constant tensors") {
  ManifoldSpec spec = build_example_4d();
  const auto& ns = std::get<NordenStructure>(spec.pack);
  RationalMatrix J = endo_matrix(ns.J);
  CHECK(J[2][0] == 1);
  CHECK(J[0][2] == -1);
  CHECK(J[3][1] == 1);
  CHECK(J[1][3] == -1);
  CHECK(J[0][0] == 0);

  ManifoldSpec spec5 = build_example_5d();
  const auto& cs = std::get<ContactBStructure>(spec5.pack);
  std::vector<Rational> xi = coefficient_vector(cs.xi);
  REQUIRE(xi.size() == 5);
  for (int i = 0; i < 4; ++i) CHECK(xi[static_cast<std::size_t>(i)] == 0);
  CHECK(xi[4] == 1);

  Tensor nonconst = Tensor::make(4, 1, 1);
  nonconst.at({1, 1}) = P(spec.frame, 0);
  CHECK_THROWS_AS(endo_matrix(nonconst), Error);
}

TEST_CASE("fundamental tensor symmetries on the four-dimensional family") {
  ManifoldSpec spec = build_example_4d();
  Connection lc = levi_civita(spec.frame);
  std::vector<Tensor> fs = fundamental_tensor(spec.frame, lc, spec.pack);
  REQUIRE(fs.size() == 1);
  const Tensor& F = fs[0];
  RationalMatrix J = endo_matrix(std::get<NordenStructure>(spec.pack).J);
  bool sym = true, jshift = true;
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y)
      for (int z = 1; z <= 4; ++z) {
        if (!(F.at({x, y, z}) - F.at({x, z, y})).is_zero()) sym = false;
        // F(x, Jy, Jz) = F(x, y, z)
        Scalar lhs;
        for (int a = 1; a <= 4; ++a)
          for (int b = 1; b <= 4; ++b) {
            Rational w = J[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(y - 1)] *
                         J[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(z - 1)];
            if (w != 0) lhs += F.at({x, a, b}) * w;
          }
        if (!(lhs - F.at({x, y, z})).is_zero()) jshift = false;
      }
  CHECK(sym);
  CHECK(jshift);
  CHECK_FALSE(F.is_zero());
}

TEST_CASE("fundamental tensor of the five-dimensional family is symmetric in its last slots") {
  ManifoldSpec spec = build_example_5d();
  Connection lc = levi_civita(spec.frame);
  std::vector<Tensor> fs = fundamental_tensor(spec.frame, lc, spec.pack);
  REQUIRE(fs.size() == 1);
  const Tensor& F = fs[0];
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 5; ++y)
      for (int z = y; z <= 5; ++z) CHECK((F.at({x, y, z}) - F.at({x, z, y})).is_zero());
  CHECK_FALSE(F.is_zero());
}

TEST_CASE("class flags on the four-dimensional family") {
  ManifoldSpec spec = build_example_4d();
  Connection lc = levi_civita(spec.frame);
  ClassReport rep = classify(spec.frame, lc, spec.pack);
  CHECK(rep.flag("W3"));
  CHECK_FALSE(rep.flag("W0"));
}

TEST_CASE("class flags on the five-dimensional family") {
  ManifoldSpec spec = build_example_5d();
  Connection lc = levi_civita(spec.frame);
  ClassReport rep = classify(spec.frame, lc, spec.pack);
  CHECK(rep.flag("F7"));
  CHECK(rep.flag("F3+F7"));
  CHECK_FALSE(rep.flag("F0"));
  CHECK_FALSE(rep.flag("F3"));
  CHECK(rep.flag("xi-Killing"));
}

TEST_CASE("class flags on the flat hyper frame") {
  ManifoldSpec spec = build_flat_hyper(2);
  Connection lc = levi_civita(spec.frame);
  ClassReport rep = classify(spec.frame, lc, spec.pack);
  for (const char* name : {"G1(J1)", "NK(J1)", "W3(J2)", "W3(J3)", "W133"}) CHECK(rep.flag(name));
  // F_alpha = 0 for an abelian frame
  for (const Tensor& F : fundamental_tensor(spec.frame, lc, spec.pack)) CHECK(F.is_zero());
}

TEST_CASE("nijenhuis tensor, complex mode, at a non-integrable point") {
  ManifoldSpec spec = build_example_4d();
  spec.bindings = {{"l1", 1}, {"l2", 0}, {"l3", 0}, {"l4", 0}};
  ManifoldSpec bound = bind_params(spec, {});
  Connection lc = levi_civita(bound.frame);
  Tensor N = nijenhuis(bound.frame, lc, bound.pack, NijenhuisMode::Complex);
  CHECK(N.at({1, 1, 2}) == Scalar(Rational(-2)));
  CHECK_FALSE(N.is_zero());
}

TEST_CASE("nijenhuis tensor, contact mode, on the five-dimensional family") {
  ManifoldSpec spec = build_example_5d();
  Connection lc = levi_civita(spec.frame);
  Tensor N = nijenhuis(spec.frame, lc, spec.pack, NijenhuisMode::Contact);
  Scalar m1 = P(spec.frame, 4);
  // N(X1, X2) = -4 m1 X5
  for (int m = 1; m <= 4; ++m) CHECK(N.at({m, 1, 2}).is_zero());
  CHECK(N.at({5, 1, 2}) == m1 * Rational(-4));
}

TEST_CASE("nijenhuis mode must match the pack") {
  ManifoldSpec spec = build_example_4d();
  Connection lc = levi_civita(spec.frame);
  CHECK_THROWS_AS(nijenhuis(spec.frame, lc, spec.pack, NijenhuisMode::Contact), Error);
}

TEST_CASE("killing_check separates killing from non-killing fields") {
  ManifoldSpec spec5 = build_example_5d();
  Connection lc5 = levi_civita(spec5.frame);
  const auto& cs = std::get<ContactBStructure>(spec5.pack);
  CHECK(killing_check(spec5.frame, lc5, cs.xi));

  ManifoldSpec spec4 = build_example_4d();
  spec4.bindings = {{"l1", 1}, {"l2", 0}, {"l3", 0}, {"l4", 0}};
  ManifoldSpec bound = bind_params(spec4, {});
  Connection lc4 = levi_civita(bound.frame);
  Tensor e1 = Tensor::make(4, 1, 0);
  e1.at({1}) = Scalar(Rational(1));
  CHECK_FALSE(killing_check(bound.frame, lc4, e1));
}

TEST_CASE("isotropy result on the lowered gradient of J") {
  ManifoldSpec spec = build_example_4d();
  const LieFrame& f = spec.frame;
  Connection lc = levi_civita(f);
  const auto& ns = std::get<NordenStructure>(spec.pack);
  Tensor nJ = covariant_derivative(lc, ns.J);                       // (m, d, j)
  Tensor low = raise_lower(nJ, 1, MusicalDir::Lower, f.metric);  // fully covariant
  IsotropyResult iso = isotropy(f.metric, low);
  Scalar q = P(f, 0) * P(f, 0) + P(f, 1) * P(f, 1) - P(f, 2) * P(f, 2) - P(f, 3) * P(f, 3);
  CHECK(iso.norm == q * Rational(-4));
  CHECK_FALSE(iso.identically_zero);
}
