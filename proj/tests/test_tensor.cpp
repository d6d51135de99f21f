#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtor/error.hpp"
#include "skewtor/metric.hpp"
#include "skewtor/params.hpp"
#include "skewtor/rng.hpp"
#include "skewtor/tensor.hpp"

using namespace skewtor;

namespace {

MetricData diag_metric(const std::vector<long>& d) {
  RationalMatrix g(d.size(), std::vector<Rational>(d.size(), Rational(0)));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = Rational(d[i]);
  return make_metric(g);
}

Tensor random_tensor(int n, const std::vector<SlotKind>& kinds, RationalSampler& rng) {
  Tensor t(n, kinds);
  t.for_each_index([&](const std::vector<int>& idx) { t.at(idx) = Scalar(rng.next()); });
  return t;
}

}  // namespace

TEST_CASE("identity contraction gives the dimension") {
  for (int n = 2; n <= 6; ++n) {
    Tensor tr = contract(identity_tensor(n), 1, 1);
    CHECK(tr.rank() == 0);
    CHECK(tr.at(std::vector<int>{}) == Scalar(Rational(n)));
  }
}

TEST_CASE("raise and lower round-trip on every slot, all valences up to (2,2)") {
  RationalSampler rng(42);
  for (int n = 2; n <= 5; ++n) {
    MetricData m = diag_metric(n == 2 ? std::vector<long>{1, -3}
                                      : n == 3 ? std::vector<long>{2, -1, 5}
                                      : n == 4 ? std::vector<long>{1, 1, -1, -1}
                                               : std::vector<long>{1, 1, -1, -1, 1});
    std::vector<std::vector<SlotKind>> shapes = {
        {SlotKind::Contra},
        {SlotKind::Cov},
        {SlotKind::Contra, SlotKind::Cov},
        {SlotKind::Cov, SlotKind::Cov},
        {SlotKind::Contra, SlotKind::Contra, SlotKind::Cov, SlotKind::Cov},
    };
    for (const auto& kinds : shapes) {
      Tensor t = random_tensor(n, kinds, rng);
      for (int slot = 1; slot <= t.rank(); ++slot) {
        MusicalDir down = t.kinds()[slot - 1] == SlotKind::Contra ? MusicalDir::Lower
                                                                  : MusicalDir::Raise;
        MusicalDir up = down == MusicalDir::Lower ? MusicalDir::Raise : MusicalDir::Lower;
        Tensor round = raise_lower(raise_lower(t, slot, down, m), slot, up, m);
        CHECK(round == t);
      }
    }
  }
}

TEST_CASE("alternate is idempotent and detects skewness") {
  RationalSampler rng(43);
  Tensor t = random_tensor(4, {SlotKind::Cov, SlotKind::Cov, SlotKind::Cov}, rng);
  Tensor a = alternate(t);
  CHECK(alternate(a) == a);
  CHECK(is_skew(a));
  Tensor sym = Tensor::make(3, 0, 2);
  sym.at({1, 2}) = Scalar(Rational(1));
  sym.at({2, 1}) = Scalar(Rational(1));
  CHECK_FALSE(is_skew(sym));
  CHECK(alternate(sym).is_zero());
}

TEST_CASE("assign_skew3 writes a skew tensor") {
  const int a = ParamRegistry::declare("a");
  Tensor t = Tensor::make(5, 0, 3);
  assign_skew3(t, 1, 3, 4, Scalar::param(a));
  CHECK(is_skew(t));
  CHECK(t.at({3, 4, 1}) == Scalar::param(a));
  CHECK(t.at({3, 1, 4}) == -Scalar::param(a));
  CHECK(t.at({1, 3, 5}).is_zero());
  CHECK_THROWS_AS(assign_skew3(t, 1, 1, 2, Scalar(Rational(1))), Error);
}

TEST_CASE("contraction matches an explicit trace") {
  RationalSampler rng(44);
  const int n = 3;
  Tensor t = random_tensor(n, {SlotKind::Contra, SlotKind::Cov, SlotKind::Cov}, rng);
  Tensor c = contract(t, 1, 2);  // T^m_{i m}
  for (int i = 1; i <= n; ++i) {
    Scalar sum;
    for (int m = 1; m <= n; ++m) sum += t.at({m, i, m});
    CHECK(c.at({i}) == sum);
  }
}

TEST_CASE("tensor arithmetic and substitution") {
  const int a = ParamRegistry::declare("a");
  Tensor t = Tensor::make(2, 0, 2);
  t.at({1, 2}) = Scalar::param(a);
  t.at({2, 1}) = -Scalar::param(a);
  Tensor sum = t + t;
  CHECK(sum.at({1, 2}) == Scalar::param(a) * Rational(2));
  CHECK((t - t).is_zero());
  Tensor ev = t.substitute({{a, Rational(5)}});
  CHECK(ev.at({1, 2}) == Scalar(Rational(5)));
  const int b = ParamRegistry::declare("b");
  Tensor rn = t.rename_params({{a, b}});
  CHECK(rn.at({1, 2}) == Scalar::param(b));
}

TEST_CASE("slot kind mismatches are rejected") {
  Tensor t = Tensor::make(3, 1, 1);
  CHECK_THROWS_AS(contract(t, 1, 2), Error);     // only one covariant slot
  CHECK_THROWS_AS(alternate(t), Error);          // not fully covariant
  MetricData m = diag_metric({1, 1, 1});
  CHECK_THROWS_AS(raise_lower(t, 3, MusicalDir::Lower, m), Error);  // no slot 3
}

TEST_CASE("degenerate and asymmetric metrics are rejected") {
  RationalMatrix bad(2, std::vector<Rational>(2, Rational(0)));
  bad[0][0] = 1;  // second row zero -> degenerate
  CHECK_THROWS_AS(make_metric(bad), ValidationError);
  RationalMatrix asym(2, std::vector<Rational>(2, Rational(0)));
  asym[0][1] = 1;
  asym[1][0] = 2;
  CHECK_THROWS_AS(make_metric(asym), ValidationError);
  MetricData m = diag_metric({1, 1, -1, -1});
  CHECK(m.plus == 2);
  CHECK(m.minus == 2);
}
