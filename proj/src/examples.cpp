#include "skewtor/examples.hpp"

#include "skewtor/error.hpp"
#include "skewtor/params.hpp"

#include <array>

namespace skewtor {

namespace {

LieFrame make_frame(std::string name, int n, const std::vector<std::string>& params,
                    const std::vector<Rational>& diag) {
  LieFrame f;
  f.name = std::move(name);
  f.n = n;
  for (const auto& p : params) {
    f.param_names.push_back(p);
    f.param_ids.push_back(ParamRegistry::declare(p));
  }
  f.c = Tensor(n, {SlotKind::Contra, SlotKind::Cov, SlotKind::Cov});
  RationalMatrix g(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
      diag[static_cast<std::size_t>(i)];
  f.metric = make_metric(g);
  return f;
}

// Sets [X_i, X_j] = sum_k coeffs[k] X_k and mirrors the antisymmetric entry.
void set_bracket(LieFrame& f, int i, int j, const std::vector<Scalar>& coeffs) {
  for (int k = 1; k <= f.n; ++k) {
    const Scalar& v = coeffs[static_cast<std::size_t>(k - 1)];
    f.c.at({k, i, j}) = v;
    f.c.at({k, j, i}) = -v;
  }
}

}  // namespace

ManifoldSpec build_example_4d() {
  LieFrame f = make_frame("norden4d", 4, {"l1", "l2", "l3", "l4"},
                          {Rational(1), Rational(1), Rational(-1), Rational(-1)});
  Scalar l1 = Scalar::param(f.param_ids[0]);
  Scalar l2 = Scalar::param(f.param_ids[1]);
  Scalar l3 = Scalar::param(f.param_ids[2]);
  Scalar l4 = Scalar::param(f.param_ids[3]);
  Scalar z;
  set_bracket(f, 1, 2, {l1, l2, z, z});
  set_bracket(f, 1, 3, {z, l3, z, -l1});
  set_bracket(f, 1, 4, {-l3, z, z, -l2});
  set_bracket(f, 2, 3, {z, l4, l1, z});
  set_bracket(f, 2, 4, {-l4, z, l2, z});
  set_bracket(f, 3, 4, {z, z, l3, l4});

  NordenStructure s;
  s.J = Tensor::make(4, 1, 1);
  s.J.at({3, 1}) = Scalar(1);
  s.J.at({4, 2}) = Scalar(1);
  s.J.at({1, 3}) = Scalar(-1);
  s.J.at({2, 4}) = Scalar(-1);

  ManifoldSpec spec;
  spec.name = f.name;
  spec.frame = std::move(f);
  spec.pack = StructurePack{std::move(s)};
  spec.note = "four-dimensional family: quasi-Kaehler Norden pack on a solvable Lie group";
  return spec;
}

ManifoldSpec build_example_5d() {
  LieFrame f =
      make_frame("contact5d", 5, {"l1", "l2", "l3", "l4", "m1", "m2"},
                 {Rational(1), Rational(1), Rational(-1), Rational(-1), Rational(1)});
  Scalar l1 = Scalar::param(f.param_ids[0]);
  Scalar l2 = Scalar::param(f.param_ids[1]);
  Scalar l3 = Scalar::param(f.param_ids[2]);
  Scalar l4 = Scalar::param(f.param_ids[3]);
  Scalar m1 = Scalar::param(f.param_ids[4]);
  Scalar m2 = Scalar::param(f.param_ids[5]);
  Scalar two(2);
  std::vector<Scalar> v12 = {-l1, -l2, l3, l4, two * m1};
  std::vector<Scalar> v14 = {-l3, -l4, -l1, -l2, two * m2};
  std::vector<Scalar> neg12, neg14;
  for (const auto& s : v12) neg12.push_back(-s);
  for (const auto& s : v14) neg14.push_back(-s);
  set_bracket(f, 1, 2, v12);
  set_bracket(f, 3, 4, neg12);
  set_bracket(f, 1, 4, v14);
  set_bracket(f, 2, 3, neg14);

  ContactBStructure s;
  s.phi = Tensor::make(5, 1, 1);
  s.phi.at({3, 1}) = Scalar(1);
  s.phi.at({4, 2}) = Scalar(1);
  s.phi.at({1, 3}) = Scalar(-1);
  s.phi.at({2, 4}) = Scalar(-1);
  s.xi = Tensor::make(5, 1, 0);
  s.xi.at({5}) = Scalar(1);
  s.eta = Tensor::make(5, 0, 1);
  s.eta.at({5}) = Scalar(1);

  ManifoldSpec spec;
  spec.name = f.name;
  spec.frame = std::move(f);
  spec.pack = StructurePack{std::move(s)};
  spec.note = "five-dimensional family: vertical-class almost contact B-metric pack";
  return spec;
}

ManifoldSpec build_flat_hyper(int k) {
  if (k < 2)
    throw InputError("build_flat_hyper: k must be at least 2 (dimension 4k >= 8), got " +
                     std::to_string(k));
  const int n = 4 * k;
  std::vector<Rational> diag(static_cast<std::size_t>(n));
  for (int q = 0; q < k; ++q) {
    diag[static_cast<std::size_t>(4 * q + 0)] = 1;
    diag[static_cast<std::size_t>(4 * q + 1)] = 1;
    diag[static_cast<std::size_t>(4 * q + 2)] = -1;
    diag[static_cast<std::size_t>(4 * q + 3)] = -1;
  }
  LieFrame f = make_frame("flat" + std::to_string(n) + "d", n, {}, diag);

  // Standard triple, blockwise per quadruple: entries (j, m, v) meaning
  // J e_{base+j} has component v on e_{base+m}.
  using Entry = std::array<int, 3>;
  const std::array<Entry, 4> tab1{{{1, 2, 1}, {2, 1, -1}, {3, 4, -1}, {4, 3, 1}}};
  const std::array<Entry, 4> tab2{{{1, 3, 1}, {2, 4, 1}, {3, 1, -1}, {4, 2, -1}}};
  const std::array<Entry, 4> tab3{{{1, 4, -1}, {2, 3, 1}, {3, 2, -1}, {4, 1, 1}}};

  HyperStructure s;
  for (auto* t : {&s.J[0], &s.J[1], &s.J[2]}) *t = Tensor::make(n, 1, 1);
  auto fill = [&](Tensor& J, const std::array<Entry, 4>& tab) {
    for (int q = 0; q < k; ++q) {
      int base = 4 * q;
      for (const auto& e : tab) J.at({base + e[1], base + e[0]}) = Scalar(e[2]);
    }
  };
  fill(s.J[0], tab1);
  fill(s.J[1], tab2);
  fill(s.J[2], tab3);

  ManifoldSpec spec;
  spec.name = f.name;
  spec.frame = std::move(f);
  spec.pack = StructurePack{std::move(s)};
  spec.note = "abelian frame with the standard hypercomplex triple; flat reference case";
  return spec;
}

std::map<int, Rational> resolve_bindings(const LieFrame& f,
                                         const std::map<std::string, Rational>& named) {
  std::map<int, Rational> out;
  for (const auto& [raw, value] : named) {
    std::string name = normalize_param_name(raw);
    bool found = false;
    for (std::size_t i = 0; i < f.param_names.size(); ++i)
      if (f.param_names[i] == name) {
        out[f.param_ids[i]] = value;
        found = true;
        break;
      }
    if (!found) throw InputError("unknown parameter '" + raw + "' for frame " + f.name);
  }
  return out;
}

ManifoldSpec bind_params(const ManifoldSpec& spec, const std::map<std::string, Rational>& extra) {
  std::map<std::string, Rational> named = spec.bindings;
  for (const auto& [k, v] : extra) named[normalize_param_name(k)] = v;
  std::map<int, Rational> point = resolve_bindings(spec.frame, named);

  ManifoldSpec out = spec;
  out.bindings.clear();
  out.frame.c = spec.frame.c.substitute(point);
  out.frame.param_names.clear();
  out.frame.param_ids.clear();
  for (std::size_t i = 0; i < spec.frame.param_ids.size(); ++i)
    if (!point.count(spec.frame.param_ids[i])) {
      out.frame.param_names.push_back(spec.frame.param_names[i]);
      out.frame.param_ids.push_back(spec.frame.param_ids[i]);
    }
  return out;
}

bool same_family(const ManifoldSpec& spec, const ManifoldSpec& reference) {
  const LieFrame& a = spec.frame;
  const LieFrame& b = reference.frame;
  if (a.n != b.n) return false;
  if (a.param_ids.size() != b.param_ids.size()) return false;
  if (a.metric.g != b.metric.g) return false;
  std::map<int, int> id_map;
  for (std::size_t i = 0; i < a.param_ids.size(); ++i) id_map[a.param_ids[i]] = b.param_ids[i];
  if (a.c.rename_params(id_map) != b.c) return false;
  if (spec.pack.index() != reference.pack.index()) return false;
  if (std::holds_alternative<NordenStructure>(spec.pack))
    return std::get<NordenStructure>(spec.pack).J == std::get<NordenStructure>(reference.pack).J;
  if (std::holds_alternative<ContactBStructure>(spec.pack)) {
    const auto& x = std::get<ContactBStructure>(spec.pack);
    const auto& y = std::get<ContactBStructure>(reference.pack);
    return x.phi == y.phi && x.xi == y.xi && x.eta == y.eta;
  }
  const auto& x = std::get<HyperStructure>(spec.pack);
  const auto& y = std::get<HyperStructure>(reference.pack);
  return x.J[0] == y.J[0] && x.J[1] == y.J[1] && x.J[2] == y.J[2];
}

}  // namespace skewtor
