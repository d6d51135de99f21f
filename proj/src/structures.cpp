#include "skewtor/structures.hpp"

#include "skewtor/error.hpp"
#include "skewtor/forms.hpp"

#include <sstream>

namespace skewtor {

namespace {

std::string tuple_str(std::initializer_list<int> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i : idx) {
    if (!first) os << ",";
    first = false;
    os << i;
  }
  os << ")";
  return os.str();
}

}  // namespace

RationalMatrix endo_matrix(const Tensor& op) {
  const int n = op.dim();
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const Scalar& v = op.at({r, c});
      if (!v.is_constant())
        throw ValidationError("structure tensor entries must be rational constants");
      m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = v.constant_value();
    }
  }
  return m;
}

std::vector<Rational> coefficient_vector(const Tensor& v) {
  const int n = v.dim();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Scalar& s = v.at({i});
    if (!s.is_constant())
      throw ValidationError("structure tensor entries must be rational constants");
    out[static_cast<std::size_t>(i - 1)] = s.constant_value();
  }
  return out;
}

namespace {

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// (Op^T g Op)_{ij} = g(Op e_i, Op e_j)
RationalMatrix pullback_metric(const RationalMatrix& op, const RationalMatrix& g) {
  const std::size_t n = op.size();
  RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        if (op[a][i] == 0) continue;
        for (std::size_t b = 0; b < n; ++b) out[i][j] += op[a][i] * g[a][b] * op[b][j];
      }
  return out;
}

ValidationItem check_matrix_eq(const std::string& name, const RationalMatrix& lhs,
                               const RationalMatrix& rhs) {
  const int n = static_cast<int>(lhs.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        return {name, false,
                tuple_str({i + 1, j + 1}) + " residual " +
                    to_string(lhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])};
  return {name, true, ""};
}

}  // namespace

bool ValidationReport::pass() const {
  for (const auto& it : items)
    if (!it.ok) return false;
  return true;
}

ValidationReport validate_structure(const LieFrame& f, const StructurePack& s) {
  ValidationReport rep;
  const RationalMatrix& g = f.metric.g;
  const int n = f.n;
  RationalMatrix neg_g(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      neg_g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          -g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  RationalMatrix minus_id(static_cast<std::size_t>(n),
                          std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) minus_id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;

  if (std::holds_alternative<NordenStructure>(s)) {
    if (n % 2 != 0) throw ValidationError("Norden structure requires even dimension");
    const auto& st = std::get<NordenStructure>(s);
    RationalMatrix J = endo_matrix(st.J);
    rep.items.push_back(check_matrix_eq("J^2 = -I", mat_mul(J, J), minus_id));
    rep.items.push_back(check_matrix_eq("g(Jx,Jy) = -g(x,y)", pullback_metric(J, g), neg_g));
  } else if (std::holds_alternative<ContactBStructure>(s)) {
    if (n % 2 != 1) throw ValidationError("almost contact B-metric structure requires odd dimension");
    const auto& st = std::get<ContactBStructure>(s);
    RationalMatrix phi = endo_matrix(st.phi);
    std::vector<Rational> eta = coefficient_vector(st.eta);
    std::vector<Rational> xi(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const Scalar& v = st.xi.at({i});
      if (!v.is_constant())
        throw ValidationError("structure tensor entries must be rational constants");
      xi[static_cast<std::size_t>(i - 1)] = v.constant_value();
    }
    // phi xi = 0
    {
      ValidationItem it{"phi(xi) = 0", true, ""};
      for (int m = 0; m < n && it.ok; ++m) {
        Rational acc(0);
        for (int a = 0; a < n; ++a)
          acc += phi[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)] *
                 xi[static_cast<std::size_t>(a)];
        if (acc != 0) it = {"phi(xi) = 0", false, tuple_str({m + 1}) + " value " + to_string(acc)};
      }
      rep.items.push_back(it);
    }
    // phi^2 = -I + eta (x) xi
    {
      RationalMatrix rhs = minus_id;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              xi[static_cast<std::size_t>(i)] * eta[static_cast<std::size_t>(j)];
      rep.items.push_back(check_matrix_eq("phi^2 = -I + eta(.)xi", mat_mul(phi, phi), rhs));
    }
    // eta o phi = 0
    {
      ValidationItem it{"eta(phi .) = 0", true, ""};
      for (int j = 0; j < n && it.ok; ++j) {
        Rational acc(0);
        for (int a = 0; a < n; ++a)
          acc += eta[static_cast<std::size_t>(a)] *
                 phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
        if (acc != 0) it = {"eta(phi .) = 0", false, tuple_str({j + 1}) + " value " + to_string(acc)};
      }
      rep.items.push_back(it);
    }
    // eta(xi) = 1
    {
      Rational acc(0);
      for (int a = 0; a < n; ++a)
        acc += eta[static_cast<std::size_t>(a)] * xi[static_cast<std::size_t>(a)];
      rep.items.push_back({"eta(xi) = 1", acc == 1, acc == 1 ? "" : "value " + to_string(acc)});
    }
    // g(phi x, phi y) = -g(x,y) + eta(x) eta(y)
    {
      RationalMatrix rhs = neg_g;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              eta[static_cast<std::size_t>(i)] * eta[static_cast<std::size_t>(j)];
      rep.items.push_back(
          check_matrix_eq("g(phi x,phi y) = -g(x,y) + eta(x)eta(y)", pullback_metric(phi, g), rhs));
    }
  } else {
    if (n % 4 != 0) throw ValidationError("hypercomplex structure requires dimension divisible by 4");
    const auto& st = std::get<HyperStructure>(s);
    std::array<RationalMatrix, 3> J{endo_matrix(st.J[0]), endo_matrix(st.J[1]),
                                    endo_matrix(st.J[2])};
    for (int a = 0; a < 3; ++a)
      rep.items.push_back(check_matrix_eq("J" + std::to_string(a + 1) + "^2 = -I",
                                          mat_mul(J[static_cast<std::size_t>(a)],
                                                  J[static_cast<std::size_t>(a)]),
                                          minus_id));
    // cyclic quaternionic relations J_a = J_b J_c = -J_c J_b
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& t : cyc) {
      int a = t[0], b = t[1], c = t[2];
      rep.items.push_back(check_matrix_eq(
          "J" + std::to_string(a + 1) + " = J" + std::to_string(b + 1) + "J" + std::to_string(c + 1),
          J[static_cast<std::size_t>(a)],
          mat_mul(J[static_cast<std::size_t>(b)], J[static_cast<std::size_t>(c)])));
      RationalMatrix neg = mat_mul(J[static_cast<std::size_t>(c)], J[static_cast<std::size_t>(b)]);
      for (auto& row : neg)
        for (auto& v : row) v = -v;
      rep.items.push_back(check_matrix_eq(
          "J" + std::to_string(a + 1) + " = -J" + std::to_string(c + 1) + "J" + std::to_string(b + 1),
          J[static_cast<std::size_t>(a)], neg));
    }
    for (int a = 0; a < 3; ++a) {
      RationalMatrix scaled = g;
      if (kEpsilon[static_cast<std::size_t>(a)] < 0)
        for (auto& row : scaled)
          for (auto& v : row) v = -v;
      // g(x,y) = eps_a g(J_a x, J_a y)  <=>  pullback = eps_a^{-1} g = eps_a g
      rep.items.push_back(check_matrix_eq("g = eps" + std::to_string(a + 1) + " g(J" +
                                              std::to_string(a + 1) + ".,J" + std::to_string(a + 1) +
                                              ".)",
                                          pullback_metric(J[static_cast<std::size_t>(a)], g),
                                          scaled));
    }
  }
  return rep;
}

Tensor fundamental_from_op(const Connection& conn, const Tensor& op) {
  const LieFrame& f = conn.frame;
  Tensor nop = covariant_derivative(conn, op);  // (m, i, j): (nabla_{e_i} Op e_j)^m
  Tensor F = Tensor::make(f.n, 0, 3);
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j)
      for (int k = 1; k <= f.n; ++k) {
        Scalar acc;
        for (int m = 1; m <= f.n; ++m) {
          const Rational& gmk =
              f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)];
          if (gmk == 0) continue;
          Scalar term = nop.at({m, i, j});
          term *= gmk;
          acc += term;
        }
        F.at({i, j, k}) = acc;
      }
  return F;
}

std::vector<Tensor> fundamental_tensor(const LieFrame& f, const Connection& conn,
                                       const StructurePack& s) {
  if (std::holds_alternative<NordenStructure>(s))
    return {fundamental_from_op(conn, std::get<NordenStructure>(s).J)};
  if (std::holds_alternative<ContactBStructure>(s))
    return {fundamental_from_op(conn, std::get<ContactBStructure>(s).phi)};
  const auto& st = std::get<HyperStructure>(s);
  return {fundamental_from_op(conn, st.J[0]), fundamental_from_op(conn, st.J[1]),
          fundamental_from_op(conn, st.J[2])};
}

namespace {

bool cyclic_sum_vanishes(const Tensor& F) {
  const int n = F.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (!(F.at({i, j, k}) + F.at({j, k, i}) + F.at({k, i, j})).is_zero()) return false;
  return true;
}

// F(x,y,z) with one argument acted on by a constant endomorphism.
Scalar f_with(const Tensor& F, const RationalMatrix& op, int slot, int i, int j, int k) {
  const int n = F.dim();
  int target = slot == 0 ? i : slot == 1 ? j : k;
  Scalar acc;
  for (int a = 1; a <= n; ++a) {
    const Rational& w = op[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(target - 1)];
    if (w == 0) continue;
    Scalar term = slot == 0 ? F.at({a, j, k}) : slot == 1 ? F.at({i, a, k}) : F.at({i, j, a});
    term *= w;
    acc += term;
  }
  return acc;
}

}  // namespace

bool ClassReport::flag(const std::string& name) const {
  for (const auto& [k, v] : flags)
    if (k == name) return v;
  throw Error("unknown class flag '" + name + "'");
}

ClassReport classify(const LieFrame& f, const Connection& conn, const StructurePack& s) {
  ClassReport rep;
  const int n = f.n;
  if (std::holds_alternative<NordenStructure>(s)) {
    Tensor F = fundamental_from_op(conn, std::get<NordenStructure>(s).J);
    rep.flags.emplace_back("W0", F.is_zero());
    rep.flags.emplace_back("W3", cyclic_sum_vanishes(F));
  } else if (std::holds_alternative<ContactBStructure>(s)) {
    const auto& st = std::get<ContactBStructure>(s);
    Tensor F = fundamental_from_op(conn, st.phi);
    RationalMatrix phi = endo_matrix(st.phi);
    bool cyc = cyclic_sum_vanishes(F);
    // F3: cyclic sum vanishes and F(xi,.,.) = F(.,.,xi) = 0
    bool f3 = cyc;
    for (int j = 1; j <= n && f3; ++j)
      for (int k = 1; k <= n && f3; ++k) {
        Scalar fxiyz;
        for (int a = 1; a <= n; ++a) {
          const Scalar& xa = st.xi.at({a});
          if (xa.is_zero()) continue;
          fxiyz += xa * F.at({a, j, k});
        }
        if (!fxiyz.is_zero()) f3 = false;
        Scalar fxyxi;
        for (int a = 1; a <= n; ++a) {
          const Scalar& xa = st.xi.at({a});
          if (xa.is_zero()) continue;
          fxyxi += xa * F.at({j, k, a});
        }
        if (!fxyxi.is_zero()) f3 = false;
      }
    // F7: cyclic sum vanishes and F(x,y,z) + F(phi x, phi y, z) + F(phi x, y, phi z) = 0
    bool f7 = cyc;
    for (int i = 1; i <= n && f7; ++i)
      for (int j = 1; j <= n && f7; ++j)
        for (int k = 1; k <= n && f7; ++k) {
          Scalar acc = F.at({i, j, k});
          for (int a = 1; a <= n; ++a) {
            const Rational& pai =
                phi[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i - 1)];
            if (pai == 0) continue;
            Scalar t1 = f_with(F, phi, 1, a, j, k);  // F(phi x, phi y, z)
            t1 *= pai;
            acc += t1;
            Scalar t2 = f_with(F, phi, 2, a, j, k);  // F(phi x, y, phi z)
            t2 *= pai;
            acc += t2;
          }
          if (!acc.is_zero()) f7 = false;
        }
    rep.flags.emplace_back("F0", F.is_zero());
    rep.flags.emplace_back("F3", f3);
    rep.flags.emplace_back("F7", f7);
    rep.flags.emplace_back("F3+F7", cyc);
    rep.flags.emplace_back("xi-Killing", killing_check(f, conn, st.xi));
  } else {
    const auto& st = std::get<HyperStructure>(s);
    Tensor F1 = fundamental_from_op(conn, st.J[0]);
    Tensor F2 = fundamental_from_op(conn, st.J[1]);
    Tensor F3t = fundamental_from_op(conn, st.J[2]);
    RationalMatrix J1 = endo_matrix(st.J[0]);
    // G1: F1(x,x,z) = F1(J1 x, J1 x, z), checked in polarized form over basis pairs
    bool g1 = true;
    for (int i = 1; i <= n && g1; ++i)
      for (int j = 1; j <= n && g1; ++j)
        for (int k = 1; k <= n && g1; ++k) {
          Scalar lhs = F1.at({i, j, k}) + F1.at({j, i, k});
          Scalar rhs;
          for (int a = 1; a <= n; ++a) {
            const Rational& J1ai =
                J1[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i - 1)];
            if (J1ai == 0) continue;
            Scalar t;
            for (int b = 1; b <= n; ++b) {
              const Rational& J1bj =
                  J1[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(j - 1)];
              if (J1bj == 0) continue;
              Scalar u = F1.at({a, b, k}) + F1.at({b, a, k});
              u *= J1bj;
              t += u;
            }
            t *= J1ai;
            rhs += t;
          }
          if (lhs != rhs) g1 = false;
        }
    // NK: F1(x,y,z) = -F1(y,x,z)
    bool nk = true;
    for (int i = 1; i <= n && nk; ++i)
      for (int j = 1; j <= n && nk; ++j)
        for (int k = 1; k <= n && nk; ++k)
          if (!(F1.at({i, j, k}) + F1.at({j, i, k})).is_zero()) nk = false;
    bool w3j2 = cyclic_sum_vanishes(F2);
    bool w3j3 = cyclic_sum_vanishes(F3t);
    rep.flags.emplace_back("G1(J1)", g1);
    rep.flags.emplace_back("NK(J1)", nk);
    rep.flags.emplace_back("W3(J2)", w3j2);
    rep.flags.emplace_back("W3(J3)", w3j3);
    rep.flags.emplace_back("W133", nk && w3j2 && w3j3);
  }
  return rep;
}

Tensor nijenhuis(const LieFrame& f, const Connection& conn, const StructurePack& s,
                 NijenhuisMode mode) {
  const int n = f.n;
  Tensor N = Tensor::make(n, 1, 2);
  if (mode == NijenhuisMode::Complex) {
    if (!std::holds_alternative<NordenStructure>(s))
      throw Error("nijenhuis: complex mode requires a Norden pack");
    const auto& st = std::get<NordenStructure>(s);
    RationalMatrix J = endo_matrix(st.J);
    Tensor nJ = covariant_derivative(conn, st.J);  // (m, d, j)
    for (int m = 1; m <= n; ++m)
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
          Scalar acc;
          for (int a = 1; a <= n; ++a) {
            const Rational& Jay =
                J[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(y - 1)];
            if (Jay != 0) {
              Scalar t = nJ.at({m, x, a});  // (nabla_x J) J y
              t *= Jay;
              acc += t;
              Scalar u = nJ.at({m, a, x});  // -(nabla_{J y} J) x
              u *= Jay;
              acc -= u;
            }
            const Rational& Jax =
                J[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(x - 1)];
            if (Jax != 0) {
              Scalar t = nJ.at({m, y, a});  // -(nabla_y J) J x
              t *= Jax;
              acc -= t;
              Scalar u = nJ.at({m, a, y});  // +(nabla_{J x} J) y
              u *= Jax;
              acc += u;
            }
          }
          N.at({m, x, y}) = acc;
        }
    return N;
  }
  if (!std::holds_alternative<ContactBStructure>(s))
    throw Error("nijenhuis: contact mode requires an almost contact B-metric pack");
  const auto& st = std::get<ContactBStructure>(s);
  RationalMatrix phi = endo_matrix(st.phi);
  RationalMatrix phi2 = mat_mul(phi, phi);
  std::vector<Rational> eta = coefficient_vector(st.eta);
  for (int m = 1; m <= n; ++m)
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        Scalar acc;
        for (int ss = 1; ss <= n; ++ss) {
          const Scalar& cxy = f.c.at({ss, x, y});
          if (!cxy.is_zero()) {
            // phi^2 [x,y]
            const Rational& p2 =
                phi2[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(ss - 1)];
            if (p2 != 0) acc += cxy * Scalar(p2);
            // d eta(x,y) xi = -eta([x,y]) xi
            const Rational& es = eta[static_cast<std::size_t>(ss - 1)];
            if (es != 0) {
              Scalar t = cxy * st.xi.at({m});
              t *= es;
              acc -= t;
            }
          }
        }
        for (int a = 1; a <= n; ++a) {
          const Rational& pax = phi[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(x - 1)];
          if (pax != 0) {
            for (int b = 1; b <= n; ++b) {
              const Rational& pby =
                  phi[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(y - 1)];
              if (pby == 0) continue;
              // [phi x, phi y]
              Scalar t = f.c.at({m, a, b});
              t *= pax * pby;
              acc += t;
            }
            // -phi [phi x, y]
            for (int ss = 1; ss <= n; ++ss) {
              const Rational& pms =
                  phi[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(ss - 1)];
              if (pms == 0) continue;
              Scalar t = f.c.at({ss, a, y});
              t *= pax * pms;
              acc -= t;
            }
          }
          const Rational& pay = phi[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(y - 1)];
          if (pay != 0) {
            // -phi [x, phi y]
            for (int ss = 1; ss <= n; ++ss) {
              const Rational& pms =
                  phi[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(ss - 1)];
              if (pms == 0) continue;
              Scalar t = f.c.at({ss, x, a});
              t *= pay * pms;
              acc -= t;
            }
          }
        }
        N.at({m, x, y}) = acc;
      }
  return N;
}

bool killing_check(const LieFrame& f, const Connection& conn, const Tensor& v) {
  const int n = f.n;
  // nabla_{e_i} v = sum_a v^a Gamma^m_{ia} e_m  (v has constant coefficients)
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Scalar acc;
      for (int m = 1; m <= n; ++m) {
        const Rational& gmj =
            f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)];
        const Rational& gim =
            f.metric.g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)];
        for (int a = 1; a <= n; ++a) {
          const Scalar& va = v.at({a});
          if (va.is_zero()) continue;
          if (gmj != 0) {
            Scalar t = va * conn.gamma.at({m, i, a});
            t *= gmj;
            acc += t;
          }
          if (gim != 0) {
            Scalar t = va * conn.gamma.at({m, j, a});
            t *= gim;
            acc += t;
          }
        }
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

IsotropyResult isotropy(const MetricData& m, const Tensor& grad3) {
  Scalar norm = square_norm(m, grad3);
  return {norm, norm.is_zero()};
}

}  // namespace skewtor
