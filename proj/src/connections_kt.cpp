#include "skewtor/connections_kt.hpp"

#include "skewtor/error.hpp"
#include "skewtor/forms.hpp"

#include <optional>
#include <sstream>

namespace skewtor {

namespace {

std::string idx_str(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ",";
    os << idx[i];
  }
  os << ")";
  return os.str();
}

std::optional<std::pair<std::vector<int>, Scalar>> first_nonzero(const Tensor& t) {
  std::optional<std::pair<std::vector<int>, Scalar>> out;
  t.for_each_index([&](const std::vector<int>& idx) {
    if (out) return;
    const Scalar& v = t.at(idx);
    if (!v.is_zero()) out = std::make_pair(idx, v);
  });
  return out;
}

std::string witness_of(const Tensor& t) {
  auto w = first_nonzero(t);
  if (!w) return "";
  return idx_str(w->first) + " = " + w->second.str();
}

// ge[i][j] = (grad_{e_i} eta)(e_j) = -sum_m eta_m Gamma^m_{ij}   (0-based storage)
std::vector<std::vector<Scalar>> grad_eta(const Connection& conn,
                                          const std::vector<Rational>& eta) {
  const int n = conn.frame.n;
  std::vector<std::vector<Scalar>> ge(static_cast<std::size_t>(n),
                                      std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Scalar acc;
      for (int m = 1; m <= n; ++m) {
        const Rational& em = eta[static_cast<std::size_t>(m - 1)];
        if (em == 0) continue;
        Scalar t = conn.gamma.at({m, i, j});
        t *= em;
        acc -= t;
      }
      ge[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = acc;
    }
  return ge;
}

// gx[m][i] = (grad_{e_i} xi)^m = sum_a xi^a Gamma^m_{ia}   (0-based storage)
std::vector<std::vector<Scalar>> grad_xi(const Connection& conn,
                                         const std::vector<Rational>& xi) {
  const int n = conn.frame.n;
  std::vector<std::vector<Scalar>> gx(static_cast<std::size_t>(n),
                                      std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= n; ++i) {
      Scalar acc;
      for (int a = 1; a <= n; ++a) {
        const Rational& xa = xi[static_cast<std::size_t>(a - 1)];
        if (xa == 0) continue;
        Scalar t = conn.gamma.at({m, i, a});
        t *= xa;
        acc += t;
      }
      gx[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(i - 1)] = acc;
    }
  return gx;
}

// FOp(i,j,k) = sum_b Op^b_k F(i,j,b): the third argument pushed through a
// constant endomorphism.
Tensor third_slot_through(const Tensor& F, const RationalMatrix& op) {
  const int n = F.dim();
  Tensor out = Tensor::make(n, 0, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Scalar acc;
        for (int b = 1; b <= n; ++b) {
          const Rational& obk = op[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(k - 1)];
          if (obk == 0) continue;
          Scalar t = F.at({i, j, b});
          t *= obk;
          acc += t;
        }
        out.at({i, j, k}) = acc;
      }
  return out;
}

// Throws ClassViolation when the cyclic sum of F does not vanish identically.
void require_vanishing_cyclic_sum(const Tensor& F, const std::string& who) {
  const int n = F.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Scalar s = F.at({i, j, k}) + F.at({j, k, i}) + F.at({k, i, j});
        if (!s.is_zero())
          throw ClassViolation(who + ": the cyclic sum of the fundamental tensor must vanish; " +
                               idx_str({i, j, k}) + " gives " + s.str());
      }
}

// Shared tail of the three builders: verifies the torsion pack invariants and
// assembles the raised copy.
TorsionPack finish_pack(Connection conn, Tensor t3, const std::string& who) {
  const LieFrame& f = conn.frame;
  if (!is_skew(t3))
    throw Error(who + ": constructed torsion is not totally skew; " + witness_of(t3 - alternate(t3)));
  Tensor t12 = raise_lower(t3, 3, MusicalDir::Raise, f.metric);
  Tensor tor = torsion_of(conn);  // (m, i, j)
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j)
      for (int m = 1; m <= f.n; ++m)
        if (t12.at({i, j, m}) != tor.at({m, i, j}))
          throw Error(who + ": connection does not reproduce its torsion at " + idx_str({m, i, j}));
  return TorsionPack{std::move(t3), std::move(t12), std::move(conn)};
}

}  // namespace

Tensor metric_tensor(const LieFrame& f) {
  Tensor g = Tensor::make(f.n, 0, 2);
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j)
      g.at({i, j}) =
          Scalar(f.metric.g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
  return g;
}

Connection connection_from_torsion(const Connection& lc, const Tensor& t3) {
  const LieFrame& f = lc.frame;
  Connection out = lc;
  for (int m = 1; m <= f.n; ++m)
    for (int i = 1; i <= f.n; ++i)
      for (int j = 1; j <= f.n; ++j) {
        Scalar add;
        for (int k = 1; k <= f.n; ++k) {
          const Rational& gkm =
              f.metric.ginv[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)];
          if (gkm == 0) continue;
          Scalar t = t3.at({i, j, k});
          t *= gkm;
          add += t;
        }
        add /= Rational(2);
        out.gamma.at({m, i, j}) += add;
      }
  return out;
}

std::vector<ValidationItem> naturality_check(const LieFrame& f, const StructurePack& s,
                                             const Connection& conn) {
  std::vector<ValidationItem> items;
  auto push = [&](const std::string& name, const Tensor& t) {
    Tensor d = covariant_derivative(conn, t);
    bool ok = d.is_zero();
    items.push_back({name, ok, ok ? "" : witness_of(d)});
  };
  if (std::holds_alternative<NordenStructure>(s)) {
    push("conn J = 0", std::get<NordenStructure>(s).J);
  } else if (std::holds_alternative<ContactBStructure>(s)) {
    const auto& st = std::get<ContactBStructure>(s);
    push("conn phi = 0", st.phi);
    push("conn xi = 0", st.xi);
    push("conn eta = 0", st.eta);
  } else {
    const auto& st = std::get<HyperStructure>(s);
    push("conn J1 = 0", st.J[0]);
    push("conn J2 = 0", st.J[1]);
    push("conn J3 = 0", st.J[2]);
  }
  push("conn g = 0", metric_tensor(f));
  return items;
}

TorsionPack kt_build(const LieFrame& f, const NordenStructure& s) {
  Connection lc = levi_civita(f);
  Tensor F = fundamental_from_op(lc, s.J);
  require_vanishing_cyclic_sum(F, "kt_build");
  RationalMatrix J = endo_matrix(s.J);
  Tensor FJ = third_slot_through(F, J);
  const int n = f.n;
  Tensor t3 = Tensor::make(n, 0, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Scalar s3 = FJ.at({i, j, k}) + FJ.at({j, k, i}) + FJ.at({k, i, j});
        s3 /= Rational(-2);
        t3.at({i, j, k}) = s3;
      }
  Connection conn = connection_from_torsion(lc, t3);
  return finish_pack(std::move(conn), std::move(t3), "kt_build");
}

PhiKTBuild phikt_build(const LieFrame& f, const ContactBStructure& s) {
  Connection lc = levi_civita(f);
  Tensor F = fundamental_from_op(lc, s.phi);
  require_vanishing_cyclic_sum(F, "phikt_build");
  const int n = f.n;
  RationalMatrix phi = endo_matrix(s.phi);
  std::vector<Rational> eta = coefficient_vector(s.eta);
  std::vector<Rational> xi = coefficient_vector(s.xi);

  // Torsion route.
  Tensor Fphi = third_slot_through(F, phi);
  // fxi[j][b] = F(e_j, e_b, xi); fpxi[j][k] = F(e_j, phi e_k, xi).
  std::vector<std::vector<Scalar>> fpxi(static_cast<std::size_t>(n),
                                        std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      Scalar acc;
      for (int b = 1; b <= n; ++b) {
        const Rational& pbk = phi[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(k - 1)];
        if (pbk == 0) continue;
        for (int a = 1; a <= n; ++a) {
          const Rational& xa = xi[static_cast<std::size_t>(a - 1)];
          if (xa == 0) continue;
          Scalar t = F.at({j, b, a});
          t *= pbk * xa;
          acc += t;
        }
      }
      fpxi[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = acc;
    }
  Tensor t3 = Tensor::make(n, 0, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Scalar cyc = Fphi.at({i, j, k}) + Fphi.at({j, k, i}) + Fphi.at({k, i, j});
        Scalar vert;
        auto add_eta_term = [&](int a, int b, int c) {
          const Rational& ea = eta[static_cast<std::size_t>(a - 1)];
          if (ea == 0) return;
          Scalar t = fpxi[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(c - 1)];
          t *= ea;
          vert += t;
        };
        add_eta_term(i, j, k);
        add_eta_term(j, k, i);
        add_eta_term(k, i, j);
        vert *= Rational(3);
        Scalar total = cyc - vert;
        total /= Rational(-2);
        t3.at({i, j, k}) = total;
      }

  // Direct route.
  Tensor nphi = covariant_derivative(lc, s.phi);  // (m, d, b)
  auto ge = grad_eta(lc, eta);
  auto gx = grad_xi(lc, xi);
  Tensor d_explicit = Tensor::make(n, 1, 2);
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Scalar corr;
        for (int b = 1; b <= n; ++b) {
          const Rational& pbj = phi[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(j - 1)];
          if (pbj != 0) {
            Scalar a1 = nphi.at({m, i, b});  // (grad_{e_i} phi)(phi e_j)
            a1 *= Rational(2) * pbj;
            corr += a1;
            Scalar a3 = nphi.at({m, b, i});  // (grad_{phi e_j} phi)(e_i)
            a3 *= pbj;
            corr += a3;
          }
          const Rational& pbi = phi[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(i - 1)];
          if (pbi != 0) {
            Scalar a2 = nphi.at({m, j, b});  // (grad_{e_j} phi)(phi e_i)
            a2 *= pbi;
            corr -= a2;
          }
        }
        const Rational& ei = eta[static_cast<std::size_t>(i - 1)];
        if (ei != 0) {
          Scalar t = gx[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)];
          t *= Rational(3) * ei;
          corr += t;
        }
        const Rational& ej = eta[static_cast<std::size_t>(j - 1)];
        if (ej != 0) {
          Scalar t = gx[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(i - 1)];
          t *= Rational(4) * ej;
          corr -= t;
        }
        const Rational& xm = xi[static_cast<std::size_t>(m - 1)];
        if (xm != 0) {
          Scalar t = ge[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
          t *= Rational(2) * xm;
          corr += t;
        }
        corr /= Rational(4);
        d_explicit.at({m, i, j}) = lc.gamma.at({m, i, j}) + corr;
      }

  // Specialized vertical-class torsion.
  Tensor t_closed = Tensor::make(n, 0, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Scalar acc;
        auto g_gradxi = [&](int dir, int low) {
          // g(grad_{e_dir} xi, e_low)
          Scalar r;
          for (int m = 1; m <= n; ++m) {
            const Rational& gml =
                f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(low - 1)];
            if (gml == 0) continue;
            Scalar t = gx[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(dir - 1)];
            t *= gml;
            r += t;
          }
          return r;
        };
        const Rational& ei = eta[static_cast<std::size_t>(i - 1)];
        if (ei != 0) {
          Scalar t = g_gradxi(j, k);
          t *= ei;
          acc += t;
        }
        const Rational& ej = eta[static_cast<std::size_t>(j - 1)];
        if (ej != 0) {
          Scalar t = g_gradxi(i, k);
          t *= ej;
          acc -= t;
        }
        const Rational& ek = eta[static_cast<std::size_t>(k - 1)];
        if (ek != 0) {
          Scalar t = ge[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
          t *= ek;
          acc += t;
        }
        acc *= Rational(2);
        t_closed.at({i, j, k}) = acc;
      }

  Connection conn = connection_from_torsion(lc, t3);
  if (conn.gamma != d_explicit) {
    Tensor diff = conn.gamma - d_explicit;
    throw Error("phikt_build: torsion route and direct route disagree; " + witness_of(diff));
  }
  PhiKTBuild out{finish_pack(std::move(conn), std::move(t3), "phikt_build"),
                 std::move(d_explicit), std::move(t_closed)};
  return out;
}

PHKTBuild phkt_build(const LieFrame& f, const HyperStructure& s) {
  Connection lc = levi_civita(f);
  ClassReport cls = classify(f, lc, StructurePack{s});
  if (!cls.flag("W133")) {
    std::string bad;
    for (const auto& [name, ok] : cls.flags)
      if (!ok && name != "W133") bad += (bad.empty() ? "" : ", ") + name;
    throw ClassViolation("phkt_build: the pack must be nearly-Kaehler for J1 with vanishing "
                         "cyclic sums for J2 and J3; failing flags: " +
                         (bad.empty() ? std::string("W133") : bad));
  }
  const int n = f.n;
  std::array<RationalMatrix, 3> J{endo_matrix(s.J[0]), endo_matrix(s.J[1]), endo_matrix(s.J[2])};
  std::array<Tensor, 3> F{fundamental_from_op(lc, s.J[0]), fundamental_from_op(lc, s.J[1]),
                          fundamental_from_op(lc, s.J[2])};
  std::array<Tensor, 3> FJ{third_slot_through(F[0], J[0]), third_slot_through(F[1], J[1]),
                           third_slot_through(F[2], J[2])};

  auto raise_last = [&](const Tensor& b3) {
    // gamma correction with last slot raised: (m,i,j) from (i,j,k).
    Tensor out = Tensor::make(n, 1, 2);
    for (int m = 1; m <= n; ++m)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Scalar acc;
          for (int k = 1; k <= n; ++k) {
            const Rational& gkm =
                f.metric.ginv[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)];
            if (gkm == 0) continue;
            Scalar t = b3.at({i, j, k});
            t *= gkm;
            acc += t;
          }
          out.at({m, i, j}) = acc;
        }
    return out;
  };

  // Distinguished connection: g(D_x y, z) = g(LC_x y, z) + 1/2 F1(x,y,J1 z).
  Connection D = lc;
  {
    Tensor b3 = Tensor::make(n, 0, 3);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          Scalar t = FJ[0].at({i, j, k});
          t /= Rational(2);
          b3.at({i, j, k}) = t;
        }
    D.gamma += raise_last(b3);
  }

  // First-structure connection, assembled by lowering the full coefficient
  // and raising at the end.
  Connection d1 = lc;
  {
    Tensor low = Tensor::make(n, 0, 3);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          Scalar acc;
          for (int p = 1; p <= n; ++p) {
            const Rational& gpk =
                f.metric.g[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(k - 1)];
            if (gpk == 0) continue;
            Scalar t = lc.gamma.at({p, i, j});
            t *= gpk;
            acc += t;
          }
          Scalar half = FJ[0].at({i, j, k});
          half /= Rational(2);
          acc += half;
          low.at({i, j, k}) = acc;
        }
    d1.gamma = raise_last(low);
  }

  // Second and third structures: g(D^a_x y, z) = g(LC_x y, z) - 1/4 S_{xyz} F_a(x,y,J_a z).
  auto cyclic_quarter = [&](const Tensor& fj) {
    Tensor b3 = Tensor::make(n, 0, 3);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          Scalar t = fj.at({i, j, k}) + fj.at({j, k, i}) + fj.at({k, i, j});
          t /= Rational(-4);
          b3.at({i, j, k}) = t;
        }
    return b3;
  };
  Connection d2 = lc;
  d2.gamma += raise_last(cyclic_quarter(FJ[1]));
  Connection d3 = lc;
  d3.gamma += raise_last(cyclic_quarter(FJ[2]));

  if (D.gamma != d1.gamma)
    throw Error("phkt_build: the two assemblies of the distinguished connection disagree; " +
                witness_of(D.gamma - d1.gamma));

  Tensor tor = torsion_of(D);  // (m, i, j)
  Tensor t3 = Tensor::make(n, 0, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Scalar acc;
        for (int m = 1; m <= n; ++m) {
          const Rational& gmk =
              f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)];
          if (gmk == 0) continue;
          Scalar t = tor.at({m, i, j});
          t *= gmk;
          acc += t;
        }
        t3.at({i, j, k}) = acc;
      }
  PHKTBuild out{finish_pack(std::move(D), std::move(t3), "phkt_build"), std::move(d1),
                std::move(d2), std::move(d3)};
  return out;
}

CurvatureReport connection_curvature(const TorsionPack& tp) {
  CurvatureReport cr;
  cr.r4 = curvature(tp.conn);
  RicciScalar rs = ricci_scalar(cr.r4, tp.conn.frame.metric);
  cr.ricci = std::move(rs.rho);
  cr.tau = std::move(rs.tau);
  const int n = tp.conn.frame.n;
  bool a12 = true, a34 = true;
  for (int x = 1; x <= n && (a12 || a34); ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          if (a12 && !(cr.r4.at({x, y, z, w}) + cr.r4.at({y, x, z, w})).is_zero()) a12 = false;
          if (a34 && !(cr.r4.at({x, y, z, w}) + cr.r4.at({x, y, w, z})).is_zero()) a34 = false;
        }
  cr.flags.emplace_back("antisym_12", a12);
  cr.flags.emplace_back("antisym_34", a34);
  return cr;
}

KaehlerBreakdown kaehler_tensor_breakdown(const Tensor& l4, const Tensor& op) {
  KaehlerBreakdown b;
  b.antisym_12 = b.antisym_34 = b.bianchi = b.op_line = true;
  const int n = l4.dim();
  RationalMatrix J = endo_matrix(op);
  auto note = [&](const std::string& tag, int x, int y, int z, int w, const Scalar& v) {
    if (b.witness.empty())
      b.witness = tag + " " + idx_str({x, y, z, w}) + " = " + v.str();
  };
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          const Scalar& base = l4.at({x, y, z, w});
          if (b.antisym_12) {
            Scalar s = base + l4.at({y, x, z, w});
            if (!s.is_zero()) {
              b.antisym_12 = false;
              note("antisym(1,2)", x, y, z, w, s);
            }
          }
          if (b.antisym_34) {
            Scalar s = base + l4.at({x, y, w, z});
            if (!s.is_zero()) {
              b.antisym_34 = false;
              note("antisym(3,4)", x, y, z, w, s);
            }
          }
          if (b.bianchi) {
            Scalar s = base + l4.at({y, z, x, w}) + l4.at({z, x, y, w});
            if (!s.is_zero()) {
              b.bianchi = false;
              note("bianchi", x, y, z, w, s);
            }
          }
          if (b.op_line) {
            Scalar s = base;
            for (int a = 1; a <= n; ++a) {
              const Rational& Jaz =
                  J[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(z - 1)];
              if (Jaz == 0) continue;
              for (int c = 1; c <= n; ++c) {
                const Rational& Jcw =
                    J[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(w - 1)];
                if (Jcw == 0) continue;
                Scalar t = l4.at({x, y, a, c});
                t *= Jaz * Jcw;
                s += t;
              }
            }
            if (!s.is_zero()) {
              b.op_line = false;
              note("op-line", x, y, z, w, s);
            }
          }
          if (!b.antisym_12 && !b.antisym_34 && !b.bianchi && !b.op_line) return b;
        }
  return b;
}

bool kaehler_tensor_check(const Tensor& l4, const Tensor& op) {
  return kaehler_tensor_breakdown(l4, op).all();
}

Thm21Report thm21_checks(const LieFrame& f, const NordenStructure& s, const TorsionPack& tp,
                         const CurvatureReport& cr) {
  Thm21Report rep;
  const int n = f.n;
  Connection lc = levi_civita(f);
  Tensor r_lc = curvature(lc);

  KaehlerBreakdown kb = kaehler_tensor_breakdown(cr.r4, s.J);
  rep.kaehler = kb.all();

  // Q(x,y,z,w) = g(T(x,y), T(z,w)).
  Tensor q = Tensor::make(n, 0, 4);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          Scalar acc;
          for (int c = 1; c <= n; ++c) {
            const Scalar& raised = tp.t12.at({x, y, c});
            if (raised.is_zero()) continue;
            acc += raised * tp.t3.at({z, w, c});
          }
          q.at({x, y, z, w}) = acc;
        }
  Tensor res_ii = Tensor::make(n, 0, 4);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          Scalar v = cr.r4.at({x, y, z, w}) - r_lc.at({x, y, z, w});
          v *= Rational(12);
          Scalar qq = q.at({x, y, z, w});
          qq *= Rational(2);
          v -= qq;
          v += q.at({y, z, x, w});
          v += q.at({z, x, y, w});
          res_ii.at({x, y, z, w}) = v;
        }
  rep.residual_ii_zero = res_ii.is_zero();

  // P(x,y) = (grad_x J)(J y) + (grad_{J x} J)(y);
  // Pt(z,w) = (grad_z J)(J w) - (grad_{J z} J)(w).
  Tensor nJ = covariant_derivative(lc, s.J);  // (m, d, a)
  RationalMatrix J = endo_matrix(s.J);
  Tensor P = Tensor::make(n, 1, 2);
  Tensor Pt = Tensor::make(n, 1, 2);
  for (int m = 1; m <= n; ++m)
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        Scalar plus, minus;
        for (int a = 1; a <= n; ++a) {
          const Rational& Jay = J[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(y - 1)];
          if (Jay != 0) {
            Scalar t = nJ.at({m, x, a});
            t *= Jay;
            plus += t;
            minus += t;
          }
          const Rational& Jax = J[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(x - 1)];
          if (Jax != 0) {
            Scalar t = nJ.at({m, a, y});
            t *= Jax;
            plus += t;
            minus -= t;
          }
        }
        P.at({m, x, y}) = plus;
        Pt.at({m, x, y}) = minus;
      }
  auto inner = [&](int x, int y, int z, int w) {
    Scalar acc;
    for (int m = 1; m <= n; ++m) {
      const Scalar& pm = P.at({m, x, y});
      if (pm.is_zero()) continue;
      for (int p = 1; p <= n; ++p) {
        const Rational& gmp =
            f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(p - 1)];
        if (gmp == 0) continue;
        Scalar t = pm * Pt.at({p, z, w});
        t *= gmp;
        acc += t;
      }
    }
    return acc;
  };
  bool iii_zero = true;
  std::string iii_witness;
  for (int x = 1; x <= n && iii_zero; ++x)
    for (int y = 1; y <= n && iii_zero; ++y)
      for (int z = 1; z <= n && iii_zero; ++z)
        for (int w = 1; w <= n && iii_zero; ++w) {
          Scalar v = inner(x, y, z, w) + inner(y, z, x, w) + inner(z, x, y, w);
          if (!v.is_zero()) {
            iii_zero = false;
            iii_witness = "residual-iii " + idx_str({x, y, z, w}) + " = " + v.str();
          }
        }
  rep.residual_iii_zero = iii_zero;

  if (!rep.kaehler && !kb.witness.empty())
    rep.witness = kb.witness;
  else if (!rep.residual_ii_zero)
    rep.witness = "residual-ii " + witness_of(res_ii);
  else if (!iii_zero)
    rep.witness = iii_witness;
  return rep;
}

ScalarRelationReport scalar_relation_checks(const LieFrame& f, const NordenStructure& s,
                                            const TorsionPack& tp, const CurvatureReport& cr) {
  ScalarRelationReport rep;
  Connection lc = levi_civita(f);
  Tensor F = fundamental_from_op(lc, s.J);
  rep.norm_grad_j = square_norm(f.metric, F);
  rep.tau_lc = ricci_scalar(curvature(lc), f.metric).tau;
  rep.tau_conn = cr.tau;

  rep.kaehler = kaehler_tensor_check(cr.r4, s.J);
  rep.parallel_own = covariant_derivative(tp.conn, tp.t3).is_zero();

  Scalar diff = rep.tau_conn - rep.tau_lc;
  if (rep.kaehler) {
    Scalar lhs = rep.norm_grad_j;
    lhs *= Rational(3);
    Scalar rhs = diff;
    rhs *= Rational(8);
    rep.rel_kaehler_ok = lhs == rhs;
  }
  if (rep.parallel_own) {
    Scalar rhs = rep.tau_lc - rep.tau_conn;
    rhs *= Rational(8);
    rep.rel_parallel_ok = rep.norm_grad_j == rhs;
  }
  if (rep.kaehler && rep.parallel_own) rep.rel_both_ok = rep.norm_grad_j.is_zero();
  return rep;
}

PhiCurvatureReport phi_curvature_checks(const LieFrame& f, const ContactBStructure& s,
                                        const TorsionPack& tp, const CurvatureReport& cr) {
  PhiCurvatureReport rep;
  Connection lc = levi_civita(f);
  ClassReport cls = classify(f, lc, StructurePack{s});
  rep.f7 = cls.flag("F7");
  if (!rep.f7)
    throw ClassViolation("phi_curvature_checks: the pack must lie in the vertical class");
  const int n = f.n;
  std::vector<Rational> eta = coefficient_vector(s.eta);
  std::vector<Rational> xi = coefficient_vector(s.xi);
  auto ge = grad_eta(lc, eta);
  auto gx = grad_xi(lc, xi);
  Tensor r_lc = curvature(lc);
  const Tensor& K = cr.r4;

  // gxx[i][j] = g(grad_{e_i} xi, grad_{e_j} xi)
  std::vector<std::vector<Scalar>> gxx(static_cast<std::size_t>(n),
                                       std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Scalar acc;
      for (int m = 1; m <= n; ++m) {
        const Scalar& gmi = gx[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(i - 1)];
        if (gmi.is_zero()) continue;
        for (int p = 1; p <= n; ++p) {
          const Rational& gmp =
              f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(p - 1)];
          if (gmp == 0) continue;
          Scalar t = gmi * gx[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(j - 1)];
          t *= gmp;
          acc += t;
        }
      }
      gxx[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = acc;
    }

  auto GE = [&](int a, int b) -> const Scalar& {
    return ge[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  };
  auto GXX = [&](int a, int b) -> const Scalar& {
    return gxx[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  };
  auto ETA = [&](int a) -> const Rational& { return eta[static_cast<std::size_t>(a - 1)]; };

  bool c1 = true, c2 = true;
  std::string w1, w2;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          Scalar third;
          {
            Scalar t = GE(x, y) * GE(z, w);
            t *= Rational(2);
            third += t;
            third -= GE(y, z) * GE(x, w);
            third -= GE(z, x) * GE(y, w);
            third /= Rational(3);
          }
          Scalar etaq;
          {
            auto add = [&](int a, int b, int cdir, int ddir, bool plus) {
              Rational coef = ETA(a) * ETA(b);
              if (coef == 0) return;
              Scalar t = GXX(cdir, ddir);
              t *= coef;
              if (plus)
                etaq += t;
              else
                etaq -= t;
            };
            add(x, z, y, w, true);
            add(x, w, y, z, false);
            add(y, z, x, w, false);
            add(y, w, x, z, true);
          }
          if (c1) {
            Scalar resid = K.at({x, y, z, w}) - r_lc.at({x, y, z, w}) - third - etaq;
            if (!resid.is_zero()) {
              c1 = false;
              w1 = "closed-form-1 residual " + idx_str({x, y, z, w}) + " = " + resid.str();
            }
          }
          if (c2) {
            Scalar third2;
            Scalar t = GE(x, y) * GE(z, w);
            t *= Rational(2);
            third2 += t;
            third2 += GE(x, z) * GE(y, w);
            third2 -= GE(x, w) * GE(y, z);
            third2 /= Rational(3);
            Scalar resid = K.at({x, y, z, w}) - r_lc.at({x, y, z, w}) - third2;
            if (!resid.is_zero()) {
              c2 = false;
              w2 = "closed-form-2 residual " + idx_str({x, y, z, w}) + " = " + resid.str();
            }
          }
        }
  rep.closed1_zero = c1;
  rep.closed2_zero = c2;
  rep.predicate = kaehler_tensor_check(K, s.phi);
  rep.equiv_ok = rep.predicate == rep.closed1_zero;
  rep.dt_zero = covariant_derivative(tp.conn, tp.t3).is_zero();

  RicciScalar rsK = ricci_scalar(K, f.metric);
  RicciScalar rsR = ricci_scalar(r_lc, f.metric);
  rep.ricci_match = rsK.rho == rsR.rho;
  rep.tau_match = rsK.tau == rsR.tau;
  if (!rep.equiv_ok)
    rep.witness = "predicate/closed-form disagree; " + (c1 ? std::string() : w1);
  else if (rep.dt_zero && !rep.ricci_match)
    rep.witness = "rho(K) != rho; " + witness_of(rsK.rho - rsR.rho);
  else if (rep.dt_zero && !rep.tau_match)
    rep.witness = "tau(K) - tau = " + (rsK.tau - rsR.tau).str();
  else if (rep.dt_zero && !rep.closed2_zero)
    rep.witness = w2;
  return rep;
}

Tensor w133_a_alpha(const Connection& lc, const Tensor& j_alpha) {
  const LieFrame& f = lc.frame;
  const int n = f.n;
  Tensor nJ = covariant_derivative(lc, j_alpha);  // (m, x, y)
  Tensor A = Tensor::make(n, 0, 4);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      // cache the column (grad_x J) y
      std::vector<const Scalar*> col(static_cast<std::size_t>(n));
      bool all_zero = true;
      for (int m = 1; m <= n; ++m) {
        col[static_cast<std::size_t>(m - 1)] = &nJ.at({m, x, y});
        if (!col[static_cast<std::size_t>(m - 1)]->is_zero()) all_zero = false;
      }
      if (all_zero) continue;
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          Scalar acc;
          for (int m = 1; m <= n; ++m) {
            const Scalar& lm = *col[static_cast<std::size_t>(m - 1)];
            if (lm.is_zero()) continue;
            for (int p = 1; p <= n; ++p) {
              const Rational& gmp =
                  f.metric.g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(p - 1)];
              if (gmp == 0) continue;
              Scalar t = lm * nJ.at({p, z, w});
              t *= gmp;
              acc += t;
            }
          }
          A.at({x, y, z, w}) = acc;
        }
    }
  return A;
}

Tensor w133_identity_residual(const LieFrame& f, const HyperStructure& s, const Connection& lc,
                              const Tensor& r4) {
  const int n = f.n;
  std::array<RationalMatrix, 3> J{endo_matrix(s.J[0]), endo_matrix(s.J[1]), endo_matrix(s.J[2])};
  std::array<Tensor, 3> A{w133_a_alpha(lc, s.J[0]), w133_a_alpha(lc, s.J[1]),
                          w133_a_alpha(lc, s.J[2])};
  Tensor res = Tensor::make(n, 0, 4);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          Scalar v = r4.at({x, y, z, w});
          for (const auto& Ja : J) {
            for (int a = 1; a <= n; ++a) {
              const Rational& jaz =
                  Ja[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(z - 1)];
              if (jaz == 0) continue;
              for (int b = 1; b <= n; ++b) {
                const Rational& jbw =
                    Ja[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(w - 1)];
                if (jbw == 0) continue;
                Scalar t = r4.at({x, y, a, b});
                t *= jaz * jbw;
                v += t;
              }
            }
          }
          for (const auto& Aa : A) {
            v -= Aa.at({x, z, y, w});
            v += Aa.at({y, z, x, w});
          }
          res.at({x, y, z, w}) = v;
        }
  return res;
}

Tensor w133_kr_residual(const LieFrame& f, const HyperStructure& s, const Connection& lc,
                        const Tensor& k4, const Tensor& r4) {
  const int n = f.n;
  Tensor A1 = w133_a_alpha(lc, s.J[0]);
  Tensor res = Tensor::make(n, 0, 4);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int w = 1; w <= n; ++w) {
          Scalar v = k4.at({x, y, z, w}) - r4.at({x, y, z, w});
          Scalar quarter = A1.at({x, y, z, w});
          quarter /= Rational(4);
          v -= quarter;
          Scalar cyc = A1.at({x, y, z, w}) + A1.at({y, z, x, w}) + A1.at({z, x, y, w});
          cyc /= Rational(4);
          v -= cyc;
          res.at({x, y, z, w}) = v;
        }
  return res;
}

W133Report w133_checks(const LieFrame& f, const HyperStructure& s, const Connection& lc,
                       const PHKTBuild& b) {
  W133Report rep;
  Tensor r4 = curvature(lc);
  Tensor k4 = curvature(b.pack.conn);
  Tensor id_res = w133_identity_residual(f, s, lc, r4);
  rep.identity_zero = id_res.is_zero();
  Tensor kr_res = w133_kr_residual(f, s, lc, k4, r4);
  rep.kr_zero = kr_res.is_zero();
  rep.strong = exterior_derivative(f, b.pack.t3).is_zero();
  rep.parallel_lc = covariant_derivative(lc, b.pack.t3).is_zero();
  rep.flat_k = k4.is_zero();
  rep.triple_equal = rep.strong == rep.parallel_lc && rep.strong == rep.flat_k;
  rep.r_zero = r4.is_zero();
  for (int a = 0; a < 3; ++a)
    rep.grad_norm_zero[static_cast<std::size_t>(a)] =
        square_norm(f.metric, fundamental_from_op(lc, s.J[static_cast<std::size_t>(a)])).is_zero();
  rep.torsion_norm_zero = square_norm(f.metric, b.pack.t3).is_zero();
  if (!rep.identity_zero)
    rep.witness = "curvature identity " + witness_of(id_res);
  else if (!rep.kr_zero)
    rep.witness = "K-R relation " + witness_of(kr_res);
  return rep;
}

TorsionFlags torsion_analysis(const LieFrame& f, const Connection& lc, const TorsionPack& tp) {
  TorsionFlags flags;
  flags.parallel_own = covariant_derivative(tp.conn, tp.t3).is_zero();
  flags.parallel_lc = covariant_derivative(lc, tp.t3).is_zero();
  flags.strong = exterior_derivative(f, tp.t3).is_zero();
  flags.coclosed = codifferential_3form(f, lc, tp.t3).is_zero();
  flags.isotropic = square_norm(f.metric, tp.t3).is_zero();
  return flags;
}

}  // namespace skewtor
