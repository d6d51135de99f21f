#include "skewtor/registry.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <utility>

#include "skewtor/connections_kt.hpp"
#include "skewtor/error.hpp"
#include "skewtor/forms.hpp"
#include "skewtor/params.hpp"
#include "skewtor/rng.hpp"

namespace skewtor {

std::string verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::ProvedSymbolically: return "proved-symbolically";
    case VerifyStatus::HoldsAtPoints: return "holds-at-points";
    case VerifyStatus::Failed: return "failed";
    case VerifyStatus::Vacuous: return "vacuous";
  }
  return "unknown";
}

namespace {

std::string idx_str(const std::vector<int>& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::optional<std::pair<std::vector<int>, Scalar>> first_nonzero(const Tensor& t) {
  std::optional<std::pair<std::vector<int>, Scalar>> out;
  t.for_each_index([&](const std::vector<int>& idx) {
    if (out) return;
    const Scalar& v = t.at(idx);
    if (!v.is_zero()) out = std::make_pair(idx, v);
  });
  return out;
}

std::string point_str(const std::map<int, Rational>& pt) {
  if (pt.empty()) return "parameter-free";
  std::string out;
  bool first = true;
  for (const auto& [id, v] : pt) {
    if (!first) out += ", ";
    first = false;
    out += ParamRegistry::name(id) + "=" + to_string(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared evaluation context
// ---------------------------------------------------------------------------

struct Ctx {
  ManifoldSpec bound;                // bindings applied; frame keeps free params
  std::map<int, Rational> resolved;  // binding map by global id
  std::vector<int> orig_ids;         // declared parameter ids before binding
  std::uint64_t seed = 0;

  int kind = -1;  // 0 Norden, 1 ContactB, 2 Hyper
  bool fam4 = false;
  bool fam5 = false;

  Connection lc;
  ClassReport cls;
  std::vector<Tensor> F;

  std::optional<TorsionPack> tp;  // present when the skew-torsion connection exists
  std::optional<CurvatureReport> cr;
  std::optional<PHKTBuild> phb;
  std::optional<W133Report> w133;

  // Positional declared parameter with bindings substituted.
  Scalar P(std::size_t pos) const {
    return Scalar::param(orig_ids.at(pos)).substitute(resolved);
  }
};

Ctx make_ctx(const ManifoldSpec& spec, std::uint64_t seed) {
  Ctx c;
  c.seed = seed;
  c.resolved = resolve_bindings(spec.frame, spec.bindings);
  c.bound = bind_params(spec, {});
  c.orig_ids = spec.frame.param_ids;
  c.kind = static_cast<int>(spec.pack.index());
  if (c.kind == 0) c.fam4 = same_family(spec, build_example_4d());
  if (c.kind == 1) c.fam5 = same_family(spec, build_example_5d());

  c.lc = levi_civita(c.bound.frame);
  c.cls = classify(c.bound.frame, c.lc, c.bound.pack);
  c.F = fundamental_tensor(c.bound.frame, c.lc, c.bound.pack);
  switch (c.kind) {
    case 0:
      if (c.cls.flag("W3")) {
        c.tp = kt_build(c.bound.frame, std::get<NordenStructure>(c.bound.pack));
        c.cr = connection_curvature(*c.tp);
      }
      break;
    case 1:
      if (c.cls.flag("F3+F7")) {
        c.tp = phikt_build(c.bound.frame, std::get<ContactBStructure>(c.bound.pack)).pack;
        c.cr = connection_curvature(*c.tp);
      }
      break;
    case 2:
      if (c.cls.flag("W133")) {
        c.phb = phkt_build(c.bound.frame, std::get<HyperStructure>(c.bound.pack));
        c.tp = c.phb->pack;
        c.cr = connection_curvature(*c.tp);
        c.w133 = w133_checks(c.bound.frame, std::get<HyperStructure>(c.bound.pack), c.lc, *c.phb);
      }
      break;
    default:
      break;
  }
  return c;
}

RationalSampler sampler_for(const Ctx& c, std::uint64_t salt) {
  return RationalSampler(c.seed * 1000003u + salt);
}

// Geometry rebuilt at one fully bound point.
struct PointGeo {
  LieFrame f;
  StructurePack s;
  Connection lc;
};

StructurePack pack_substitute(const StructurePack& s, const std::map<int, Rational>& pt) {
  if (const auto* n = std::get_if<NordenStructure>(&s)) return NordenStructure{n->J.substitute(pt)};
  if (const auto* cb = std::get_if<ContactBStructure>(&s))
    return ContactBStructure{cb->phi.substitute(pt), cb->xi.substitute(pt), cb->eta.substitute(pt)};
  const auto& h = std::get<HyperStructure>(s);
  return HyperStructure{
      {h.J[0].substitute(pt), h.J[1].substitute(pt), h.J[2].substitute(pt)}};
}

PointGeo at_point(const Ctx& c, const std::map<int, Rational>& pt) {
  PointGeo p;
  p.f = c.bound.frame;
  p.f.c = p.f.c.substitute(pt);
  p.f.param_names.clear();
  p.f.param_ids.clear();
  p.s = pack_substitute(c.bound.pack, pt);
  p.lc = levi_civita(p.f);
  return p;
}

// Structured points are meaningful only when the user has not already bound
// the parameters to other values.
bool structured_ok(const Ctx& c) { return c.resolved.empty(); }

std::map<int, Rational> family_point(const Ctx& c, const std::vector<long>& vals) {
  std::map<int, Rational> pt;
  for (std::size_t i = 0; i < vals.size() && i < c.orig_ids.size(); ++i)
    pt[c.orig_ids[i]] = Rational(vals[i]);
  return pt;
}

struct Sweep {
  int checked = 0;
  std::string witness;
  bool ok() const { return witness.empty(); }
};

// Runs `fn` at every structured point, then at `random_count` seeded random
// points over the free parameters; fn returns "" on success or a witness
// fragment on failure.  Stops at the first failure.
Sweep sweep_points(const Ctx& c, std::uint64_t salt, int random_count,
                   const std::vector<std::map<int, Rational>>& structured,
                   const std::function<std::string(const std::map<int, Rational>&)>& fn) {
  Sweep s;
  auto run = [&](const std::map<int, Rational>& pt) {
    std::string w = fn(pt);
    ++s.checked;
    if (!w.empty()) s.witness = "at {" + point_str(pt) + "}: " + w;
    return w.empty();
  };
  for (const auto& pt : structured)
    if (!run(pt)) return s;
  if (c.bound.frame.param_ids.empty()) {
    if (s.checked == 0) run({});
    return s;
  }
  RationalSampler rng = sampler_for(c, salt);
  for (int i = 0; i < random_count; ++i)
    if (!run(rng.point_for(c.bound.frame.param_ids))) return s;
  return s;
}

// Evaluates a symbolically vanishing residual at sampled points as a second,
// independent confirmation.
Sweep recheck_zero(const Ctx& c, std::uint64_t salt, const Tensor& residual) {
  return sweep_points(c, salt, 20, {}, [&](const std::map<int, Rational>& pt) -> std::string {
    Tensor ev = residual.substitute(pt);
    if (ev.is_zero()) return {};
    auto fn = first_nonzero(ev);
    return "residual" + idx_str(fn->first) + " = " + fn->second.str();
  });
}

// Exact computation over free parameters counts as a symbolic proof; if the
// user bound every declared parameter, the evidence covers that point only.
VerifyStatus exact_status(const Ctx& c) {
  if (!c.orig_ids.empty() && c.bound.frame.param_ids.empty()) return VerifyStatus::HoldsAtPoints;
  return VerifyStatus::ProvedSymbolically;
}

std::string exact_detail(const Ctx& c, const Sweep& re, const std::string& extra) {
  std::string d;
  if (exact_status(c) == VerifyStatus::HoldsAtPoints) {
    d = "all declared parameters are bound; verified exactly at the bound point";
  } else if (c.bound.frame.param_ids.empty()) {
    d = "parameter-free frame; verified by exact computation";
  } else {
    d = "holds in polynomial normal form over " + std::to_string(c.bound.frame.param_ids.size()) +
        " free parameter(s); re-checked at " + std::to_string(re.checked) + " sampled point(s)";
  }
  if (!extra.empty()) d += "; " + extra;
  return d;
}

std::string kind_name(int kind) {
  switch (kind) {
    case 0: return "Norden";
    case 1: return "almost contact B-metric";
    case 2: return "almost hypercomplex";
  }
  return "unknown";
}

bool require_kind(const Ctx& c, int kind, VerificationResult& r) {
  if (c.kind == kind) return true;
  r.status = VerifyStatus::Vacuous;
  r.detail = "entry applies to " + kind_name(kind) + " packs; this spec carries a structure of kind: " +
             kind_name(c.kind);
  return false;
}

bool require_family(bool match, const char* which, VerificationResult& r) {
  if (match) return true;
  r.status = VerifyStatus::Vacuous;
  r.detail = std::string("entry is specific to the built-in ") + which +
             " family; this spec does not match it up to positional parameter renaming";
  return false;
}

bool require_pack(const Ctx& c, const char* cls, VerificationResult& r) {
  if (c.tp) return true;
  r.status = VerifyStatus::Vacuous;
  r.detail = std::string("the skew-torsion connection requires ") + cls +
             "; this spec lies outside that class";
  return false;
}

Tensor cyclic_sum3(const Tensor& F) {
  Tensor out = Tensor::make(F.dim(), 0, 3);
  out.for_each_index([&](const std::vector<int>& idx) {
    int i = idx[0], j = idx[1], k = idx[2];
    out.at(idx) = F.at({i, j, k}) + F.at({j, k, i}) + F.at({k, i, j});
  });
  return out;
}

// ---------------------------------------------------------------------------
// Entries
// ---------------------------------------------------------------------------

VerificationResult e_s2_kt_torsion(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 0, r)) return r;
  if (!require_family(c.fam4, "four-dimensional Norden", r)) return r;
  if (!require_pack(c, "a vanishing cyclic sum of F", r)) return r;
  Tensor expect = Tensor::make(4, 0, 3);
  assign_skew3(expect, 1, 3, 4, c.P(0));
  assign_skew3(expect, 2, 3, 4, c.P(1));
  assign_skew3(expect, 1, 2, 3, -c.P(2));
  assign_skew3(expect, 1, 2, 4, -c.P(3));
  Tensor diff = c.tp->t3 - expect;
  if (!diff.is_zero()) {
    auto fn = first_nonzero(diff);
    r.status = VerifyStatus::Failed;
    r.witness = "T" + idx_str(fn->first) + " = " + c.tp->t3.at(fn->first).str() + ", expected " +
                expect.at(fn->first).str();
    return r;
  }
  Sweep re = recheck_zero(c, 101, diff);
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, "all other independent components vanish");
  return r;
}

VerificationResult e_s2_equivalences(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 0, r)) return r;
  if (!require_family(c.fam4, "four-dimensional Norden", r)) return r;
  if (!require_pack(c, "a vanishing cyclic sum of F", r)) return r;

  Scalar quad = c.P(0) * c.P(0) + c.P(1) * c.P(1) - c.P(2) * c.P(2) - c.P(3) * c.P(3);

  std::vector<std::map<int, Rational>> structured;
  if (structured_ok(c) && c.orig_ids.size() == 4) {
    structured.push_back(family_point(c, {1, 0, 1, 0}));
    structured.push_back(family_point(c, {1, 0, 0, 0}));
    structured.push_back(family_point(c, {0, 0, 0, 0}));
    // points on the zero locus of the quadric: l3 = l1, l4 = l2
    RationalSampler rng = sampler_for(c, 202);
    for (int i = 0; i < 10; ++i) {
      Rational a = rng.next(), b = rng.next();
      structured.push_back({{c.orig_ids[0], a},
                            {c.orig_ids[1], b},
                            {c.orig_ids[2], a},
                            {c.orig_ids[3], b}});
    }
  }

  Sweep sw = sweep_points(c, 201, 20, structured, [&](const std::map<int, Rational>& pt) -> std::string {
    PointGeo p = at_point(c, pt);
    const auto& ns = std::get<NordenStructure>(p.s);
    TorsionPack tp = kt_build(p.f, ns);
    CurvatureReport cr = connection_curvature(tp);
    ScalarRelationReport sr = scalar_relation_checks(p.f, ns, tp, cr);
    bool c_iso = sr.norm_grad_j.is_zero();
    bool c_tau = sr.tau_lc.is_zero();
    bool c_pred = kaehler_tensor_check(cr.r4, ns.J);
    bool c_quad = quad.substitute(pt).is_zero();
    if (c_iso == c_tau && c_tau == c_pred && c_pred == c_quad) return {};
    return "|grad J|^2=0 is " + bool_str(c_iso) + ", tau=0 is " + bool_str(c_tau) +
           ", Kaehler-type curvature is " + bool_str(c_pred) + ", quadric=0 is " + bool_str(c_quad);
  });
  if (!sw.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = sw.witness;
    r.detail = "the four conditions disagree; " + std::to_string(sw.checked) +
               " point(s) examined before the counterexample";
    return r;
  }
  r.status = VerifyStatus::HoldsAtPoints;
  r.detail = "all four conditions agree at " + std::to_string(sw.checked) +
             " point(s) (designated, quadric-locus, and generic samples)";
  return r;
}

VerificationResult e_s2_thm21(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 0, r)) return r;
  if (!require_pack(c, "a vanishing cyclic sum of F", r)) return r;
  const auto& ns = std::get<NordenStructure>(c.bound.pack);
  Thm21Report sym = thm21_checks(c.bound.frame, ns, *c.tp, *c.cr);
  if (!sym.consistent()) {
    r.status = VerifyStatus::Failed;
    r.witness = "identically in the parameters: Kaehler-type=" + bool_str(sym.kaehler) +
                ", torsion-square identity=" + bool_str(sym.residual_ii_zero) +
                ", cyclic grad-J identity=" + bool_str(sym.residual_iii_zero) +
                (sym.witness.empty() ? "" : "; " + sym.witness);
    return r;
  }
  if (sym.kaehler && sym.residual_ii_zero && sym.residual_iii_zero) {
    r.status = exact_status(c);
    r.detail = exact_detail(c, Sweep{}, "all three identities hold identically");
    return r;
  }
  std::vector<std::map<int, Rational>> structured;
  if (c.fam4 && structured_ok(c) && c.orig_ids.size() == 4) {
    structured.push_back(family_point(c, {1, 0, 1, 0}));
    structured.push_back(family_point(c, {1, 0, 0, 0}));
    structured.push_back(family_point(c, {0, 0, 0, 0}));
  }
  Sweep sw = sweep_points(c, 301, 20, structured, [&](const std::map<int, Rational>& pt) -> std::string {
    PointGeo p = at_point(c, pt);
    const auto& nsp = std::get<NordenStructure>(p.s);
    TorsionPack tp = kt_build(p.f, nsp);
    CurvatureReport cr = connection_curvature(tp);
    Thm21Report th = thm21_checks(p.f, nsp, tp, cr);
    if (th.consistent()) return {};
    return "Kaehler-type=" + bool_str(th.kaehler) + ", torsion-square identity=" +
           bool_str(th.residual_ii_zero) + ", cyclic grad-J identity=" + bool_str(th.residual_iii_zero);
  });
  if (!sw.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = sw.witness;
    return r;
  }
  r.status = VerifyStatus::HoldsAtPoints;
  r.detail = "the three conditions coincide at " + std::to_string(sw.checked) + " point(s)";
  return r;
}

VerificationResult e_s2_scalar_props(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 0, r)) return r;
  if (!require_pack(c, "a vanishing cyclic sum of F", r)) return r;
  const auto& ns = std::get<NordenStructure>(c.bound.pack);
  ScalarRelationReport sym = scalar_relation_checks(c.bound.frame, ns, *c.tp, *c.cr);
  Scalar uncond = Scalar(3) * sym.norm_grad_j - Scalar(8) * (sym.tau_conn - sym.tau_lc);

  std::vector<std::map<int, Rational>> structured;
  if (c.fam4 && structured_ok(c) && c.orig_ids.size() == 4) {
    structured.push_back(family_point(c, {0, 0, 0, 0}));
    structured.push_back(family_point(c, {1, 0, 1, 0}));
    structured.push_back(family_point(c, {1, 0, 0, 0}));
  }
  int trig_kaehler = 0, trig_parallel = 0, trig_both = 0;
  Sweep sw = sweep_points(c, 401, 20, structured, [&](const std::map<int, Rational>& pt) -> std::string {
    PointGeo p = at_point(c, pt);
    const auto& nsp = std::get<NordenStructure>(p.s);
    TorsionPack tp = kt_build(p.f, nsp);
    CurvatureReport cr = connection_curvature(tp);
    ScalarRelationReport sr = scalar_relation_checks(p.f, nsp, tp, cr);
    if (sr.kaehler) ++trig_kaehler;
    if (sr.parallel_own) ++trig_parallel;
    if (sr.kaehler && sr.parallel_own) ++trig_both;
    if (sr.pass()) return {};
    std::string which = !sr.rel_kaehler_ok   ? "3|grad J|^2 = 8(tau'-tau) fails under the predicate"
                        : !sr.rel_parallel_ok ? "|grad J|^2 = 8(tau-tau') fails under parallel torsion"
                                              : "|grad J|^2 = 0 fails under both hypotheses";
    return which + "; |grad J|^2 = " + sr.norm_grad_j.str() + ", tau = " + sr.tau_lc.str() +
           ", tau' = " + sr.tau_conn.str();
  });
  std::string triggers = "branch triggers across " + std::to_string(sw.checked) +
                         " point(s): Kaehler-type " + std::to_string(trig_kaehler) + ", parallel torsion " +
                         std::to_string(trig_parallel) + ", both " + std::to_string(trig_both);
  if (!sw.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = sw.witness;
    r.detail = triggers;
    return r;
  }
  if (!sym.pass()) {
    r.status = VerifyStatus::Failed;
    r.witness = "a conditional relation fails identically; |grad J|^2 = " + sym.norm_grad_j.str() +
                ", tau = " + sym.tau_lc.str() + ", tau' = " + sym.tau_conn.str();
    r.detail = triggers;
    return r;
  }
  if (uncond.is_zero()) {
    r.status = exact_status(c);
    r.detail = exact_detail(c, sw, "3|grad J|^2 - 8(tau'-tau) vanishes identically, without the "
                                   "predicate hypothesis; " + triggers);
  } else {
    r.status = VerifyStatus::HoldsAtPoints;
    r.detail = triggers;
  }
  return r;
}

VerificationResult e_s3_class(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 1, r)) return r;
  if (!require_family(c.fam5, "five-dimensional almost contact B-metric", r)) return r;
  if (!c.cls.flag("F7")) {
    r.status = VerifyStatus::Failed;
    Tensor cyc = cyclic_sum3(c.F[0]);
    if (auto fn = first_nonzero(cyc))
      r.witness = "cyclic sum of F at " + idx_str(fn->first) + " = " + fn->second.str();
    else
      r.witness = "vertical-class flag is false (horizontal component of F present)";
    return r;
  }
  Sweep re = sweep_points(c, 501, 20, {}, [&](const std::map<int, Rational>& pt) -> std::string {
    PointGeo p = at_point(c, pt);
    ClassReport cl = classify(p.f, p.lc, p.s);
    if (cl.flag("F7")) return {};
    return "vertical-class flag is false";
  });
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, "class flags recomputed from scratch at each sampled point");
  return r;
}

VerificationResult e_s3_torsion(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 1, r)) return r;
  if (!require_family(c.fam5, "five-dimensional almost contact B-metric", r)) return r;
  if (!require_pack(c, "a vanishing cyclic sum of F", r)) return r;
  Tensor expect = Tensor::make(5, 0, 3);
  Scalar m1_2 = c.P(4) * Rational(2);
  Scalar m2_2 = c.P(5) * Rational(2);
  assign_skew3(expect, 1, 2, 5, m1_2);
  assign_skew3(expect, 3, 4, 5, m1_2);
  assign_skew3(expect, 2, 3, 5, m2_2);
  assign_skew3(expect, 4, 1, 5, m2_2);
  auto comp = [&](int i, int j, int k) {
    return "T" + idx_str({i, j, k}) + " = " + c.tp->t3.at({i, j, k}).str();
  };
  r.detail = "computed components: " + comp(1, 2, 5) + ", " + comp(3, 4, 5) + ", " + comp(2, 3, 5) +
             ", " + comp(4, 1, 5);
  Tensor diff = c.tp->t3 - expect;
  if (!diff.is_zero()) {
    auto fn = first_nonzero(diff);
    r.status = VerifyStatus::Failed;
    r.witness = "T" + idx_str(fn->first) + " = " + c.tp->t3.at(fn->first).str() + " but the table claims " +
                expect.at(fn->first).str() +
                "; bracket antisymmetry forces T(1,2,5) = -T(3,4,5), so the claimed equality "
                "T(1,2,5) = T(3,4,5) cannot hold for nonzero m1";
    return r;
  }
  Sweep re = recheck_zero(c, 601, diff);
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, r.detail);
  return r;
}

VerificationResult e_s3_parallel(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 1, r)) return r;
  if (!require_family(c.fam5, "five-dimensional almost contact B-metric", r)) return r;
  if (!require_pack(c, "a vanishing cyclic sum of F", r)) return r;
  Tensor dt = covariant_derivative(c.tp->conn, c.tp->t3);
  if (!dt.is_zero()) {
    auto fn = first_nonzero(dt);
    r.status = VerifyStatus::Failed;
    r.witness = "(D T)" + idx_str(fn->first) + " = " + fn->second.str();
    return r;
  }
  Sweep re = recheck_zero(c, 701, dt);
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, "D T vanishes identically");
  return r;
}

VerificationResult e_s3_isotropic(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 1, r)) return r;
  if (!require_family(c.fam5, "five-dimensional almost contact B-metric", r)) return r;
  const auto& cs = std::get<ContactBStructure>(c.bound.pack);
  Tensor grad_phi = covariant_derivative(c.lc, cs.phi);
  Tensor lowered = raise_lower(grad_phi, 1, MusicalDir::Lower, c.bound.frame.metric);
  IsotropyResult iso = isotropy(c.bound.frame.metric, lowered);
  Scalar pm = c.P(4) * c.P(4) - c.P(5) * c.P(5);
  Scalar expect = pm * Rational(-8);
  if (iso.norm != expect) {
    r.status = VerifyStatus::Failed;
    r.witness = "|grad phi|^2 = " + iso.norm.str() + ", expected " + expect.str();
    return r;
  }
  Tensor resid = Tensor::make(1, 0, 1);
  resid.at({1}) = iso.norm - expect;
  Sweep re = recheck_zero(c, 801, resid);
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  std::string locus;
  if (structured_ok(c) && c.orig_ids.size() == 6) {
    Rational on = iso.norm.substitute(family_point(c, {0, 0, 0, 0, 1, 1})).constant_value();
    Rational off = iso.norm.substitute(family_point(c, {0, 0, 0, 0, 1, 0})).constant_value();
    locus = "|grad phi|^2 is " + to_string(on) + " at m1=m2=1 and " + to_string(off) +
            " at m1=1, m2=0, matching the locus m1 = +/-m2";
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, "|grad phi|^2 = " + iso.norm.str() +
                                     (locus.empty() ? "" : "; " + locus));
  return r;
}

VerificationResult e_s3_k_theorems(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 1, r)) return r;
  if (!c.cls.flag("F7")) {
    r.status = VerifyStatus::Vacuous;
    r.detail = "entry requires the vertical class; this spec is outside it";
    return r;
  }
  if (!require_pack(c, "a vanishing cyclic sum of F", r)) return r;
  const auto& cs = std::get<ContactBStructure>(c.bound.pack);
  PhiCurvatureReport sym = phi_curvature_checks(c.bound.frame, cs, *c.tp, *c.cr);

  std::vector<std::map<int, Rational>> structured;
  if (c.fam5 && structured_ok(c) && c.orig_ids.size() == 6) {
    structured.push_back(family_point(c, {0, 0, 0, 0, 0, 0}));
    structured.push_back(family_point(c, {0, 0, 0, 0, 1, 1}));
    structured.push_back(family_point(c, {0, 0, 0, 0, 1, 0}));
  }
  Sweep sw = sweep_points(c, 901, 20, structured, [&](const std::map<int, Rational>& pt) -> std::string {
    PointGeo p = at_point(c, pt);
    const auto& csp = std::get<ContactBStructure>(p.s);
    TorsionPack tp = phikt_build(p.f, csp).pack;
    CurvatureReport cr = connection_curvature(tp);
    PhiCurvatureReport pc = phi_curvature_checks(p.f, csp, tp, cr);
    if (!pc.equiv_ok)
      return "phi-Kaehler predicate is " + bool_str(pc.predicate) + " but the closed-form equality is " +
             bool_str(pc.closed1_zero);
    if (pc.dt_zero && !(pc.ricci_match && pc.tau_match))
      return "D T = 0 yet rho(K) = rho is " + bool_str(pc.ricci_match) + " and tau(K) = tau is " +
             bool_str(pc.tau_match);
    return {};
  });

  if (sym.dt_zero && !(sym.ricci_match && sym.tau_match)) {
    RicciScalar rs_lc = ricci_scalar(curvature(c.lc), c.bound.frame.metric);
    Tensor rho_diff = c.cr->ricci - rs_lc.rho;
    Scalar tau_diff = c.cr->tau - rs_lc.tau;
    r.status = VerifyStatus::Failed;
    if (auto fn = first_nonzero(rho_diff))
      r.witness = "(rho(K) - rho)" + idx_str(fn->first) + " = " + fn->second.str() +
                  " although D T = 0 identically; tau(K) - tau = " + tau_diff.str();
    else
      r.witness = "tau(K) - tau = " + tau_diff.str() + " although D T = 0 identically";
    r.detail = sw.ok() ? "the phi-Kaehler/closed-form equivalence holds at " +
                             std::to_string(sw.checked) + " point(s); the parallel-torsion consequence fails"
                       : "a pointwise check also failed: " + sw.witness;
    return r;
  }
  if (!sw.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = sw.witness;
    return r;
  }
  r.status = VerifyStatus::HoldsAtPoints;
  r.detail = "equivalence and parallel-torsion consequences verified at " + std::to_string(sw.checked) +
             " point(s)";
  return r;
}

VerificationResult e_s4_g1(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 2, r)) return r;
  bool w3j2 = c.cls.flag("W3(J2)");
  bool w3j3 = c.cls.flag("W3(J3)");
  if (!(w3j2 && w3j3)) {
    r.status = VerifyStatus::Vacuous;
    r.detail = std::string("hypothesis not met: W3(J2) is ") + bool_str(w3j2) + " and W3(J3) is " +
               bool_str(w3j3);
    return r;
  }
  if (!c.cls.flag("G1(J1)")) {
    r.status = VerifyStatus::Failed;
    Tensor cyc2 = cyclic_sum3(c.F[1]);
    Tensor cyc3t = cyclic_sum3(c.F[2]);
    r.witness = "G1(J1) flag is false although the cyclic sums for J2 and J3 vanish (first residuals: " +
                (first_nonzero(cyc2) ? "J2 " + idx_str(first_nonzero(cyc2)->first) : std::string("J2 none")) +
                ", " +
                (first_nonzero(cyc3t) ? "J3 " + idx_str(first_nonzero(cyc3t)->first) : std::string("J3 none")) +
                ")";
    return r;
  }
  Sweep re = sweep_points(c, 1001, 20, {}, [&](const std::map<int, Rational>& pt) -> std::string {
    PointGeo p = at_point(c, pt);
    ClassReport cl = classify(p.f, p.lc, p.s);
    if (!(cl.flag("W3(J2)") && cl.flag("W3(J3)"))) return {};  // hypothesis void at this point
    if (cl.flag("G1(J1)")) return {};
    return "G1(J1) flag is false while both W3 hypotheses hold";
  });
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, "class flags recomputed from scratch at each sampled point");
  return r;
}

VerificationResult e_s4_curv_identity(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 2, r)) return r;
  if (!c.cls.flag("W133")) {
    r.status = VerifyStatus::Vacuous;
    r.detail = "entry requires the W133 class; this spec is outside it";
    return r;
  }
  const auto& hs = std::get<HyperStructure>(c.bound.pack);
  Tensor resid = w133_identity_residual(c.bound.frame, hs, c.lc, curvature(c.lc));
  if (!resid.is_zero()) {
    auto fn = first_nonzero(resid);
    r.status = VerifyStatus::Failed;
    r.witness = "residual" + idx_str(fn->first) + " = " + fn->second.str();
    return r;
  }
  Sweep re = recheck_zero(c, 1101, resid);
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, "");
  return r;
}

VerificationResult e_s4_unique(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 2, r)) return r;
  if (!c.cls.flag("W133") || !c.phb) {
    r.status = VerifyStatus::Vacuous;
    r.detail = "entry requires the W133 class; this spec is outside it";
    return r;
  }
  const int n = c.bound.frame.n;
  Tensor omega = Tensor::make(n, 0, 3);
  assign_skew3(omega, 1, 2, 3, Scalar(Rational(1)));
  RationalSampler rng = sampler_for(c, 1201);
  std::string detail = "perturbation scales:";
  for (int trial = 0; trial < 5; ++trial) {
    Rational s = rng.next_nonzero();
    Tensor pert = omega;
    pert *= s;
    Tensor raised = raise_lower(pert, 3, MusicalDir::Raise, c.bound.frame.metric);
    Connection tilde = c.phb->pack.conn;
    for (int m = 1; m <= n; ++m)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Scalar add = raised.at({i, j, m});
          add *= Rational(1, 2);
          tilde.gamma.at({m, i, j}) += add;
        }
    auto items = naturality_check(c.bound.frame, c.bound.pack, tilde);
    std::string broken;
    bool metric_ok = true;
    for (const auto& it : items) {
      if (it.ok) continue;
      if (it.name == "conn g = 0") metric_ok = false;
      if (broken.empty()) broken = it.name;
    }
    if (!metric_ok) {
      r.status = VerifyStatus::Failed;
      r.witness = "the skew perturbation with scale " + to_string(s) +
                  " broke metric compatibility; the comparison class was not preserved";
      return r;
    }
    if (broken.empty()) {
      r.status = VerifyStatus::Failed;
      r.witness = "the connection perturbed by the skew three-form with scale " + to_string(s) +
                  " is still natural, contradicting uniqueness";
      return r;
    }
    detail += (trial ? "," : "") + std::string(" ") + to_string(s) + " (breaks " + broken + ")";
  }
  r.status = VerifyStatus::HoldsAtPoints;
  r.detail = "5 seeded totally skew perturbations of the torsion each keep the connection metric "
             "but break naturality; " + detail;
  return r;
}

VerificationResult e_s4_equiv(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 2, r)) return r;
  if (!c.cls.flag("W133") || !c.w133) {
    r.status = VerifyStatus::Vacuous;
    r.detail = "entry requires the W133 class; this spec is outside it";
    return r;
  }
  const W133Report& w = *c.w133;
  if (w.strong && w.parallel_lc && w.flat_k) {
    Tensor k4 = curvature(c.tp->conn);
    Sweep re = recheck_zero(c, 1301, k4);
    if (!re.ok()) {
      r.status = VerifyStatus::Failed;
      r.witness = re.witness;
      return r;
    }
    r.status = exact_status(c);
    r.detail = exact_detail(c, re, "d T = 0, the Levi-Civita derivative of T vanishes, and the "
                                   "curvature of D vanishes, all identically");
    return r;
  }
  Sweep sw = sweep_points(c, 1302, 20, {}, [&](const std::map<int, Rational>& pt) -> std::string {
    PointGeo p = at_point(c, pt);
    const auto& hsp = std::get<HyperStructure>(p.s);
    PHKTBuild ph = phkt_build(p.f, hsp);
    bool b_strong = exterior_derivative(p.f, ph.pack.t3).is_zero();
    bool b_par = covariant_derivative(p.lc, ph.pack.t3).is_zero();
    bool b_flat = curvature(ph.pack.conn).is_zero();
    if (b_strong == b_par && b_par == b_flat) return {};
    return "d T = 0 is " + bool_str(b_strong) + ", Levi-Civita-parallel T is " + bool_str(b_par) +
           ", flat D is " + bool_str(b_flat);
  });
  if (!sw.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = sw.witness;
    return r;
  }
  r.status = VerifyStatus::HoldsAtPoints;
  r.detail = "the three conditions coincide at " + std::to_string(sw.checked) + " point(s)";
  return r;
}

VerificationResult e_s4_flat(const Ctx& c, VerificationResult r) {
  if (!require_kind(c, 2, r)) return r;
  if (!c.cls.flag("W133") || !c.w133) {
    r.status = VerifyStatus::Vacuous;
    r.detail = "entry requires the W133 class; this spec is outside it";
    return r;
  }
  const W133Report& w = *c.w133;
  if (!(w.strong && w.parallel_lc && w.flat_k)) {
    r.status = VerifyStatus::Vacuous;
    r.detail = "the equivalent flatness conditions do not hold identically on this spec";
    return r;
  }
  if (!w.r_zero || !w.grad_norm_zero[0] || !w.grad_norm_zero[1] || !w.grad_norm_zero[2] ||
      !w.torsion_norm_zero) {
    r.status = VerifyStatus::Failed;
    Tensor rlc = curvature(c.lc);
    if (auto fn = first_nonzero(rlc)) {
      r.witness = "R" + idx_str(fn->first) + " = " + fn->second.str();
    } else {
      r.witness = "a squared norm fails to vanish: |grad J_1|^2, |grad J_2|^2, |grad J_3|^2, |T|^2 zero flags are " +
                  bool_str(w.grad_norm_zero[0]) + ", " + bool_str(w.grad_norm_zero[1]) + ", " +
                  bool_str(w.grad_norm_zero[2]) + ", " + bool_str(w.torsion_norm_zero);
    }
    return r;
  }
  Sweep re = recheck_zero(c, 1401, curvature(c.lc));
  if (!re.ok()) {
    r.status = VerifyStatus::Failed;
    r.witness = re.witness;
    return r;
  }
  r.status = exact_status(c);
  r.detail = exact_detail(c, re, "R = 0, |grad J_a|^2 = 0 for a = 1,2,3, and |T|^2 = 0");
  return r;
}

// ---------------------------------------------------------------------------
// Entry table
// ---------------------------------------------------------------------------

struct EntryRow {
  const char* id;
  const char* claim;
  VerificationResult (*fn)(const Ctx&, VerificationResult);
};

constexpr EntryRow kEntries[] = {
    {"S2-KT-torsion",
     "on the four-dimensional Norden family the totally skew torsion has T(1,3,4)=l1, T(2,3,4)=l2, "
     "T(1,2,3)=-l3, T(1,2,4)=-l4 (parameters positional) and no other independent components",
     e_s2_kt_torsion},
    {"S2-equivalences",
     "equivalence of: |grad J|^2 = 0; tau = 0; the skew-torsion connection has Kaehler-type "
     "curvature; l1^2+l2^2-l3^2-l4^2 = 0",
     e_s2_equivalences},
    {"S2-thm21",
     "the Kaehler-type predicate for the skew-torsion curvature holds iff the torsion-square "
     "curvature identity holds iff the cyclic grad-J product identity holds",
     e_s2_thm21},
    {"S2-scalar-props",
     "under the Kaehler-type predicate 3|grad J|^2 = 8(tau' - tau); under own-connection-parallel "
     "torsion |grad J|^2 = 8(tau - tau'); under both |grad J|^2 = 0",
     e_s2_scalar_props},
    {"S3-class",
     "the five-dimensional contact family satisfies the vertical-class identities for every "
     "parameter value",
     e_s3_class},
    {"S3-torsion",
     "the skew torsion of the five-dimensional family satisfies T(1,2,5)=T(3,4,5)=2*m1 and "
     "T(2,3,5)=T(4,1,5)=2*m2",
     e_s3_torsion},
    {"S3-parallel",
     "the skew torsion of the five-dimensional family is parallel for its own connection: D T = 0",
     e_s3_parallel},
    {"S3-isotropic",
     "|grad phi|^2 = -8*(m1^2 - m2^2) on the five-dimensional family; the gradient is isotropic "
     "exactly when m1 = +/-m2",
     e_s3_isotropic},
    {"S3-K-theorems",
     "for vertical-class packs the curvature K of the skew-torsion connection satisfies the "
     "phi-Kaehler predicate iff K equals its closed-form expression; when D T = 0, rho(K) = rho "
     "and tau(K) = tau",
     e_s3_k_theorems},
    {"S4-G1",
     "vanishing cyclic sums of F_2 and F_3 (flags W3(J2), W3(J3)) imply the G1(J1) class flag",
     e_s4_g1},
    {"S4-curv-identity",
     "R(x,y,z,w) + sum_a R(x,y,J_a z,J_a w) = sum_a { A_a(x,z,y,w) - A_a(y,z,x,w) } with "
     "A_a(x,y,z,w) = g((grad_x J_a)y, (grad_z J_a)w)",
     e_s4_curv_identity},
    {"S4-unique",
     "the natural connection with totally skew torsion is unique: every sampled totally skew "
     "perturbation of its torsion breaks naturality",
     e_s4_unique},
    {"S4-equiv",
     "d T = 0 iff T is parallel for the Levi-Civita connection iff the connection D is flat",
     e_s4_equiv},
    {"S4-flat",
     "when the equivalent flatness conditions hold: R = 0, |grad J_a|^2 = 0 for each a, and "
     "|T|^2 = 0",
     e_s4_flat},
};

const EntryRow* find_entry(const std::string& id) {
  for (const auto& row : kEntries)
    if (id == row.id) return &row;
  return nullptr;
}

}  // namespace

std::vector<std::string> registry_ids() {
  std::vector<std::string> ids;
  for (const auto& row : kEntries) ids.emplace_back(row.id);
  return ids;
}

std::vector<VerificationResult> verify(const ManifoldSpec& spec, const std::string& id,
                                       std::uint64_t seed) {
  std::vector<const EntryRow*> want;
  if (id == "all") {
    for (const auto& row : kEntries) want.push_back(&row);
  } else {
    const EntryRow* row = find_entry(id);
    if (!row) throw InputError("unknown registry id '" + id + "'");
    want.push_back(row);
  }

  auto all_failed = [&](const std::string& witness, const std::string& detail) {
    std::vector<VerificationResult> out;
    for (const EntryRow* row : want) {
      VerificationResult r;
      r.id = row->id;
      r.claim = row->claim;
      r.status = VerifyStatus::Failed;
      r.witness = witness;
      r.detail = detail;
      out.push_back(std::move(r));
    }
    return out;
  };

  ManifoldSpec bound = bind_params(spec, {});
  if (auto v = antisymmetry_violation(bound.frame)) {
    return all_failed("bracket antisymmetry violated at " + idx_str(*v),
                      "the frame is not a Lie algebra; no statement can be evaluated");
  }
  if (auto jw = jacobi_witness(bound.frame)) {
    return all_failed("Jacobi identity fails at (" + std::to_string(jw->i) + "," +
                          std::to_string(jw->j) + "," + std::to_string(jw->k) + " -> " +
                          std::to_string(jw->m) + "): residual " + jw->residual.str(),
                      "the frame is not a Lie algebra; no statement can be evaluated");
  }
  ValidationReport vr = validate_structure(bound.frame, bound.pack);
  if (!vr.pass()) {
    std::string w = "structure axiom violated";
    for (const auto& item : vr.items)
      if (!item.ok) {
        w = "structure axiom '" + item.name + "' fails" +
            (item.witness.empty() ? "" : " at " + item.witness);
        break;
      }
    return all_failed(w, "the structure pack does not satisfy its defining identities");
  }

  Ctx c = make_ctx(spec, seed);
  std::vector<VerificationResult> out;
  for (const EntryRow* row : want) {
    VerificationResult seeded;
    seeded.id = row->id;
    seeded.claim = row->claim;
    auto t0 = std::chrono::steady_clock::now();
    VerificationResult r = row->fn(c, std::move(seeded));
    auto t1 = std::chrono::steady_clock::now();
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace skewtor
