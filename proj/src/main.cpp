#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "skewtor/connections_kt.hpp"
#include "skewtor/error.hpp"
#include "skewtor/forms.hpp"
#include "skewtor/params.hpp"
#include "skewtor/registry.hpp"
#include "skewtor/report.hpp"
#include "skewtor/rng.hpp"
#include "skewtor/specfile.hpp"
#include "skewtor/version.hpp"

namespace {

using namespace skewtor;

struct Options {
  std::string spec_path;
  std::string type;  // empty = choose by structure kind
  std::string id;
  bool all = false;
  std::vector<std::string> params;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

std::string idx_name(const char* base, const std::vector<int>& idx) {
  std::string out = base;
  out += "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out + ")";
}

std::string kind_label(int kind) {
  switch (kind) {
    case 0: return "Norden";
    case 1: return "almost contact B-metric";
    case 2: return "almost hypercomplex";
  }
  return "unknown";
}

int pack_kind(const ManifoldSpec& s) { return static_cast<int>(s.pack.index()); }

std::string default_type(int kind) {
  return kind == 0 ? "kt" : kind == 1 ? "phikt" : "phkt";
}

std::string resolve_type(const Options& o, const ManifoldSpec& spec) {
  int kind = pack_kind(spec);
  if (o.type.empty()) return default_type(kind);
  int need = o.type == "kt" ? 0 : o.type == "phikt" ? 1 : o.type == "phkt" ? 2 : -1;
  if (need < 0)
    throw InputError("unknown connection type '" + o.type + "' (expected kt, phikt or phkt)");
  if (need != kind)
    throw InputError("connection type '" + o.type + "' requires a " + kind_label(need) +
                     " structure, but the spec carries a " + kind_label(kind) + " structure");
  return o.type;
}

ManifoldSpec load_spec(const Options& o) {
  ManifoldSpec spec = parse_spec(o.spec_path);
  for (const std::string& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("expected --param name=value, got '" + p + "'");
    std::string name = normalize_param_name(p.substr(0, eq));
    spec.bindings[name] = parse_rational(p.substr(eq + 1));
  }
  resolve_bindings(spec.frame, spec.bindings);  // reject unknown names early
  return spec;
}

int emit(const Report& rep, const Options& o) {
  std::string out = o.format == "machine" ? render_machine(rep) : render_text(rep);
  std::cout << out;
  if (out.empty() || out.back() != '\n') std::cout << "\n";
  return rep.any_failed() ? 1 : 0;
}

Report make_report(const Options& o, const std::string& command) {
  Report rep;
  rep.command = command;
  rep.version = kVersion;
  rep.seed = o.seed;
  return rep;
}

Scalar grad_norm(const LieFrame& f, const Connection& lc, const Tensor& op) {
  Tensor grad = covariant_derivative(lc, op);
  Tensor low = raise_lower(grad, 1, MusicalDir::Lower, f.metric);
  return square_norm(f.metric, low);
}

struct BuildOut {
  TorsionPack tp;
  std::optional<PhiKTBuild> phi;
  std::optional<PHKTBuild> hyper;
};

BuildOut build_connection(const ManifoldSpec& bound, const std::string& type) {
  BuildOut b;
  if (type == "kt") {
    b.tp = kt_build(bound.frame, std::get<NordenStructure>(bound.pack));
  } else if (type == "phikt") {
    b.phi = phikt_build(bound.frame, std::get<ContactBStructure>(bound.pack));
    b.tp = b.phi->pack;
  } else {
    b.hyper = phkt_build(bound.frame, std::get<HyperStructure>(bound.pack));
    b.tp = b.hyper->pack;
  }
  return b;
}

void add_frame_items(Report& rep, const ManifoldSpec& spec, const ManifoldSpec& bound) {
  auto& fr = rep.section("frame");
  fr.items.push_back({"dimension", ItemStatus::Info, std::to_string(bound.frame.n), ""});
  std::string pnames;
  for (const auto& nm : spec.frame.param_names) {
    if (!pnames.empty()) pnames += ", ";
    pnames += nm;
  }
  fr.items.push_back({"parameters", ItemStatus::Info, pnames.empty() ? "none" : pnames, ""});
  if (!spec.bindings.empty()) {
    std::string binds;
    for (const auto& [name, val] : spec.bindings) {
      if (!binds.empty()) binds += ", ";
      binds += name + "=" + to_string(val);
    }
    fr.items.push_back({"bindings", ItemStatus::Info, binds, ""});
  }
  if (auto v = antisymmetry_violation(bound.frame)) {
    fr.items.push_back({"bracket antisymmetry", ItemStatus::Failed, "violated",
                        "at " + idx_name("", *v)});
  } else {
    fr.items.push_back({"bracket antisymmetry", ItemStatus::Ok, "holds", ""});
  }
  if (auto jw = jacobi_witness(bound.frame)) {
    fr.items.push_back({"Jacobi identity", ItemStatus::Failed, "violated",
                        "(" + std::to_string(jw->i) + "," + std::to_string(jw->j) + "," +
                            std::to_string(jw->k) + " -> " + std::to_string(jw->m) +
                            "): residual " + jw->residual.str()});
  } else {
    fr.items.push_back({"Jacobi identity", ItemStatus::Ok, "holds", ""});
  }
  fr.items.push_back({"metric signature", ItemStatus::Info,
                      "(" + std::to_string(bound.frame.metric.plus) + "," +
                          std::to_string(bound.frame.metric.minus) + ")",
                      ""});
}

// Returns true when every structure axiom holds.
bool add_structure_items(Report& rep, const ManifoldSpec& bound) {
  auto& st = rep.section("structure");
  st.items.push_back({"kind", ItemStatus::Info, kind_label(pack_kind(bound)), ""});
  ValidationReport vr = validate_structure(bound.frame, bound.pack);
  for (const auto& it : vr.items)
    st.items.push_back({it.name, it.ok ? ItemStatus::Ok : ItemStatus::Failed,
                        it.ok ? "holds" : "violated", it.witness});
  return vr.pass();
}

void add_classification(Report& rep, const ManifoldSpec& bound, const Connection& lc) {
  auto& sec = rep.section("classification");
  ClassReport cls = classify(bound.frame, lc, bound.pack);
  for (const auto& [name, val] : cls.flags)
    sec.items.push_back({name, ItemStatus::Info, val ? "true" : "false", ""});
  int kind = pack_kind(bound);
  if (kind == 0 || kind == 1) {
    Tensor nij = nijenhuis(bound.frame, lc, bound.pack,
                           kind == 0 ? NijenhuisMode::Complex : NijenhuisMode::Contact);
    sec.items.push_back(
        {"Nijenhuis tensor", ItemStatus::Info, nij.is_zero() ? "zero" : "nonzero", ""});
  }
}

void add_connection_sections(Report& rep, const ManifoldSpec& bound, const Connection& lc,
                             const BuildOut& b) {
  const int n = bound.frame.n;
  auto& gs = rep.section("connection coefficients");
  b.tp.conn.gamma.for_each_index([&](const std::vector<int>& idx) {
    const Scalar& v = b.tp.conn.gamma.at(idx);
    if (!v.is_zero()) gs.items.push_back({idx_name("Gamma", idx), ItemStatus::Info, v.str(), ""});
  });
  if (gs.items.empty()) gs.items.push_back({"all coefficients", ItemStatus::Info, "0", ""});

  auto& ts = rep.section("torsion");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const Scalar& v = b.tp.t3.at({i, j, k});
        if (!v.is_zero()) ts.items.push_back({idx_name("T", {i, j, k}), ItemStatus::Info, v.str(), ""});
      }
  if (ts.items.empty()) ts.items.push_back({"all components", ItemStatus::Info, "0", ""});
  ts.items.push_back({"|T|^2", ItemStatus::Info,
                      square_norm(bound.frame.metric, b.tp.t3).str(), ""});

  auto& nat = rep.section("naturality");
  for (const auto& it : naturality_check(bound.frame, bound.pack, b.tp.conn))
    nat.items.push_back({it.name, it.ok ? ItemStatus::Ok : ItemStatus::Failed,
                         it.ok ? "holds" : "violated", it.witness});

  auto& an = rep.section("torsion analysis");
  TorsionFlags tf = torsion_analysis(bound.frame, lc, b.tp);
  auto flag = [&](const char* name, bool v) {
    an.items.push_back({name, ItemStatus::Info, v ? "true" : "false", ""});
  };
  flag("parallel (own connection)", tf.parallel_own);
  flag("parallel (Levi-Civita)", tf.parallel_lc);
  flag("closed (d T = 0)", tf.strong);
  flag("coclosed (delta T = 0)", tf.coclosed);
  flag("isotropic (|T|^2 = 0)", tf.isotropic);

  if (b.phi) {
    auto& cs = rep.section("construction");
    cs.items.push_back({"torsion route equals direct route", ItemStatus::Ok, "holds", ""});
    cs.items.push_back({"vertical-class closed form matches torsion", ItemStatus::Info,
                        b.phi->t_closed_form == b.tp.t3 ? "true" : "false", ""});
  }
  if (b.hyper) {
    auto& cs = rep.section("construction");
    cs.items.push_back({"D equals D1", ItemStatus::Ok, "holds", ""});
    cs.items.push_back({"auxiliary connections", ItemStatus::Info, "D2 and D3 computed", ""});
  }
}

void add_curvature_sections(Report& rep, const ManifoldSpec& bound, const Connection& lc,
                            const BuildOut& b) {
  CurvatureReport cr = connection_curvature(b.tp);
  auto& kc = rep.section("curvature");
  cr.r4.for_each_index([&](const std::vector<int>& idx) {
    const Scalar& v = cr.r4.at(idx);
    if (!v.is_zero()) kc.items.push_back({idx_name("K", idx), ItemStatus::Info, v.str(), ""});
  });
  if (kc.items.empty()) kc.items.push_back({"all components", ItemStatus::Info, "0", ""});

  auto& sy = rep.section("symmetry");
  for (const auto& [name, val] : cr.flags)
    sy.items.push_back({name, val ? ItemStatus::Ok : ItemStatus::Failed,
                        val ? "holds" : "violated", ""});

  auto& rc = rep.section("ricci");
  cr.ricci.for_each_index([&](const std::vector<int>& idx) {
    const Scalar& v = cr.ricci.at(idx);
    if (!v.is_zero()) rc.items.push_back({idx_name("rho", idx), ItemStatus::Info, v.str(), ""});
  });
  if (rc.items.empty()) rc.items.push_back({"all components", ItemStatus::Info, "0", ""});

  auto& sc = rep.section("scalars");
  RicciScalar rs = ricci_scalar(curvature(lc), bound.frame.metric);
  sc.items.push_back({"tau (connection)", ItemStatus::Info, cr.tau.str(), ""});
  sc.items.push_back({"tau (Levi-Civita)", ItemStatus::Info, rs.tau.str(), ""});
  sc.items.push_back({"|T|^2", ItemStatus::Info,
                      square_norm(bound.frame.metric, b.tp.t3).str(), ""});
  int kind = pack_kind(bound);
  if (kind == 0) {
    const auto& ns = std::get<NordenStructure>(bound.pack);
    sc.items.push_back({"|grad J|^2", ItemStatus::Info, grad_norm(bound.frame, lc, ns.J).str(), ""});
    sc.items.push_back({"Kaehler-type (J)", ItemStatus::Info,
                        kaehler_tensor_check(cr.r4, ns.J) ? "true" : "false", ""});
  } else if (kind == 1) {
    const auto& cs = std::get<ContactBStructure>(bound.pack);
    sc.items.push_back(
        {"|grad phi|^2", ItemStatus::Info, grad_norm(bound.frame, lc, cs.phi).str(), ""});
    sc.items.push_back({"Kaehler-type (phi)", ItemStatus::Info,
                        kaehler_tensor_check(cr.r4, cs.phi) ? "true" : "false", ""});
  } else {
    const auto& hs = std::get<HyperStructure>(bound.pack);
    for (int a = 0; a < 3; ++a)
      sc.items.push_back({"|grad J_" + std::to_string(a + 1) + "|^2", ItemStatus::Info,
                          grad_norm(bound.frame, lc, hs.J[a]).str(), ""});
    sc.items.push_back({"flat (K = 0)", ItemStatus::Info, cr.r4.is_zero() ? "true" : "false", ""});
  }
}

void add_verify_sections(Report& rep, const std::vector<VerificationResult>& results) {
  for (const auto& res : results) {
    auto& sec = rep.section(res.id);
    ItemStatus st = res.status == VerifyStatus::Failed  ? ItemStatus::Failed
                    : res.status == VerifyStatus::Vacuous ? ItemStatus::Info
                                                          : ItemStatus::Ok;
    sec.items.push_back({"status", st, verify_status_name(res.status), res.witness});
    sec.items.push_back({"claim", ItemStatus::Info, res.claim, ""});
    if (!res.detail.empty()) sec.items.push_back({"detail", ItemStatus::Info, res.detail, ""});
    sec.items.push_back({"time", ItemStatus::Info, std::to_string(res.micros) + " us", ""});
  }
}

int cmd_check(const Options& o) {
  ManifoldSpec spec = load_spec(o);
  ManifoldSpec bound = bind_params(spec, {});
  Report rep = make_report(o, "check");
  add_frame_items(rep, spec, bound);
  add_structure_items(rep, bound);
  return emit(rep, o);
}

int cmd_classify(const Options& o) {
  ManifoldSpec spec = load_spec(o);
  ManifoldSpec bound = bind_params(spec, {});
  Connection lc = levi_civita(bound.frame);
  Report rep = make_report(o, "classify");
  add_classification(rep, bound, lc);
  return emit(rep, o);
}

int cmd_connection(const Options& o) {
  ManifoldSpec spec = load_spec(o);
  std::string type = resolve_type(o, spec);
  ManifoldSpec bound = bind_params(spec, {});
  Connection lc = levi_civita(bound.frame);
  BuildOut b = build_connection(bound, type);
  Report rep = make_report(o, "connection");
  add_connection_sections(rep, bound, lc, b);
  return emit(rep, o);
}

int cmd_curvature(const Options& o) {
  ManifoldSpec spec = load_spec(o);
  std::string type = resolve_type(o, spec);
  ManifoldSpec bound = bind_params(spec, {});
  Connection lc = levi_civita(bound.frame);
  BuildOut b = build_connection(bound, type);
  Report rep = make_report(o, "curvature");
  add_curvature_sections(rep, bound, lc, b);
  return emit(rep, o);
}

int cmd_verify(const Options& o) {
  if (o.all && !o.id.empty()) throw InputError("--id and --all are mutually exclusive");
  if (!o.all && o.id.empty()) throw InputError("verify requires --id <registry-id> or --all");
  ManifoldSpec spec = load_spec(o);
  auto results = verify(spec, o.all ? "all" : o.id, o.seed);
  Report rep = make_report(o, "verify");
  add_verify_sections(rep, results);
  return emit(rep, o);
}

int cmd_eval(const Options& o) {
  ManifoldSpec spec = load_spec(o);
  auto resolved = resolve_bindings(spec.frame, spec.bindings);
  for (std::size_t i = 0; i < spec.frame.param_ids.size(); ++i)
    if (!resolved.count(spec.frame.param_ids[i]))
      throw InputError("eval requires a fully bound point; parameter '" +
                       spec.frame.param_names[i] + "' is unbound");
  std::string type = resolve_type(o, spec);
  ManifoldSpec bound = bind_params(spec, {});
  Report rep = make_report(o, "eval");
  add_frame_items(rep, spec, bound);
  bool structure_ok = add_structure_items(rep, bound);
  if (rep.any_failed() || !structure_ok) return emit(rep, o);
  Connection lc = levi_civita(bound.frame);
  add_classification(rep, bound, lc);
  BuildOut b = build_connection(bound, type);
  add_connection_sections(rep, bound, lc, b);
  add_curvature_sections(rep, bound, lc, b);
  add_verify_sections(rep, verify(spec, "all", o.seed));
  return emit(rep, o);
}

int run(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("SKEWTOR_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw InputError(std::string("invalid SKEWTOR_SEED value '") + env + "'");
    o.seed = v;
  }

  CLI::App app{"exact engine for metric connections with totally skew torsion on "
               "left-invariant Lie-group geometries"};
  app.require_subcommand(1);

  struct SubDef {
    const char* name;
    const char* desc;
    bool type_opt;
    bool verify_opts;
  };
  const SubDef defs[] = {
      {"check", "validate the frame and structure axioms of a spec", false, false},
      {"classify", "report class-membership flags of a spec", false, false},
      {"connection", "build the skew-torsion connection and report its data", true, false},
      {"curvature", "report curvature data of the skew-torsion connection", true, false},
      {"verify", "run entries of the verification registry", false, true},
      {"eval", "run the full pipeline at a fully bound parameter point", true, false},
  };
  for (const auto& d : defs) {
    CLI::App* s = app.add_subcommand(d.name, d.desc);
    s->add_option("spec", o.spec_path, "path to a .spec manifold description")->required();
    s->add_option("--param", o.params, "bind a parameter, name=rational (repeatable)");
    s->add_option("--format", o.format, "output format: text or machine");
    s->add_option("--seed", o.seed, "seed for sampled rational points");
    if (d.type_opt) s->add_option("--type", o.type, "connection type: kt, phikt or phkt");
    if (d.verify_opts) {
      s->add_option("--id", o.id, "registry id to verify");
      s->add_flag("--all", o.all, "verify every registry entry");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (o.format != "text" && o.format != "machine")
    throw InputError("unknown format '" + o.format + "' (expected text or machine)");

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "check") return cmd_check(o);
  if (cmd == "classify") return cmd_classify(o);
  if (cmd == "connection") return cmd_connection(o);
  if (cmd == "curvature") return cmd_curvature(o);
  if (cmd == "verify") return cmd_verify(o);
  return cmd_eval(o);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const skewtor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
