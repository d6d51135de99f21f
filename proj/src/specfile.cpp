#include "skewtor/specfile.hpp"

#include "skewtor/error.hpp"
#include "skewtor/params.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace skewtor {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct ParseContext {
  std::string origin;
  int line_no = 0;
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(origin + ":" + std::to_string(line_no) + ": " + msg);
  }
};

bool is_rational_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  bool digit = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit = true;
    } else if (s[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else {
      return false;
    }
  }
  return digit;
}

// Linear combination over the basis `prefix`1..`prefix`n: signed terms joined
// by + / -, each term a '*'-separated product of rational literals, declared
// parameter names (with optional ^power) and exactly one basis symbol.
std::vector<Scalar> parse_linear_combo(const ParseContext& ctx, const std::string& expr, int n,
                                       char prefix, bool allow_params,
                                       const std::vector<std::string>& param_names,
                                       const std::vector<int>& param_ids) {
  std::vector<Scalar> out(static_cast<std::size_t>(n));
  std::string compact;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) ctx.fail("empty expression");
  if (compact == "0") return out;

  std::vector<std::pair<int, std::string>> chunks;  // sign, body
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    char ch = compact[i];
    if ((ch == '+' || ch == '-') && i > 0 && !cur.empty()) {
      chunks.emplace_back(sign, cur);
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else if ((ch == '+' || ch == '-') && cur.empty()) {
      sign = (ch == '-') ? -sign : sign;
    } else {
      cur.push_back(ch);
    }
  }
  if (cur.empty()) ctx.fail("dangling sign in expression '" + expr + "'");
  chunks.emplace_back(sign, cur);

  for (const auto& [sgn, body] : chunks) {
    std::vector<std::string> factors;
    std::string f;
    for (char ch : body) {
      if (ch == '*') {
        if (f.empty()) ctx.fail("empty factor in term '" + body + "'");
        factors.push_back(f);
        f.clear();
      } else {
        f.push_back(ch);
      }
    }
    if (f.empty()) ctx.fail("empty factor in term '" + body + "'");
    factors.push_back(f);

    Scalar coeff{Rational(sgn)};
    int basis = 0;
    for (const auto& fac : factors) {
      if (fac.size() >= 2 && fac[0] == prefix &&
          std::isdigit(static_cast<unsigned char>(fac[1]))) {
        bool all_digits = true;
        for (std::size_t i = 1; i < fac.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(fac[i]))) all_digits = false;
        if (all_digits) {
          if (basis != 0) ctx.fail("more than one basis symbol in term '" + body + "'");
          basis = std::stoi(fac.substr(1));
          if (basis < 1 || basis > n)
            ctx.fail("basis index out of range in '" + fac + "' (dimension " +
                     std::to_string(n) + ")");
          continue;
        }
      }
      if (is_rational_literal(fac)) {
        coeff *= parse_rational(fac);
        continue;
      }
      std::string name = fac;
      std::uint32_t power = 1;
      if (auto caret = fac.find('^'); caret != std::string::npos) {
        name = fac.substr(0, caret);
        std::string exp = fac.substr(caret + 1);
        if (exp.empty()) ctx.fail("missing exponent in '" + fac + "'");
        for (char ch : exp)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            ctx.fail("invalid exponent in '" + fac + "'");
        power = static_cast<std::uint32_t>(std::stoul(exp));
      }
      if (!allow_params) ctx.fail("only rational coefficients are allowed here, got '" + fac + "'");
      std::string canon = normalize_param_name(name);
      int id = -1;
      for (std::size_t i = 0; i < param_names.size(); ++i)
        if (param_names[i] == canon) id = param_ids[i];
      if (id < 0) ctx.fail("undeclared parameter '" + name + "'");
      for (std::uint32_t p = 0; p < power; ++p) coeff *= Scalar::param(id);
    }
    if (basis == 0) ctx.fail("term '" + body + "' has no basis symbol " + prefix + "<k>");
    out[static_cast<std::size_t>(basis - 1)] += coeff;
  }
  return out;
}

// One canonical term string per monomial of the coefficient, with the basis
// symbol appended, e.g. "-l1*X1", "2*m1*X5", "1/2*l1*l3^2*X2".
void append_terms(std::ostringstream& os, bool& first, const Scalar& coeff,
                  const std::string& basis) {
  for (const auto& [mono, c] : coeff.terms()) {
    Rational a = c;
    std::string sign_str;
    if (first) {
      sign_str = a < 0 ? "-" : "";
    } else {
      sign_str = a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    first = false;
    os << sign_str;
    bool wrote = false;
    if (a != 1) {
      os << to_string(a);
      wrote = true;
    }
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (wrote) os << "*";
      os << ParamRegistry::name(static_cast<int>(i));
      if (mono[i] > 1) os << "^" << mono[i];
      wrote = true;
    }
    if (wrote) os << "*";
    os << basis;
  }
}

std::string combo_str(const std::vector<Scalar>& comps, char prefix) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < comps.size(); ++k)
    append_terms(os, first, comps[k], std::string(1, prefix) + std::to_string(k + 1));
  if (first) return "0";
  return os.str();
}

}  // namespace

ManifoldSpec parse_spec_text(const std::string& text, const std::string& origin) {
  ParseContext ctx{origin, 0};
  std::istringstream in(text);
  std::string line;

  std::string section;
  std::string name;
  int dim = 0;
  std::vector<std::string> param_names;
  std::vector<int> param_ids;
  std::map<std::string, Rational> bindings;
  // bracket statements as written: (i,j) -> components
  std::map<std::pair<int, int>, std::vector<Scalar>> stated;
  std::map<std::pair<int, int>, int> stated_line;
  std::vector<std::vector<Rational>> rows;
  std::vector<bool> row_seen;
  std::string kind;
  // structure statements, applied after dim is known
  std::map<std::string, std::map<int, std::vector<Scalar>>> columns;  // op -> col -> comps
  std::map<std::string, std::vector<Scalar>> vectors;                 // "xi", "eta"

  auto need_dim = [&]() {
    if (dim <= 0) ctx.fail("dim must be declared before this line");
  };

  while (std::getline(in, line)) {
    ++ctx.line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') ctx.fail("malformed section header '" + t + "'");
      section = t.substr(1, t.size() - 2);
      if (section != "params" && section != "algebra" && section != "metric" &&
          section != "structure")
        ctx.fail("unknown section [" + section + "]");
      continue;
    }
    auto eq = t.find('=');
    std::string lhs = eq == std::string::npos ? t : trim(t.substr(0, eq));
    std::string rhs = eq == std::string::npos ? "" : trim(t.substr(eq + 1));
    std::vector<std::string> lhs_toks = split_ws(lhs);
    if (lhs_toks.empty()) ctx.fail("malformed line");
    const std::string& key = lhs_toks[0];

    if (section.empty()) {
      if (key == "name" && eq != std::string::npos) {
        name = rhs;
      } else if (key == "dim" && eq != std::string::npos) {
        try {
          dim = std::stoi(rhs);
        } catch (const std::exception&) {
          ctx.fail("invalid dimension '" + rhs + "'");
        }
        if (dim < 1) ctx.fail("dimension must be positive");
        rows.assign(static_cast<std::size_t>(dim), {});
        row_seen.assign(static_cast<std::size_t>(dim), false);
      } else {
        ctx.fail("expected 'name =' or 'dim =' before the first section, got '" + key + "'");
      }
      continue;
    }

    if (section == "params") {
      if (key == "param" && lhs_toks.size() == 2 && eq == std::string::npos) {
        std::string canon = normalize_param_name(lhs_toks[1]);
        for (const auto& existing : param_names)
          if (existing == canon) ctx.fail("duplicate parameter '" + lhs_toks[1] + "'");
        param_names.push_back(canon);
        param_ids.push_back(ParamRegistry::declare(canon));
      } else if (key == "bind" && lhs_toks.size() == 2 && eq != std::string::npos) {
        std::string canon = normalize_param_name(lhs_toks[1]);
        bool known = false;
        for (const auto& existing : param_names) known = known || existing == canon;
        if (!known) ctx.fail("bind of undeclared parameter '" + lhs_toks[1] + "'");
        try {
          bindings[canon] = parse_rational(rhs);
        } catch (const InputError&) {
          ctx.fail("invalid rational '" + rhs + "'");
        }
      } else {
        ctx.fail("expected 'param <name>' or 'bind <name> = <rational>'");
      }
      continue;
    }

    if (section == "algebra") {
      need_dim();
      if (key != "bracket" || lhs_toks.size() != 3 || eq == std::string::npos)
        ctx.fail("expected 'bracket <i> <j> = <expr>'");
      int i = 0, j = 0;
      try {
        i = std::stoi(lhs_toks[1]);
        j = std::stoi(lhs_toks[2]);
      } catch (const std::exception&) {
        ctx.fail("invalid bracket indices");
      }
      if (i < 1 || i > dim || j < 1 || j > dim) ctx.fail("bracket index out of range");
      auto comps = parse_linear_combo(ctx, rhs, dim, 'X', true, param_names, param_ids);
      auto keypair = std::make_pair(i, j);
      if (stated.count(keypair)) ctx.fail("duplicate bracket statement for the same pair");
      stated_line[keypair] = ctx.line_no;
      stated.emplace(keypair, std::move(comps));
      continue;
    }

    if (section == "metric") {
      need_dim();
      if (key != "row" || lhs_toks.size() != 2 || eq == std::string::npos)
        ctx.fail("expected 'row <i> = <n rationals>'");
      int i = 0;
      try {
        i = std::stoi(lhs_toks[1]);
      } catch (const std::exception&) {
        ctx.fail("invalid row index");
      }
      if (i < 1 || i > dim) ctx.fail("row index out of range");
      auto vals = split_ws(rhs);
      if (static_cast<int>(vals.size()) != dim)
        ctx.fail("row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
      std::vector<Rational> row;
      for (const auto& v : vals) {
        try {
          row.push_back(parse_rational(v));
        } catch (const InputError&) {
          ctx.fail("invalid rational '" + v + "'");
        }
      }
      rows[static_cast<std::size_t>(i - 1)] = std::move(row);
      row_seen[static_cast<std::size_t>(i - 1)] = true;
      continue;
    }

    // [structure]
    need_dim();
    if (key == "kind" && eq != std::string::npos) {
      if (rhs != "norden" && rhs != "contactb" && rhs != "hyper")
        ctx.fail("unknown structure kind '" + rhs + "'");
      kind = rhs;
      continue;
    }
    if ((key == "J" || key == "phi" || key == "J1" || key == "J2" || key == "J3") &&
        lhs_toks.size() == 2 && eq != std::string::npos) {
      int j = 0;
      try {
        j = std::stoi(lhs_toks[1]);
      } catch (const std::exception&) {
        ctx.fail("invalid column index");
      }
      if (j < 1 || j > dim) ctx.fail("column index out of range");
      columns[key][j] = parse_linear_combo(ctx, rhs, dim, 'X', false, {}, {});
      continue;
    }
    if (key == "xi" && eq != std::string::npos) {
      vectors["xi"] = parse_linear_combo(ctx, rhs, dim, 'X', false, {}, {});
      continue;
    }
    if (key == "eta" && eq != std::string::npos) {
      vectors["eta"] = parse_linear_combo(ctx, rhs, dim, 'e', false, {}, {});
      continue;
    }
    ctx.fail("unexpected line in [structure]");
  }

  ctx.line_no = 0;  // errors below are file-level
  auto file_fail = [&](const std::string& msg) -> void { throw InputError(origin + ": " + msg); };
  if (dim <= 0) file_fail("missing 'dim ='");
  if (name.empty()) name = origin;
  if (kind.empty()) file_fail("missing 'kind =' in [structure]");
  for (int i = 1; i <= dim; ++i)
    if (!row_seen[static_cast<std::size_t>(i - 1)])
      file_fail("missing metric row " + std::to_string(i));

  LieFrame frame;
  frame.name = name;
  frame.n = dim;
  frame.param_names = param_names;
  frame.param_ids = param_ids;
  frame.c = Tensor(dim, {SlotKind::Contra, SlotKind::Cov, SlotKind::Cov});
  frame.metric = make_metric(rows);

  for (const auto& [pair, comps] : stated) {
    auto [i, j] = pair;
    auto mirror = stated.find(std::make_pair(j, i));
    if (i == j) {
      for (int k = 1; k <= dim; ++k)
        if (!comps[static_cast<std::size_t>(k - 1)].is_zero())
          throw ValidationError("antisymmetry violated at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
      continue;
    }
    if (mirror != stated.end() && i > j) continue;  // handled from the (i<j) side
    if (mirror != stated.end()) {
      for (int k = 1; k <= dim; ++k) {
        Scalar sum = comps[static_cast<std::size_t>(k - 1)] +
                     mirror->second[static_cast<std::size_t>(k - 1)];
        if (!sum.is_zero())
          throw ValidationError("antisymmetry violated at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
    for (int k = 1; k <= dim; ++k) {
      const Scalar& v = comps[static_cast<std::size_t>(k - 1)];
      frame.c.at({k, i, j}) = v;
      frame.c.at({k, j, i}) = -v;
    }
  }

  auto build_endo = [&](const std::string& opname) {
    Tensor op = Tensor::make(dim, 1, 1);
    auto it = columns.find(opname);
    if (it != columns.end())
      for (const auto& [j, comps] : it->second)
        for (int m = 1; m <= dim; ++m) op.at({m, j}) = comps[static_cast<std::size_t>(m - 1)];
    return op;
  };

  StructurePack pack{NordenStructure{}};
  if (kind == "norden") {
    pack = StructurePack{NordenStructure{build_endo("J")}};
  } else if (kind == "contactb") {
    ContactBStructure s;
    s.phi = build_endo("phi");
    s.xi = Tensor::make(dim, 1, 0);
    s.eta = Tensor::make(dim, 0, 1);
    if (auto it = vectors.find("xi"); it != vectors.end())
      for (int m = 1; m <= dim; ++m) s.xi.at({m}) = it->second[static_cast<std::size_t>(m - 1)];
    else
      file_fail("contactb structure requires 'xi ='");
    if (auto it = vectors.find("eta"); it != vectors.end())
      for (int m = 1; m <= dim; ++m) s.eta.at({m}) = it->second[static_cast<std::size_t>(m - 1)];
    else
      file_fail("contactb structure requires 'eta ='");
    pack = StructurePack{std::move(s)};
  } else {
    HyperStructure s;
    s.J[0] = build_endo("J1");
    s.J[1] = build_endo("J2");
    s.J[2] = build_endo("J3");
    pack = StructurePack{std::move(s)};
  }

  if (auto bad = antisymmetry_violation(frame))
    throw ValidationError("antisymmetry violated at (" + std::to_string((*bad)[0]) + "," +
                          std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");

  ManifoldSpec spec;
  spec.name = name;
  spec.frame = std::move(frame);
  spec.pack = std::move(pack);
  spec.bindings = std::move(bindings);
  return spec;
}

ManifoldSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path);
}

std::string serialize_spec(const ManifoldSpec& spec) {
  const LieFrame& f = spec.frame;
  std::ostringstream os;
  os << "name = " << spec.name << "\n";
  os << "dim = " << f.n << "\n\n";

  os << "[params]\n";
  for (const auto& p : f.param_names) os << "param " << p << "\n";
  for (const auto& [k, v] : spec.bindings) os << "bind " << k << " = " << to_string(v) << "\n";
  os << "\n[algebra]\n";
  for (int i = 1; i <= f.n; ++i)
    for (int j = i + 1; j <= f.n; ++j) {
      std::vector<Scalar> comps;
      bool nonzero = false;
      for (int k = 1; k <= f.n; ++k) {
        comps.push_back(f.c.at({k, i, j}));
        nonzero = nonzero || !comps.back().is_zero();
      }
      if (nonzero) os << "bracket " << i << " " << j << " = " << combo_str(comps, 'X') << "\n";
    }

  os << "\n[metric]\n";
  for (int i = 1; i <= f.n; ++i) {
    os << "row " << i << " =";
    for (int j = 1; j <= f.n; ++j)
      os << " "
         << to_string(f.metric.g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    os << "\n";
  }

  os << "\n[structure]\n";
  auto write_endo = [&](const std::string& opname, const Tensor& op) {
    for (int j = 1; j <= f.n; ++j) {
      std::vector<Scalar> comps;
      for (int m = 1; m <= f.n; ++m) comps.push_back(op.at({m, j}));
      os << opname << " " << j << " = " << combo_str(comps, 'X') << "\n";
    }
  };
  if (std::holds_alternative<NordenStructure>(spec.pack)) {
    os << "kind = norden\n";
    write_endo("J", std::get<NordenStructure>(spec.pack).J);
  } else if (std::holds_alternative<ContactBStructure>(spec.pack)) {
    const auto& s = std::get<ContactBStructure>(spec.pack);
    os << "kind = contactb\n";
    write_endo("phi", s.phi);
    std::vector<Scalar> xi, eta;
    for (int m = 1; m <= f.n; ++m) {
      xi.push_back(s.xi.at({m}));
      eta.push_back(s.eta.at({m}));
    }
    os << "xi = " << combo_str(xi, 'X') << "\n";
    os << "eta = " << combo_str(eta, 'e') << "\n";
  } else {
    const auto& s = std::get<HyperStructure>(spec.pack);
    os << "kind = hyper\n";
    write_endo("J1", s.J[0]);
    write_endo("J2", s.J[1]);
    write_endo("J3", s.J[2]);
  }
  return os.str();
}

void write_spec(const ManifoldSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write spec file '" + path + "'");
  out << serialize_spec(spec);
}

}  // namespace skewtor
