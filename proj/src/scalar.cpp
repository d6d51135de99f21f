#include "skewtor/scalar.hpp"

#include "skewtor/error.hpp"
#include "skewtor/params.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skewtor {

namespace {

std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Rational int_pow(const Rational& base, std::uint32_t e) {
  Rational acc(1);
  for (std::uint32_t k = 0; k < e; ++k) acc *= base;
  return acc;
}

}  // namespace

bool GradedLexDesc::operator()(const Monomial& a, const Monomial& b) const {
  // strict "greater-than" so the map iterates leading term first
  std::uint64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ea = i < a.size() ? a[i] : 0;
    std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

Scalar::Scalar(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Scalar Scalar::param(int id) {
  Scalar s;
  Monomial m(static_cast<std::size_t>(id) + 1, 0);
  m[static_cast<std::size_t>(id)] = 1;
  s.terms_.emplace(std::move(m), Rational(1));
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Scalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("Scalar is not constant: " + str());
  return terms_.begin()->second;
}

int Scalar::degree() const {
  if (terms_.empty()) return 0;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint32_t ea = i < ma.size() ? ma[i] : 0;
        std::uint32_t eb = i < mb.size() ? mb[i] : 0;
        m[i] = ea + eb;
      }
      trim(m);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Scalar& Scalar::operator/=(const Rational& c) {
  if (c == 0) throw Error("division of Scalar by zero");
  for (auto& [m, coeff] : terms_) coeff /= c;
  return *this;
}

Rational Scalar::eval(const std::map<int, Rational>& point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = point.find(static_cast<int>(i));
      if (it == point.end())
        throw InputError("unbound parameter '" + ParamRegistry::name(static_cast<int>(i)) +
                         "' in evaluation");
      term *= int_pow(it->second, m[i]);
    }
    total += term;
  }
  return total;
}

Scalar Scalar::substitute(const std::map<int, Rational>& point) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest(m);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 0) continue;
      auto it = point.find(static_cast<int>(i));
      if (it != point.end()) {
        coeff *= int_pow(it->second, rest[i]);
        rest[i] = 0;
      }
    }
    trim(rest);
    out.add_term(rest, coeff);
  }
  return out;
}

Scalar Scalar::rename_params(const std::map<int, int>& id_map) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = id_map.find(static_cast<int>(i));
      std::size_t target = static_cast<std::size_t>(it == id_map.end() ? static_cast<int>(i)
                                                                       : it->second);
      if (renamed.size() <= target) renamed.resize(target + 1, 0);
      renamed[target] += m[i];
    }
    trim(renamed);
    out.add_term(renamed, c);
  }
  return out;
}

std::vector<int> Scalar::params_used() const {
  std::vector<bool> seen;
  for (const auto& [m, c] : terms_) {
    if (m.size() > seen.size()) seen.resize(m.size(), false);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) seen[i] = true;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = !m.empty();
    if (!has_vars || a != 1) {
      os << to_string(a);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ParamRegistry::name(static_cast<int>(i));
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace skewtor
