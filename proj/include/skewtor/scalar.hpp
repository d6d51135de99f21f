#pragma once

#include "skewtor/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skewtor {

// Monomial = exponent vector indexed by global parameter id, with trailing
// zeros trimmed (so the vector length equals 1 + highest id present).
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, ties broken lexicographically
// with earlier-declared parameters more significant.  Used descending so that
// iteration starts at the leading term.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial over Rational in the globally declared
// parameters.  Always held in normal form: no zero coefficients, unique
// monomials, deterministic term order.  Equality of Scalars is equality of
// normal forms.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const Rational& c);
  explicit Scalar(long c) : Scalar(Rational(c)) {}

  // The polynomial consisting of the single variable with the given id.
  static Scalar param(int id);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; throws if not constant.
  Rational constant_value() const;
  int degree() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator*=(const Rational& c);
  friend Scalar operator*(Scalar a, const Rational& c) { return a *= c; }
  friend Scalar operator*(const Rational& c, Scalar a) { return a *= c; }
  // Division by a nonzero rational constant (the only division the engine needs).
  Scalar& operator/=(const Rational& c);

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact value at a point.  `point[id]` binds the parameter with that global
  // id; every parameter occurring in the polynomial must be bound, otherwise an
  // InputError naming the unbound parameter is thrown.
  Rational eval(const std::map<int, Rational>& point) const;

  // Partial substitution: parameters present in `point` are replaced by their
  // rational values, others are left symbolic.
  Scalar substitute(const std::map<int, Rational>& point) const;

  // Renames parameters: each id present as a key is replaced by its mapped id;
  // other ids are kept.  The map must be injective on the ids that occur.
  Scalar rename_params(const std::map<int, int>& id_map) const;

  // Ids of the parameters occurring with nonzero exponent.
  std::vector<int> params_used() const;

  // Canonical human-readable form, e.g. "-8*m1^2 + 8*m2^2", "1/2*l1*l3", "0".
  std::string str() const;

  const std::map<Monomial, Rational, GradedLexDesc>& terms() const { return terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational, GradedLexDesc> terms_;
};

}  // namespace skewtor
