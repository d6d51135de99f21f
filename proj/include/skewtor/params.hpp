#pragma once

#include <optional>
#include <string>
#include <vector>

namespace skewtor {

// Process-global registry of polynomial parameter names.  Parameters are
// identified by small integer ids in declaration order; the monomial order of
// Scalar (graded lex) uses this declaration order.  Thread-safe.
class ParamRegistry {
 public:
  // Returns the id of `name`, declaring it if new.  Names are stored in
  // canonical ASCII form (see normalize_param_name).
  static int declare(const std::string& name);

  // Returns the id of `name` if declared.
  static std::optional<int> lookup(const std::string& name);

  static const std::string& name(int id);
  static int count();
};

// Canonical ASCII spelling of a parameter name: Greek letters lambda/mu map to
// "l"/"m" and Unicode subscript digits map to plain digits, so that e.g.
// "λ₁" -> "l1" and "μ₂" -> "m2".  ASCII names pass through unchanged.
std::string normalize_param_name(const std::string& raw);

}  // namespace skewtor
