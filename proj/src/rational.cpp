#include "skewtor/rational.hpp"

#include "skewtor/error.hpp"

#include <cctype>

namespace skewtor {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { throw InputError("malformed rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  auto read_int = [&]() -> BigInt {
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad();
    BigInt v(std::string(text.substr(start, pos - start)));
    return neg ? BigInt(-v) : v;
  };
  BigInt num = read_int();
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int();
    if (den == 0) throw InputError("zero denominator in rational '" + std::string(text) + "'");
  }
  if (pos != text.size()) bad();
  return Rational(num, den);
}

}  // namespace skewtor
