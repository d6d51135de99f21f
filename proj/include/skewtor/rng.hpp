#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "skewtor/rational.hpp"

namespace skewtor {

inline constexpr std::uint64_t kDefaultSeed = 20250823;

// Deterministic sampler of small rationals: numerators in [-9, 9], denominators
// in [1, 9].  The reduction is done by explicit modulo so the stream depends
// only on the seed, not on library distribution internals.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

  Rational next() {
    long num = static_cast<long>(gen_() % 19u) - 9;
    long den = static_cast<long>(gen_() % 9u) + 1;
    return Rational(num) / Rational(den);
  }

  Rational next_nonzero() {
    for (;;) {
      Rational r = next();
      if (r != 0) return r;
    }
  }

  // One random value per parameter id, in the given order.
  std::map<int, Rational> point_for(const std::vector<int>& param_ids) {
    std::map<int, Rational> pt;
    for (int id : param_ids) pt[id] = next();
    return pt;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace skewtor
