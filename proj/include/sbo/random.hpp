#pragma once

#include "sbo/polynomial.hpp"

#include <random>

namespace sbo {

// Seeded rational sampler: numerators in [-bound, bound], denominators 1..97.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 12) : rng_(seed), bound_(bound) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-bound_, bound_);
    std::uniform_int_distribution<long> den(1, 97);
    return frac(num(rng_), den(rng_));
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  int bit() { return static_cast<int>(integer(0, 1)); }
  std::mt19937_64& engine() { return rng_; }

  // Independent values for the given variables.
  Assignment point(const std::set<int>& vars) {
    Assignment a;
    for (int v : vars) a[v] = next();
    return a;
  }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

}  // namespace sbo
