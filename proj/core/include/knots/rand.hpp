#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "knots/errors.hpp"

namespace knots {

// Seeded RNG for reproducible fuzzing.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int uniform(int lo, int hi) {  // inclusive ends
    if (hi < lo) throw Error("rng: empty range");
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }

  bool coin() { return uniform(0, 1) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    if (v.empty()) throw Error("rng: pick from empty vector");
    return v[uniform(0, static_cast<int>(v.size()) - 1)];
  }
};

}  // namespace knots
