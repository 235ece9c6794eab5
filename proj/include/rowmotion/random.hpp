#pragma once

// Seeded random inputs. Draws go through a fixed rejection sampler on top of
// std::mt19937_64, so a seed yields the same values on every platform.

#include <cstdint>
#include <random>

#include "rowmotion/dynamics.hpp"
#include "rowmotion/matrix.hpp"

namespace rowmotion {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with p, q uniform in [1, bound].
  Rational positive_rational(long bound);

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with trial coordinates into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/// Labels p/q with p, q uniform in [1, bound].
Labeling random_labeling(const Rect& rect, std::uint64_t seed, long bound = 20);

/// A rational point of the chain polytope: nonnegative labels whose sum along
/// every maximal chain is at most 1.
Labeling random_chain_point(const Rect& rect, std::uint64_t seed, long bound = 20);

/// A rational point of the order polytope: labels in [0, 1], weakly
/// increasing along the order.
Labeling random_order_point(const Rect& rect, std::uint64_t seed, long bound = 20);

/// Square matrix with integer entries uniform in [lo, hi].
IntegerMatrix random_integer_matrix(int n, std::uint64_t seed, long lo = -9,
                                    long hi = 9);

}  // namespace rowmotion
