#include "rowmotion/random.hpp"

#include <algorithm>
#include <limits>

#include "rowmotion/lgv.hpp"

namespace rowmotion {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<long>(draw % span);
}

Rational Rng::positive_rational(long bound) {
  if (bound < 1) throw DomainError("rational bound must be at least 1");
  const long p = uniform(1, bound);
  const long q = uniform(1, bound);
  return Rational(p, q);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  // splitmix64 steps over the coordinates
  std::uint64_t h = base;
  for (std::uint64_t v : {a, b, c}) {
    h += 0x9E3779B97F4A7C15ULL + v;
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ULL;
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBULL;
    h ^= h >> 31;
  }
  return h;
}

Labeling random_labeling(const Rect& rect, std::uint64_t seed, long bound) {
  Rng rng(seed);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(rect.size()));
  for (int n = 0; n < rect.size(); ++n) values.push_back(rng.positive_rational(bound));
  return Labeling(rect, std::move(values));
}

Labeling random_chain_point(const Rect& rect, std::uint64_t seed, long bound) {
  Rng rng(seed);
  std::vector<Rational> values;
  for (int n = 0; n < rect.size(); ++n) {
    values.push_back(Rational(rng.uniform(0, bound), bound));
  }
  Labeling x(rect, std::move(values));
  const Rational longest =
      chain_sum(x, rect.whole(), ToggleAlgebra::tropical());
  if (longest > Rational(1)) {
    Labeling scaled(rect);
    for (int n = 0; n < rect.size(); ++n) {
      const Cell c = rect.cell_at(n);
      scaled.set(c, x[c] / longest);
    }
    return scaled;
  }
  return x;
}

Labeling random_order_point(const Rect& rect, std::uint64_t seed, long bound) {
  return transfer_inverse(random_chain_point(rect, seed, bound),
                          ToggleAlgebra::tropical());
}

IntegerMatrix random_integer_matrix(int n, std::uint64_t seed, long lo, long hi) {
  Rng rng(seed);
  IntegerMatrix m(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) m(a, b) = rng.uniform(lo, hi);
  }
  return m;
}

}  // namespace rowmotion
