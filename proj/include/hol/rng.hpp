#pragma once

#include <cstdint>

#include "hol/rational.hpp"

namespace hol {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so a tensor entry depends only on its own index.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return mix(mix(mix(seed_) ^ stream_) + counter);
  }

  /// Uniform integer in [lo, hi] by rejection; `counter` advances past rejects.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi, std::uint64_t& counter) const {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    for (;;) {
      const std::uint64_t r = bits(counter++);
      if (r < limit) return lo + static_cast<std::int64_t>(r % span);
    }
  }

  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational uniform_rational(std::int64_t bound) const {
    std::uint64_t counter = 0;
    const std::int64_t p = uniform_int(-bound, bound, counter);
    const std::int64_t q = uniform_int(1, bound, counter);
    return make_rational(p, q);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

/// Seed for sample `index` of a run keyed by `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return CounterRng::mix(CounterRng::mix(seed) + 0x632be59bd9b4e019ULL * (index + 1));
}

}  // namespace hol
