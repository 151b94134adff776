#pragma once

#include <cstdint>

#include "starq/functional.hpp"
#include "starq/kernel.hpp"
#include "starq/symbol.hpp"

namespace starq {

/// splitmix64 stream: fully specified, so seeded runs are reproducible on
/// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    s_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return below(2) == 1; }

 private:
  std::uint64_t s_;
};

/// Bounds for the randomized suites; the defaults match the seeded polynomial
/// pool used throughout the verification suites (at most 3 variables per leg,
/// total degree 3, basis indices up to 4, small rational coefficients).
struct SampleSpec {
  int vars_per_leg = 3;
  int max_degree = 3;
  std::uint32_t max_index = 4;
  int max_terms = 4;
  long coeff_magnitude = 9;
  long coeff_den_max = 4;
};

Rational random_rational(Rng& rng, long magnitude, long den_max, bool allow_zero);
PolyFunctional random_poly(Rng& rng, const SampleSpec& spec = {});
SparseVec random_sparse_vec(Rng& rng, std::uint32_t max_index, long magnitude, long den_max);
Point random_point(Rng& rng, std::uint32_t max_index);
OperatorKernel random_finite_kernel(Rng& rng, std::uint32_t n, long magnitude, long den_max);
/// Single exponential Phi_{y,xi} with unit coefficient at the given order.
ExpFunctional random_symbol(Rng& rng, std::uint32_t max_index, int order);

}  // namespace starq
