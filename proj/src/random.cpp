#include "starq/random.hpp"

#include <algorithm>

namespace starq {

Rational random_rational(Rng& rng, long magnitude, long den_max, bool allow_zero) {
  long num = rng.range(-magnitude, magnitude);
  if (!allow_zero && num == 0) num = 1;
  long den = rng.range(1, den_max);
  return Rational(num, den);
}

namespace {

std::vector<std::uint32_t> pick_indices(Rng& rng, std::uint32_t max_index, int count) {
  std::vector<std::uint32_t> pool(max_index);
  for (std::uint32_t i = 0; i < max_index; ++i) pool[i] = i + 1;
  for (std::size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[rng.below(i)]);
  pool.resize(std::min<std::size_t>(pool.size(), static_cast<std::size_t>(count)));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

PolyFunctional random_poly(Rng& rng, const SampleSpec& spec) {
  std::vector<BasisSlot> slots;
  for (std::uint32_t i : pick_indices(rng, spec.max_index, spec.vars_per_leg))
    slots.push_back(slot_x(i));
  for (std::uint32_t i : pick_indices(rng, spec.max_index, spec.vars_per_leg))
    slots.push_back(slot_eta(i));

  PolyFunctional out;
  int nterms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.max_terms)));
  for (int t = 0; t < nterms; ++t) {
    MultiIndex mono;
    int degree = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.max_degree) + 1));
    for (int d = 0; d < degree; ++d) mono = mono.raised(slots[rng.below(slots.size())]);
    out += PolyFunctional::monomial(mono,
                                    random_rational(rng, spec.coeff_magnitude,
                                                    spec.coeff_den_max, false));
  }
  out.raise_truncation(spec.max_index);
  return out;
}

SparseVec random_sparse_vec(Rng& rng, std::uint32_t max_index, long magnitude, long den_max) {
  SparseVec out;
  for (std::uint32_t i = 1; i <= max_index; ++i) {
    if (rng.coin()) {
      Rational c = random_rational(rng, magnitude, den_max, false);
      out[i] = c;
    }
  }
  return out;
}

Point random_point(Rng& rng, std::uint32_t max_index) {
  return Point{random_sparse_vec(rng, max_index, 9, 4), random_sparse_vec(rng, max_index, 9, 4)};
}

OperatorKernel random_finite_kernel(Rng& rng, std::uint32_t n, long magnitude, long den_max) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& row : rows)
    for (auto& e : row) e = random_rational(rng, magnitude, den_max, true);
  return OperatorKernel::finite(std::move(rows));
}

ExpFunctional random_symbol(Rng& rng, std::uint32_t max_index, int order) {
  return ExpFunctional::phi(random_sparse_vec(rng, max_index, 4, 3),
                            random_sparse_vec(rng, max_index, 4, 3),
                            HbarSeries::constant(Rational(1), order));
}

}  // namespace starq
