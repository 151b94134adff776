#include "starq/checks.hpp"

#include <array>
#include <vector>

namespace starq {

namespace {

std::string trial_tag(const char* what, int t) { return std::string(what) + " (trial " + std::to_string(t) + ")"; }

}  // namespace

SuiteOutcome check_assoc(const StarFamily& fam, int trials, std::uint64_t seed, int order,
                         const SampleSpec& spec) {
  SuiteOutcome out;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    PolyFunctional f = random_poly(rng, spec);
    PolyFunctional g = random_poly(rng, spec);
    PolyFunctional h = random_poly(rng, spec);
    HbarPoly lhs = star(fam, star(fam, f, g, order), HbarPoly::from_poly(h, order), order);
    HbarPoly rhs = star(fam, HbarPoly::from_poly(f, order), star(fam, g, h, order), order);
    out.record((lhs - rhs).is_zero(), trial_tag("associativity residual nonzero", t));
  }
  return out;
}

SuiteOutcome check_c1_skew(const OperatorKernel& a, int trials, std::uint64_t seed,
                           const SampleSpec& spec) {
  SuiteOutcome out;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    PolyFunctional f = random_poly(rng, spec);
    PolyFunctional g = random_poly(rng, spec);
    PolyFunctional residual =
        star_cochain(a, f, g, 1) - star_cochain(a, g, f, 1) - poisson(f, g).scaled(Rational(2));
    out.record(residual.is_zero(), trial_tag("C1 antisymmetrization != 2{F,G}", t));
  }
  return out;
}

SuiteOutcome check_cocycle(const OperatorKernel& a, int trials, std::uint64_t seed,
                           const SampleSpec& spec) {
  SuiteOutcome out;
  Rng rng(seed);
  Cochain ea = Cochain::ea(a);
  for (int t = 0; t < trials; ++t) {
    std::array<PolyFunctional, 3> args{random_poly(rng, spec), random_poly(rng, spec),
                                       random_poly(rng, spec)};
    out.record(hochschild_delta(ea, args).is_zero(), trial_tag("delta E_A != 0", t));
  }
  return out;
}

SuiteOutcome check_coboundary(const OperatorKernel& s, int trials, std::uint64_t seed,
                              const SampleSpec& spec) {
  SuiteOutcome out;
  Rng rng(seed);
  Cochain ta = Cochain::ta(s);  // throws NonHSKernelError for inadmissible s
  for (int t = 0; t < trials; ++t) {
    std::array<PolyFunctional, 2> args{random_poly(rng, spec), random_poly(rng, spec)};
    PolyFunctional residual = hochschild_delta(ta, args) - ea_eval(s, args[0], args[1]);
    out.record(residual.is_zero(), trial_tag("delta T_S != E_S", t));
  }
  return out;
}

SuiteOutcome check_coboundary_random(int trials, std::uint64_t seed, std::uint32_t n,
                                     const SampleSpec& spec) {
  SuiteOutcome out;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    OperatorKernel s = random_finite_kernel(rng, n, 5, 3);
    Cochain ta = Cochain::ta(s);
    std::array<PolyFunctional, 2> args{random_poly(rng, spec), random_poly(rng, spec)};
    PolyFunctional residual = hochschild_delta(ta, args) - ea_eval(s, args[0], args[1]);
    out.record(residual.is_zero(), trial_tag("delta T_S != E_S (random finite S)", t));
  }
  return out;
}

SuiteOutcome check_delta_squared(const OperatorKernel& a, int trials, std::uint64_t seed,
                                 const SampleSpec& spec) {
  SuiteOutcome out;
  Rng rng(seed);
  std::vector<Cochain> cochains{
      Cochain::ea(a), Cochain::star_r(a, 2),
      Cochain::scaled_sum({{Rational(2), Cochain::ea(a)}, {Rational(-1, 3), Cochain::star_r(a, 1)}})};
  if (a.hs_classify().cls == HSClass::HilbertSchmidt) cochains.push_back(Cochain::ta(a));

  for (int t = 0; t < trials; ++t) {
    for (const Cochain& c : cochains) {
      Cochain dc = Cochain::delta_of(c);
      std::vector<PolyFunctional> args;
      for (int k = 0; k < dc.arity() + 1; ++k) args.push_back(random_poly(rng, spec));
      out.record(hochschild_delta(dc, args).is_zero(), trial_tag("delta^2 C != 0", t));
    }
  }
  return out;
}

namespace {

/// Entrywise pairing <xi, (A + sigma I) y> computed directly from matrix
/// entries; deliberately avoids OperatorKernel::apply.
Rational pairing_by_entries(const SparseVec& xi, const OperatorKernel& a, int sigma,
                            const SparseVec& y) {
  Rational acc;
  for (const auto& [i, xc] : xi)
    for (const auto& [j, yc] : y) {
      Rational m = a.entry(i, j);
      if (i == j) m += Rational(sigma);
      acc += xc * m * yc;
    }
  return acc;
}

}  // namespace

SuiteOutcome check_symbol_prefactor_law(const OperatorKernel& a, int trials, std::uint64_t seed,
                                        int order, std::uint32_t max_index) {
  SuiteOutcome out;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    ExpFunctional e1 = random_symbol(rng, max_index, order);
    ExpFunctional e2 = random_symbol(rng, max_index, order);
    const auto& [y1, xi1] = e1.terms().begin()->first;
    const auto& [y2, xi2] = e2.terms().begin()->first;

    Rational s = pairing_by_entries(xi1, a, 1, y2) + pairing_by_entries(xi2, a, -1, y1);
    ExpFunctional expected =
        ExpFunctional::phi(sparse_add(y1, y2), sparse_add(xi1, xi2), HbarSeries::exp(s, order));
    out.record(symbol_star(a, e1, e2, order) == expected,
               trial_tag("symbol product != prefactor law", t));
  }
  return out;
}

SuiteOutcome check_symbol_bridge(const OperatorKernel& a, int trials, std::uint64_t seed,
                                 int order, std::uint32_t degree, std::uint32_t max_index) {
  SuiteOutcome out;
  Rng rng(seed);
  const std::uint32_t lift = degree + static_cast<std::uint32_t>(order);
  for (int t = 0; t < trials; ++t) {
    ExpFunctional e1 = random_symbol(rng, max_index, order);
    ExpFunctional e2 = random_symbol(rng, max_index, order);
    HbarPoly symbol_side = exp_truncate_to_poly(symbol_star(a, e1, e2, order), degree);
    HbarPoly poly_side =
        star_degree_capped(StarFamily::of_kernel(a), exp_truncate_to_poly(e1, lift),
                           exp_truncate_to_poly(e2, lift), order, degree);
    out.record(symbol_side == poly_side, trial_tag("symbol engine != contraction engine", t));
  }
  return out;
}

SuiteOutcome check_equiv_intertwine_poly(const OperatorKernel& a, const OperatorKernel& b,
                                         int trials, std::uint64_t seed, int order,
                                         const SampleSpec& spec) {
  SuiteOutcome out;
  Rng rng(seed);
  StarFamily fam_a = StarFamily::of_kernel(a);
  StarFamily fam_b = StarFamily::of_kernel(b);
  for (int t = 0; t < trials; ++t) {
    PolyFunctional f = random_poly(rng, spec);
    PolyFunctional g = random_poly(rng, spec);
    HbarPoly lhs = equiv_transform_poly(a, b, star(fam_a, f, g, order), order);
    HbarPoly rhs = star(fam_b, equiv_transform_poly(a, b, HbarPoly::from_poly(f, order), order),
                        equiv_transform_poly(a, b, HbarPoly::from_poly(g, order), order), order);
    out.record((lhs - rhs).is_zero(), trial_tag("polynomial intertwining violated", t));
  }
  return out;
}

SuiteOutcome check_equiv_intertwine_symbol(const OperatorKernel& a, const OperatorKernel& b,
                                           int trials, std::uint64_t seed, int order,
                                           std::uint32_t max_index) {
  SuiteOutcome out;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    ExpFunctional e1 = random_symbol(rng, max_index, order);
    ExpFunctional e2 = random_symbol(rng, max_index, order);
    ExpFunctional lhs = symbol_equiv_transform(a, b, symbol_star(a, e1, e2, order), order);
    ExpFunctional rhs = symbol_star(b, symbol_equiv_transform(a, b, e1, order),
                                    symbol_equiv_transform(a, b, e2, order), order);
    out.record(lhs == rhs, trial_tag("symbol intertwining violated", t));
  }
  return out;
}

}  // namespace starq
