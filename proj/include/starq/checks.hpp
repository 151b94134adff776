#pragma once

#include <cstdint>
#include <string>

#include "starq/hochschild.hpp"
#include "starq/random.hpp"
#include "starq/star.hpp"

namespace starq {

/// Result of a seeded randomized identity suite. Every identity is checked by
/// exact rational equality; a single failure means an engine bug, not noise.
struct SuiteOutcome {
  int trials = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void record(bool pass, const std::string& what) {
    ++trials;
    if (!pass) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

/// (F*G)*H = F*(G*H), exact per hbar coefficient.
SuiteOutcome check_assoc(const StarFamily& fam, int trials, std::uint64_t seed, int order,
                         const SampleSpec& spec = {});

/// C1(F,G) - C1(G,F) = 2{F,G} for the family's first cochain.
SuiteOutcome check_c1_skew(const OperatorKernel& a, int trials, std::uint64_t seed,
                           const SampleSpec& spec = {});

/// delta E_A = 0 on random triples.
SuiteOutcome check_cocycle(const OperatorKernel& a, int trials, std::uint64_t seed,
                           const SampleSpec& spec = {});

/// delta T_S = E_S on random pairs for a fixed Hilbert-Schmidt S
/// (throws NonHSKernelError otherwise).
SuiteOutcome check_coboundary(const OperatorKernel& s, int trials, std::uint64_t seed,
                              const SampleSpec& spec = {});

/// delta T_S = E_S with a fresh random finite S per trial.
SuiteOutcome check_coboundary_random(int trials, std::uint64_t seed, std::uint32_t n,
                                     const SampleSpec& spec = {});

/// delta(delta C) = 0 for cochains built over the given kernel.
SuiteOutcome check_delta_squared(const OperatorKernel& a, int trials, std::uint64_t seed,
                                 const SampleSpec& spec = {});

/// Product of exponentials against the independently computed prefactor
/// exp-series (entrywise pairing sums, no apply() shortcut).
SuiteOutcome check_symbol_prefactor_law(const OperatorKernel& a, int trials, std::uint64_t seed,
                                        int order, std::uint32_t max_index);

/// Cross-check of the symbol engine against the polynomial contraction
/// engine through Taylor truncation: factors are expanded to degree d+K
/// before starring, both sides compared after cutting back to degree d.
SuiteOutcome check_symbol_bridge(const OperatorKernel& a, int trials, std::uint64_t seed,
                                 int order, std::uint32_t degree, std::uint32_t max_index);

/// T(F *_A G) = T(F) *_B T(G) on polynomials, exact to the given order.
SuiteOutcome check_equiv_intertwine_poly(const OperatorKernel& a, const OperatorKernel& b,
                                         int trials, std::uint64_t seed, int order,
                                         const SampleSpec& spec = {});

/// Same identity at the symbol level (holds formally for any kernel pair).
SuiteOutcome check_equiv_intertwine_symbol(const OperatorKernel& a, const OperatorKernel& b,
                                           int trials, std::uint64_t seed, int order,
                                           std::uint32_t max_index);

}  // namespace starq
