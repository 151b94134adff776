#include <doctest.h>

#include "starq/random.hpp"
#include "starq/symbol.hpp"

using namespace starq;

namespace {

SparseVec e(std::uint32_t i) { return SparseVec{{i, Rational(1)}}; }

ExpFunctional unit_phi(SparseVec y, SparseVec xi, int order) {
  return ExpFunctional::phi(std::move(y), std::move(xi), HbarSeries::constant(Rational(1), order));
}

}  // namespace

TEST_CASE("the unit symbol is neutral for every kernel") {
  Rng rng(31);
  std::vector<OperatorKernel> kernels{OperatorKernel::zero(), OperatorKernel::identity(),
                                      random_finite_kernel(rng, 3, 5, 3)};
  for (const auto& a : kernels) {
    ExpFunctional phi = unit_phi(e(1), e(2), 3);
    CHECK(symbol_star(a, phi, ExpFunctional::unit(3), 3) == phi);
    CHECK(symbol_star(a, ExpFunctional::unit(3), phi, 3) == phi);
  }
}

TEST_CASE("zero-kernel product of dual exponentials picks up exp(hbar)") {
  // Phi_{0,e1*} * Phi_{e1,0} -> exp(hbar) Phi_{e1,e1*}
  ExpFunctional lhs = unit_phi({}, e(1), 3);
  ExpFunctional rhs = unit_phi(e(1), {}, 3);
  ExpFunctional prod = symbol_star(OperatorKernel::zero(), lhs, rhs, 3);

  ExpFunctional expect = ExpFunctional::phi(e(1), e(1), HbarSeries::exp(Rational(1), 3));
  CHECK(prod == expect);
}

TEST_CASE("identity-kernel product in normal order has no prefactor") {
  // Phi_{e1,0} * Phi_{0,e1*} with A = I: both pairings vanish
  ExpFunctional lhs = unit_phi(e(1), {}, 3);
  ExpFunctional rhs = unit_phi({}, e(1), 3);
  ExpFunctional prod = symbol_star(OperatorKernel::identity(), lhs, rhs, 3);
  CHECK(prod == unit_phi(e(1), e(1), 3));
}

TEST_CASE("symbol associativity at every truncation order") {
  Rng rng(32);
  std::vector<OperatorKernel> kernels{OperatorKernel::zero(), OperatorKernel::identity(),
                                      random_finite_kernel(rng, 4, 5, 3),
                                      OperatorKernel::diag_power(Rational(-1))};
  for (const auto& a : kernels) {
    for (int order = 0; order <= 4; ++order) {
      ExpFunctional e1 = random_symbol(rng, 4, order);
      ExpFunctional e2 = random_symbol(rng, 4, order);
      ExpFunctional e3 = random_symbol(rng, 4, order);
      CHECK(symbol_star(a, symbol_star(a, e1, e2, order), e3, order) ==
            symbol_star(a, e1, symbol_star(a, e2, e3, order), order));
    }
  }
}

TEST_CASE("equivalence transform on symbols: frozen examples") {
  OperatorKernel id = OperatorKernel::identity();
  OperatorKernel zero = OperatorKernel::zero();

  ExpFunctional phi = unit_phi(e(1), e(1), 3);
  CHECK(symbol_equiv_transform(id, id, phi, 3) == phi);  // A = B fixes everything

  // A = I, B = 0 on Phi_{e1,e1*}: coefficient exp(-hbar)
  ExpFunctional moved = symbol_equiv_transform(id, zero, phi, 3);
  CHECK(moved == ExpFunctional::phi(e(1), e(1), HbarSeries::exp(Rational(-1), 3)));

  // y = 0 kills the pairing
  ExpFunctional eta_only = unit_phi({}, e(2), 3);
  CHECK(symbol_equiv_transform(id, zero, eta_only, 3) == eta_only);
}

TEST_CASE("intertwining holds on symbols for arbitrary kernel pairs") {
  Rng rng(33);
  std::vector<std::pair<OperatorKernel, OperatorKernel>> pairs{
      {OperatorKernel::identity(), OperatorKernel::zero()},  // not HS: formal identity still holds
      {OperatorKernel::diag_power(Rational(-1)), OperatorKernel::zero()},
      {random_finite_kernel(rng, 3, 5, 3), OperatorKernel::identity()}};
  for (const auto& [a, b] : pairs) {
    for (int t = 0; t < 8; ++t) {
      int order = 3;
      ExpFunctional e1 = random_symbol(rng, 4, order);
      ExpFunctional e2 = random_symbol(rng, 4, order);
      ExpFunctional lhs = symbol_equiv_transform(a, b, symbol_star(a, e1, e2, order), order);
      ExpFunctional rhs = symbol_star(b, symbol_equiv_transform(a, b, e1, order),
                                      symbol_equiv_transform(a, b, e2, order), order);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("taylor truncation of exponentials") {
  CHECK(exp_truncate_to_poly(ExpFunctional::unit(2), 4)[0] == PolyFunctional(Rational(1)));

  // Phi_{e1,0} to degree 2: 1 + eta1 + eta1^2/2
  HbarPoly p = exp_truncate_to_poly(unit_phi(e(1), {}, 2), 2);
  PolyFunctional expect = PolyFunctional(Rational(1)) + PolyFunctional::eta(1) +
                          (PolyFunctional::eta(1) * PolyFunctional::eta(1)).scaled(Rational(1, 2));
  CHECK(p[0] == expect);
  CHECK(p[1].is_zero());

  // linearity over term lists
  ExpFunctional two_terms = unit_phi(e(1), {}, 2) + unit_phi({}, e(2), 2);
  HbarPoly q = exp_truncate_to_poly(two_terms, 2);
  HbarPoly q1 = exp_truncate_to_poly(unit_phi(e(1), {}, 2), 2);
  HbarPoly q2 = exp_truncate_to_poly(unit_phi({}, e(2), 2), 2);
  CHECK(q == q1 + q2);
}

TEST_CASE("symbol engine agrees with the contraction engine through the bridge") {
  Rng rng(34);
  std::vector<OperatorKernel> kernels{OperatorKernel::zero(), OperatorKernel::identity(),
                                      random_finite_kernel(rng, 3, 3, 2)};
  const int order = 3;
  const std::uint32_t degree = 3;
  for (const auto& a : kernels) {
    for (int t = 0; t < 3; ++t) {
      ExpFunctional e1 = random_symbol(rng, 3, order);
      ExpFunctional e2 = random_symbol(rng, 3, order);
      HbarPoly lhs1 = exp_truncate_to_poly(e1, degree + order);
      HbarPoly lhs2 = exp_truncate_to_poly(e2, degree + order);
      HbarPoly symbol_side = exp_truncate_to_poly(symbol_star(a, e1, e2, order), degree);
      HbarPoly poly_side =
          truncate_degree(star(StarFamily::of_kernel(a), lhs1, lhs2, order), degree);
      HbarPoly capped_side = star_degree_capped(StarFamily::of_kernel(a), lhs1, lhs2, order, degree);
      CHECK(symbol_side == poly_side);
      CHECK(capped_side == poly_side);
    }
  }
}

TEST_CASE("zero-kernel symbol commutator at first order matches the poisson pairing") {
  Rng rng(35);
  for (int t = 0; t < 12; ++t) {
    ExpFunctional e1 = random_symbol(rng, 4, 2);
    ExpFunctional e2 = random_symbol(rng, 4, 2);
    const auto& [y1, xi1] = e1.terms().begin()->first;
    const auto& [y2, xi2] = e2.terms().begin()->first;
    Rational s = sparse_dot(xi1, y2) - sparse_dot(xi2, y1);

    ExpFunctional forward = symbol_star(OperatorKernel::zero(), e1, e2, 2);
    ExpFunctional backward = symbol_star(OperatorKernel::zero(), e2, e1, 2);

    // each prefactor alone carries +/- s at order hbar
    CHECK(forward.terms().begin()->second[1] == s);
    CHECK(backward.terms().begin()->second[1] == -s);

    // and the commutator at order hbar is 2{.,.} on the shifted exponential
    ExpFunctional diff = forward - backward;
    if (s.is_zero()) {
      CHECK(diff.is_zero());
    } else {
      CHECK(diff.terms().begin()->second[1] == s * Rational(2));
    }
  }
}
