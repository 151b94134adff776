#include <doctest.h>

#include <array>

#include "starq/errors.hpp"
#include "starq/hochschild.hpp"
#include "starq/random.hpp"
#include "starq/symbol.hpp"

using namespace starq;

namespace {

PolyFunctional x(std::uint32_t i) { return PolyFunctional::x(i); }
PolyFunctional eta(std::uint32_t i) { return PolyFunctional::eta(i); }

}  // namespace

TEST_CASE("E_A frozen examples") {
  // E_I(x1, eta1): only the first symmetric term survives (D1 eta1 = 0)
  CHECK(ea_eval(OperatorKernel::identity(), x(1), eta(1)) == PolyFunctional(Rational(1)));

  Rng rng(41);
  CHECK(ea_eval(OperatorKernel::identity(), random_poly(rng), PolyFunctional(Rational(3)))
            .is_zero());

  OperatorKernel shift =
      OperatorKernel::finite({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}});
  CHECK(ea_eval(shift, x(1), eta(2)) == PolyFunctional(Rational(1)));  // A_12 = 1
}

TEST_CASE("E_A is symmetric") {
  Rng rng(42);
  std::vector<OperatorKernel> kernels{OperatorKernel::identity(),
                                      random_finite_kernel(rng, 3, 5, 3),
                                      OperatorKernel::diag_power(Rational(-1))};
  for (const auto& a : kernels)
    for (int t = 0; t < 10; ++t) {
      PolyFunctional f = random_poly(rng), g = random_poly(rng);
      CHECK(ea_eval(a, f, g) == ea_eval(a, g, f));
    }
}

TEST_CASE("first star cochain decomposes as poisson plus E_A") {
  Rng rng(43);
  std::vector<OperatorKernel> kernels{OperatorKernel::zero(), OperatorKernel::identity(),
                                      random_finite_kernel(rng, 3, 5, 3),
                                      OperatorKernel::diag_geometric(Rational(1, 2))};
  for (const auto& a : kernels)
    for (int t = 0; t < 10; ++t) {
      PolyFunctional f = random_poly(rng), g = random_poly(rng);
      CHECK(star_cochain(a, f, g, 1) == poisson(f, g) + ea_eval(a, f, g));
    }
}

TEST_CASE("mixed-derivative Leibniz expansion") {
  Rng rng(44);
  for (int t = 0; t < 15; ++t) {
    PolyFunctional f = random_poly(rng), g = random_poly(rng);
    for (std::uint32_t i = 1; i <= 2; ++i)
      for (std::uint32_t j = 1; j <= 2; ++j) {
        PolyFunctional lhs = partial(partial(f * g, slot_x(i)), slot_eta(j));
        PolyFunctional rhs = f * partial(partial(g, slot_x(i)), slot_eta(j)) +
                             g * partial(partial(f, slot_x(i)), slot_eta(j)) +
                             partial(f, slot_x(i)) * partial(g, slot_eta(j)) +
                             partial(g, slot_x(i)) * partial(f, slot_eta(j));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("delta E_A vanishes: E_A is a 2-cocycle for every kernel") {
  Rng rng(45);
  std::vector<OperatorKernel> kernels{OperatorKernel::identity(),
                                      random_finite_kernel(rng, 3, 5, 3),
                                      OperatorKernel::diag_power(Rational(-1))};
  for (const auto& a : kernels) {
    Cochain ea = Cochain::ea(a);
    for (int t = 0; t < 10; ++t) {
      std::array<PolyFunctional, 3> args{random_poly(rng), random_poly(rng), random_poly(rng)};
      CHECK(hochschild_delta(ea, args).is_zero());
    }
  }
}

TEST_CASE("unit first argument telescopes to zero") {
  Rng rng(46);
  Cochain ea = Cochain::ea(OperatorKernel::identity());
  std::array<PolyFunctional, 3> args{PolyFunctional(Rational(1)), random_poly(rng),
                                     random_poly(rng)};
  CHECK(hochschild_delta(ea, args).is_zero());
}

TEST_CASE("delta T_S = E_S for Hilbert-Schmidt kernels") {
  Rng rng(47);
  for (int t = 0; t < 15; ++t) {
    OperatorKernel s = random_finite_kernel(rng, 3, 5, 3);
    Cochain ta = Cochain::ta(s);
    std::array<PolyFunctional, 2> args{random_poly(rng), random_poly(rng)};
    CHECK(hochschild_delta(ta, args) == ea_eval(s, args[0], args[1]));
  }
}

TEST_CASE("T_S frozen examples and admissibility") {
  OperatorKernel s = OperatorKernel::finite({{Rational(1)}});
  CHECK(ta_eval(s, x(1) * eta(1)) == PolyFunctional(Rational(-1)));
  CHECK(ta_eval(s, x(1) * x(1)).is_zero());
  CHECK_THROWS_AS(ta_eval(OperatorKernel::identity(), x(1) * eta(1)), NonHSKernelError);
  CHECK_THROWS_AS(Cochain::ta(OperatorKernel::identity()), NonHSKernelError);
  CHECK_THROWS_AS(Cochain::ta(OperatorKernel::diag_power(Rational(-1, 2))), NonHSKernelError);
}

TEST_CASE("delta squared vanishes on the implemented cochain variants") {
  Rng rng(48);
  OperatorKernel a = random_finite_kernel(rng, 3, 5, 3);
  std::vector<Cochain> cochains{
      Cochain::ea(a), Cochain::ta(a), Cochain::star_r(OperatorKernel::identity(), 2),
      Cochain::scaled_sum(
          {{Rational(2), Cochain::ea(a)}, {Rational(-1, 3), Cochain::star_r(a, 1)}})};
  for (const Cochain& c : cochains) {
    Cochain dc = Cochain::delta_of(c);
    for (int t = 0; t < 5; ++t) {
      std::vector<PolyFunctional> args;
      for (int k = 0; k < dc.arity() + 1; ++k) args.push_back(random_poly(rng));
      CHECK(hochschild_delta(dc, args).is_zero());
    }
  }
}

TEST_CASE("cochains vanish on constants in every argument slot") {
  Rng rng(49);
  OperatorKernel a = random_finite_kernel(rng, 2, 5, 3);
  std::vector<Cochain> cochains{Cochain::ea(a), Cochain::ta(a), Cochain::star_r(a, 2)};
  for (const Cochain& c : cochains) {
    for (int slot = 0; slot < c.arity(); ++slot) {
      std::vector<PolyFunctional> args;
      for (int k = 0; k < c.arity(); ++k) args.push_back(random_poly(rng));
      args[static_cast<std::size_t>(slot)] = PolyFunctional(Rational(7));
      CHECK(c.eval(args).is_zero());
    }
  }
}

TEST_CASE("arity mismatches are rejected") {
  Cochain ea = Cochain::ea(OperatorKernel::identity());
  std::array<PolyFunctional, 2> two{x(1), eta(1)};
  std::array<PolyFunctional, 4> four{x(1), eta(1), x(2), eta(2)};
  CHECK_THROWS_AS(hochschild_delta(ea, two), ArityError);
  CHECK_THROWS_AS(ea.eval(four), ArityError);
}

TEST_CASE("equivalence transform on polynomials: frozen examples") {
  OperatorKernel a = OperatorKernel::finite({{Rational(1)}});
  OperatorKernel zero = OperatorKernel::zero();

  // A = B fixes everything
  HbarPoly f = HbarPoly::from_poly(x(1) * eta(1), 2);
  CHECK(equiv_transform_poly(a, a, f, 2) == f);

  // T1(x1 eta1) = -1, so T(x1 eta1) = x1 eta1 - hbar at K = 1
  HbarPoly g = equiv_transform_poly(a, zero, HbarPoly::from_poly(x(1) * eta(1), 1), 1);
  CHECK(g[0] == x(1) * eta(1));
  CHECK(g[1] == PolyFunctional(Rational(-1)));

  // constants are fixed
  HbarPoly c = equiv_transform_poly(a, zero, HbarPoly::from_poly(PolyFunctional(Rational(1)), 2), 2);
  CHECK(c[0] == PolyFunctional(Rational(1)));
  CHECK(c[1].is_zero());

  CHECK_THROWS_AS(
      equiv_transform_poly(OperatorKernel::identity(), zero, HbarPoly::from_poly(x(1), 1), 1),
      NonHSKernelError);
}

TEST_CASE("polynomial intertwining for an HS kernel pair") {
  OperatorKernel a = OperatorKernel::diag_power(Rational(-1));
  OperatorKernel b = OperatorKernel::zero();
  StarFamily fam_a = StarFamily::of_kernel(a);
  StarFamily fam_b = StarFamily::of_kernel(b);
  Rng rng(50);
  for (int t = 0; t < 10; ++t) {
    PolyFunctional f = random_poly(rng), g = random_poly(rng);
    int order = 4;
    HbarPoly lhs = equiv_transform_poly(a, b, star(fam_a, f, g, order), order);
    HbarPoly rhs = star(fam_b, equiv_transform_poly(a, b, HbarPoly::from_poly(f, order), order),
                        equiv_transform_poly(a, b, HbarPoly::from_poly(g, order), order), order);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("polynomial transform agrees with the closed-form symbol transform") {
  // T1 is a second-order operator, so degree-d output terms at order K need
  // the exponential expanded to degree d + 2K before transforming.
  Rng rng(52);
  std::vector<std::pair<OperatorKernel, OperatorKernel>> pairs{
      {OperatorKernel::diag_power(Rational(-1)), OperatorKernel::zero()},
      {OperatorKernel::finite({{Rational(1), Rational(1, 2)}, {Rational(0), Rational(-2)}}),
       OperatorKernel::zero()},
      {OperatorKernel::diag_geometric(Rational(1, 2)), OperatorKernel::diag_power(Rational(-2))}};
  const int order = 3;
  const std::uint32_t degree = 3;
  for (const auto& [a, b] : pairs) {
    for (int t = 0; t < 5; ++t) {
      ExpFunctional e = random_symbol(rng, 3, order);
      HbarPoly poly_route = truncate_degree(
          equiv_transform_poly(a, b, exp_truncate_to_poly(e, degree + 2 * order), order), degree);
      HbarPoly symbol_route =
          exp_truncate_to_poly(symbol_equiv_transform(a, b, e, order), degree);
      CHECK(poly_route == symbol_route);
    }
  }
}

TEST_CASE("equivalence certificates") {
  EquivalenceVerdict moyal_vs_normal =
      equiv_certify(OperatorKernel::zero(), OperatorKernel::identity());
  CHECK(moyal_vs_normal.verdict == Equivalence::NotEquivalent);
  CHECK(moyal_vs_normal.difference_class.cls == HSClass::BoundedNotHS);

  EquivalenceVerdict hs_pair =
      equiv_certify(OperatorKernel::diag_power(Rational(-1)), OperatorKernel::zero());
  CHECK(hs_pair.verdict == Equivalence::Equivalent);

  Rng rng(51);
  OperatorKernel any = random_finite_kernel(rng, 3, 5, 3);
  EquivalenceVerdict self = equiv_certify(any, any);
  CHECK(self.verdict == Equivalence::Equivalent);
  CHECK(self.difference_class.cls == HSClass::HilbertSchmidt);
}
