#include <doctest.h>

#include "starq/errors.hpp"
#include "starq/kernel.hpp"
#include "starq/random.hpp"

using namespace starq;

namespace {

SparseVec basis(std::uint32_t i) { return SparseVec{{i, Rational(1)}}; }

OperatorKernel shift_up() {
  return OperatorKernel::finite({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}});
}

}  // namespace

TEST_CASE("apply on the structured variants") {
  CHECK(OperatorKernel::identity().apply(basis(3)) == basis(3));
  CHECK(OperatorKernel::diag_power(Rational(-1)).apply(basis(2)) ==
        SparseVec{{2, Rational(1, 2)}});
  CHECK(shift_up().apply(basis(2)) == basis(1));
  CHECK(shift_up().apply(basis(1)).empty());
  CHECK(shift_up().apply(basis(5)).empty());  // outside the block
  CHECK(OperatorKernel::zero().apply(basis(1)).empty());
  CHECK(OperatorKernel::diag_geometric(Rational(1, 2)).apply(basis(3)) ==
        SparseVec{{3, Rational(1, 8)}});
}

TEST_CASE("apply rejects fractional power-law exponents") {
  OperatorKernel k = OperatorKernel::diag_power(Rational(-3, 4));
  CHECK_THROWS_AS(k.apply(basis(2)), InexactOperationError);
  CHECK_THROWS_AS(k.entry(2, 2), InexactOperationError);
  CHECK(k.hs_classify().cls == HSClass::HilbertSchmidt);  // classification stays symbolic: 2p < -1
}

TEST_CASE("kernel subtraction stays structured where possible") {
  CHECK(kernel_sub(OperatorKernel::identity(), OperatorKernel::identity()).kind() ==
        OperatorKernel::Kind::Zero);
  CHECK(kernel_sub(OperatorKernel::identity(), OperatorKernel::zero()).kind() ==
        OperatorKernel::Kind::Identity);
  CHECK(kernel_sub(OperatorKernel::diag_constant(Rational(1)), OperatorKernel::identity()).kind() ==
        OperatorKernel::Kind::Zero);
  CHECK(kernel_sub(OperatorKernel::diag_power(Rational(-1)),
                   OperatorKernel::diag_power(Rational(-1)))
            .kind() == OperatorKernel::Kind::Zero);
  OperatorKernel mixed =
      kernel_sub(OperatorKernel::diag_power(Rational(-1)), OperatorKernel::identity());
  CHECK(mixed.kind() == OperatorKernel::Kind::Diff);
  CHECK(mixed.entry(2, 2) == Rational(-1, 2));  // 1/2 - 1
  CHECK(mixed.apply(basis(2)) == SparseVec{{2, Rational(-1, 2)}});  // componentwise apply
  CHECK(mixed.apply(basis(1)).empty());                             // 1 - 1 cancels

  Rng rng(5);
  OperatorKernel f1 = random_finite_kernel(rng, 3, 9, 4);
  OperatorKernel f2 = random_finite_kernel(rng, 2, 9, 4);
  OperatorKernel d = kernel_sub(f1, f2);
  CHECK(d.kind() == OperatorKernel::Kind::Finite);
  CHECK(d.entry(3, 3) == f1.entry(3, 3));
}

TEST_CASE("hs classification of the single variants") {
  CHECK(OperatorKernel::identity().hs_classify().cls == HSClass::BoundedNotHS);
  CHECK(OperatorKernel::zero().hs_classify().cls == HSClass::HilbertSchmidt);
  CHECK(OperatorKernel::diag_power(Rational(-1)).hs_classify().cls == HSClass::HilbertSchmidt);

  HSClassification geo = OperatorKernel::diag_geometric(Rational(1, 2)).hs_classify();
  CHECK(geo.cls == HSClass::HilbertSchmidt);
  CHECK(geo.certificate.find("1/3") != std::string::npos);  // r^2/(1-r^2) closed form

  CHECK(OperatorKernel::diag_power(Rational(-1, 2)).hs_classify().cls == HSClass::BoundedNotHS);
  CHECK(OperatorKernel::diag_power(Rational(-3, 5)).hs_classify().cls == HSClass::HilbertSchmidt);
  CHECK(OperatorKernel::diag_power(Rational(1)).hs_classify().cls == HSClass::Unbounded);
  CHECK(OperatorKernel::diag_geometric(Rational(-1)).hs_classify().cls == HSClass::BoundedNotHS);
  CHECK(OperatorKernel::diag_geometric(Rational(2)).hs_classify().cls == HSClass::Unbounded);
  CHECK(OperatorKernel::diag_constant(Rational(3)).hs_classify().cls == HSClass::BoundedNotHS);
  CHECK(OperatorKernel::diag_constant(Rational(0)).hs_classify().cls == HSClass::HilbertSchmidt);

  Rng rng(6);
  CHECK(random_finite_kernel(rng, 4, 9, 4).hs_classify().cls == HSClass::HilbertSchmidt);
}

TEST_CASE("canonical folds of degenerate diagonal parameters") {
  CHECK(OperatorKernel::diag_power(Rational(0)) == OperatorKernel::diag_constant(Rational(1)));
  CHECK(OperatorKernel::diag_geometric(Rational(1)) == OperatorKernel::diag_constant(Rational(1)));
  CHECK(OperatorKernel::diag_geometric(Rational(0)).kind() == OperatorKernel::Kind::Zero);
}

TEST_CASE("formal differences classify through the ideal property") {
  OperatorKernel id = OperatorKernel::identity();
  OperatorKernel p1 = OperatorKernel::diag_power(Rational(-1));

  // (P(-1) - I) - (P(-1) - I) cancels completely
  OperatorKernel d1 = kernel_sub(kernel_sub(p1, id), kernel_sub(p1, id));
  CHECK(d1.hs_classify().cls == HSClass::HilbertSchmidt);

  // difference of two HS kernels is HS
  CHECK(kernel_sub(p1, OperatorKernel::diag_geometric(Rational(1, 2))).hs_classify().cls ==
        HSClass::HilbertSchmidt);

  // bounded-not-HS survives an HS perturbation
  CHECK(kernel_sub(OperatorKernel::diag_power(Rational(-1, 4)), id).hs_classify().cls ==
        HSClass::BoundedNotHS);
  Rng rng(7);
  CHECK(kernel_sub(id, random_finite_kernel(rng, 3, 9, 4)).hs_classify().cls ==
        HSClass::BoundedNotHS);

  // geometric ratios r and -r only cancel on even indices
  CHECK(kernel_sub(OperatorKernel::diag_geometric(Rational(2)),
                   OperatorKernel::diag_geometric(Rational(-2)))
            .hs_classify()
            .cls == HSClass::Unbounded);

  // unbounded minus bounded stays unbounded
  CHECK(kernel_sub(OperatorKernel::diag_power(Rational(2)), id).hs_classify().cls ==
        HSClass::Unbounded);
}

TEST_CASE("hs_classify(A - A) is Hilbert-Schmidt for every variant") {
  Rng rng(8);
  std::vector<OperatorKernel> kernels{
      OperatorKernel::zero(),           OperatorKernel::identity(),
      OperatorKernel::diag_power(Rational(-1)), OperatorKernel::diag_geometric(Rational(-2)),
      OperatorKernel::diag_constant(Rational(5, 3)), random_finite_kernel(rng, 3, 9, 4),
      kernel_sub(OperatorKernel::diag_power(Rational(-1)), OperatorKernel::identity())};
  for (const auto& k : kernels)
    CHECK(kernel_sub(k, k).hs_classify().cls == HSClass::HilbertSchmidt);
}

TEST_CASE("classification is invariant under zero padding of finite matrices") {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
    OperatorKernel base = random_finite_kernel(rng, n, 9, 4);
    std::vector<std::vector<Rational>> padded(n + 2, std::vector<Rational>(n + 2));
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) padded[i][j] = base.rows()[i][j];
    OperatorKernel wide = OperatorKernel::finite(padded);
    CHECK(base.hs_classify().cls == wide.hs_classify().cls);
    CHECK(kernel_sub(base, wide).hs_classify().cls == HSClass::HilbertSchmidt);
  }
}

TEST_CASE("partial sums of squared diagonal entries track the verdicts") {
  // apply-based brute force: lambda_i picked up by applying to basis vectors
  auto partial_sums_bounded = [](const OperatorKernel& k, std::uint32_t n_max,
                                 const Rational& bound) {
    Rational sum;
    Rational prev(-1);
    for (std::uint32_t i = 1; i <= n_max; ++i) {
      SparseVec img = k.apply(basis(i));
      Rational lam = img.count(i) ? img[i] : Rational(0);
      sum += lam * lam;
      if (sum < prev) return false;  // must be monotone
      prev = sum;
      if (!(sum <= bound)) return false;
    }
    return true;
  };

  // HS: sum_i 1/i^2 <= 2 - 1/N (telescoping majorant), checked to 10^4
  CHECK(partial_sums_bounded(OperatorKernel::diag_power(Rational(-1)), 10000, Rational(2)));

  // HS: geometric 1/2: closed form bound 1/3
  CHECK(partial_sums_bounded(OperatorKernel::diag_geometric(Rational(1, 2)), 10000, Rational(1, 3)));

  // not HS: constant diagonal exceeds any fixed bound
  OperatorKernel c1 = OperatorKernel::diag_constant(Rational(1));
  Rational sum;
  for (std::uint32_t i = 1; i <= 10000; ++i) {
    SparseVec img = c1.apply(basis(i));
    sum += img[i] * img[i];
  }
  CHECK(sum == Rational(10000));
}

TEST_CASE("kernel-quadratic membership reduces to the kernel class") {
  CHECK(hs_check_quadratic(OperatorKernel::identity()).verdict == HSVerdict::NotInFHS);
  CHECK(hs_check_quadratic(OperatorKernel::diag_power(Rational(-1))).verdict == HSVerdict::InFHS);
  CHECK(hs_check_quadratic(OperatorKernel::zero()).verdict == HSVerdict::InFHS);
  Rng rng(10);
  CHECK(hs_check_quadratic(random_finite_kernel(rng, 3, 9, 4)).verdict == HSVerdict::InFHS);
}
