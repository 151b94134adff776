#pragma once

#include <vector>

#include "starq/functional.hpp"
#include "starq/kernel.hpp"

namespace starq {

/// Polynomial-coefficient series in hbar, truncated at a fixed order.
/// `exact()` records whether the producing computation terminated on its own
/// (all higher cochains vanish identically) or was cut at the order.
class HbarPoly {
 public:
  explicit HbarPoly(int order, bool exact = true)
      : comps_(static_cast<std::size_t>(order) + 1), exact_(exact) {}

  static HbarPoly from_poly(const PolyFunctional& f, int order, bool exact = true);

  int order() const { return static_cast<int>(comps_.size()) - 1; }
  bool exact() const { return exact_; }
  void set_exact(bool e) { exact_ = e; }

  const PolyFunctional& operator[](int r) const { return comps_[static_cast<std::size_t>(r)]; }
  PolyFunctional& at(int r) { return comps_[static_cast<std::size_t>(r)]; }

  bool is_zero() const;

  friend HbarPoly operator+(const HbarPoly& a, const HbarPoly& b);
  friend HbarPoly operator-(const HbarPoly& a, const HbarPoly& b);

  /// Componentwise equality at equal order; exactness flags are not compared.
  friend bool operator==(const HbarPoly& a, const HbarPoly& b);
  friend bool operator!=(const HbarPoly& a, const HbarPoly& b) { return !(a == b); }

 private:
  std::vector<PolyFunctional> comps_;
  bool exact_;
};

/// Drops every monomial of total degree > d from each hbar component.
HbarPoly truncate_degree(const HbarPoly& p, std::uint32_t d);

/// One member of the exponential star-product family, chosen by its kernel:
/// Zero gives the Moyal product, Identity the normal product.
struct StarFamily {
  OperatorKernel kernel;

  static StarFamily moyal() { return {OperatorKernel::zero()}; }
  static StarFamily normal() { return {OperatorKernel::identity()}; }
  static StarFamily of_kernel(OperatorKernel a) { return {std::move(a)}; }
};

/// Canonical Poisson bracket: sum_i (d_iF d_i*G - d_iG d_i*F), a finite sum
/// on sparse polynomials.
PolyFunctional poisson(const PolyFunctional& f, const PolyFunctional& g);

/// r-th Moyal cochain, evaluated literally as the Lambda-weighted sum over
/// all index patterns (alpha, beta) in {1,2}^r x {1,2}^r with a dense
/// contraction over basis indices up to the ambient truncation. Kept as an
/// independent code path against the weight-propagation engine.
PolyFunctional moyal_cochain(const PolyFunctional& f, const PolyFunctional& g, int r);

/// r-th cochain of the exponential product for kernel A: the r-th power of
/// the bilinear contraction  (A+I)_ij d_i (x) d_j*  +  (A-I)_ij d_j* (x) d_i,
/// computed by propagating derivative multi-index pairs with exact weights.
PolyFunctional star_cochain(const OperatorKernel& a, const PolyFunctional& f,
                            const PolyFunctional& g, int r);

/// F (*) G = FG + sum_{1<=r<=K} hbar^r/r! C_r(F,G).
HbarPoly star(const StarFamily& fam, const PolyFunctional& f, const PolyFunctional& g, int order);

/// Bilinear extension over hbar-series arguments, truncated at `order`.
HbarPoly star(const StarFamily& fam, const HbarPoly& f, const HbarPoly& g, int order);

/// star() followed by truncate_degree(., cap), computed without ever forming
/// the monomials the truncation would discard. Exactness flags refer to the
/// hbar series, as in star().
HbarPoly star_degree_capped(const StarFamily& fam, const PolyFunctional& f,
                            const PolyFunctional& g, int order, std::uint32_t cap);
HbarPoly star_degree_capped(const StarFamily& fam, const HbarPoly& f, const HbarPoly& g, int order,
                            std::uint32_t cap);

/// Independent evaluation of the normal product
///   F (*) G = FG + sum_r (2 hbar)^r / r! <D^r_{1..1}F, D^r_{2..2}G>,
/// used as an oracle against star() with the identity kernel.
HbarPoly star_normal_direct(const PolyFunctional& f, const PolyFunctional& g, int order);

}  // namespace starq
