#pragma once

#include <map>
#include <utility>

#include "starq/hbar_series.hpp"
#include "starq/kernel.hpp"
#include "starq/star.hpp"

namespace starq {

/// Finite combination of exponential functions
///   Phi_{y,xi}(x,eta) = exp(<eta,y> + <xi,x>),
/// each carrying an hbar-series coefficient. Terms with equal (y,xi) are
/// merged; Phi_{0,0} is the unit.
class ExpFunctional {
 public:
  using Key = std::pair<SparseVec, SparseVec>;  // (y, xi)

  ExpFunctional() = default;

  static ExpFunctional unit(int order);
  static ExpFunctional phi(SparseVec y, SparseVec xi, HbarSeries coeff);

  void add_term(SparseVec y, SparseVec xi, const HbarSeries& coeff);

  const std::map<Key, HbarSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend ExpFunctional operator+(const ExpFunctional& a, const ExpFunctional& b);
  friend ExpFunctional operator-(const ExpFunctional& a, const ExpFunctional& b);

  friend bool operator==(const ExpFunctional& a, const ExpFunctional& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExpFunctional& a, const ExpFunctional& b) { return !(a == b); }

 private:
  std::map<Key, HbarSeries> terms_;
};

/// Closed-form product of exponentials:
///   Phi_{y,xi} (*)^A Phi_{y',xi'}
///     = exp(hbar (<xi,(A+I)y'> + <xi',(A-I)y>)) Phi_{y+y', xi+xi'},
/// the prefactor expanded to the given order and extended bilinearly.
ExpFunctional symbol_star(const OperatorKernel& a, const ExpFunctional& e1,
                          const ExpFunctional& e2, int order);

/// Equivalence transform on symbols: each Phi_{y,xi} picks up the factor
/// exp(hbar <xi,(B-A)y>), expanded to the given order.
ExpFunctional symbol_equiv_transform(const OperatorKernel& a, const OperatorKernel& b,
                                     const ExpFunctional& e, int order);

/// Taylor expansion of every exponential term in (x,eta) up to the given
/// total degree, exactly; the bridge between the symbol calculus and the
/// polynomial contraction engine. The hbar order of the result is the
/// smallest coefficient order among the terms.
HbarPoly exp_truncate_to_poly(const ExpFunctional& e, std::uint32_t degree);

}  // namespace starq
