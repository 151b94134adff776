#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starq/kernel.hpp"
#include "starq/star.hpp"

namespace starq {

/// Symmetric 2-cocycle attached to a kernel:
///   E_A(F,G) = <D1F, A D2G> + <D1G, A D2F>
///            = sum_ij A_ij (d_iF d_j*G + d_iG d_j*F).
PolyFunctional ea_eval(const OperatorKernel& a, const PolyFunctional& f, const PolyFunctional& g);

/// First-order transform attached to a Hilbert-Schmidt kernel:
///   T_S(F) = -sum_ij S_ij d_i d_j* F.
/// Throws NonHSKernelError when S is not Hilbert-Schmidt; the construction is
/// admissible exactly in that class.
PolyFunctional ta_eval(const OperatorKernel& s, const PolyFunctional& f);

/// A k-cochain: an evaluable multidifferential operator vanishing on
/// constants. Value type; cheap to copy.
class Cochain {
 public:
  static Cochain ea(OperatorKernel a);                       // arity 2
  static Cochain ta(OperatorKernel s);                       // arity 1, HS only
  static Cochain star_r(OperatorKernel a, int r);            // arity 2, r-th product cochain
  static Cochain delta_of(Cochain inner);                    // arity k+1
  static Cochain scaled_sum(std::vector<std::pair<Rational, Cochain>> parts);

  int arity() const;
  PolyFunctional eval(std::span<const PolyFunctional> args) const;

 private:
  struct Impl;
  explicit Cochain(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Hochschild differential of a k-cochain, evaluated on k+1 arguments:
///   dC(F_0,..,F_k) = F_0 C(F_1,..,F_k)
///                  + sum_i (-1)^{i+1} C(F_0,..,F_i F_{i+1},..,F_k)
///                  + (-1)^{k+1} C(F_0,..,F_{k-1}) F_k.
/// Throws ArityError unless exactly k+1 arguments are supplied.
PolyFunctional hochschild_delta(const Cochain& c, std::span<const PolyFunctional> args);

/// Applies the exponential equivalence transform T = sum_m hbar^m/m! T1^m,
/// T1 = T_{A-B}, to an hbar-polynomial, re-truncating at `order`.
/// Throws NonHSKernelError when A-B is not Hilbert-Schmidt.
HbarPoly equiv_transform_poly(const OperatorKernel& a, const OperatorKernel& b, const HbarPoly& f,
                              int order);

enum class Equivalence { Equivalent, NotEquivalent, Undecidable };

std::string equivalence_name(Equivalence e);

struct EquivalenceVerdict {
  Equivalence verdict;
  HSClassification difference_class;
  std::string witness;
};

/// The exponential products for A and B are equivalent deformations exactly
/// when A-B is Hilbert-Schmidt; the verdict carries the classification of
/// the difference and a witness description.
EquivalenceVerdict equiv_certify(const OperatorKernel& a, const OperatorKernel& b);

}  // namespace starq
