#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "starq/functional.hpp"
#include "starq/rational.hpp"

namespace starq {

enum class HSClass { HilbertSchmidt, BoundedNotHS, Unbounded };

struct HSClassification {
  HSClass cls;
  std::string certificate;
};

std::string hs_class_name(HSClass c);

/// A structured operator on H: the parameter of the exponential star-product
/// family. Exact matrix entries A_ij = <e_i*, A e_j> for every variant; the
/// Hilbert-Schmidt / bounded / unbounded trichotomy is decided symbolically.
class OperatorKernel {
 public:
  enum class Kind { Zero, Identity, Finite, Diagonal, Diff };
  enum class DiagFamily { PowerLaw, Geometric, Constant };

  OperatorKernel() : kind_(Kind::Zero) {}

  static OperatorKernel zero() { return OperatorKernel(); }
  static OperatorKernel identity();
  /// Square matrix acting on the leading block, zero outside it.
  static OperatorKernel finite(std::vector<std::vector<Rational>> rows);
  /// lambda_i = i^p. Constructing with p = 0 yields the constant family 1.
  static OperatorKernel diag_power(const Rational& p);
  /// lambda_i = r^i. r = 1 folds to the constant family, r = 0 to zero.
  static OperatorKernel diag_geometric(const Rational& r);
  /// lambda_i = c. c = 0 folds to zero.
  static OperatorKernel diag_constant(const Rational& c);
  /// Formal difference a - b for variants the structured algebra cannot fuse.
  static OperatorKernel difference(OperatorKernel a, OperatorKernel b);

  Kind kind() const { return kind_; }
  DiagFamily family() const { return fam_; }
  const Rational& parameter() const { return param_; }
  const std::vector<std::vector<Rational>>& rows() const { return m_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(m_.size()); }
  const OperatorKernel& diff_lhs() const { return *a_; }
  const OperatorKernel& diff_rhs() const { return *b_; }

  /// Matrix entry; exact for every variant. Throws InexactOperationError for
  /// a power-law diagonal with fractional exponent.
  Rational entry(std::uint32_t i, std::uint32_t j) const;

  /// Exact image of a finitely supported vector; support stays finite.
  SparseVec apply(const SparseVec& v) const;

  HSClassification hs_classify() const;

  friend bool operator==(const OperatorKernel& a, const OperatorKernel& b);
  friend bool operator!=(const OperatorKernel& a, const OperatorKernel& b) { return !(a == b); }

 private:
  Rational diag_entry(std::uint32_t i) const;

  Kind kind_;
  std::vector<std::vector<Rational>> m_;          // Finite
  DiagFamily fam_ = DiagFamily::Constant;         // Diagonal
  Rational param_;                                // Diagonal
  std::shared_ptr<const OperatorKernel> a_, b_;   // Diff
};

/// Exact difference, fused into a structured variant whenever the variant
/// algebra is closed (same diagonal family, finite matrices, identity vs.
/// constant diagonal); otherwise a formal difference whose apply/entry/class
/// are computed componentwise.
OperatorKernel kernel_sub(const OperatorKernel& a, const OperatorKernel& b);

/// Membership of the kernel-quadratic Q_A(x,eta) = <eta, A x> in the
/// Hilbert-Schmidt function class: the mixed-derivative family of Q_A is the
/// entry family of A, so the verdict is exactly hs_classify(A).
HSCheckResult hs_check_quadratic(const OperatorKernel& a);

}  // namespace starq
