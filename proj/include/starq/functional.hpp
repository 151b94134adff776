#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starq/rational.hpp"

namespace starq {

/// Which leg of the phase space W = H + H* a coordinate lives on.
/// H-leg variables are written x<i>, H*-leg variables eta<i>.
enum class Leg : std::uint8_t { H = 0, Hstar = 1 };

/// One coordinate direction: a leg plus a 1-based basis index.
struct BasisSlot {
  Leg leg{Leg::H};
  std::uint32_t index{1};

  friend auto operator<=>(const BasisSlot&, const BasisSlot&) = default;
};

inline BasisSlot slot_x(std::uint32_t i) { return BasisSlot{Leg::H, i}; }
inline BasisSlot slot_eta(std::uint32_t i) { return BasisSlot{Leg::Hstar, i}; }

/// Exponent vector of a monomial: slot -> positive exponent, kept sorted by
/// (leg, index) with no zero entries. Ordering of MultiIndex values is the
/// lexicographic order on that canonical entry list.
class MultiIndex {
 public:
  using Entry = std::pair<BasisSlot, std::uint32_t>;

  MultiIndex() = default;
  static MultiIndex unit(BasisSlot s) { return MultiIndex().raised(s); }

  MultiIndex raised(BasisSlot s) const { return raised(s, 1); }
  MultiIndex raised(BasisSlot s, std::uint32_t count) const;
  MultiIndex lowered(BasisSlot s) const;  // exponent of s drops by one (must be present)
  std::uint32_t exponent(BasisSlot s) const;
  std::uint32_t degree() const;
  bool empty() const { return e_.empty(); }

  /// Exponent-wise sum (the exponent vector of a monomial product).
  MultiIndex times(const MultiIndex& o) const;

  const std::vector<Entry>& entries() const { return e_; }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Entry> e_;
};

/// Sparse H-vector / H*-vector: index -> coefficient, finitely supported.
using SparseVec = std::map<std::uint32_t, Rational>;

Rational sparse_dot(const SparseVec& a, const SparseVec& b);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
bool sparse_is_zero(const SparseVec& v);

/// A point (x, eta) of W with finite support.
struct Point {
  SparseVec x;
  SparseVec eta;
};

/// Finitely supported polynomial in the coordinates x_i (H leg) and eta_i
/// (H* leg), with exact rational coefficients. The smallest computable class
/// of Hilbert-Schmidt-type functions: every iterated-derivative family has
/// finite support.
///
/// `truncation` is the ambient basis cutoff N carried alongside the data. It
/// only bounds index iteration in contraction loops; it never drops terms.
class PolyFunctional {
 public:
  PolyFunctional() = default;
  explicit PolyFunctional(const Rational& c);

  static PolyFunctional variable(BasisSlot s);
  static PolyFunctional x(std::uint32_t i) { return variable(slot_x(i)); }
  static PolyFunctional eta(std::uint32_t i) { return variable(slot_eta(i)); }
  static PolyFunctional monomial(const MultiIndex& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t truncation() const { return trunc_; }
  void raise_truncation(std::uint32_t n) { if (n > trunc_) trunc_ = n; }
  std::uint32_t max_index() const;

  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  Rational coefficient(const MultiIndex& m) const;

  /// Sorted distinct basis indices appearing on the given leg.
  std::vector<std::uint32_t> support(Leg leg) const;

  /// Adds c * monomial(m) in place, dropping the entry if it cancels.
  void accumulate(const MultiIndex& m, const Rational& c) { add_term(m, c); }

  PolyFunctional operator-() const;
  PolyFunctional& operator+=(const PolyFunctional& o);
  PolyFunctional& operator-=(const PolyFunctional& o);
  friend PolyFunctional operator+(PolyFunctional a, const PolyFunctional& b) { return a += b; }
  friend PolyFunctional operator-(PolyFunctional a, const PolyFunctional& b) { return a -= b; }
  friend PolyFunctional operator*(const PolyFunctional& a, const PolyFunctional& b);
  PolyFunctional scaled(const Rational& c) const;

  friend bool operator==(const PolyFunctional& a, const PolyFunctional& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyFunctional& a, const PolyFunctional& b) { return !(a == b); }

 private:
  void add_term(const MultiIndex& m, const Rational& c);

  std::map<MultiIndex, Rational> terms_;
  std::uint32_t trunc_ = 0;
};

/// truncate_degree(a*b, cap) without forming the monomial pairs that the
/// truncation would drop.
PolyFunctional mul_capped(const PolyFunctional& a, const PolyFunctional& b, std::uint32_t cap);

/// Exact formal partial derivative in the direction of one slot.
PolyFunctional partial(const PolyFunctional& f, BasisSlot s);

/// Iterated partial derivative, one application per unit of exponent.
PolyFunctional partial(const PolyFunctional& f, const MultiIndex& m);

/// Exact substitution; variables absent from the point are zero.
Rational eval(const PolyFunctional& f, const Point& p);

/// omega((x1,eta1),(x2,eta2)) = eta1(x2) - eta2(x1).
Rational symplectic_form(const Point& p1, const Point& p2);

enum class HSVerdict { InFHS, NotInFHS };

struct HSCheckResult {
  HSVerdict verdict;
  std::string witness;
};

/// Finitely supported polynomials always qualify: each derivative family has
/// finite support, hence is square-summable.
HSCheckResult hs_check_fn(const PolyFunctional& f);

}  // namespace starq
