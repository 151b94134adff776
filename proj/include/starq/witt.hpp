#pragma once

#include <cstdint>
#include <vector>

#include "starq/functional.hpp"

namespace starq {

/// Polynomial in the coordinate functions phi_i, i >= 0, realizing the
/// non-negative Witt relations as a Poisson subalgebra. Internally phi_i is
/// the H-leg variable with slot index i+1 so that phi_0 is representable;
/// the shift never surfaces in I/O.
class WittPoly {
 public:
  WittPoly() = default;
  explicit WittPoly(const Rational& c) : p_(c) {}

  static WittPoly generator(std::uint32_t i);  // phi_i

  const PolyFunctional& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  /// Sorted distinct phi-indices appearing in the polynomial.
  std::vector<std::uint32_t> generator_support() const;

  friend WittPoly operator+(const WittPoly& a, const WittPoly& b) { return WittPoly(a.p_ + b.p_); }
  friend WittPoly operator-(const WittPoly& a, const WittPoly& b) { return WittPoly(a.p_ - b.p_); }
  friend WittPoly operator*(const WittPoly& a, const WittPoly& b) { return WittPoly(a.p_ * b.p_); }
  WittPoly scaled(const Rational& c) const { return WittPoly(p_.scaled(c)); }

  friend bool operator==(const WittPoly& a, const WittPoly& b) { return a.p_ == b.p_; }
  friend bool operator!=(const WittPoly& a, const WittPoly& b) { return !(a == b); }

  friend WittPoly witt_bracket(const WittPoly& f, const WittPoly& g);

 private:
  explicit WittPoly(PolyFunctional p) : p_(std::move(p)) {}
  PolyFunctional p_;
};

/// {F,G} = sum_{m,n>=0} (m-n) phi_{m+n} dF/dphi_m dG/dphi_n — a finite sum
/// on polynomials, exact. On generators: {phi_m, phi_n} = (m-n) phi_{m+n}.
WittPoly witt_bracket(const WittPoly& f, const WittPoly& g);

/// Value of i * phi_i at the truncated witness point w_N = sum_{j<=N} j^(-3/4) e_j,
/// i.e. i^(1/4). Exact when i is a perfect fourth power; otherwise a certified
/// rational enclosure with lower^4 <= i <= upper^4.
struct WittWitnessValue {
  std::uint64_t index;
  bool exact;
  Rational lower;
  Rational upper;  // equals lower when exact
};

WittWitnessValue witt_unbounded_witness(std::uint64_t i, std::uint64_t truncation);

}  // namespace starq
