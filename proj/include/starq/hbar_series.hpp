#pragma once

#include <vector>

#include "starq/rational.hpp"

namespace starq {

/// Truncated formal power series in the deformation parameter hbar, with
/// exact rational coefficients. A series of order K holds coefficients for
/// hbar^0 .. hbar^K; binary operations truncate to the smaller order.
class HbarSeries {
 public:
  explicit HbarSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

  static HbarSeries constant(const Rational& value, int order);

  /// sum_{r<=K} s^r / r! * hbar^r.
  static HbarSeries exp(const Rational& s, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int r) const { return c_[static_cast<std::size_t>(r)]; }
  Rational& at(int r) { return c_[static_cast<std::size_t>(r)]; }

  bool is_zero() const;

  HbarSeries operator-() const;
  friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator-(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  HbarSeries scaled(const Rational& c) const;

  friend bool operator==(const HbarSeries& a, const HbarSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HbarSeries& a, const HbarSeries& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
};

}  // namespace starq
