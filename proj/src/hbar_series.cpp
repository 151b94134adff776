#include "starq/hbar_series.hpp"

#include <algorithm>

namespace starq {

HbarSeries HbarSeries::constant(const Rational& value, int order) {
  HbarSeries s(order);
  s.c_[0] = value;
  return s;
}

HbarSeries HbarSeries::exp(const Rational& s, int order) {
  HbarSeries out(order);
  Rational term(1);
  out.c_[0] = term;
  for (int r = 1; r <= order; ++r) {
    term = term * s / Rational(r);
    out.c_[static_cast<std::size_t>(r)] = term;
  }
  return out;
}

bool HbarSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

HbarSeries HbarSeries::operator-() const {
  HbarSeries out(order());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries out(std::min(a.order(), b.order()));
  for (int r = 0; r <= out.order(); ++r) out.at(r) = a[r] + b[r];
  return out;
}

HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries out(std::min(a.order(), b.order()));
  for (int r = 0; r <= out.order(); ++r) out.at(r) = a[r] - b[r];
  return out;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries out(std::min(a.order(), b.order()));
  for (int r = 0; r <= out.order(); ++r) {
    Rational acc;
    for (int i = 0; i <= r; ++i) acc += a[i] * b[r - i];
    out.at(r) = acc;
  }
  return out;
}

HbarSeries HbarSeries::scaled(const Rational& c) const {
  HbarSeries out(order());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * c;
  return out;
}

}  // namespace starq
