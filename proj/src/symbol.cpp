#include "starq/symbol.hpp"

#include <algorithm>

namespace starq {

ExpFunctional ExpFunctional::unit(int order) {
  return phi({}, {}, HbarSeries::constant(Rational(1), order));
}

ExpFunctional ExpFunctional::phi(SparseVec y, SparseVec xi, HbarSeries coeff) {
  ExpFunctional e;
  e.add_term(std::move(y), std::move(xi), coeff);
  return e;
}

void ExpFunctional::add_term(SparseVec y, SparseVec xi, const HbarSeries& coeff) {
  if (coeff.is_zero()) return;
  Key key{std::move(y), std::move(xi)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
    return;
  }
  HbarSeries sum = it->second + coeff;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = sum;
  }
}

ExpFunctional operator+(const ExpFunctional& a, const ExpFunctional& b) {
  ExpFunctional out = a;
  for (const auto& [key, coeff] : b.terms_) out.add_term(key.first, key.second, coeff);
  return out;
}

ExpFunctional operator-(const ExpFunctional& a, const ExpFunctional& b) {
  ExpFunctional out = a;
  for (const auto& [key, coeff] : b.terms_) out.add_term(key.first, key.second, -coeff);
  return out;
}

ExpFunctional symbol_star(const OperatorKernel& a, const ExpFunctional& e1,
                          const ExpFunctional& e2, int order) {
  ExpFunctional out;
  for (const auto& [k1, c1] : e1.terms()) {
    const auto& [y1, xi1] = k1;
    for (const auto& [k2, c2] : e2.terms()) {
      const auto& [y2, xi2] = k2;
      // <xi1, (A+I) y2> + <xi2, (A-I) y1>
      Rational s = sparse_dot(xi1, a.apply(y2)) + sparse_dot(xi1, y2) +
                   sparse_dot(xi2, a.apply(y1)) - sparse_dot(xi2, y1);
      HbarSeries coeff = c1 * c2 * HbarSeries::exp(s, order);
      out.add_term(sparse_add(y1, y2), sparse_add(xi1, xi2), coeff);
    }
  }
  return out;
}

ExpFunctional symbol_equiv_transform(const OperatorKernel& a, const OperatorKernel& b,
                                     const ExpFunctional& e, int order) {
  ExpFunctional out;
  for (const auto& [key, coeff] : e.terms()) {
    const auto& [y, xi] = key;
    Rational s = sparse_dot(xi, b.apply(y)) - sparse_dot(xi, a.apply(y));
    out.add_term(y, xi, coeff * HbarSeries::exp(s, order));
  }
  return out;
}

HbarPoly exp_truncate_to_poly(const ExpFunctional& e, std::uint32_t degree) {
  int order = 0;
  bool first = true;
  for (const auto& [key, coeff] : e.terms()) {
    order = first ? coeff.order() : std::min(order, coeff.order());
    first = false;
  }

  HbarPoly out(order, false);
  for (const auto& [key, coeff] : e.terms()) {
    const auto& [y, xi] = key;
    // linear form <eta,y> + <xi,x>
    PolyFunctional linear;
    for (const auto& [i, c] : y) linear += PolyFunctional::eta(i).scaled(c);
    for (const auto& [i, c] : xi) linear += PolyFunctional::x(i).scaled(c);

    PolyFunctional expansion(Rational(1));  // sum_{m<=d} L^m / m!
    PolyFunctional power(Rational(1));
    Rational inv_fact(1);
    for (std::uint32_t m = 1; m <= degree && !linear.is_zero(); ++m) {
      power = power * linear;
      inv_fact /= Rational(static_cast<long>(m));
      expansion += power.scaled(inv_fact);
    }
    for (int r = 0; r <= order; ++r) out.at(r) += expansion.scaled(coeff[r]);
  }
  return out;
}

}  // namespace starq
