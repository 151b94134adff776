#include "starq/witt.hpp"

#include <gmpxx.h>

#include "starq/errors.hpp"

namespace starq {

WittPoly WittPoly::generator(std::uint32_t i) {
  return WittPoly(PolyFunctional::x(i + 1));  // slot shift: phi_i lives at index i+1
}

std::vector<std::uint32_t> WittPoly::generator_support() const {
  std::vector<std::uint32_t> out = p_.support(Leg::H);
  for (auto& i : out) --i;
  return out;
}

WittPoly witt_bracket(const WittPoly& f, const WittPoly& g) {
  PolyFunctional out;
  out.raise_truncation(std::max(f.poly().truncation(), g.poly().truncation()));
  for (std::uint32_t m : f.generator_support()) {
    PolyFunctional df = partial(f.poly(), slot_x(m + 1));
    if (df.is_zero()) continue;
    for (std::uint32_t n : g.generator_support()) {
      if (m == n) continue;  // (m-n) = 0
      PolyFunctional dg = partial(g.poly(), slot_x(n + 1));
      if (dg.is_zero()) continue;
      Rational factor(static_cast<long>(m) - static_cast<long>(n));
      out += (PolyFunctional::x(m + n + 1) * df * dg).scaled(factor);
    }
  }
  return WittPoly(std::move(out));
}

WittWitnessValue witt_unbounded_witness(std::uint64_t i, std::uint64_t truncation) {
  if (i < 1) throw Error("witness index must be >= 1");
  if (i > truncation)
    throw Error("witness index " + std::to_string(i) + " exceeds truncation " +
                std::to_string(truncation));

  // i * phi_i(w_N) = i * i^(-3/4) = i^(1/4)
  mpz_class n(std::to_string(i));
  mpz_class root;
  bool exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), 4) != 0;
  Rational lo = Rational::from_string(root.get_str());
  if (exact) return {i, true, lo, lo};

  Rational hi = lo + Rational(1);
  Rational target = Rational::from_string(n.get_str());
  for (int it = 0; it < 32; ++it) {  // enclosure width 2^-32
    Rational mid = (lo + hi) / Rational(2);
    if (mid.pow(4) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {i, false, lo, hi};
}

}  // namespace starq
