#include "starq/functional.hpp"

#include <algorithm>

namespace starq {

MultiIndex MultiIndex::raised(BasisSlot s, std::uint32_t count) const {
  MultiIndex out = *this;
  if (count == 0) return out;
  auto it = std::lower_bound(out.e_.begin(), out.e_.end(), s,
                             [](const Entry& e, const BasisSlot& t) { return e.first < t; });
  if (it != out.e_.end() && it->first == s) {
    it->second += count;
  } else {
    out.e_.insert(it, {s, count});
  }
  return out;
}

MultiIndex MultiIndex::lowered(BasisSlot s) const {
  MultiIndex out = *this;
  auto it = std::lower_bound(out.e_.begin(), out.e_.end(), s,
                             [](const Entry& e, const BasisSlot& t) { return e.first < t; });
  if (it == out.e_.end() || !(it->first == s)) return out;  // nothing to lower
  if (--it->second == 0) out.e_.erase(it);
  return out;
}

std::uint32_t MultiIndex::exponent(BasisSlot s) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), s,
                             [](const Entry& e, const BasisSlot& t) { return e.first < t; });
  return (it != e_.end() && it->first == s) ? it->second : 0;
}

std::uint32_t MultiIndex::degree() const {
  std::uint32_t d = 0;
  for (const auto& [slot, exp] : e_) d += exp;
  return d;
}

MultiIndex MultiIndex::times(const MultiIndex& o) const {
  MultiIndex out;
  auto a = e_.begin(), ae = e_.end();
  auto b = o.e_.begin(), be = o.e_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      out.e_.push_back(*a++);
    } else if (b->first < a->first) {
      out.e_.push_back(*b++);
    } else {
      out.e_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  out.e_.insert(out.e_.end(), a, ae);
  out.e_.insert(out.e_.end(), b, be);
  return out;
}

Rational sparse_dot(const SparseVec& a, const SparseVec& b) {
  Rational acc;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return acc;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  for (const auto& [i, c] : b) {
    Rational s = out.count(i) ? out[i] + c : c;
    if (s.is_zero()) {
      out.erase(i);
    } else {
      out[i] = s;
    }
  }
  return out;
}

bool sparse_is_zero(const SparseVec& v) { return v.empty(); }

PolyFunctional::PolyFunctional(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(MultiIndex(), c);
}

PolyFunctional PolyFunctional::variable(BasisSlot s) {
  PolyFunctional p;
  p.terms_.emplace(MultiIndex::unit(s), Rational(1));
  p.trunc_ = s.index;
  return p;
}

PolyFunctional PolyFunctional::monomial(const MultiIndex& m, const Rational& c) {
  PolyFunctional p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  for (const auto& [slot, exp] : m.entries()) p.raise_truncation(slot.index);
  return p;
}

bool PolyFunctional::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::uint32_t PolyFunctional::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::uint32_t PolyFunctional::max_index() const {
  std::uint32_t n = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [slot, exp] : m.entries()) n = std::max(n, slot.index);
  return n;
}

Rational PolyFunctional::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

std::vector<std::uint32_t> PolyFunctional::support(Leg leg) const {
  std::vector<std::uint32_t> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [slot, exp] : m.entries())
      if (slot.leg == leg) out.push_back(slot.index);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void PolyFunctional::add_term(const MultiIndex& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyFunctional PolyFunctional::operator-() const {
  PolyFunctional out;
  out.trunc_ = trunc_;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

PolyFunctional& PolyFunctional::operator+=(const PolyFunctional& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  raise_truncation(o.trunc_);
  return *this;
}

PolyFunctional& PolyFunctional::operator-=(const PolyFunctional& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  raise_truncation(o.trunc_);
  return *this;
}

PolyFunctional operator*(const PolyFunctional& a, const PolyFunctional& b) {
  PolyFunctional out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  out.trunc_ = std::max(a.trunc_, b.trunc_);
  return out;
}

PolyFunctional mul_capped(const PolyFunctional& a, const PolyFunctional& b, std::uint32_t cap) {
  // b's terms sorted by ascending degree so each a-term stops early
  std::vector<std::pair<const MultiIndex*, const Rational*>> bs;
  bs.reserve(b.terms().size());
  for (const auto& [m, c] : b.terms()) bs.emplace_back(&m, &c);
  std::sort(bs.begin(), bs.end(),
            [](const auto& l, const auto& r) { return l.first->degree() < r.first->degree(); });

  PolyFunctional out;
  out.raise_truncation(std::max(a.truncation(), b.truncation()));
  for (const auto& [ma, ca] : a.terms()) {
    std::uint32_t da = ma.degree();
    if (da > cap) continue;
    for (const auto& [mb, cb] : bs) {
      if (da + mb->degree() > cap) break;
      out.accumulate(ma.times(*mb), ca * *cb);
    }
  }
  return out;
}

PolyFunctional PolyFunctional::scaled(const Rational& c) const {
  PolyFunctional out;
  out.trunc_ = trunc_;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

PolyFunctional partial(const PolyFunctional& f, BasisSlot s) {
  PolyFunctional out;
  out.raise_truncation(f.truncation());
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t e = m.exponent(s);
    if (e == 0) continue;
    out.accumulate(m.lowered(s), c * Rational(static_cast<long>(e)));
  }
  return out;
}

PolyFunctional partial(const PolyFunctional& f, const MultiIndex& m) {
  PolyFunctional out = f;
  for (const auto& [slot, exp] : m.entries())
    for (std::uint32_t r = 0; r < exp; ++r) out = partial(out, slot);
  return out;
}

Rational eval(const PolyFunctional& f, const Point& p) {
  Rational acc;
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    bool vanished = false;
    for (const auto& [slot, exp] : m.entries()) {
      const SparseVec& leg = (slot.leg == Leg::H) ? p.x : p.eta;
      auto it = leg.find(slot.index);
      if (it == leg.end() || it->second.is_zero()) {
        vanished = true;
        break;
      }
      term *= it->second.pow(static_cast<long>(exp));
    }
    if (!vanished) acc += term;
  }
  return acc;
}

Rational symplectic_form(const Point& p1, const Point& p2) {
  return sparse_dot(p1.eta, p2.x) - sparse_dot(p2.eta, p1.x);
}

HSCheckResult hs_check_fn(const PolyFunctional& /*every finite polynomial qualifies*/) {
  return {HSVerdict::InFHS,
          "finitely supported polynomial: every iterated-derivative family has finite "
          "support, hence square-summable"};
}

}  // namespace starq
