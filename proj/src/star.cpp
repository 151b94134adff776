#include "starq/star.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace starq {

HbarPoly HbarPoly::from_poly(const PolyFunctional& f, int order, bool exact) {
  HbarPoly out(order, exact);
  out.comps_[0] = f;
  return out;
}

bool HbarPoly::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const PolyFunctional& p) { return p.is_zero(); });
}

HbarPoly operator+(const HbarPoly& a, const HbarPoly& b) {
  HbarPoly out(std::min(a.order(), b.order()), a.exact_ && b.exact_);
  for (int r = 0; r <= out.order(); ++r) out.at(r) = a[r] + b[r];
  return out;
}

HbarPoly operator-(const HbarPoly& a, const HbarPoly& b) {
  HbarPoly out(std::min(a.order(), b.order()), a.exact_ && b.exact_);
  for (int r = 0; r <= out.order(); ++r) out.at(r) = a[r] - b[r];
  return out;
}

bool operator==(const HbarPoly& a, const HbarPoly& b) {
  if (a.order() != b.order()) return false;
  for (int r = 0; r <= a.order(); ++r)
    if (a[r] != b[r]) return false;
  return true;
}

HbarPoly truncate_degree(const HbarPoly& p, std::uint32_t d) {
  HbarPoly out(p.order(), p.exact());
  for (int r = 0; r <= p.order(); ++r) {
    PolyFunctional comp;
    comp.raise_truncation(p[r].truncation());
    for (const auto& [m, c] : p[r].terms())
      if (m.degree() <= d) comp.accumulate(m, c);
    out.at(r) = comp;
  }
  return out;
}

PolyFunctional poisson(const PolyFunctional& f, const PolyFunctional& g) {
  std::vector<std::uint32_t> idx = f.support(Leg::H);
  for (std::uint32_t i : g.support(Leg::H)) idx.push_back(i);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  PolyFunctional out;
  out.raise_truncation(std::max(f.truncation(), g.truncation()));
  for (std::uint32_t i : idx) {
    out += partial(f, slot_x(i)) * partial(g, slot_eta(i));
    out -= partial(g, slot_x(i)) * partial(f, slot_eta(i));
  }
  return out;
}

namespace {

constexpr std::uint32_t kNoCap = ~std::uint32_t{0};

/// Memoized iterated partial derivatives of a fixed base polynomial, with
/// their leg supports cached alongside. For degree-capped products a second,
/// truncated copy of each derivative is kept: truncation must not enter the
/// derivative recursion itself (high-degree terms have low-degree
/// derivatives), only the assembled products.
class DerivCache {
 public:
  struct Entry {
    PolyFunctional poly;
    PolyFunctional capped;
    std::vector<std::uint32_t> h_support;
    std::vector<std::uint32_t> hstar_support;
    bool zero;
  };

  DerivCache(const PolyFunctional& base, std::uint32_t cap) : cap_(cap) { insert({}, base); }

  const Entry& get(const MultiIndex& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    const auto& [slot, exp] = m.entries().front();
    const PolyFunctional& lower = get(m.lowered(slot)).poly;
    return insert(m, partial(lower, slot));
  }

 private:
  const Entry& insert(const MultiIndex& m, PolyFunctional p) {
    Entry e;
    e.zero = p.is_zero();
    e.h_support = p.support(Leg::H);
    e.hstar_support = p.support(Leg::Hstar);
    if (cap_ != kNoCap) {
      PolyFunctional cut;
      cut.raise_truncation(p.truncation());
      for (const auto& [mono, c] : p.terms())
        if (mono.degree() <= cap_) cut.accumulate(mono, c);
      e.capped = std::move(cut);
    }
    e.poly = std::move(p);
    return cache_.emplace(m, std::move(e)).first->second;
  }

  std::uint32_t cap_;
  std::map<MultiIndex, Entry> cache_;
};

using PairKey = std::pair<MultiIndex, MultiIndex>;
using WeightMap = std::map<PairKey, Rational>;

/// One application of the bilinear contraction of kernel A to a weighted set
/// of derivative multi-index pairs (left leg, right leg). Indices range over
/// the variables actually present in the current derivatives; absent slots
/// contribute zero.
WeightMap propagate(const WeightMap& w, const OperatorKernel& a, DerivCache& df, DerivCache& dg) {
  WeightMap out;
  auto bump = [&out](PairKey key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.emplace(std::move(key), c);
    if (!inserted) it->second += c;
  };

  for (const auto& [key, weight] : w) {
    const DerivCache::Entry& fu = df.get(key.first);
    const DerivCache::Entry& gv = dg.get(key.second);
    // (A+I)_ij d_i on the left leg, d_j* on the right leg
    for (std::uint32_t i : fu.h_support) {
      for (std::uint32_t j : gv.hstar_support) {
        Rational c = a.entry(i, j);
        if (i == j) c += Rational(1);
        if (!c.is_zero())
          bump({key.first.raised(slot_x(i)), key.second.raised(slot_eta(j))}, weight * c);
      }
    }
    // (A-I)_ij d_j* on the left leg, d_i on the right leg
    for (std::uint32_t j : fu.hstar_support) {
      for (std::uint32_t i : gv.h_support) {
        Rational c = a.entry(i, j);
        if (i == j) c -= Rational(1);
        if (!c.is_zero())
          bump({key.first.raised(slot_eta(j)), key.second.raised(slot_x(i))}, weight * c);
      }
    }
  }

  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero() || df.get(it->first.first).zero || dg.get(it->first.second).zero) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

PolyFunctional assemble(const WeightMap& w, DerivCache& df, DerivCache& dg, std::uint32_t trunc,
                        std::uint32_t cap) {
  PolyFunctional out;
  out.raise_truncation(trunc);
  for (const auto& [key, weight] : w) {
    const DerivCache::Entry& fe = df.get(key.first);
    const DerivCache::Entry& ge = dg.get(key.second);
    if (cap == kNoCap) {
      out += (fe.poly * ge.poly).scaled(weight);
    } else {
      out += mul_capped(fe.capped, ge.capped, cap).scaled(weight);
    }
  }
  return out;
}

PolyFunctional product(const PolyFunctional& f, const PolyFunctional& g, std::uint32_t cap) {
  return cap == kNoCap ? f * g : mul_capped(f, g, cap);
}

HbarPoly star_impl(const StarFamily& fam, const PolyFunctional& f, const PolyFunctional& g,
                   int order, std::uint32_t cap) {
  HbarPoly out(order);
  out.at(0) = product(f, g, cap);
  DerivCache df(f, cap), dg(g, cap);
  std::uint32_t trunc = std::max(f.truncation(), g.truncation());

  const int max_r = static_cast<int>(std::min(f.total_degree(), g.total_degree()));
  WeightMap w{{PairKey{}, Rational(1)}};
  Rational inv_factorial(1);
  int r = 0;
  while (r < std::min(order, max_r) && !w.empty()) {
    ++r;
    w = propagate(w, fam.kernel, df, dg);
    inv_factorial /= Rational(r);
    out.at(r) = assemble(w, df, dg, trunc, cap).scaled(inv_factorial);
  }

  bool exact = max_r <= order || w.empty();
  if (!exact) {
    // One extra propagation step decides whether the series happened to
    // terminate exactly at the cutoff.
    exact = propagate(w, fam.kernel, df, dg).empty();
  }
  out.set_exact(exact);
  return out;
}

HbarPoly star_series_impl(const StarFamily& fam, const HbarPoly& f, const HbarPoly& g, int order,
                          std::uint32_t cap) {
  HbarPoly out(order, f.exact() && g.exact());
  for (int s = 0; s <= std::min(f.order(), order); ++s) {
    if (f[s].is_zero()) continue;
    for (int t = 0; t <= std::min(g.order(), order - s); ++t) {
      if (g[t].is_zero()) continue;
      HbarPoly part = star_impl(fam, f[s], g[t], order - s - t, cap);
      if (!part.exact()) out.set_exact(false);
      for (int r = 0; r <= part.order(); ++r) out.at(s + t + r) += part[r];
    }
  }
  return out;
}

}  // namespace

PolyFunctional star_cochain(const OperatorKernel& a, const PolyFunctional& f,
                            const PolyFunctional& g, int r) {
  DerivCache df(f, kNoCap), dg(g, kNoCap);
  std::uint32_t trunc = std::max(f.truncation(), g.truncation());
  WeightMap w{{PairKey{}, Rational(1)}};
  for (int step = 0; step < r && !w.empty(); ++step) w = propagate(w, a, df, dg);
  return assemble(w, df, dg, trunc, kNoCap);
}

HbarPoly star(const StarFamily& fam, const PolyFunctional& f, const PolyFunctional& g, int order) {
  return star_impl(fam, f, g, order, kNoCap);
}

HbarPoly star(const StarFamily& fam, const HbarPoly& f, const HbarPoly& g, int order) {
  return star_series_impl(fam, f, g, order, kNoCap);
}

HbarPoly star_degree_capped(const StarFamily& fam, const PolyFunctional& f,
                            const PolyFunctional& g, int order, std::uint32_t cap) {
  return star_impl(fam, f, g, order, cap);
}

HbarPoly star_degree_capped(const StarFamily& fam, const HbarPoly& f, const HbarPoly& g, int order,
                            std::uint32_t cap) {
  return star_series_impl(fam, f, g, order, cap);
}

namespace {

const int kLambda[3][3] = {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}};  // Lambda[a][b], 1-based legs

Leg leg_of(int alpha) { return alpha == 1 ? Leg::H : Leg::Hstar; }

/// Dense odometer over (i_1..i_r) in [1..n]^r; calls fn with each tuple.
template <typename Fn>
void for_each_tuple(std::uint32_t n, int r, Fn&& fn) {
  std::vector<std::uint32_t> idx(static_cast<std::size_t>(r), 1);
  if (r == 0) {
    fn(idx);
    return;
  }
  if (n == 0) return;
  while (true) {
    fn(idx);
    int k = r - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n) {
      idx[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
  }
}

}  // namespace

PolyFunctional moyal_cochain(const PolyFunctional& f, const PolyFunctional& g, int r) {
  if (r == 0) return f * g;
  PolyFunctional out;
  std::uint32_t n = std::max(f.truncation(), g.truncation());
  out.raise_truncation(n);
  // D^(r) of a polynomial of lower total degree vanishes identically.
  if (r > static_cast<int>(std::min(f.total_degree(), g.total_degree()))) return out;

  DerivCache df(f, kNoCap), dg(g, kNoCap);

  std::vector<int> alpha(static_cast<std::size_t>(r), 1);
  auto next_pattern = [r](std::vector<int>& v) {
    for (int k = 0; k < r; ++k) {
      if (v[static_cast<std::size_t>(k)] == 1) {
        v[static_cast<std::size_t>(k)] = 2;
        return true;
      }
      v[static_cast<std::size_t>(k)] = 1;
    }
    return false;
  };

  do {
    std::vector<int> b(static_cast<std::size_t>(r), 1);
    do {
      int weight = 1;
      for (int k = 0; k < r && weight != 0; ++k)
        weight *= kLambda[alpha[static_cast<std::size_t>(k)]][b[static_cast<std::size_t>(k)]];
      if (weight == 0) continue;
      PolyFunctional contraction;
      contraction.raise_truncation(n);
      for_each_tuple(n, r, [&](const std::vector<std::uint32_t>& idx) {
        MultiIndex mf, mg;
        for (int k = 0; k < r; ++k) {
          std::uint32_t i = idx[static_cast<std::size_t>(k)];
          mf = mf.raised(BasisSlot{leg_of(alpha[static_cast<std::size_t>(k)]), i});
          mg = mg.raised(BasisSlot{leg_of(b[static_cast<std::size_t>(k)]), i});
        }
        const DerivCache::Entry& dfm = df.get(mf);
        if (dfm.zero) return;
        const DerivCache::Entry& dgm = dg.get(mg);
        if (dgm.zero) return;
        contraction += dfm.poly * dgm.poly;
      });
      out += contraction.scaled(Rational(weight));
    } while (next_pattern(b));
  } while (next_pattern(alpha));

  return out;
}

namespace {

std::uint32_t leg_degree(const PolyFunctional& f, Leg leg) {
  std::uint32_t d = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t md = 0;
    for (const auto& [slot, exp] : m.entries())
      if (slot.leg == leg) md += exp;
    d = std::max(d, md);
  }
  return d;
}

}  // namespace

HbarPoly star_normal_direct(const PolyFunctional& f, const PolyFunctional& g, int order) {
  HbarPoly out(order);
  out.at(0) = f * g;
  std::uint32_t n = std::max(f.truncation(), g.truncation());
  DerivCache df(f, kNoCap), dg(g, kNoCap);

  // only H-derivatives hit the left factor and H*-derivatives the right one
  const int max_r = static_cast<int>(std::min(leg_degree(f, Leg::H), leg_degree(g, Leg::Hstar)));
  Rational weight(1);  // 2^r / r!
  for (int r = 1; r <= std::min(order, max_r); ++r) {
    weight = weight * Rational(2) / Rational(r);
    PolyFunctional contraction;
    contraction.raise_truncation(n);
    for_each_tuple(n, r, [&](const std::vector<std::uint32_t>& idx) {
      MultiIndex mf, mg;
      for (std::uint32_t i : idx) {
        mf = mf.raised(slot_x(i));
        mg = mg.raised(slot_eta(i));
      }
      const DerivCache::Entry& dfm = df.get(mf);
      if (dfm.zero) return;
      const DerivCache::Entry& dgm = dg.get(mg);
      if (dgm.zero) return;
      contraction += dfm.poly * dgm.poly;
    });
    out.at(r) = contraction.scaled(weight);
  }
  out.set_exact(max_r <= order);
  return out;
}

}  // namespace starq
