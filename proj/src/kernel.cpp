#include "starq/kernel.hpp"

#include <map>
#include <sstream>

#include "starq/errors.hpp"

namespace starq {

std::string hs_class_name(HSClass c) {
  switch (c) {
    case HSClass::HilbertSchmidt: return "hilbert_schmidt";
    case HSClass::BoundedNotHS: return "bounded_not_hs";
    case HSClass::Unbounded: return "unbounded";
  }
  return "?";
}

OperatorKernel OperatorKernel::identity() {
  OperatorKernel k;
  k.kind_ = Kind::Identity;
  return k;
}

OperatorKernel OperatorKernel::finite(std::vector<std::vector<Rational>> rows) {
  for (const auto& row : rows)
    if (row.size() != rows.size()) throw Error("finite kernel matrix must be square");
  OperatorKernel k;
  k.kind_ = Kind::Finite;
  k.m_ = std::move(rows);
  return k;
}

OperatorKernel OperatorKernel::diag_power(const Rational& p) {
  if (p.is_zero()) return diag_constant(Rational(1));  // i^0 = 1
  OperatorKernel k;
  k.kind_ = Kind::Diagonal;
  k.fam_ = DiagFamily::PowerLaw;
  k.param_ = p;
  return k;
}

OperatorKernel OperatorKernel::diag_geometric(const Rational& r) {
  if (r.is_zero()) return zero();                       // 0^i = 0 for i >= 1
  if (r.is_one()) return diag_constant(Rational(1));    // 1^i = 1
  OperatorKernel k;
  k.kind_ = Kind::Diagonal;
  k.fam_ = DiagFamily::Geometric;
  k.param_ = r;
  return k;
}

OperatorKernel OperatorKernel::diag_constant(const Rational& c) {
  if (c.is_zero()) return zero();
  OperatorKernel k;
  k.kind_ = Kind::Diagonal;
  k.fam_ = DiagFamily::Constant;
  k.param_ = c;
  return k;
}

OperatorKernel OperatorKernel::difference(OperatorKernel a, OperatorKernel b) {
  OperatorKernel k;
  k.kind_ = Kind::Diff;
  k.a_ = std::make_shared<const OperatorKernel>(std::move(a));
  k.b_ = std::make_shared<const OperatorKernel>(std::move(b));
  return k;
}

Rational OperatorKernel::diag_entry(std::uint32_t i) const {
  switch (fam_) {
    case DiagFamily::PowerLaw: {
      if (!param_.is_integer())
        throw InexactOperationError("power-law diagonal with fractional exponent " +
                                    param_.str() + " has no exact rational entries");
      return Rational(static_cast<long>(i)).pow(param_.to_long_numerator());
    }
    case DiagFamily::Geometric:
      return param_.pow(static_cast<long>(i));
    case DiagFamily::Constant:
      return param_;
  }
  return Rational();
}

Rational OperatorKernel::entry(std::uint32_t i, std::uint32_t j) const {
  switch (kind_) {
    case Kind::Zero:
      return Rational();
    case Kind::Identity:
      return i == j ? Rational(1) : Rational();
    case Kind::Finite:
      if (i >= 1 && j >= 1 && i <= dim() && j <= dim()) return m_[i - 1][j - 1];
      return Rational();
    case Kind::Diagonal:
      return i == j ? diag_entry(i) : Rational();
    case Kind::Diff:
      return a_->entry(i, j) - b_->entry(i, j);
  }
  return Rational();
}

SparseVec OperatorKernel::apply(const SparseVec& v) const {
  SparseVec out;
  switch (kind_) {
    case Kind::Zero:
      break;
    case Kind::Identity:
      out = v;
      break;
    case Kind::Finite: {
      for (std::uint32_t i = 1; i <= dim(); ++i) {
        Rational acc;
        for (const auto& [j, c] : v)
          if (j >= 1 && j <= dim()) acc += m_[i - 1][j - 1] * c;
        if (!acc.is_zero()) out[i] = acc;
      }
      break;
    }
    case Kind::Diagonal: {
      for (const auto& [i, c] : v) {
        Rational w = diag_entry(i) * c;
        if (!w.is_zero()) out[i] = w;
      }
      break;
    }
    case Kind::Diff: {
      SparseVec bv = b_->apply(v);
      for (auto& [i, c] : bv) c = -c;
      out = sparse_add(a_->apply(v), bv);
      break;
    }
  }
  return out;
}

bool operator==(const OperatorKernel& a, const OperatorKernel& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case OperatorKernel::Kind::Zero:
    case OperatorKernel::Kind::Identity:
      return true;
    case OperatorKernel::Kind::Finite:
      return a.m_ == b.m_;
    case OperatorKernel::Kind::Diagonal:
      return a.fam_ == b.fam_ && a.param_ == b.param_;
    case OperatorKernel::Kind::Diff:
      return *a.a_ == *b.a_ && *a.b_ == *b.b_;
  }
  return false;
}

OperatorKernel kernel_sub(const OperatorKernel& a, const OperatorKernel& b) {
  using Kind = OperatorKernel::Kind;
  using Fam = OperatorKernel::DiagFamily;
  if (a == b) return OperatorKernel::zero();
  if (b.kind() == Kind::Zero) return a;

  if (a.kind() == Kind::Zero) {
    if (b.kind() == Kind::Finite) {
      auto rows = b.rows();
      for (auto& row : rows)
        for (auto& e : row) e = -e;
      return OperatorKernel::finite(std::move(rows));
    }
    if (b.kind() == Kind::Identity) return OperatorKernel::diag_constant(Rational(-1));
    if (b.kind() == Kind::Diagonal && b.family() == Fam::Constant)
      return OperatorKernel::diag_constant(-b.parameter());
    return OperatorKernel::difference(a, b);
  }

  // identity and constant diagonals share the lambda_i = const shape
  auto const_value = [](const OperatorKernel& k) -> const Rational* {
    static const Rational one(1);
    if (k.kind() == Kind::Identity) return &one;
    if (k.kind() == Kind::Diagonal && k.family() == Fam::Constant) return &k.parameter();
    return nullptr;
  };
  const Rational* ca = const_value(a);
  const Rational* cb = const_value(b);
  if (ca && cb) return OperatorKernel::diag_constant(*ca - *cb);

  if (a.kind() == Kind::Finite && b.kind() == Kind::Finite) {
    std::size_t n = std::max(a.rows().size(), b.rows().size());
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = 1; j <= n; ++j) rows[i - 1][j - 1] = a.entry(i, j) - b.entry(i, j);
    return OperatorKernel::finite(std::move(rows));
  }

  // same diagonal family with equal parameter was caught by a == b above
  return OperatorKernel::difference(a, b);
}

namespace {

// Symbolic diagonal profile of a (signed) combination of structured kernels:
// lambda_i = sum_p coeff_p * i^p + sum_r coeff_r * r^i, modulo a finite-rank
// (hence Hilbert-Schmidt) part that cannot affect the classification.
struct DiagProfile {
  std::map<Rational, Rational> powers;  // exponent p -> coefficient (p = 0 is the constant part)
  std::map<Rational, Rational> geoms;   // ratio r -> coefficient, r not in {0, 1}
  bool finite_part = false;

  void add_power(const Rational& p, const Rational& c) {
    auto [it, inserted] = powers.emplace(p, c);
    if (!inserted) it->second += c;
  }
  void add_geom(const Rational& r, const Rational& c) {
    auto [it, inserted] = geoms.emplace(r, c);
    if (!inserted) it->second += c;
  }
};

void flatten(const OperatorKernel& k, const Rational& sign, DiagProfile& e) {
  using Kind = OperatorKernel::Kind;
  using Fam = OperatorKernel::DiagFamily;
  switch (k.kind()) {
    case Kind::Zero:
      return;
    case Kind::Finite:
      e.finite_part = true;
      return;
    case Kind::Identity:
      e.add_power(Rational(0), sign);
      return;
    case Kind::Diagonal:
      switch (k.family()) {
        case Fam::Constant: e.add_power(Rational(0), sign * k.parameter()); return;
        case Fam::PowerLaw: e.add_power(k.parameter(), sign); return;
        case Fam::Geometric: e.add_geom(k.parameter(), sign); return;
      }
      return;
    case Kind::Diff:
      flatten(k.diff_lhs(), sign, e);
      flatten(k.diff_rhs(), -sign, e);
      return;
  }
}

HSClassification classify_profile(DiagProfile e) {
  const Rational half(1, 2);
  std::string mod = e.finite_part ? " (modulo a finite-rank Hilbert-Schmidt part)" : "";

  for (auto it = e.powers.begin(); it != e.powers.end();)
    it = it->second.is_zero() ? e.powers.erase(it) : std::next(it);
  for (auto it = e.geoms.begin(); it != e.geoms.end();)
    it = it->second.is_zero() ? e.geoms.erase(it) : std::next(it);

  // Geometric ratios r and -r interfere by parity: on even indices the
  // coefficients add, on odd indices they subtract. A ratio class survives
  // unless both parity combinations vanish.
  std::map<Rational, std::pair<Rational, Rational>> ratio;  // |r| -> (even, odd)
  for (const auto& [r, c] : e.geoms) {
    Rational mag = r.abs();
    auto& [even, odd] = ratio[mag];
    even += c;
    odd += (r.sign() > 0) ? c : -c;
  }

  for (const auto& [mag, eo] : ratio)
    if (mag > Rational(1) && !(eo.first.is_zero() && eo.second.is_zero()))
      return {HSClass::Unbounded,
              "diagonal contains a surviving geometric term with ratio magnitude " + mag.str() +
                  " > 1" + mod};
  for (const auto& [p, c] : e.powers)
    if (p.sign() > 0)
      return {HSClass::Unbounded, "diagonal contains i^" + p.str() + " with p > 0" + mod};

  // Bounded. Square-summability: drop the convergent pieces (|r| < 1,
  // 2p < -1), then anything left forces a divergent sum of squares.
  Rational even_const, odd_const;
  if (auto it = e.powers.find(Rational(0)); it != e.powers.end()) {
    even_const += it->second;
    odd_const += it->second;
  }
  if (auto it = ratio.find(Rational(1)); it != ratio.end()) {
    even_const += it->second.first;
    odd_const += it->second.second;
  }
  std::vector<std::pair<Rational, Rational>> mid_powers;  // -1/2 <= p < 0
  for (const auto& [p, c] : e.powers)
    if (p.sign() < 0 && p >= -half) mid_powers.emplace_back(p, c);

  if (mid_powers.empty() && even_const.is_zero() && odd_const.is_zero()) {
    return {HSClass::HilbertSchmidt,
            "all surviving diagonal components are square-summable (p-series with 2p < -1, "
            "geometric with |r| < 1)" + mod};
  }
  std::ostringstream why;
  why << "bounded but not square-summable:";
  if (!even_const.is_zero() || !odd_const.is_zero())
    why << " constant part (" << even_const << " on even indices, " << odd_const
        << " on odd) does not vanish;";
  for (const auto& [p, c] : mid_powers)
    why << " term " << c << "*i^" << p << " has 2p >= -1 (divergent p-series);";
  return {HSClass::BoundedNotHS, why.str() + mod};
}

}  // namespace

HSClassification OperatorKernel::hs_classify() const {
  switch (kind_) {
    case Kind::Zero:
      return {HSClass::HilbertSchmidt, "zero operator"};
    case Kind::Finite: {
      Rational sum;
      for (const auto& row : m_)
        for (const auto& x : row) sum += x * x;
      return {HSClass::HilbertSchmidt, "finite rank; sum of squared entries = " + sum.str()};
    }
    case Kind::Identity:
      return {HSClass::BoundedNotHS,
              "diagonal entries are 1; sum_i |delta_ii|^2 = sum_i 1 diverges"};
    case Kind::Diagonal:
      switch (fam_) {
        case DiagFamily::Constant:
          return {HSClass::BoundedNotHS,
                  "constant diagonal " + param_.str() + " != 0; sum of squares diverges"};
        case DiagFamily::PowerLaw: {
          const Rational two_p = param_ * Rational(2);
          if (param_.sign() > 0)
            return {HSClass::Unbounded, "lambda_i = i^" + param_.str() + " grows without bound"};
          if (two_p < Rational(-1))
            return {HSClass::HilbertSchmidt,
                    "sum_i i^(" + two_p.str() + ") converges (p-series, 2p < -1)"};
          return {HSClass::BoundedNotHS, "|i^" + param_.str() +
                                             "| <= 1 but sum_i i^(" + two_p.str() +
                                             ") diverges (2p >= -1)"};
        }
        case DiagFamily::Geometric: {
          const Rational mag = param_.abs();
          if (mag > Rational(1))
            return {HSClass::Unbounded, "|r| = " + mag.str() + " > 1: lambda_i = r^i unbounded"};
          if (mag == Rational(1))
            return {HSClass::BoundedNotHS,
                    "lambda_i = (" + param_.str() + ")^i has |lambda_i| = 1; sum of squares diverges"};
          const Rational r2 = param_ * param_;
          const Rational closed = r2 / (Rational(1) - r2);
          return {HSClass::HilbertSchmidt, "sum_i r^(2i) = r^2/(1-r^2) = " + closed.str()};
        }
      }
      return {HSClass::HilbertSchmidt, ""};
    case Kind::Diff: {
      DiagProfile e;
      flatten(*this, Rational(1), e);
      return classify_profile(std::move(e));
    }
  }
  return {HSClass::HilbertSchmidt, ""};
}

HSCheckResult hs_check_quadratic(const OperatorKernel& a) {
  HSClassification c = a.hs_classify();
  std::string base = "sum_{ij} |d_i d_j* Q_A|^2 = sum_{ij} |A_ij|^2; ";
  if (c.cls == HSClass::HilbertSchmidt) return {HSVerdict::InFHS, base + c.certificate};
  return {HSVerdict::NotInFHS, base + c.certificate};
}

}  // namespace starq
