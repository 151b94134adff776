#include "starq/hochschild.hpp"

#include <algorithm>

#include "starq/errors.hpp"

namespace starq {

namespace {

std::vector<std::uint32_t> merged_support(const PolyFunctional& f, const PolyFunctional& g,
                                          Leg leg) {
  std::vector<std::uint32_t> idx = f.support(leg);
  for (std::uint32_t i : g.support(leg)) idx.push_back(i);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

/// -sum_ij S_ij d_i d_j* F without the admissibility check.
PolyFunctional ta_apply(const OperatorKernel& s, const PolyFunctional& f) {
  PolyFunctional out;
  out.raise_truncation(f.truncation());
  for (std::uint32_t i : f.support(Leg::H)) {
    PolyFunctional di = partial(f, slot_x(i));
    for (std::uint32_t j : di.support(Leg::Hstar)) {
      Rational c = s.entry(i, j);
      if (!c.is_zero()) out -= partial(di, slot_eta(j)).scaled(c);
    }
  }
  return out;
}

}  // namespace

PolyFunctional ea_eval(const OperatorKernel& a, const PolyFunctional& f, const PolyFunctional& g) {
  PolyFunctional out;
  out.raise_truncation(std::max(f.truncation(), g.truncation()));
  for (std::uint32_t i : merged_support(f, g, Leg::H)) {
    PolyFunctional dif = partial(f, slot_x(i));
    PolyFunctional dig = partial(g, slot_x(i));
    if (dif.is_zero() && dig.is_zero()) continue;
    for (std::uint32_t j : merged_support(f, g, Leg::Hstar)) {
      Rational c = a.entry(i, j);
      if (c.is_zero()) continue;
      PolyFunctional sym = dif * partial(g, slot_eta(j)) + dig * partial(f, slot_eta(j));
      out += sym.scaled(c);
    }
  }
  return out;
}

PolyFunctional ta_eval(const OperatorKernel& s, const PolyFunctional& f) {
  HSClassification cls = s.hs_classify();
  if (cls.cls != HSClass::HilbertSchmidt)
    throw NonHSKernelError("transform kernel is not Hilbert-Schmidt (" +
                           hs_class_name(cls.cls) + "): " + cls.certificate);
  return ta_apply(s, f);
}

struct Cochain::Impl {
  enum class Tag { Ea, Ta, StarR, Delta, Sum };

  Tag tag;
  int arity = 2;
  OperatorKernel kernel;
  int r = 1;
  std::vector<Cochain> inner;
  std::vector<std::pair<Rational, Cochain>> parts;
};

Cochain Cochain::ea(OperatorKernel a) {
  auto impl = std::make_shared<Impl>();
  impl->tag = Impl::Tag::Ea;
  impl->arity = 2;
  impl->kernel = std::move(a);
  return Cochain(std::move(impl));
}

Cochain Cochain::ta(OperatorKernel s) {
  HSClassification cls = s.hs_classify();
  if (cls.cls != HSClass::HilbertSchmidt)
    throw NonHSKernelError("transform kernel is not Hilbert-Schmidt (" +
                           hs_class_name(cls.cls) + "): " + cls.certificate);
  auto impl = std::make_shared<Impl>();
  impl->tag = Impl::Tag::Ta;
  impl->arity = 1;
  impl->kernel = std::move(s);
  return Cochain(std::move(impl));
}

Cochain Cochain::star_r(OperatorKernel a, int r) {
  auto impl = std::make_shared<Impl>();
  impl->tag = Impl::Tag::StarR;
  impl->arity = 2;
  impl->kernel = std::move(a);
  impl->r = r;
  return Cochain(std::move(impl));
}

Cochain Cochain::delta_of(Cochain inner) {
  auto impl = std::make_shared<Impl>();
  impl->tag = Impl::Tag::Delta;
  impl->arity = inner.arity() + 1;
  impl->inner.push_back(std::move(inner));
  return Cochain(std::move(impl));
}

Cochain Cochain::scaled_sum(std::vector<std::pair<Rational, Cochain>> parts) {
  if (parts.empty()) throw Error("scaled_sum needs at least one part");
  int k = parts.front().second.arity();
  for (const auto& [c, part] : parts)
    if (part.arity() != k) throw ArityError("scaled_sum parts must share one arity");
  auto impl = std::make_shared<Impl>();
  impl->tag = Impl::Tag::Sum;
  impl->arity = k;
  impl->parts = std::move(parts);
  return Cochain(std::move(impl));
}

int Cochain::arity() const { return impl_->arity; }

PolyFunctional Cochain::eval(std::span<const PolyFunctional> args) const {
  if (static_cast<int>(args.size()) != impl_->arity)
    throw ArityError("cochain of arity " + std::to_string(impl_->arity) + " applied to " +
                     std::to_string(args.size()) + " arguments");
  switch (impl_->tag) {
    case Impl::Tag::Ea:
      return ea_eval(impl_->kernel, args[0], args[1]);
    case Impl::Tag::Ta:
      return ta_apply(impl_->kernel, args[0]);
    case Impl::Tag::StarR:
      return star_cochain(impl_->kernel, args[0], args[1], impl_->r);
    case Impl::Tag::Delta:
      return hochschild_delta(impl_->inner.front(), args);
    case Impl::Tag::Sum: {
      PolyFunctional out;
      for (const auto& [c, part] : impl_->parts) out += part.eval(args).scaled(c);
      return out;
    }
  }
  return PolyFunctional();
}

PolyFunctional hochschild_delta(const Cochain& c, std::span<const PolyFunctional> args) {
  const int k = c.arity();
  if (static_cast<int>(args.size()) != k + 1)
    throw ArityError("delta of a " + std::to_string(k) + "-cochain needs " +
                     std::to_string(k + 1) + " arguments, got " + std::to_string(args.size()));

  std::vector<PolyFunctional> buf(args.begin() + 1, args.end());
  PolyFunctional out = args[0] * c.eval(buf);

  Rational sign(-1);
  for (int i = 0; i <= k - 1; ++i) {
    buf.assign(args.begin(), args.end());
    buf[static_cast<std::size_t>(i)] =
        args[static_cast<std::size_t>(i)] * args[static_cast<std::size_t>(i) + 1];
    buf.erase(buf.begin() + i + 1);
    out += c.eval(buf).scaled(sign);
    sign = -sign;
  }

  buf.assign(args.begin(), args.end() - 1);
  out += (c.eval(buf) * args[static_cast<std::size_t>(k)]).scaled(sign);
  return out;
}

HbarPoly equiv_transform_poly(const OperatorKernel& a, const OperatorKernel& b, const HbarPoly& f,
                              int order) {
  OperatorKernel s = kernel_sub(a, b);
  HSClassification cls = s.hs_classify();
  if (cls.cls != HSClass::HilbertSchmidt)
    throw NonHSKernelError("A-B is not Hilbert-Schmidt (" + hs_class_name(cls.cls) +
                           "): " + cls.certificate);

  HbarPoly out(order, f.exact());
  for (int comp = 0; comp <= std::min(f.order(), order); ++comp) {
    PolyFunctional cur = f[comp];
    Rational inv_fact(1);
    int m = 0;
    while (!cur.is_zero()) {
      out.at(comp + m) += cur.scaled(inv_fact);
      if (comp + m == order) {
        if (!ta_apply(s, cur).is_zero()) out.set_exact(false);
        break;
      }
      ++m;
      inv_fact /= Rational(m);
      cur = ta_apply(s, cur);
    }
  }
  return out;
}

std::string equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::NotEquivalent: return "not_equivalent";
    case Equivalence::Undecidable: return "undecidable";
  }
  return "?";
}

EquivalenceVerdict equiv_certify(const OperatorKernel& a, const OperatorKernel& b) {
  OperatorKernel d = kernel_sub(a, b);
  HSClassification cls = d.hs_classify();
  if (cls.cls == HSClass::HilbertSchmidt) {
    return {Equivalence::Equivalent, cls,
            "intertwiner T = exp(hbar T1), T1 the mixed-derivative contraction against A-B; " +
                cls.certificate};
  }
  return {Equivalence::NotEquivalent, cls,
          "entry family of A-B is not square-summable: " + cls.certificate};
}

}  // namespace starq
