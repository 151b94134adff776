#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

#include "starq/functional.hpp"
#include "starq/hbar_series.hpp"
#include "starq/hochschild.hpp"
#include "starq/kernel.hpp"
#include "starq/star.hpp"
#include "starq/symbol.hpp"

namespace starq::io {

/// All emitted JSON preserves insertion order, so serialization is canonical:
/// fixed key order, terms in monomial order, byte-identical across runs.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const HbarSeries& s);
Json to_json(const SparseVec& v);
Json to_json(const Point& p);
Json to_json(const PolyFunctional& f);
Json to_json(const HbarPoly& p);
Json to_json(const ExpFunctional& e);
Json to_json(const OperatorKernel& k);
Json to_json(const HSClassification& c);
Json to_json(const HSCheckResult& c);
Json to_json(const EquivalenceVerdict& v);

Rational parse_rational(const Json& j);
HbarSeries parse_series(const Json& j);
SparseVec parse_sparse_vec(const Json& j);
Point parse_point(const Json& j);
PolyFunctional parse_poly_json(const Json& j);
ExpFunctional parse_exp_json(const Json& j);
OperatorKernel parse_kernel_json(const Json& j);

/// Compact text grammar for polynomials:
///   expr   := term (('+'|'-') term)*
///   term   := coeff? factor*
///   factor := ('x'|'eta') int ('^' int)?
///   coeff  := rational ("p" or "p/q")
/// Indices start at 1. The Unicode minus sign is accepted alongside '-'.
PolyFunctional parse_poly_text(std::string_view text);

/// Accepts the text grammar or JSON; JSON dispatches on the term shape
/// ("mono" vs. "y"/"xi") to a polynomial or an exponential functional.
std::variant<PolyFunctional, ExpFunctional> parse_functional(std::string_view text);

/// Kernel spec: JSON, or the shorthand words "zero" / "identity".
OperatorKernel parse_kernel(std::string_view text);

/// Canonical report envelope emitted by every CLI command. Timing and other
/// run-dependent diagnostics never enter the report; they go to stderr.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json verdicts = Json::object();
};

/// Canonical single-line JSON, schema-versioned. Identical inputs produce
/// byte-identical output.
std::string emit_report(const Report& r);

}  // namespace starq::io
