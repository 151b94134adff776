#include "starq/io.hpp"

#include <cctype>

#include "starq/errors.hpp"

namespace starq::io {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const HbarSeries& s) {
  Json coeffs = Json::array();
  for (int r = 0; r <= s.order(); ++r) coeffs.push_back(s[r].str());
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const SparseVec& v) {
  Json out = Json::object();
  for (const auto& [i, c] : v) out[std::to_string(i)] = c.str();
  return out;
}

Json to_json(const Point& p) {
  return Json{{"x", to_json(p.x)}, {"eta", to_json(p.eta)}};
}

namespace {

std::string slot_name(const BasisSlot& s) {
  return (s.leg == Leg::H ? "x" : "eta") + std::to_string(s.index);
}

}  // namespace

Json to_json(const PolyFunctional& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json mono = Json::object();
    for (const auto& [slot, exp] : m.entries()) mono[slot_name(slot)] = exp;
    terms.push_back(Json{{"coeff", c.str()}, {"mono", std::move(mono)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const HbarPoly& p) {
  Json coeffs = Json::array();
  for (int r = 0; r <= p.order(); ++r) coeffs.push_back(to_json(p[r]));
  return Json{{"order", p.order()}, {"exact", p.exact()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const ExpFunctional& e) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : e.terms()) {
    terms.push_back(Json{{"coeff", to_json(coeff)},
                         {"y", to_json(key.first)},
                         {"xi", to_json(key.second)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const OperatorKernel& k) {
  using Kind = OperatorKernel::Kind;
  using Fam = OperatorKernel::DiagFamily;
  switch (k.kind()) {
    case Kind::Zero:
      return Json{{"kind", "zero"}};
    case Kind::Identity:
      return Json{{"kind", "identity"}};
    case Kind::Finite: {
      Json rows = Json::array();
      for (const auto& row : k.rows()) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
      }
      return Json{{"kind", "finite"}, {"rows", std::move(rows)}};
    }
    case Kind::Diagonal:
      switch (k.family()) {
        case Fam::PowerLaw:
          return Json{{"kind", "diag"}, {"family", "power"}, {"p", k.parameter().str()}};
        case Fam::Geometric:
          return Json{{"kind", "diag"}, {"family", "geom"}, {"r", k.parameter().str()}};
        case Fam::Constant:
          return Json{{"kind", "diag"}, {"family", "const"}, {"c", k.parameter().str()}};
      }
      break;
    case Kind::Diff:
      return Json{{"kind", "diff"}, {"a", to_json(k.diff_lhs())}, {"b", to_json(k.diff_rhs())}};
  }
  return Json{{"kind", "zero"}};
}

Json to_json(const HSClassification& c) {
  return Json{{"class", hs_class_name(c.cls)}, {"certificate", c.certificate}};
}

Json to_json(const HSCheckResult& c) {
  return Json{{"verdict", c.verdict == HSVerdict::InFHS ? "in_fhs" : "not_in_fhs"},
              {"witness", c.witness}};
}

Json to_json(const EquivalenceVerdict& v) {
  return Json{{"verdict", equivalence_name(v.verdict)},
              {"hs_class_of_difference", to_json(v.difference_class)},
              {"witness", v.witness}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::uint32_t parse_index(const std::string& text) {
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    bad("basis index must be a positive integer, got \"" + text + "\"");
  unsigned long v = std::stoul(text);
  if (v < 1) bad("basis indices start at 1");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Rational parse_rational(const Json& j) {
  if (!j.is_string()) bad("rationals serialize as strings \"p\" or \"p/q\"");
  return Rational::from_string(j.get<std::string>());
}

HbarSeries parse_series(const Json& j) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) bad("series \"coeffs\" must be a nonempty array");
  int order = field(j, "order").get<int>();
  if (order + 1 != static_cast<int>(coeffs.size()))
    bad("series order does not match coefficient count");
  HbarSeries s(order);
  for (int r = 0; r <= order; ++r) s.at(r) = parse_rational(coeffs.at(static_cast<std::size_t>(r)));
  return s;
}

SparseVec parse_sparse_vec(const Json& j) {
  if (!j.is_object()) bad("sparse vector must be an object of index -> rational");
  SparseVec out;
  for (const auto& [key, value] : j.items()) {
    Rational c = parse_rational(value);
    if (!c.is_zero()) out[parse_index(key)] = c;
  }
  return out;
}

Point parse_point(const Json& j) {
  Point p;
  if (j.contains("x")) p.x = parse_sparse_vec(j.at("x"));
  if (j.contains("eta")) p.eta = parse_sparse_vec(j.at("eta"));
  return p;
}

namespace {

BasisSlot parse_slot_name(const std::string& name) {
  std::size_t digits;
  Leg leg;
  if (name.rfind("eta", 0) == 0) {
    leg = Leg::Hstar;
    digits = 3;
  } else if (name.rfind('x', 0) == 0) {
    leg = Leg::H;
    digits = 1;
  } else {
    bad("unknown variable \"" + name + "\" (expected x<i> or eta<i>)");
  }
  return BasisSlot{leg, parse_index(name.substr(digits))};
}

}  // namespace

PolyFunctional parse_poly_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  PolyFunctional out;
  for (const Json& term : terms) {
    Rational coeff = parse_rational(field(term, "coeff"));
    MultiIndex mono;
    for (const auto& [name, exp] : field(term, "mono").items()) {
      if (!exp.is_number_unsigned() || exp.get<std::uint64_t>() == 0 ||
          exp.get<std::uint64_t>() > 1000000000)
        bad("exponent of \"" + name + "\" must be a positive integer (at most 10^9)");
      mono = mono.raised(parse_slot_name(name), static_cast<std::uint32_t>(exp.get<std::uint64_t>()));
    }
    out += PolyFunctional::monomial(mono, coeff);
  }
  return out;
}

ExpFunctional parse_exp_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  ExpFunctional out;
  for (const Json& term : terms) {
    HbarSeries coeff = parse_series(field(term, "coeff"));
    SparseVec y = term.contains("y") ? parse_sparse_vec(term.at("y")) : SparseVec{};
    SparseVec xi = term.contains("xi") ? parse_sparse_vec(term.at("xi")) : SparseVec{};
    out.add_term(std::move(y), std::move(xi), coeff);
  }
  return out;
}

OperatorKernel parse_kernel_json(const Json& j) {
  std::string kind = string_field(j, "kind");
  if (kind == "zero") return OperatorKernel::zero();
  if (kind == "identity") return OperatorKernel::identity();
  if (kind == "finite") {
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) bad("\"rows\" must be an array of arrays");
    std::vector<std::vector<Rational>> m;
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != rows.size())
        bad("finite kernel matrix must be square");
      std::vector<Rational> r;
      for (const Json& e : row) r.push_back(parse_rational(e));
      m.push_back(std::move(r));
    }
    return OperatorKernel::finite(std::move(m));
  }
  if (kind == "diag") {
    std::string family = string_field(j, "family");
    if (family == "power") return OperatorKernel::diag_power(parse_rational(field(j, "p")));
    if (family == "geom") return OperatorKernel::diag_geometric(parse_rational(field(j, "r")));
    if (family == "const") return OperatorKernel::diag_constant(parse_rational(field(j, "c")));
    bad("unknown diagonal family \"" + family + "\"");
  }
  if (kind == "diff")
    return kernel_sub(parse_kernel_json(field(j, "a")), parse_kernel_json(field(j, "b")));
  bad("unknown kernel kind \"" + kind + "\"");
  return OperatorKernel::zero();
}

namespace {

/// Recursive-descent reader for the compact polynomial grammar.
class TextReader {
 public:
  explicit TextReader(std::string_view text) : s_(text) {}

  PolyFunctional parse() {
    skip_ws();
    if (eof()) bad_at("empty expression");
    PolyFunctional out;
    int sign = read_sign_opt();
    out += term().scaled(Rational(sign));
    skip_ws();
    while (!eof()) {
      int sep = read_sign();
      out += term().scaled(Rational(sep));
      skip_ws();
    }
    return out;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  /// Consumes '-' / '+' / the UTF-8 minus sign; returns the sign value.
  int read_sign() {
    skip_ws();
    if (eof()) bad_at("expected '+' or '-'");
    if (peek() == '+') { ++pos_; return 1; }
    if (peek() == '-') { ++pos_; return -1; }
    if (consume_unicode_minus()) return -1;
    bad_at("expected '+' or '-'");
    return 1;
  }

  int read_sign_opt() {
    skip_ws();
    if (!eof() && (peek() == '+' || peek() == '-')) return peek() == '+' ? (++pos_, 1) : (++pos_, -1);
    if (consume_unicode_minus()) return -1;
    return 1;
  }

  bool consume_unicode_minus() {
    static constexpr std::string_view kMinus = "\xe2\x88\x92";
    if (s_.substr(pos_, kMinus.size()) == kMinus) {
      pos_ += kMinus.size();
      return true;
    }
    return false;
  }

  std::string_view read_digits() {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) bad_at("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t read_uint() {
    std::size_t start = pos_;
    std::string_view digits = read_digits();
    if (digits.size() > 9) throw ParseError("integer literal too large", start);
    return std::stoull(std::string(digits));
  }

  PolyFunctional term() {
    skip_ws();
    Rational coeff(1);
    bool saw_anything = false;
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string text(read_digits());  // arbitrary-precision numerator
      if (!eof() && peek() == '/') {
        ++pos_;
        std::size_t den_at = pos_;
        std::string den(read_digits());
        if (den.find_first_not_of('0') == std::string::npos)
          throw ParseError("zero denominator", den_at);
        text += "/" + den;
      }
      coeff = Rational::from_string(text);
      saw_anything = true;
    }
    MultiIndex mono;
    while (true) {
      skip_ws();
      if (eof()) break;
      BasisSlot slot;
      if (peek() == 'x') {
        ++pos_;
        slot = slot_x(read_index());
      } else if (s_.substr(pos_, 3) == "eta") {
        pos_ += 3;
        slot = slot_eta(read_index());
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        bad_at("unknown variable (expected x<i> or eta<i>)");
      } else {
        break;
      }
      std::uint64_t exp = 1;
      if (!eof() && peek() == '^') {
        ++pos_;
        exp = read_uint();
      }
      mono = mono.raised(slot, static_cast<std::uint32_t>(exp));
      saw_anything = true;
    }
    if (!saw_anything) bad_at("expected a term");
    return PolyFunctional::monomial(mono, coeff);
  }

  std::uint32_t read_index() {
    std::size_t at = pos_;
    std::uint64_t i = read_uint();
    if (i < 1) throw ParseError("variable indices start at 1", at);
    return static_cast<std::uint32_t>(i);
  }

  [[noreturn]] void bad_at(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     static_cast<std::size_t>(e.byte));
  }
}

}  // namespace

PolyFunctional parse_poly_text(std::string_view text) { return TextReader(text).parse(); }

std::variant<PolyFunctional, ExpFunctional> parse_functional(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j = parse_json_text(text);
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("\"terms\" must be an array");
    if (!terms.empty() && (terms.front().contains("y") || terms.front().contains("xi")))
      return parse_exp_json(j);
    return parse_poly_json(j);
  }
  return parse_poly_text(text);
}

OperatorKernel parse_kernel(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::size_t last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty kernel spec");
  std::string_view body = text.substr(first, last - first + 1);
  if (body == "zero") return OperatorKernel::zero();
  if (body == "identity") return OperatorKernel::identity();
  if (body.front() == '{') return parse_kernel_json(parse_json_text(body));
  throw ParseError("kernel spec must be JSON or one of: zero, identity");
}

std::string emit_report(const Report& r) {
  Json j{{"schema_version", "1"},
         {"command", r.command},
         {"inputs", r.inputs},
         {"outputs", r.outputs},
         {"verdicts", r.verdicts}};
  return j.dump();
}

}  // namespace starq::io
