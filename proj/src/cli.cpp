#include "starq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "starq/checks.hpp"
#include "starq/errors.hpp"
#include "starq/io.hpp"
#include "starq/witt.hpp"

namespace starq {

namespace {

using io::Json;
using io::Report;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInadmissible = 2;

void print_report(const Report& r) { std::cout << io::emit_report(r) << "\n"; }

struct FamilyOpts {
  std::string family = "moyal";
  std::string kernel_spec;

  OperatorKernel kernel() const {
    if (family == "moyal") return OperatorKernel::zero();
    if (family == "normal") return OperatorKernel::identity();
    if (family == "kernel") {
      if (kernel_spec.empty()) throw ParseError("--family kernel requires --kernel <spec>");
      return io::parse_kernel(kernel_spec);
    }
    throw ParseError("unknown family \"" + family + "\"");
  }

  Json describe() const {
    Json j{{"family", family}};
    j["kernel"] = io::to_json(kernel());
    return j;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "star-product family: moyal | normal | kernel")
        ->check(CLI::IsMember({"moyal", "normal", "kernel"}));
    cmd->add_option("--kernel", kernel_spec, "kernel spec (JSON, or zero|identity)");
  }
};

Json outcome_json(const SuiteOutcome& o) {
  Json j{{"trials", o.trials}, {"failures", o.failures}};
  if (!o.ok()) j["first_failure"] = o.first_failure;
  return j;
}

int finish_suites(Report& r, bool all_ok) {
  r.verdicts["all_identities_hold"] = all_ok;
  print_report(r);
  return all_ok ? kExitOk : kExitViolation;
}

// --- star -----------------------------------------------------------------

struct StarCmd {
  FamilyOpts fam;
  std::string lhs, rhs;
  int order = 4;

  int run() const {
    OperatorKernel a = fam.kernel();
    auto parse_side = [](const std::string& text) {
      auto v = io::parse_functional(text);
      if (!std::holds_alternative<PolyFunctional>(v))
        throw ParseError("star expects polynomial operands; use symbol-star for exponentials");
      return std::get<PolyFunctional>(v);
    };
    PolyFunctional f = parse_side(lhs);
    PolyFunctional g = parse_side(rhs);
    HbarPoly product = star(StarFamily::of_kernel(a), f, g, order);

    Report r;
    r.command = "star";
    r.inputs = fam.describe();
    r.inputs["order"] = order;
    r.inputs["lhs"] = io::to_json(f);
    r.inputs["rhs"] = io::to_json(g);
    r.outputs["product"] = io::to_json(product);
    r.verdicts["exact"] = product.exact();
    print_report(r);
    return kExitOk;
  }
};

// --- symbol-star ------------------------------------------------------------

struct SymbolStarCmd {
  FamilyOpts fam;
  std::string lhs, rhs;
  int order = 4;

  int run() const {
    OperatorKernel a = fam.kernel();
    auto parse_side = [](const std::string& text) {
      auto v = io::parse_functional(text);
      if (!std::holds_alternative<ExpFunctional>(v))
        throw ParseError("symbol-star expects exponential operands (JSON with y/xi terms)");
      return std::get<ExpFunctional>(v);
    };
    ExpFunctional e1 = parse_side(lhs);
    ExpFunctional e2 = parse_side(rhs);
    ExpFunctional product = symbol_star(a, e1, e2, order);

    Report r;
    r.command = "symbol-star";
    r.inputs = fam.describe();
    r.inputs["order"] = order;
    r.inputs["lhs"] = io::to_json(e1);
    r.inputs["rhs"] = io::to_json(e2);
    r.outputs["product"] = io::to_json(product);
    print_report(r);
    return kExitOk;
  }
};

// --- assoc ------------------------------------------------------------------

struct AssocCmd {
  FamilyOpts fam;
  int trials = 50;
  int order = 9;
  std::uint64_t seed = 1;

  int run() const {
    OperatorKernel a = fam.kernel();
    SuiteOutcome o = check_assoc(StarFamily::of_kernel(a), trials, seed, order);

    Report r;
    r.command = "assoc";
    r.inputs = fam.describe();
    r.inputs["order"] = order;
    r.inputs["seed"] = seed;
    r.inputs["trials"] = trials;
    r.outputs["suite"] = outcome_json(o);
    r.outputs["residual_zero"] = o.ok();
    return finish_suites(r, o.ok());
  }
};

// --- equiv ------------------------------------------------------------------

struct EquivCmd {
  std::string a_spec, b_spec;
  int verify_order = 4;
  int trials = 50;
  std::uint64_t seed = 1;

  int run() const {
    OperatorKernel a = io::parse_kernel(a_spec);
    OperatorKernel b = io::parse_kernel(b_spec);
    EquivalenceVerdict verdict = equiv_certify(a, b);

    Report r;
    r.command = "equiv";
    r.inputs["a"] = io::to_json(a);
    r.inputs["b"] = io::to_json(b);
    r.inputs["verify_order"] = verify_order;
    r.inputs["seed"] = seed;
    r.inputs["trials"] = trials;
    r.verdicts["equivalence"] = io::to_json(verdict);

    if (verdict.verdict == Equivalence::Undecidable) {
      print_report(r);
      return kExitInadmissible;
    }
    if (verdict.verdict == Equivalence::NotEquivalent) {
      print_report(r);
      return kExitOk;
    }

    SuiteOutcome poly = check_equiv_intertwine_poly(a, b, trials, seed, verify_order);
    SuiteOutcome symb = check_equiv_intertwine_symbol(a, b, trials, seed + 1, verify_order, 4);
    r.outputs["intertwining_poly"] = outcome_json(poly);
    r.outputs["intertwining_symbol"] = outcome_json(symb);
    return finish_suites(r, poly.ok() && symb.ok());
  }
};

// --- hs ---------------------------------------------------------------------

struct HsCmd {
  std::string kernel_spec, functional_text, quadratic_spec;

  int run() const {
    if (kernel_spec.empty() && functional_text.empty() && quadratic_spec.empty())
      throw ParseError("hs needs at least one of --kernel, --functional, --quadratic");

    Report r;
    r.command = "hs";
    if (!kernel_spec.empty()) {
      OperatorKernel k = io::parse_kernel(kernel_spec);
      r.inputs["kernel"] = io::to_json(k);
      r.outputs["classification"] = io::to_json(k.hs_classify());
    }
    if (!functional_text.empty()) {
      auto v = io::parse_functional(functional_text);
      if (!std::holds_alternative<PolyFunctional>(v))
        throw ParseError("--functional expects a polynomial");
      const auto& f = std::get<PolyFunctional>(v);
      r.inputs["functional"] = io::to_json(f);
      r.outputs["functional_membership"] = io::to_json(hs_check_fn(f));
    }
    if (!quadratic_spec.empty()) {
      OperatorKernel k = io::parse_kernel(quadratic_spec);
      r.inputs["quadratic_kernel"] = io::to_json(k);
      r.outputs["quadratic_membership"] = io::to_json(hs_check_quadratic(k));
    }
    print_report(r);
    return kExitOk;
  }
};

// --- hochschild ---------------------------------------------------------------

struct HochschildCmd {
  std::string check = "cocycle";
  std::string kernel_spec = "identity";
  int trials = 50;
  std::uint64_t seed = 1;

  int run() const {
    OperatorKernel k = io::parse_kernel(kernel_spec);

    Report r;
    r.command = "hochschild";
    r.inputs["check"] = check;
    r.inputs["kernel"] = io::to_json(k);
    r.inputs["seed"] = seed;
    r.inputs["trials"] = trials;

    SuiteOutcome o;
    if (check == "cocycle") {
      o = check_cocycle(k, trials, seed);
    } else if (check == "coboundary") {
      o = check_coboundary(k, trials, seed);  // NonHSKernelError for inadmissible kernels
    } else if (check == "delta-squared") {
      o = check_delta_squared(k, trials, seed);
    } else {
      throw ParseError("unknown check \"" + check + "\"");
    }
    r.outputs["suite"] = outcome_json(o);
    return finish_suites(r, o.ok());
  }
};

// --- witt ---------------------------------------------------------------------

struct WittCmd {
  int table_max = -1;
  int jacobi_max = -1;
  std::string witness_list;
  std::uint64_t truncation = 0;

  int run() const {
    if (table_max < 0 && jacobi_max < 0 && witness_list.empty())
      throw ParseError("witt needs one of --table, --jacobi, --witness");

    Report r;
    r.command = "witt";
    bool ok = true;

    if (table_max >= 0) {
      r.inputs["table_max"] = table_max;
      Json table = Json::array();
      for (int m = 0; m <= table_max; ++m) {
        for (int n = 0; n <= table_max; ++n) {
          WittPoly lhs = witt_bracket(WittPoly::generator(static_cast<std::uint32_t>(m)),
                                      WittPoly::generator(static_cast<std::uint32_t>(n)));
          WittPoly expected = WittPoly::generator(static_cast<std::uint32_t>(m + n))
                                  .scaled(Rational(m - n));
          if (lhs != expected) ok = false;
          table.push_back(Json{{"m", m},
                               {"n", n},
                               {"coeff", Rational(m - n).str()},
                               {"phi", m + n}});
        }
      }
      r.outputs["table"] = std::move(table);
      r.verdicts["structure_constants"] = ok ? "pass" : "fail";
    }

    if (jacobi_max >= 0) {
      r.inputs["jacobi_max"] = jacobi_max;
      bool jacobi_ok = true;
      for (int a = 0; a <= jacobi_max; ++a)
        for (int b = 0; b <= jacobi_max; ++b)
          for (int c = 0; c <= jacobi_max; ++c) {
            WittPoly pa = WittPoly::generator(static_cast<std::uint32_t>(a));
            WittPoly pb = WittPoly::generator(static_cast<std::uint32_t>(b));
            WittPoly pc = WittPoly::generator(static_cast<std::uint32_t>(c));
            WittPoly residual = witt_bracket(pa, witt_bracket(pb, pc)) +
                                witt_bracket(pb, witt_bracket(pc, pa)) +
                                witt_bracket(pc, witt_bracket(pa, pb));
            if (!residual.is_zero()) jacobi_ok = false;
          }
      ok = ok && jacobi_ok;
      r.outputs["jacobi_residuals_zero"] = jacobi_ok;
      r.verdicts["jacobi"] = jacobi_ok ? "pass" : "fail";
    }

    if (!witness_list.empty()) {
      std::vector<std::uint64_t> indices;
      std::size_t pos = 0;
      while (pos < witness_list.size()) {
        std::size_t comma = witness_list.find(',', pos);
        std::string part = witness_list.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (part.empty() || part.size() > 15 ||
            part.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("witness indices must be positive integers, got \"" + part + "\"");
        indices.push_back(std::stoull(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      std::uint64_t trunc = truncation;
      for (std::uint64_t i : indices) trunc = std::max(trunc, i);
      r.inputs["witness"] = witness_list;
      r.inputs["truncation"] = trunc;

      Json values = Json::array();
      bool increasing = true;
      const WittWitnessValue* prev = nullptr;
      std::vector<WittWitnessValue> computed;
      computed.reserve(indices.size());
      for (std::uint64_t i : indices) computed.push_back(witt_unbounded_witness(i, trunc));
      for (const auto& w : computed) {
        Json entry{{"i", w.index}, {"exact", w.exact}};
        if (w.exact) {
          entry["value"] = w.lower.str();
        } else {
          entry["lower"] = w.lower.str();
          entry["upper"] = w.upper.str();
        }
        values.push_back(std::move(entry));
        if (prev && !(prev->upper < w.lower || prev->index < w.index)) increasing = false;
        prev = &w;
      }
      r.outputs["witness_values"] = std::move(values);
      r.verdicts["witness_growth"] = increasing ? "increasing" : "not_increasing";
    }

    print_report(r);
    return ok ? kExitOk : kExitViolation;
  }
};

}  // namespace

int run_cli(int argc, const char* const argv[]) {
  CLI::App app{"starq: exact star-product and deformation-equivalence engine on H + H*"};
  app.require_subcommand(1);

  StarCmd star_cmd;
  auto* star_sub = app.add_subcommand("star", "product of two polynomial functionals");
  star_cmd.fam.attach(star_sub);
  star_sub->add_option("--lhs", star_cmd.lhs, "left operand (text grammar or JSON)")->required();
  star_sub->add_option("--rhs", star_cmd.rhs, "right operand")->required();
  star_sub->add_option("--order", star_cmd.order, "hbar truncation order")
      ->check(CLI::NonNegativeNumber);

  SymbolStarCmd symbol_cmd;
  auto* symbol_sub = app.add_subcommand("symbol-star", "product of exponential functionals");
  symbol_cmd.fam.attach(symbol_sub);
  symbol_sub->add_option("--lhs", symbol_cmd.lhs, "left operand (ExpFunctional JSON)")->required();
  symbol_sub->add_option("--rhs", symbol_cmd.rhs, "right operand")->required();
  symbol_sub->add_option("--order", symbol_cmd.order, "hbar truncation order")
      ->check(CLI::NonNegativeNumber);

  AssocCmd assoc_cmd;
  auto* assoc_sub = app.add_subcommand("assoc", "randomized exact associativity suite");
  assoc_cmd.fam.attach(assoc_sub);
  assoc_sub->add_option("--trials", assoc_cmd.trials, "number of random triples")
      ->check(CLI::PositiveNumber);
  assoc_sub->add_option("--order", assoc_cmd.order, "hbar truncation order")
      ->check(CLI::NonNegativeNumber);
  assoc_sub->add_option("--seed", assoc_cmd.seed, "suite seed");

  EquivCmd equiv_cmd;
  auto* equiv_sub = app.add_subcommand("equiv", "equivalence classification + intertwining check");
  equiv_sub->add_option("--a", equiv_cmd.a_spec, "first kernel spec")->required();
  equiv_sub->add_option("--b", equiv_cmd.b_spec, "second kernel spec")->required();
  equiv_sub->add_option("--verify-order", equiv_cmd.verify_order, "intertwining check order")
      ->check(CLI::NonNegativeNumber);
  equiv_sub->add_option("--trials", equiv_cmd.trials, "intertwining trials")
      ->check(CLI::PositiveNumber);
  equiv_sub->add_option("--seed", equiv_cmd.seed, "suite seed");

  HsCmd hs_cmd;
  auto* hs_sub = app.add_subcommand("hs", "Hilbert-Schmidt classification and membership");
  hs_sub->add_option("--kernel", hs_cmd.kernel_spec, "classify an operator kernel");
  hs_sub->add_option("--functional", hs_cmd.functional_text, "check a polynomial functional");
  hs_sub->add_option("--quadratic", hs_cmd.quadratic_spec,
                     "check the kernel-quadratic Q_A for the given kernel");

  HochschildCmd hoch_cmd;
  auto* hoch_sub = app.add_subcommand("hochschild", "cocycle / coboundary / delta-squared suites");
  hoch_sub->add_option("--check", hoch_cmd.check, "cocycle | coboundary | delta-squared")
      ->required()
      ->check(CLI::IsMember({"cocycle", "coboundary", "delta-squared"}));
  hoch_sub->add_option("--kernel", hoch_cmd.kernel_spec, "kernel spec")->required();
  hoch_sub->add_option("--trials", hoch_cmd.trials, "number of random tuples")
      ->check(CLI::PositiveNumber);
  hoch_sub->add_option("--seed", hoch_cmd.seed, "suite seed");

  WittCmd witt_cmd;
  auto* witt_sub = app.add_subcommand("witt", "Witt bracket tables and unboundedness witness");
  witt_sub->add_option("--table", witt_cmd.table_max, "structure constants up to this index");
  witt_sub->add_option("--jacobi", witt_cmd.jacobi_max, "Jacobi residuals up to this index");
  witt_sub->add_option("--witness", witt_cmd.witness_list, "comma-separated witness indices");
  witt_sub->add_option("--truncation", witt_cmd.truncation, "witness point truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInadmissible;
  }

  auto timed = [](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    int rc = fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "elapsed_ms " << ms << "\n";
    return rc;
  };

  try {
    if (star_sub->parsed()) return timed([&] { return star_cmd.run(); });
    if (symbol_sub->parsed()) return timed([&] { return symbol_cmd.run(); });
    if (assoc_sub->parsed()) return timed([&] { return assoc_cmd.run(); });
    if (equiv_sub->parsed()) return timed([&] { return equiv_cmd.run(); });
    if (hs_sub->parsed()) return timed([&] { return hs_cmd.run(); });
    if (hoch_sub->parsed()) return timed([&] { return hoch_cmd.run(); });
    if (witt_sub->parsed()) return timed([&] { return witt_cmd.run(); });
  } catch (const Error& e) {
    Report r;
    r.command = "error";
    r.verdicts["error"] = Json{{"message", e.what()}};
    print_report(r);
    std::cerr << "error: " << e.what() << "\n";
    return kExitInadmissible;
  }
  return kExitInadmissible;
}

}  // namespace starq
