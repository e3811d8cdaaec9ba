#pragma once

// Command-line front end. Exit codes: 0 success / true, 1 false or failed
// check, 2 usage or parse error.

#include "ntcov/laurent.hpp"
#include "ntcov/models.hpp"
#include "ntcov/product_system.hpp"
#include "ntcov/relations.hpp"
#include "ntcov/text.hpp"
#include "ntcov/word_algebra.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ntcov::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline FockBasisIndex parse_fock_index(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--vector for the nt model must be <j>,<r>");
  }
  const Integer j(text.substr(0, comma));
  const Integer r(text.substr(comma + 1));
  return {j, Positive(r)};
}

inline void print_report(const SuiteReport& report, std::ostream& out) {
  for (const auto& f : report.families) {
    out << (f.ok() ? "PASS " : "FAIL ") << f.name << " (" << f.passed << "/"
        << f.total() << ")\n";
    for (const auto& fail : f.failures) out << "  failed: " << fail << "\n";
  }
  out << (report.all_passed() ? "all " : "some ") << "relations "
      << (report.all_passed() ? "passed" : "FAILED") << ", "
      << report.instances() << " instances\n";
}

}  // namespace detail

/// Runs one command line (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact calculator for the Nica-Toeplitz algebra of the "
               "product system over N^x with fibers C(T), and its quotient Q_N",
               "ntcov"};
  app.require_subcommand(1);

  std::string expr, expr2, algebra, model, vector, suite;
  bool json = false;
  std::int64_t bound = 12;
  std::uint64_t seed = 1;
  std::int64_t exponent_bound = 200;
  std::size_t samples = 4;
  std::int64_t level = 1;
  std::string poly, poly2;

  auto* normalize = app.add_subcommand("normalize", "print the canonical form");
  normalize->add_option("expr", expr, "algebra expression")->required();
  normalize->add_flag("--json", json, "machine-readable output");

  auto* eq = app.add_subcommand("equal", "decide equality of two elements");
  eq->add_option("--algebra", algebra, "nt or qn")
      ->required()
      ->check(CLI::IsMember({"nt", "qn"}));
  eq->add_option("lhs", expr, "first expression")->required();
  eq->add_option("rhs", expr2, "second expression")->required();

  auto* apply = app.add_subcommand("apply", "apply an element to a basis vector");
  apply->add_option("--model", model, "qn or nt")
      ->required()
      ->check(CLI::IsMember({"qn", "nt"}));
  apply->add_option("--vector", vector, "<k> (qn) or <j>,<r> (nt)")->required();
  apply->add_option("expr", expr, "algebra expression")->required();

  auto* check = app.add_subcommand("check", "run a relation suite");
  check->add_option("--suite", suite, "toeplitz | nica | cuntz | laca-raeburn")
      ->required()
      ->check(CLI::IsMember({"toeplitz", "nica", "cuntz", "laca-raeburn"}));
  check->add_option("--max", bound, "largest index / prime")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "seed for sampled exponents");
  check->add_option("--exponents", exponent_bound, "exponent range bound")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--samples", samples, "random exponents per tuple");

  auto* laurent = app.add_subcommand("laurent", "Laurent polynomial calculus");
  laurent->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> unary;
  for (const char* name : {"transfer", "condexp", "inflate"}) {
    auto* sub = laurent->add_subcommand(name);
    sub->add_option("-m", level, "level")->required()->check(CLI::PositiveNumber);
    sub->add_option("poly", poly, "polynomial in Z")->required();
    unary.emplace_back(name, sub);
  }
  auto add_inner = [&](CLI::App* parent) {
    auto* sub = parent->add_subcommand("inner", "<f 1_m, g 1_m>_m = L_m(f* g)");
    sub->add_option("-m", level, "level")->required()->check(CLI::PositiveNumber);
    sub->add_option("f", poly, "left polynomial")->required();
    sub->add_option("g", poly2, "right polynomial")->required();
    return sub;
  };
  auto* laurent_inner = add_inner(laurent);
  auto* top_inner = add_inner(&app);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (normalize->parsed()) {
      const Element x = parse_element(expr);
      out << (json ? to_json(x) : to_string(x)) << "\n";
      return kExitTrue;
    }
    if (eq->parsed()) {
      const Algebra alg =
          algebra == "nt" ? Algebra::NicaToeplitz : Algebra::Quotient;
      const bool same = equal(alg, parse_element(expr), parse_element(expr2));
      out << (same ? "true" : "false") << "\n";
      return same ? kExitTrue : kExitFalse;
    }
    if (apply->parsed()) {
      const Element x = parse_element(expr);
      if (model == "qn") {
        out << to_string(apply_basis(x, Integer(vector))) << "\n";
      } else {
        out << to_string(apply_basis(x, detail::parse_fock_index(vector)))
            << "\n";
      }
      return kExitTrue;
    }
    if (check->parsed()) {
      SuiteOptions opts;
      opts.bound = bound;
      opts.seed = seed;
      opts.exponent_bound = exponent_bound;
      opts.samples = samples;
      const auto report = relation_suite(*suite_from_name(suite), opts);
      detail::print_report(report, out);
      return report.all_passed() ? kExitTrue : kExitFalse;
    }
    const Positive m(level);
    for (const auto& [name, sub] : unary) {
      if (!sub->parsed()) continue;
      const LaurentPoly f = parse_laurent(poly);
      const LaurentPoly g = name == "transfer" ? transfer(m, f)
                            : name == "condexp" ? cond_exp(m, f)
                                                : inflate(m, f);
      out << to_string(g) << "\n";
      return kExitTrue;
    }
    if (laurent_inner->parsed() || top_inner->parsed()) {
      const FiberElement x{m, parse_laurent(poly)};
      const FiberElement y{m, parse_laurent(poly2)};
      out << to_string(inner(x, y)) << "\n";
      return kExitTrue;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace ntcov::cli
