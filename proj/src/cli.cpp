#include "uhsl2/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>

#include "uhsl2/algebra.hpp"
#include "uhsl2/expression.hpp"
#include "uhsl2/serialize.hpp"
#include "uhsl2/verify.hpp"

namespace uhsl2 {

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view context) {
  unsigned v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

std::optional<Color> color_from_letter(std::string_view s) {
  if (s == "x") return Color::X;
  if (s == "y") return Color::Y;
  if (s == "z") return Color::Z;
  if (s == "h") return Color::H;
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

NormalMonomial parse_exponents(std::string_view text) {
  std::vector<unsigned> parts;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    parts.push_back(parse_unsigned(trim(rest.substr(0, comma)), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (parts.size() != 4) {
    throw UsageError("expected four comma-separated exponents, got '" + std::string(text) + "'");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

FunctorSpec parse_functor(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto c = color_from_letter(s)) return functor::Singleton{*c};
  auto inside = [&](std::string_view head) -> std::optional<std::string_view> {
    if (s.size() > head.size() + 1 && s.substr(0, head.size()) == head && s.back() == ')') {
      return trim(s.substr(head.size(), s.size() - head.size() - 1));
    }
    return std::nullopt;
  };
  if (auto arg = inside("exp(")) {
    if (auto c = color_from_letter(*arg)) return functor::Exponential{*c};
  }
  if (auto arg = inside("m(")) return functor::DividedPower{parse_exponents(*arg)};
  throw UsageError("unknown functor '" + std::string(text) +
                   "' (use m(a,b,c,d), x, y, z, h or exp(x) etc.)");
}

namespace {

int cmd_star(const std::string& text, std::optional<unsigned> cap, const std::string& format,
             std::ostream& out, std::ostream& err) {
  ExprPtr e;
  try {
    e = parse(text);
  } catch (const ParseError& pe) {
    err << "error: " << pe.what() << '\n'
        << "  " << text << '\n'
        << "  " << std::string(pe.position(), ' ') << "^\n";
    return kExitUsage;
  }
  if (!cap && contains_exp(*e)) {
    err << "error: exp(...) needs an explicit --cap\n";
    return kExitUsage;
  }
  const Element value = eval(*e, cap);
  if (format == "json") {
    out << to_json(value) << '\n';
  } else {
    out << to_pretty(value) << '\n';
  }
  return kExitOk;
}

int cmd_coeff(const std::string& left, const std::string& right, const std::string& target,
              std::ostream& out, std::ostream& err) {
  try {
    out << structural_coefficient(parse_exponents(left), parse_exponents(right),
                                  parse_exponents(target))
        << '\n';
  } catch (const IntegralityViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_verify(unsigned max_exp, unsigned threads, std::ostream& out) {
  const OracleSweepReport r = oracle_sweep(max_exp, threads);
  out << "checked " << r.pairs << " monomial pairs with exponents <= " << max_exp << " ("
      << r.coefficients << " coefficients)\n"
      << "mismatches: " << r.mismatch_count << '\n'
      << "non-integral coefficients: " << r.integrality_violations << '\n';
  for (const auto& [l, rr] : r.mismatches) out << "  mismatch at " << l << " * " << rr << '\n';
  return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_species(const std::string& left, const std::string& right, unsigned max_total,
                std::ostream& out) {
  const FunctorSpec f = parse_functor(left);
  const FunctorSpec g = parse_functor(right);
  const SpeciesReport r = species_coefficient_check(f, g, max_total);
  out << "checked " << r.checked << " sizes with total <= " << max_total << " for "
      << to_string(f) << " * " << to_string(g) << '\n'
      << "mismatches: " << r.mismatches.size() << '\n';
  for (const auto& m : r.mismatches) {
    out << "  " << m.sizes << ": species " << m.species_count << ", algebra "
        << m.algebra_coefficient << '\n';
  }
  return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_identities(std::ostream& out) {
  bool all = true;
  for (const CheckResult& c : identity_catalog()) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
    all = all && c.passed;
  }
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact products in the homogeneous enveloping algebra of sl2"};
  app.name("uhsl2");
  app.require_subcommand(1);

  std::string expr_text, format = "pretty";
  unsigned cap = 0;
  auto* star_cmd = app.add_subcommand("star", "Evaluate an expression and print the element");
  star_cmd->add_option("--expr", expr_text, "Expression, e.g. \"z * m(2,0,0,0)\"")->required();
  auto* cap_opt = star_cmd->add_option("--cap", cap, "Truncate at this total degree");
  star_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string left, right, target;
  auto* coeff_cmd = app.add_subcommand("coeff", "Print one structural coefficient");
  coeff_cmd->add_option("--left", left, "a,b,c,d")->required();
  coeff_cmd->add_option("--right", right, "k,l,m,n")->required();
  coeff_cmd->add_option("--out", target, "exponents of the output monomial")->required();

  unsigned max_exp = 0, threads = 0;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-check the closed formula against rewriting");
  verify_cmd->add_option("--max-exp", max_exp, "Largest exponent in either factor")->required();
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string f_text, g_text;
  unsigned max_total = 0;
  auto* species_cmd =
      app.add_subcommand("species", "Compare species counts with algebra coefficients");
  species_cmd->add_option("--left", f_text, "m(a,b,c,d) | x | exp(x) ...")->required();
  species_cmd->add_option("--right", g_text, "m(a,b,c,d) | x | exp(x) ...")->required();
  species_cmd->add_option("--max-total", max_total, "Largest total size")->required();

  auto* identities_cmd = app.add_subcommand("identities", "Run the catalog of known identities");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (star_cmd->parsed()) {
      return cmd_star(expr_text, cap_opt->count() ? std::optional<unsigned>(cap) : std::nullopt,
                      format, out, err);
    }
    if (coeff_cmd->parsed()) return cmd_coeff(left, right, target, out, err);
    if (verify_cmd->parsed()) return cmd_verify(max_exp, threads, out);
    if (species_cmd->parsed()) return cmd_species(f_text, g_text, max_total, out);
    if (identities_cmd->parsed()) return cmd_identities(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace uhsl2
