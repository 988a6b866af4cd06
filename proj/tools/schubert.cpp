// Command line front end: single coefficients, full expansions, classical
// limits, and formula-vs-oracle verification sweeps.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification found
// mismatches.

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "schubert/json_io.hpp"
#include "schubert/oracle.hpp"
#include "schubert/pieri.hpp"

namespace {

using namespace schubert;

std::string summands_text(const std::vector<CoefficientSummand>& summands) {
  std::string out;
  for (size_t i = 0; i < summands.size(); ++i) {
    if (i) out += " + ";
    if (summands[i].factors.empty()) {
      out += "1";
      continue;
    }
    for (const auto& [b, a] : summands[i].factors)
      out += "(t" + std::to_string(b) + " - t" + std::to_string(a) + ")";
  }
  return out;
}

Permutation parse_permutation(const std::string& text,
                              const std::optional<int>& n, const char* flag) {
  Permutation w = Permutation::parse(text);
  if (n && w.window() != *n)
    throw std::invalid_argument(std::string(flag) +
                                " disagrees with --n over the window size");
  return w;
}

int tractability_bound() {
  int max_n = 7;
  if (const char* env = std::getenv("SCHUBERT_MAX_N")) {
    try {
      size_t used = 0;
      max_n = std::stoi(env, &used);
      if (used != std::string(env).size() || max_n < 2)
        throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("SCHUBERT_MAX_N: expected an integer >= 2");
    }
  }
  return max_n;
}

int run_coeff(const std::optional<int>& n, int m, int p, const std::string& w_text,
              const std::string& u_text, const std::string& format) {
  const Permutation w = parse_permutation(w_text, n, "--w");
  const Permutation u = parse_permutation(u_text, n, "--u");
  const Polynomial coeff = pieri_coefficient(w, u, m, p);
  const int q = p + w.length() - u.length();
  const bool nonzero = !coeff.is_zero();
  const std::string structured =
      nonzero ? summands_text(pieri_coefficient_summands(w, u, m, p)) : "0";

  if (format == "json") {
    nlohmann::ordered_json out = {
        {"n", w.window()},   {"m", m},
        {"p", p},            {"w", w.to_string()},
        {"u", u.to_string()}, {"q", q},
        {"nonzero", nonzero}, {"coefficient", coeff.to_text()},
        {"terms", polynomial_json(coeff)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "coefficient: " << structured << "\n"
              << "expanded: " << coeff.to_text() << "\n"
              << "q: " << q << "\n";
  }
  return 0;
}

int run_expand(const std::optional<int>& n, int m, int p,
               const std::string& w_text, const std::string& format) {
  const Permutation w = parse_permutation(w_text, n, "--w");
  const ExpansionResult expansion = pieri_expand(w, m, p);
  if (format == "json") {
    std::cout << expansion_json(expansion).dump(2) << "\n";
  } else {
    std::cout << "n: " << expansion.n << "  m: " << m << "  p: " << p
              << "  w: " << w.to_string() << "\n"
              << "terms: " << expansion.terms.size() << "\n";
    for (const auto& term : expansion.terms)
      std::cout << term.u.to_string() << "  q=" << term.q << "  "
                << term.coefficient.to_text() << "\n";
  }
  return 0;
}

int run_classical(const std::optional<int>& n, int m, int p,
                  const std::string& w_text, const std::string& format) {
  const Permutation w = parse_permutation(w_text, n, "--w");
  const auto survivors = classical_limit(pieri_expand(w, m, p));
  if (format == "json") {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [u, c] : survivors) list.push_back(u.to_string());
    nlohmann::ordered_json out = {{"n", w.window()},
                                  {"m", m},
                                  {"p", p},
                                  {"w", w.to_string()},
                                  {"survivors", list}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n: " << w.window() << "  m: " << m << "  p: " << p
              << "  w: " << w.to_string() << "\n"
              << "survivors: " << survivors.size() << "\n";
    for (const auto& [u, c] : survivors) std::cout << u.to_string() << "\n";
  }
  return 0;
}

int run_verify(int n, const std::optional<long>& sample, std::uint64_t seed,
               const std::string& format) {
  VerifyOptions options;
  options.sample = sample;
  options.seed = seed;
  options.max_n = tractability_bound();
  const VerifyReport report = verify_sweep(n, options);
  if (format == "json") {
    std::cout << verify_report_json(report).dump(2) << "\n";
  } else {
    std::cout << "n: " << report.n << "\n"
              << "convention: " << report.convention << "\n"
              << "pairs_checked: " << report.pairs_checked << "\n"
              << "mismatches: " << report.mismatches.size() << "\n";
    for (const auto& mm : report.mismatches)
      std::cout << "w=" << mm.w.to_string() << " u=" << mm.u.to_string()
                << " m=" << mm.m << " p=" << mm.p
                << " formula=" << mm.formula.to_text()
                << " oracle=" << mm.oracle.to_text() << "\n";
  }
  return report.mismatches.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Pieri coefficients for the complete flag manifold"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"text", "json"});

  std::optional<int> n;
  int m = 0, p = 0;
  std::string w_text, u_text;
  std::string format = "text";
  long sample = 0;
  std::uint64_t seed = 1;
  int verify_n = 0;

  auto* coeff = app.add_subcommand(
      "coeff", "One structure constant of [X_w] * [X_{r(m,p)}]");
  coeff->add_option("--n", n, "Window size (consistency check)");
  coeff->add_option("--m", m, "Chain cutoff m")->required();
  coeff->add_option("--p", p, "Cycle size p")->required();
  coeff->add_option("--w", w_text, "Permutation w, one-line")->required();
  coeff->add_option("--u", u_text, "Permutation u, one-line")->required();
  coeff->add_option("--format", format, "text or json")->check(format_check);

  auto* expand = app.add_subcommand(
      "expand", "Full expansion of [X_w] * [X_{r(m,p)}]");
  expand->add_option("--n", n, "Window size (consistency check)");
  expand->add_option("--m", m, "Chain cutoff m")->required();
  expand->add_option("--p", p, "Cycle size p")->required();
  expand->add_option("--w", w_text, "Permutation w, one-line")->required();
  expand->add_option("--format", format, "text or json")->check(format_check);

  auto* classical = app.add_subcommand(
      "classical", "Classical limit (all torus weights set to zero)");
  classical->add_option("--n", n, "Window size (consistency check)");
  classical->add_option("--m", m, "Chain cutoff m")->required();
  classical->add_option("--p", p, "Cycle size p")->required();
  classical->add_option("--w", w_text, "Permutation w, one-line")->required();
  classical->add_option("--format", format, "text or json")->check(format_check);

  auto* verify = app.add_subcommand(
      "verify", "Compare the formula against the double Schubert oracle");
  verify->add_option("--n", verify_n, "Window size to sweep")->required();
  verify->add_option("--sample", sample,
                     "Check this many sampled (w, m, p) triples instead of "
                     "the exhaustive sweep");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--format", format, "text or json")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(coeff))
      return run_coeff(n, m, p, w_text, u_text, format);
    if (app.got_subcommand(expand))
      return run_expand(n, m, p, w_text, format);
    if (app.got_subcommand(classical))
      return run_classical(n, m, p, w_text, format);
    std::optional<long> sample_opt;
    if (verify->count("--sample")) sample_opt = sample;
    return run_verify(verify_n, sample_opt, seed, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
