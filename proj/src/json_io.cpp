#include "schubert/json_io.hpp"

namespace schubert {

nlohmann::ordered_json polynomial_json(const Polynomial& f) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& term : f.terms()) {
    nlohmann::ordered_json monomial = nlohmann::ordered_json::array();
    for (const auto& factor : term.monomial.factors())
      monomial.push_back({std::string(1, alphabet_letter(factor.variable.alphabet)),
                          factor.variable.index, factor.exponent});
    out.push_back({{"coeff", term.coefficient.str()}, {"monomial", monomial}});
  }
  return out;
}

nlohmann::ordered_json expansion_json(const ExpansionResult& expansion) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& term : expansion.terms)
    terms.push_back({{"u", term.u.to_string()},
                     {"coefficient", term.coefficient.to_text()},
                     {"q", term.q}});
  return {{"n", expansion.n},
          {"m", expansion.m},
          {"p", expansion.p},
          {"w", expansion.w.to_string()},
          {"terms", terms}};
}

nlohmann::ordered_json verify_report_json(const VerifyReport& report) {
  nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
  for (const auto& mm : report.mismatches)
    mismatches.push_back({{"w", mm.w.to_string()},
                          {"u", mm.u.to_string()},
                          {"m", mm.m},
                          {"p", mm.p},
                          {"formula", mm.formula.to_text()},
                          {"oracle", mm.oracle.to_text()}});
  return {{"n", report.n},
          {"pairs_checked", report.pairs_checked},
          {"mismatches", mismatches}};
}

}  // namespace schubert
