#ifndef SCHUBERT_JSON_IO_HPP
#define SCHUBERT_JSON_IO_HPP

#include "json.hpp"

#include "schubert/oracle.hpp"
#include "schubert/pieri.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// Stable machine-readable forms.  Coefficients are decimal strings, not
// JSON numbers: they are exact integers of unbounded size.

// [{"coeff": "1", "monomial": [["t", 6, 1]]}, ...], canonically ordered.
nlohmann::ordered_json polynomial_json(const Polynomial& f);

// {"n", "m", "p", "w", "terms": [{"u", "coefficient", "q"}, ...]} with the
// terms sorted by (length of u, one-line lexicographic).
nlohmann::ordered_json expansion_json(const ExpansionResult& expansion);

// {"n", "pairs_checked", "mismatches": [{"w", "u", "m", "p", "formula",
// "oracle"}, ...]}.
nlohmann::ordered_json verify_report_json(const VerifyReport& report);

}  // namespace schubert

#endif
