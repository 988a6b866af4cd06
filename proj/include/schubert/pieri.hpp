#ifndef SCHUBERT_PIERI_HPP
#define SCHUBERT_PIERI_HPP

#include <map>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/*
 * Closed-form equivariant Pieri rule for the complete flag manifold.
 *
 * For permutations w, u of {1..n} and a special cycle r(m,p), the
 * structure constant of [X_u] in [X_w] * [X_{r(m,p)}] is nonzero exactly
 * when
 *   (1) w -> u under the distinct-b chain relation at m   (r_arrow),
 *   (2) r(m,p) <= u in Bruhat order, and
 *   (3) q := p + l(w) - l(u) >= 0,
 * and in that case it is an explicit positive sum of products of weight
 * differences, computed here without any polynomial division.
 */

// The combinatorial data the coefficient is built from.
struct PieriDatum {
  int q = 0;               // codimension defect p + l(w) - l(u)
  std::vector<int> nu;     // {n+1-w(i) : i <= m} u {n+1-w(b) : b > m, w(b) > u(b)}
  std::vector<int> a_seq;  // nu restricted to {1 .. n-m-p+1}, ascending
  std::vector<int> b_seq;  // {n-m-p+2 .. n} \ nu, ascending
  int r = 0;               // |a_seq|
};

// Requires the arrow relation w -> u at m and q >= 0; throws
// std::invalid_argument otherwise.  The cardinality identity
// |nu| = m + p - q and |b_seq| = q + r - 1 are rechecked on every call
// and signal an inconsistent quadruple via std::logic_error.
PieriDatum compute_datum(const Permutation& w, const Permutation& u, int m,
                         int p);

// The three-part support criterion above.
bool nonvanishing(const Permutation& w, const Permutation& u, int m, int p);

// One summand of the coefficient: a product of (t_b - t_a) factors,
// recorded as (b, a) index pairs.  q = 0 yields a single empty product.
struct CoefficientSummand {
  std::vector<std::pair<int, int>> factors;
};

// All binomial(q + r - 1, q) summands, in lexicographic order of the
// chosen index subsequence.  Requires a nonvanishing quadruple.
std::vector<CoefficientSummand> pieri_coefficient_summands(
    const Permutation& w, const Permutation& u, int m, int p);

// The structure constant itself: 0 when the support criterion fails, the
// summed product form otherwise (1 for q = 0).
Polynomial pieri_coefficient(const Permutation& w, const Permutation& u,
                             int m, int p);

struct ExpansionTerm {
  Permutation u;
  Polynomial coefficient;
  int q = 0;
};

// Full product expansion [X_w] * [X_{r(m,p)}] = sum_u coeff * [X_u].
// Terms are sorted by (length of u, one-line lexicographic); every stored
// coefficient is nonzero.
struct ExpansionResult {
  int n = 0;
  int m = 0;
  int p = 0;
  Permutation w;
  std::vector<ExpansionTerm> terms;
};

// Enumerates candidates by walking distinct-b chains of length <= p from
// w, filters by the support criterion, and evaluates the coefficient.
ExpansionResult pieri_expand(const Permutation& w, int m, int p);

// Sets every torus weight to zero.  Exactly the q = 0 terms survive and
// each surviving coefficient is 1 (checked; violations would mean the
// expansion itself is wrong).
std::map<Permutation, long> classical_limit(const ExpansionResult& expansion);

}  // namespace schubert

#endif
