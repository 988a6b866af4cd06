#ifndef SCHUBERT_ORACLE_HPP
#define SCHUBERT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/pieri.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/*
 * Independent cross-checks for the closed Pieri formula.
 *
 * Route one: double Schubert polynomials.  Products are expanded in the
 * basis {S_u(x;y)} by divided-difference extraction, giving structure
 * constants in the y alphabet.  Route two: a factorial-Schur evaluation
 * that computes the same constant directly from the (nu, q) datum.
 *
 * The torus-weight sign and indexing conventions relating the y alphabet
 * to the t alphabet are not fixed a priori; they are pinned once per
 * process by calibration against small fully-expanded cases and frozen
 * golden data.
 */

// Double Schubert polynomial S_w(x; y).  Memoized per (window, w) for the
// process lifetime; concurrent calls are safe (readers share the table,
// writers are serialized).
Polynomial double_schubert(const Permutation& w);

// Positions whose divided differences extract the coefficient of S_u,
// in application order.  Built by repeatedly moving the largest misplaced
// value of u to its home; the reverse sequence is a reduced word for u.
std::vector<int> straightening_positions(const Permutation& u);

// Expands S_w(x;y) * S_v(x;y) = sum_u c_u(y) S_u(x;y) and returns the
// nonzero c_u.  Exact but exponential in n; refuses n > max_n.
std::map<Permutation, Polynomial> expand_product(const Permutation& w,
                                                 const Permutation& v,
                                                 int max_n = 7);

// Dictionary between the oracle's y alphabet and the formula's t
// alphabet: y_j |-> sign * t_{j} or sign * t_{n+1-j}.
class ConventionMap {
public:
  enum class IndexForm { identity, reversed };

  ConventionMap(IndexForm form, int sign);

  IndexForm index_form() const { return form_; }
  int sign() const { return sign_; }

  // Applies the dictionary to a polynomial in the y alphabet alone.
  Polynomial to_t(const Polynomial& f, int n) const;
  std::string describe() const;  // e.g. "y_j -> -t_{n+1-j}"

private:
  IndexForm form_;
  int sign_;
};

// Determines the unique dictionary under which every Pieri expansion at
// window n_cal matches the double Schubert oracle.  Throws
// std::logic_error when no candidate survives and std::invalid_argument
// when several do (raise n_cal).  Requires 3 <= n_cal <= 5.
ConventionMap calibrate(int n_cal);

// The process-wide dictionary, calibrated once at n_cal = 3 on first use.
const ConventionMap& calibrated_convention();

// Factorial-Schur evaluation of the coefficient attached to a datum with
// k = |nu| and defect q: a complete homogeneous sum over weakly increasing
// index tuples, expressed in the t alphabet through the calibrated
// dictionaries.  Requires 1 <= nu_1 < ... < nu_k <= n, q >= 0 and
// k + q <= n + 1.
Polynomial localization_special(const std::vector<int>& nu, int q, int n);

struct VerifyMismatch {
  Permutation w;
  Permutation u;
  int m = 0;
  int p = 0;
  Polynomial formula;
  Polynomial oracle;
};

struct VerifyOptions {
  // When set, check this many uniformly sampled (w, m, p) triples instead
  // of the exhaustive sweep.
  std::optional<long> sample;
  std::uint64_t seed = 1;
  // Tractability guard forwarded to expand_product.
  int max_n = 7;
};

struct VerifyReport {
  int n = 0;
  long pairs_checked = 0;
  std::vector<VerifyMismatch> mismatches;
  std::string convention;
};

// Compares pieri_expand against expand_product over (w, m, p) triples at
// window n.  Deterministic for a fixed seed; work is distributed over
// hardware threads and merged in input order.
VerifyReport verify_sweep(int n, const VerifyOptions& options = {});

}  // namespace schubert

#endif
