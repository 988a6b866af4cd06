#ifndef SCHUBERT_POLYNOMIAL_HPP
#define SCHUBERT_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

// Exact integer coefficients.  Intermediate divided-difference chains can
// overflow 64 bits long before the final answer does, so everything is
// arbitrary precision.
using Int = boost::multiprecision::cpp_int;

// Variable alphabets.  t: torus weights, x/y: the two Schubert polynomial
// alphabets.  d (differences t_{i+1} - t_i) and c (a fresh shift symbol)
// only appear inside positivity certificates.
enum class Alphabet : std::uint8_t { t = 0, x = 1, y = 2, d = 3, c = 4 };

char alphabet_letter(Alphabet a);

struct Variable {
  Alphabet alphabet = Alphabet::t;
  int index = 1;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable tvar(int i) { return {Alphabet::t, i}; }
inline Variable xvar(int i) { return {Alphabet::x, i}; }
inline Variable yvar(int i) { return {Alphabet::y, i}; }
inline Variable dvar(int i) { return {Alphabet::d, i}; }

struct VariablePower {
  Variable variable;
  int exponent = 1;  // always >= 1 inside a Monomial
  friend bool operator==(const VariablePower&, const VariablePower&) = default;
  friend auto operator<=>(const VariablePower&, const VariablePower&) = default;
};

// Product of variable powers, kept sorted by variable.  The defaulted
// lexicographic order on the factor sequence is the canonical term order
// used everywhere (display, JSON, comparisons).
class Monomial {
public:
  Monomial() = default;  // the constant monomial 1
  static Monomial variable(Variable v, int exponent = 1);

  const std::vector<VariablePower>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  int degree() const;
  int exponent_of(Variable v) const;

  Monomial times(const Monomial& other) const;
  // Exchanges indices i and i+1 within one alphabet (the s_i action).
  Monomial swap_adjacent(Alphabet a, int i) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<VariablePower> factors_;
};

struct Term {
  Monomial monomial;
  Int coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial over the integers: a vector of terms with
// nonzero coefficients, sorted by monomial.  Canonical by construction, so
// equality is just term-by-term comparison.
class Polynomial {
public:
  Polynomial() = default;  // zero
  Polynomial(long value);
  Polynomial(Int value);
  static Polynomial variable(Variable v, int exponent = 1);
  static Polynomial from_monomial(Monomial m, Int coefficient);
  // Sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  Int coefficient(const Monomial& m) const;
  Int constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int degree) const;
  bool involves(Alphabet a) const;
  int max_index(Alphabet a) const;  // 0 when the alphabet is absent

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial pow(int exponent) const;

  // Simultaneous substitution; unmentioned variables stay put.
  Polynomial substitute(const std::map<Variable, Polynomial>& assignment) const;
  // The s_i action on one alphabet.
  Polynomial swap_adjacent(Alphabet a, int i) const;

  // Canonical text form, e.g. "t1^2 - t1*t3 - t1*t6 + t3*t6".
  std::string to_text() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Term> terms_;
};

// Newton's divided difference in the given alphabet:
//   (f - s_i f) / (x_i - x_{i+1}),
// computed term by term in closed form, so it is always exact and the
// division is implicit.  Requires i >= 1.
Polynomial divided_difference(const Polynomial& f, int i,
                              Alphabet a = Alphabet::x);

// Rewrites a polynomial in the t alphabet over the simple-root differences
// d_j = t_{j+1} - t_j.  Returns the rewrite iff f is invariant under a
// common shift of all t variables and the rewritten coefficients are all
// nonnegative; otherwise nullopt.  substitute(d_j := t_{j+1} - t_j) on the
// certificate recovers f exactly.
std::optional<Polynomial> positivity_certificate(const Polynomial& f);

}  // namespace schubert

#endif
