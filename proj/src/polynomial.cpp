#include "schubert/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace schubert {

char alphabet_letter(Alphabet a) {
  switch (a) {
    case Alphabet::t: return 't';
    case Alphabet::x: return 'x';
    case Alphabet::y: return 'y';
    case Alphabet::d: return 'd';
    case Alphabet::c: return 'c';
  }
  throw std::logic_error("alphabet_letter: unknown alphabet");
}

Monomial Monomial::variable(Variable v, int exponent) {
  if (exponent < 0)
    throw std::invalid_argument("Monomial: negative exponent");
  if (v.index < 1)
    throw std::invalid_argument("Monomial: variable index must be >= 1");
  Monomial m;
  if (exponent > 0) m.factors_.push_back({v, exponent});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

int Monomial::exponent_of(Variable v) const {
  for (const auto& f : factors_)
    if (f.variable == v) return f.exponent;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->variable < b->variable) {
      out.factors_.push_back(*a++);
    } else if (b->variable < a->variable) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->variable, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  return out;
}

Monomial Monomial::swap_adjacent(Alphabet alph, int i) const {
  Monomial out = *this;
  bool touched = false;
  for (auto& f : out.factors_) {
    if (f.variable.alphabet != alph) continue;
    if (f.variable.index == i) {
      f.variable.index = i + 1;
      touched = true;
    } else if (f.variable.index == i + 1) {
      f.variable.index = i;
      touched = true;
    }
  }
  if (touched) std::sort(out.factors_.begin(), out.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out.push_back('*');
    out.push_back(alphabet_letter(f.variable.alphabet));
    out += std::to_string(f.variable.index);
    if (f.exponent != 1) {
      out.push_back('^');
      out += std::to_string(f.exponent);
    }
  }
  return out;
}

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Int(value)});
}

Polynomial::Polynomial(Int value) {
  if (value != 0) terms_.push_back({Monomial{}, std::move(value)});
}

Polynomial Polynomial::variable(Variable v, int exponent) {
  return from_monomial(Monomial::variable(v, exponent), Int(1));
}

Polynomial Polynomial::from_monomial(Monomial m, Int coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.push_back({std::move(m), std::move(coefficient)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Int(0);
}

Int Polynomial::constant_term() const { return coefficient(Monomial{}); }

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous(int degree) const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != degree) return false;
  return true;
}

bool Polynomial::involves(Alphabet a) const {
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors())
      if (f.variable.alphabet == a) return true;
  return false;
}

int Polynomial::max_index(Alphabet a) const {
  int idx = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors())
      if (f.variable.alphabet == a) idx = std::max(idx, f.variable.index);
  return idx;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = *this + o;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = *this - o;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  // Both sides are sorted, so a single merge pass keeps the result
  // canonical without re-sorting.
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->monomial < j->monomial) {
      out.push_back(std::move(*i++));
    } else if (j->monomial < i->monomial) {
      out.push_back(*j++);
    } else {
      Int c = i->coefficient + j->coefficient;
      if (c != 0) out.push_back({i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != a.terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != b.terms_.end(); ++j) out.push_back(*j);
  Polynomial p;
  p.terms_ = std::move(out);
  return p;
}

Polynomial operator-(Polynomial a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      out.push_back({ta.monomial.times(tb.monomial),
                     ta.coefficient * tb.coefficient});
  return Polynomial::from_terms(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial result(1L);
  Polynomial base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(
    const std::map<Variable, Polynomial>& assignment) const {
  // Powers of replacement polynomials recur across terms; cache them.
  std::map<std::pair<Variable, int>, Polynomial> powers;
  auto power_of = [&](const Variable& v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers.emplace(key, assignment.at(v).pow(e)).first;
    return it->second;
  };

  Polynomial result;
  for (const auto& t : terms_) {
    Monomial kept;
    Polynomial replaced(1L);
    for (const auto& f : t.monomial.factors()) {
      if (assignment.contains(f.variable))
        replaced *= power_of(f.variable, f.exponent);
      else
        kept = kept.times(Monomial::variable(f.variable, f.exponent));
    }
    result += from_monomial(std::move(kept), t.coefficient) * replaced;
  }
  return result;
}

Polynomial Polynomial::swap_adjacent(Alphabet a, int i) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    out.push_back({t.monomial.swap_adjacent(a, i), t.coefficient});
  return from_terms(std::move(out));
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const Int mag = abs(t.coefficient);
    std::string piece = t.monomial.to_string();
    if (piece.empty())
      piece = mag.str();
    else if (mag != 1)
      piece = mag.str() + "*" + piece;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += piece;
  }
  return out;
}

Polynomial divided_difference(const Polynomial& f, int i, Alphabet alph) {
  if (i < 1) throw std::invalid_argument("divided_difference: need i >= 1");
  const Variable lo{alph, i}, hi{alph, i + 1};
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const int a = t.monomial.exponent_of(lo);
    const int b = t.monomial.exponent_of(hi);
    if (a == b) continue;  // symmetric in (x_i, x_{i+1}), contributes 0
    // Strip the two affected variables, keep the rest.
    Monomial rest;
    for (const auto& fac : t.monomial.factors())
      if (fac.variable != lo && fac.variable != hi)
        rest = rest.times(Monomial::variable(fac.variable, fac.exponent));
    // (x^a y^b - x^b y^a) / (x - y) expanded as a geometric sum; the sign
    // flips when a < b.
    const int low = std::min(a, b), high = std::max(a, b);
    const Int coeff = a > b ? t.coefficient : -t.coefficient;
    for (int k = 0; k < high - low; ++k) {
      Monomial m = rest.times(Monomial::variable(lo, low + k))
                       .times(Monomial::variable(hi, high - 1 - k));
      out.push_back({std::move(m), coeff});
    }
  }
  return Polynomial::from_terms(std::move(out));
}

std::optional<Polynomial> positivity_certificate(const Polynomial& f) {
  for (Alphabet a : {Alphabet::x, Alphabet::y, Alphabet::d, Alphabet::c})
    if (f.involves(a))
      throw std::invalid_argument(
          "positivity_certificate: expects a polynomial in the t alphabet");
  if (f.is_zero()) return Polynomial();

  std::set<int> indices;
  for (const auto& t : f.terms())
    for (const auto& fac : t.monomial.factors())
      indices.insert(fac.variable.index);

  // Invariance under t_i -> t_i + c for a fresh symbol c is exactly
  // invariance under a common shift of all torus weights.
  const Polynomial shift = Polynomial::variable({Alphabet::c, 1});
  std::map<Variable, Polynomial> shifted;
  for (int i : indices)
    shifted.emplace(tvar(i), Polynomial::variable(tvar(i)) + shift);
  if (f.substitute(shifted) != f) return std::nullopt;

  // A shift-invariant f is determined by the differences, so rewriting
  // t_1 := 0, t_i := d_1 + ... + d_{i-1} loses nothing:
  // substituting d_j := t_{j+1} - t_j back recovers f.
  std::map<Variable, Polynomial> rewrite;
  for (int i : indices) {
    Polynomial sum;
    for (int j = 1; j < i; ++j) sum += Polynomial::variable(dvar(j));
    rewrite.emplace(tvar(i), std::move(sum));
  }
  Polynomial g = f.substitute(rewrite);
  for (const auto& t : g.terms())
    if (t.coefficient < 0) return std::nullopt;
  return g;
}

}  // namespace schubert
