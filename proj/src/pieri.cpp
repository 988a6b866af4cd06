#include "schubert/pieri.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

namespace {

void check_mp(const Permutation& w, int m, int p, const char* what) {
  const int n = w.window();
  if (m < 1 || m >= n)
    throw std::invalid_argument(std::string(what) + ": need 1 <= m < n");
  if (p < 1 || p > n - m)
    throw std::invalid_argument(std::string(what) + ": need 1 <= p <= n - m");
}

void check_pair(const Permutation& w, const Permutation& u, const char* what) {
  if (w.window() != u.window())
    throw std::invalid_argument(std::string(what) + ": window mismatch");
}

PieriDatum datum_for_arrow_pair(const Permutation& w, const Permutation& u,
                                int m, int p) {
  const int n = w.window();
  const int q = p + w.length() - u.length();

  std::set<int> nu;
  for (int i = 1; i <= m; ++i) nu.insert(n + 1 - w(i));
  for (int b = m + 1; b <= n; ++b)
    if (w(b) > u(b)) nu.insert(n + 1 - w(b));

  PieriDatum d;
  d.q = q;
  d.nu.assign(nu.begin(), nu.end());
  if (static_cast<int>(d.nu.size()) != m + p - q)
    throw std::logic_error(
        "compute_datum: |nu| != m + p - q; inconsistent quadruple");

  const int cut = n - m - p + 1;
  for (int v : d.nu)
    if (v <= cut) d.a_seq.push_back(v);
  for (int v = cut + 1; v <= n; ++v)
    if (!nu.contains(v)) d.b_seq.push_back(v);
  d.r = static_cast<int>(d.a_seq.size());
  if (static_cast<int>(d.b_seq.size()) != q + d.r - 1)
    throw std::logic_error(
        "compute_datum: |b_seq| != q + r - 1; inconsistent quadruple");
  return d;
}

std::vector<CoefficientSummand> summands_for_datum(const PieriDatum& d) {
  std::vector<CoefficientSummand> out;
  if (d.q == 0) {
    out.push_back({});  // empty product: the coefficient is 1
    return out;
  }
  // Enumerate 1 <= c_1 < ... < c_q <= q + r - 1 in lexicographic order.
  const int q = d.q;
  const int limit = q + d.r - 1;
  std::vector<int> c(static_cast<size_t>(q));
  std::vector<std::pair<int, int>> factors(static_cast<size_t>(q));
  auto recurse = [&](auto&& self, int pos, int low) -> void {
    if (pos == q) {
      out.push_back({factors});
      return;
    }
    for (int v = low; v <= limit - (q - 1 - pos); ++v) {
      const int a_index = v - pos;  // c_i - i + 1 with 0-based pos = i - 1
      if (a_index < 1 || a_index > d.r)
        throw std::logic_error(
            "pieri_coefficient: a-sequence index out of range");
      c[static_cast<size_t>(pos)] = v;
      factors[static_cast<size_t>(pos)] = {
          d.b_seq[static_cast<size_t>(v) - 1],
          d.a_seq[static_cast<size_t>(a_index) - 1]};
      self(self, pos + 1, v + 1);
    }
  };
  recurse(recurse, 0, 1);
  return out;
}

Polynomial summands_to_polynomial(const std::vector<CoefficientSummand>& ss) {
  Polynomial total;
  for (const auto& s : ss) {
    Polynomial prod(1L);
    for (const auto& [b, a] : s.factors)
      prod *= Polynomial::variable(tvar(b)) - Polynomial::variable(tvar(a));
    total += prod;
  }
  return total;
}

}  // namespace

PieriDatum compute_datum(const Permutation& w, const Permutation& u, int m,
                         int p) {
  check_pair(w, u, "compute_datum");
  check_mp(w, m, p, "compute_datum");
  if (p + w.length() - u.length() < 0)
    throw std::invalid_argument("compute_datum: q = p + l(w) - l(u) < 0");
  if (!r_arrow(w, u, m))
    throw std::invalid_argument("compute_datum: w does not reach u through "
                                "distinct-b chains at m");
  return datum_for_arrow_pair(w, u, m, p);
}

bool nonvanishing(const Permutation& w, const Permutation& u, int m, int p) {
  check_pair(w, u, "nonvanishing");
  check_mp(w, m, p, "nonvanishing");
  if (p + w.length() - u.length() < 0) return false;
  if (!bruhat_leq(Permutation::special_cycle(m, p, w.window()), u))
    return false;
  return r_arrow(w, u, m).has_value();
}

std::vector<CoefficientSummand> pieri_coefficient_summands(
    const Permutation& w, const Permutation& u, int m, int p) {
  if (!nonvanishing(w, u, m, p))
    throw std::invalid_argument(
        "pieri_coefficient_summands: vanishing coefficient has no summands");
  return summands_for_datum(datum_for_arrow_pair(w, u, m, p));
}

Polynomial pieri_coefficient(const Permutation& w, const Permutation& u,
                             int m, int p) {
  if (!nonvanishing(w, u, m, p)) return Polynomial();
  return summands_to_polynomial(
      summands_for_datum(datum_for_arrow_pair(w, u, m, p)));
}

ExpansionResult pieri_expand(const Permutation& w, int m, int p) {
  check_mp(w, m, p, "pieri_expand");
  const int n = w.window();
  if (n > 31)
    throw std::invalid_argument("pieri_expand: windows above 31 are unsupported");

  // Walk all distinct-b chains of length <= p starting at w.  Every
  // visited permutation is a candidate endpoint; (permutation, used-b)
  // states are explored once.
  std::set<Permutation> candidates;
  std::set<std::pair<std::vector<int>, std::uint32_t>> seen;
  auto walk = [&](auto&& self, const Permutation& c, std::uint32_t used,
                  int depth) -> void {
    candidates.insert(c);
    if (depth == p) return;
    for (int a = 1; a <= m; ++a) {
      for (int b = m + 1; b <= n; ++b) {
        if (used & (1u << b)) continue;
        if (!raises_length_by_one(c, a, b)) continue;
        Permutation next = c.with_swap(a, b);
        auto state = std::make_pair(next.images(), used | (1u << b));
        if (!seen.insert(std::move(state)).second) continue;
        self(self, next, used | (1u << b), depth + 1);
      }
    }
  };
  walk(walk, w, 0, 0);

  const Permutation rmp = Permutation::special_cycle(m, p, n);
  ExpansionResult result;
  result.n = n;
  result.m = m;
  result.p = p;
  result.w = w;
  for (const Permutation& u : candidates) {
    if (!bruhat_leq(rmp, u)) continue;
    Polynomial coeff = pieri_coefficient(w, u, m, p);
    if (coeff.is_zero()) continue;  // cannot happen for a valid datum
    result.terms.push_back({u, std::move(coeff), p + w.length() - u.length()});
  }
  std::sort(result.terms.begin(), result.terms.end(),
            [](const ExpansionTerm& a, const ExpansionTerm& b) {
              if (a.u.length() != b.u.length())
                return a.u.length() < b.u.length();
              return a.u.images() < b.u.images();
            });
  return result;
}

std::map<Permutation, long> classical_limit(const ExpansionResult& expansion) {
  std::map<Permutation, long> out;
  for (const ExpansionTerm& term : expansion.terms) {
    std::map<Variable, Polynomial> zero;
    for (const auto& t : term.coefficient.terms())
      for (const auto& f : t.monomial.factors())
        zero.emplace(f.variable, Polynomial());
    // With every variable set to zero the result is a constant.
    const Int value = term.coefficient.substitute(zero).constant_term();
    if (value == 0) {
      if (term.q == 0)
        throw std::logic_error("classical_limit: q = 0 term vanished");
      continue;
    }
    if (value != 1)
      throw std::logic_error("classical_limit: surviving coefficient is not 1");
    if (term.q != 0)
      throw std::logic_error("classical_limit: q > 0 term survived");
    out.emplace(term.u, 1L);
  }
  return out;
}

}  // namespace schubert
