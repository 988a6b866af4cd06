#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "schubert/json_io.hpp"
#include "schubert/pieri.hpp"
#include "support.hpp"

using namespace schubert;
using schubert::testing::binomial;
using schubert::testing::symmetric_group;

namespace {

Polynomial T(int i) { return Polynomial::variable(tvar(i)); }

const Permutation& example_w() {
  static const Permutation w = Permutation::parse("631594287");
  return w;
}

const Permutation& example_u() {
  static const Permutation u = Permutation::parse("839154267");
  return u;
}

// All (m, p) pairs valid at window n.
std::vector<std::pair<int, int>> mp_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m < n; ++m)
    for (int p = 1; p <= n - m; ++p) out.emplace_back(m, p);
  return out;
}

}  // namespace

TEST_CASE("window-9 datum across the cycle sizes") {
  const auto& w = example_w();
  const auto& u = example_u();

  SUBCASE("p = 4") {
    const PieriDatum d = compute_datum(w, u, 3, 4);
    CHECK(d.q == 1);
    CHECK(d.nu == std::vector<int>{1, 2, 4, 5, 7, 9});
    CHECK(d.a_seq == std::vector<int>{1, 2});
    CHECK(d.b_seq == std::vector<int>{6, 8});
    CHECK(d.r == 2);
  }
  SUBCASE("p = 5") {
    const PieriDatum d = compute_datum(w, u, 3, 5);
    CHECK(d.q == 2);
    CHECK(d.nu == std::vector<int>{1, 2, 4, 5, 7, 9});
    CHECK(d.a_seq == std::vector<int>{1, 2});
    CHECK(d.b_seq == std::vector<int>{3, 6, 8});
    CHECK(d.r == 2);
  }
  SUBCASE("p = 6") {
    const PieriDatum d = compute_datum(w, u, 3, 6);
    CHECK(d.q == 3);
    CHECK(d.a_seq == std::vector<int>{1});
    CHECK(d.b_seq == std::vector<int>{3, 6, 8});
    CHECK(d.r == 1);
  }
  SUBCASE("p = 3 is the classical case") {
    const PieriDatum d = compute_datum(w, u, 3, 3);
    CHECK(d.q == 0);
    CHECK(static_cast<int>(d.nu.size()) == 3 + 3 - 0);
  }
}

TEST_CASE("window-9 coefficients match the closed forms") {
  const auto& w = example_w();
  const auto& u = example_u();

  CHECK(pieri_coefficient(w, u, 3, 3) == Polynomial(1L));
  CHECK(pieri_coefficient(w, u, 3, 4) == (T(6) - T(1)) + (T(8) - T(2)));
  CHECK(pieri_coefficient(w, u, 3, 5) ==
        (T(3) - T(1)) * (T(6) - T(1)) + (T(3) - T(1)) * (T(8) - T(2)) +
            (T(6) - T(2)) * (T(8) - T(2)));
  CHECK(pieri_coefficient(w, u, 3, 6) ==
        (T(3) - T(1)) * (T(6) - T(1)) * (T(8) - T(1)));

  CHECK(pieri_coefficient_summands(w, u, 3, 3).size() == 1);
  CHECK(pieri_coefficient_summands(w, u, 3, 4).size() == 2);
  CHECK(pieri_coefficient_summands(w, u, 3, 5).size() == 3);
  CHECK(pieri_coefficient_summands(w, u, 3, 6).size() == 1);
}

TEST_CASE("support criterion separates the three conditions") {
  // Arrow fails but the plain chain exists: the coefficient vanishes.
  const Permutation v = Permutation::parse("859134267");
  CHECK(m_bruhat_chain(example_w(), v, 3).has_value());
  CHECK_FALSE(nonvanishing(example_w(), v, 3, 4));
  CHECK(pieri_coefficient(example_w(), v, 3, 4).is_zero());

  // Arrow holds and q >= 0, but r(m,p) is not below u.
  const Permutation id3(3);
  const Permutation u3 = Permutation::parse("213");
  CHECK(r_arrow(id3, u3, 1).has_value());
  CHECK(1 + 2 + id3.length() - u3.length() >= 0);
  CHECK_FALSE(bruhat_leq(Permutation::special_cycle(1, 2, 3), u3));
  CHECK_FALSE(nonvanishing(id3, u3, 1, 2));
  CHECK(pieri_coefficient(id3, u3, 1, 2).is_zero());

  // q < 0: too far for the cycle size.
  CHECK_FALSE(nonvanishing(id3, Permutation::parse("321"), 1, 1));
}

TEST_CASE("dominance against special cycles reduces to a prefix maximum") {
  for (int n = 2; n <= 5; ++n) {
    const auto group = symmetric_group(n);
    for (const auto& [m, p] : mp_pairs(n)) {
      const Permutation rmp = Permutation::special_cycle(m, p, n);
      for (const Permutation& u : group) {
        int prefix_max = 0;
        for (int i = 1; i <= m; ++i) prefix_max = std::max(prefix_max, u(i));
        CHECK(bruhat_leq(rmp, u) == (prefix_max >= m + p));
      }
    }
  }
}

TEST_CASE("datum validation") {
  const auto& w = example_w();
  CHECK_THROWS_AS(compute_datum(w, Permutation::parse("859134267"), 3, 4),
                  std::invalid_argument);  // no arrow
  CHECK_THROWS_AS(compute_datum(w, w, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(compute_datum(w, w, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(compute_datum(w, w, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(compute_datum(w, Permutation(4), 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      compute_datum(Permutation::parse("321"), Permutation(3), 1, 1),
      std::invalid_argument);  // q < 0
  CHECK_THROWS_AS(pieri_coefficient_summands(w, Permutation::parse("859134267"), 3, 4),
                  std::invalid_argument);
}

TEST_CASE("expansion agrees with a full scan of the window") {
  for (int n = 3; n <= 4; ++n) {
    const auto group = symmetric_group(n);
    for (const Permutation& w : group) {
      for (const auto& [m, p] : mp_pairs(n)) {
        const ExpansionResult expansion = pieri_expand(w, m, p);
        std::map<Permutation, Polynomial> from_expansion;
        for (const auto& term : expansion.terms) {
          CHECK_FALSE(term.coefficient.is_zero());
          CHECK(term.q == p + w.length() - term.u.length());
          CHECK(nonvanishing(w, term.u, m, p));
          from_expansion.emplace(term.u, term.coefficient);
        }
        // Direct scan over every u in the window.
        for (const Permutation& u : group) {
          const Polynomial direct = pieri_coefficient(w, u, m, p);
          auto it = from_expansion.find(u);
          if (it == from_expansion.end())
            CHECK(direct.is_zero());
          else
            CHECK(direct == it->second);
        }
      }
    }
  }
}

TEST_CASE("expansion terms are sorted and unique") {
  const ExpansionResult expansion = pieri_expand(example_w(), 3, 4);
  std::set<Permutation> seen;
  for (size_t i = 0; i < expansion.terms.size(); ++i) {
    CHECK(seen.insert(expansion.terms[i].u).second);
    if (i == 0) continue;
    const auto& prev = expansion.terms[i - 1].u;
    const auto& cur = expansion.terms[i].u;
    const bool ordered =
        prev.length() < cur.length() ||
        (prev.length() == cur.length() && prev.images() < cur.images());
    CHECK(ordered);
  }
  // The window-9 golden pair appears with its q = 1 coefficient.
  bool found = false;
  for (const auto& term : expansion.terms) {
    if (term.u == example_u()) {
      found = true;
      CHECK(term.q == 1);
      CHECK(term.coefficient == (T(6) - T(1)) + (T(8) - T(2)));
    }
  }
  CHECK(found);
}

TEST_CASE("identity expansions collapse to the cycle classically") {
  for (int n = 3; n <= 5; ++n) {
    const Permutation id(n);
    for (const auto& [m, p] : mp_pairs(n)) {
      const auto survivors = classical_limit(pieri_expand(id, m, p));
      REQUIRE(survivors.size() == 1);
      CHECK(survivors.begin()->first == Permutation::special_cycle(m, p, n));
      CHECK(survivors.begin()->second == 1);
    }
  }
}

TEST_CASE("longest element absorbs every cycle") {
  const Permutation w0 = Permutation::longest_element(5);
  for (const auto& [m, p] : mp_pairs(5)) {
    const ExpansionResult expansion = pieri_expand(w0, m, p);
    REQUIRE(expansion.terms.size() == 1);
    CHECK(expansion.terms[0].u == w0);
    CHECK(expansion.terms[0].q == p);
    CHECK(expansion.terms[0].coefficient ==
          pieri_coefficient(w0, w0, m, p));
    CHECK_FALSE(expansion.terms[0].coefficient.is_zero());
    // Every term has q = p > 0, so nothing survives classically.
    CHECK(classical_limit(expansion).empty());
  }
}

TEST_CASE("summand count is binomial(q + r - 1, q) on small windows") {
  for (int n = 3; n <= 4; ++n) {
    for (const Permutation& w : symmetric_group(n)) {
      for (const Permutation& u : symmetric_group(n)) {
        for (const auto& [m, p] : mp_pairs(n)) {
          if (!nonvanishing(w, u, m, p)) continue;
          const PieriDatum d = compute_datum(w, u, m, p);
          const auto summands = pieri_coefficient_summands(w, u, m, p);
          CHECK(Int(summands.size()) == binomial(d.q + d.r - 1, d.q));
        }
      }
    }
  }
}

TEST_CASE("coefficients are homogeneous, positive and degree q") {
  for (int n = 3; n <= 4; ++n) {
    for (const Permutation& w : symmetric_group(n)) {
      for (const auto& [m, p] : mp_pairs(n)) {
        for (const auto& term : pieri_expand(w, m, p).terms) {
          CHECK(term.coefficient.is_homogeneous(term.q));
          const auto certificate = positivity_certificate(term.coefficient);
          REQUIRE(certificate.has_value());
          if (term.q > 0) CHECK_FALSE(certificate->is_zero());
        }
      }
    }
  }
}

TEST_CASE("coefficients shift with the window embedding") {
  // Adding a fixed point reindexes the torus weights by one, so the
  // embedded coefficient is the original with every t_i moved to t_{i+1}.
  for (int n = 3; n <= 4; ++n) {
    for (const Permutation& w : symmetric_group(n)) {
      for (const auto& [m, p] : mp_pairs(n)) {
        for (const auto& term : pieri_expand(w, m, p).terms) {
          std::map<Variable, Polynomial> shift;
          for (int i = 1; i <= n; ++i)
            shift.emplace(tvar(i), Polynomial::variable(tvar(i + 1)));
          CHECK(pieri_coefficient(w.embedded(n + 1), term.u.embedded(n + 1),
                                  m, p) == term.coefficient.substitute(shift));
        }
      }
    }
  }
}

TEST_CASE("expansion serialization") {
  const auto expansion = pieri_expand(Permutation::parse("231"), 1, 1);
  const auto j = expansion_json(expansion);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 1);
  CHECK(j["p"] == 1);
  CHECK(j["w"] == "231");
  REQUIRE(j["terms"].is_array());
  for (const auto& term : j["terms"]) {
    CHECK(term.contains("u"));
    CHECK(term.contains("coefficient"));
    CHECK(term.contains("q"));
  }
  // [X_231] * [X_213]: the diagonal q=1 term (length 2 sorts first) and
  // one classical term.
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["u"] == "231");
  CHECK(j["terms"][0]["q"] == 1);
  CHECK(j["terms"][0]["coefficient"] == "-t2 + t3");
  CHECK(j["terms"][1]["u"] == "321");
  CHECK(j["terms"][1]["q"] == 0);
  CHECK(j["terms"][1]["coefficient"] == "1");
}
