#ifndef SCHUBERT_TESTS_SUPPORT_HPP
#define SCHUBERT_TESTS_SUPPORT_HPP

// Helpers shared by the test binaries.  Randomness is deliberately plain
// (seeded mt19937 + modulo) so every run checks the same inputs on every
// platform; std::uniform_int_distribution is not portable across
// standard library implementations.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert::testing {

inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline int draw(std::mt19937& rng, int lo, int hi) {  // inclusive bounds
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(img[static_cast<size_t>(i)],
              img[static_cast<size_t>(draw(rng, 0, i))]);
  return Permutation(std::move(img));
}

inline Polynomial random_polynomial(std::mt19937& rng,
                                    std::vector<Alphabet> alphabets,
                                    int max_index, int max_terms,
                                    int max_exponent) {
  std::vector<Term> terms;
  const int count = draw(rng, 0, max_terms);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    const int factors = draw(rng, 0, 3);
    for (int f = 0; f < factors; ++f) {
      const Alphabet a =
          alphabets[static_cast<size_t>(draw(rng, 0, static_cast<int>(alphabets.size()) - 1))];
      m = m.times(Monomial::variable({a, draw(rng, 1, max_index)},
                                     draw(rng, 1, max_exponent)));
    }
    terms.push_back({std::move(m), Int(draw(rng, -9, 9))});
  }
  return Polynomial::from_terms(std::move(terms));
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  // Pascal recurrence keeps everything exact and independent of any
  // library routine under test.
  std::vector<Int> row(static_cast<size_t>(n) + 1, Int(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
  return row[static_cast<size_t>(k)];
}

}  // namespace schubert::testing

#endif
