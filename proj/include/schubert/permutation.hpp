#ifndef SCHUBERT_PERMUTATION_HPP
#define SCHUBERT_PERMUTATION_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/*
 * Permutations of {1,...,n} in one-line notation, with the Bruhat-order
 * machinery needed for Pieri expansions: inversion length, the dominance
 * test for u <= v, chain searches for the m-Bruhat order and for the
 * distinct-b arrow relation, and the special cycles r(m,p).
 *
 * Values are immutable after construction and safe to share across threads.
 */
class Permutation {
public:
  // Defaults to the window-1 identity so result structs can be built
  // field by field.
  Permutation() : Permutation(1) {}
  // Identity on {1..n}.
  explicit Permutation(int n);
  // One-line notation: images[i-1] = w(i).  Must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // w0 with w0(i) = n+1-i.
  static Permutation longest_element(int n);
  // The cycle (m, m+p, m+p-1, ..., m+1): fixes i < m and i > m+p, sends m
  // to m+p and j to j-1 for m < j <= m+p.  Has length p.
  static Permutation special_cycle(int m, int p, int n);
  // Accepts "631594287" (digit string, n <= 9) or "6,3,1,5,9,4,2,8,7".
  static Permutation parse(std::string_view text);

  int window() const { return n_; }
  int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  // Inversion count, cached at construction.
  int length() const { return length_; }

  // (w v)(i) = w(v(i)).  Windows must agree.
  Permutation compose(const Permutation& v) const;
  Permutation inverse() const;
  // Right multiplication by the transposition (a b): swaps positions a, b
  // of the one-line notation.  Requires 1 <= a < b <= n.
  Permutation with_swap(int a, int b) const;
  // Same images inside a larger window (new points are fixed).
  Permutation embedded(int n) const;
  bool is_identity() const;

  // Digit string when n <= 9, comma-separated list otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  int n_ = 0;
  std::vector<int> images_;
  int length_ = 0;
};

// True when l(w (a b)) = l(w) + 1, i.e. w(a) < w(b) and no a < k < b has
// w(a) < w(k) < w(b).
bool raises_length_by_one(const Permutation& w, int a, int b);

// Bruhat dominance: for every k the sorted prefix {u(1..k)} is entrywise
// <= the sorted prefix {v(1..k)}.
bool bruhat_leq(const Permutation& u, const Permutation& v);

struct ChainStep {
  int a = 0;
  int b = 0;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

// A chain w -> w t_{a1 b1} -> ... -> u with a_i <= m < b_i and the length
// rising by one at every step.
struct ChainWitness {
  int m = 0;
  std::vector<ChainStep> steps;

  std::vector<int> b_values() const;
  // Applies the steps to w in order; useful for replay checks.
  Permutation apply_to(const Permutation& w) const;
};

// Searches for a chain certifying w <=_m u.  Absence is a value, not an
// error.  Backtracking with memoized dead states keeps revisits linear.
std::optional<ChainWitness> m_bruhat_chain(const Permutation& w,
                                           const Permutation& u, int m);

// As m_bruhat_chain, but all b_i pairwise distinct.  Since a used position
// b can never be touched again, a step (a b) is admissible only when the
// value it parks at b is already final, i.e. c(a) = u(b).
std::optional<ChainWitness> r_arrow(const Permutation& w,
                                    const Permutation& u, int m);

}  // namespace schubert

#endif
