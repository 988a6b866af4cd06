#include "schubert/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>

namespace schubert {

namespace {

int inversion_count(const std::vector<int>& v) {
  int inv = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

void check_window(const Permutation& a, const Permutation& b,
                  const char* what) {
  if (a.window() != b.window())
    throw std::invalid_argument(std::string(what) + ": window mismatch (" +
                                std::to_string(a.window()) + " vs " +
                                std::to_string(b.window()) + ")");
}

}  // namespace

Permutation::Permutation(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Permutation: window must be >= 1");
  images_.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) images_[static_cast<size_t>(i) - 1] = i;
}

Permutation::Permutation(std::vector<int> images)
    : n_(static_cast<int>(images.size())), images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("Permutation: empty one-line notation");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n_ || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("Permutation: not a bijection of {1..n}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
  length_ = inversion_count(images_);
}

Permutation Permutation::identity(int n) { return Permutation(n); }

Permutation Permutation::longest_element(int n) {
  if (n < 1) throw std::invalid_argument("longest_element: window must be >= 1");
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i) - 1] = n + 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::special_cycle(int m, int p, int n) {
  if (m < 1 || m >= n)
    throw std::invalid_argument("special_cycle: need 1 <= m < n");
  if (p < 1 || p > n - m)
    throw std::invalid_argument("special_cycle: need 1 <= p <= n - m");
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i) - 1] = i;
  img[static_cast<size_t>(m) - 1] = m + p;
  for (int j = m + 1; j <= m + p; ++j) img[static_cast<size_t>(j) - 1] = j - 1;
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse: empty permutation");
  std::vector<int> img;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(
          pos, comma == std::string_view::npos ? text.size() - pos
                                               : comma - pos);
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("parse: bad entry '" + std::string(tok) +
                                    "'");
      img.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(
            "parse: digit strings use digits 1-9; use commas for n > 9");
      img.push_back(c - '0');
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& v) const {
  check_window(*this, v, "compose");
  std::vector<int> img(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    img[static_cast<size_t>(i) - 1] = (*this)(v(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    img[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::with_swap(int a, int b) const {
  if (a < 1 || b <= a || b > n_)
    throw std::invalid_argument("with_swap: need 1 <= a < b <= n");
  std::vector<int> img = images_;
  std::swap(img[static_cast<size_t>(a) - 1], img[static_cast<size_t>(b) - 1]);
  return Permutation(std::move(img));
}

Permutation Permutation::embedded(int n) const {
  if (n < n_) throw std::invalid_argument("embedded: window may only grow");
  std::vector<int> img = images_;
  for (int i = n_ + 1; i <= n; ++i) img.push_back(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const { return length_ == 0; }

std::string Permutation::to_string() const {
  std::string out;
  if (n_ <= 9) {
    for (int v : images_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (size_t i = 0; i < images_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(images_[i]);
    }
  }
  return out;
}

bool raises_length_by_one(const Permutation& w, int a, int b) {
  if (w(a) >= w(b)) return false;
  for (int k = a + 1; k < b; ++k)
    if (w(a) < w(k) && w(k) < w(b)) return false;
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  check_window(u, v, "bruhat_leq");
  const int n = u.window();
  std::vector<int> pu, pv;
  pu.reserve(static_cast<size_t>(n));
  pv.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    // Keep prefixes sorted by inserting each new image in place.
    auto insert_sorted = [](std::vector<int>& vec, int value) {
      vec.insert(std::upper_bound(vec.begin(), vec.end(), value), value);
    };
    insert_sorted(pu, u(k));
    insert_sorted(pv, v(k));
    for (int i = 0; i < k; ++i)
      if (pu[static_cast<size_t>(i)] > pv[static_cast<size_t>(i)])
        return false;
  }
  return true;
}

std::vector<int> ChainWitness::b_values() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const ChainStep& s : steps) out.push_back(s.b);
  return out;
}

Permutation ChainWitness::apply_to(const Permutation& w) const {
  Permutation c = w;
  for (const ChainStep& s : steps) c = c.with_swap(s.a, s.b);
  return c;
}

namespace {

// Shared admissibility filter: a chain from c to u with steps (a b),
// a <= m < b, can only lower prefix values and raise suffix values, so
// c(a) <= u(a) for a <= m and c(b) >= u(b) for b > m is necessary.
bool chain_feasible(const Permutation& c, const Permutation& u, int m) {
  const int n = c.window();
  for (int a = 1; a <= m; ++a)
    if (c(a) > u(a)) return false;
  for (int b = m + 1; b <= n; ++b)
    if (c(b) < u(b)) return false;
  return true;
}

struct ChainSearch {
  const Permutation& u;
  int m;
  int target_steps;
  std::vector<ChainStep> path;
  // Permutations from which u was proven unreachable in the remaining
  // budget.  Depth is implied by the length, so the key is just the images.
  std::set<std::vector<int>> dead;

  bool run(const Permutation& c, int depth) {
    if (c == u) return true;
    if (depth == target_steps) return false;
    const int remaining = target_steps - depth;
    int mismatch_lo = 0, mismatch_hi = 0;
    for (int a = 1; a <= m; ++a)
      if (c(a) != u(a)) ++mismatch_lo;
    for (int b = m + 1; b <= c.window(); ++b)
      if (c(b) != u(b)) ++mismatch_hi;
    // Each step rewrites one position on each side of m.
    if (mismatch_lo > remaining || mismatch_hi > remaining) return false;
    if (dead.contains(c.images())) return false;
    for (int a = 1; a <= m; ++a) {
      for (int b = m + 1; b <= c.window(); ++b) {
        if (!raises_length_by_one(c, a, b)) continue;
        Permutation next = c.with_swap(a, b);
        if (!chain_feasible(next, u, m)) continue;
        path.push_back({a, b});
        if (run(next, depth + 1)) return true;
        path.pop_back();
      }
    }
    dead.insert(c.images());
    return false;
  }
};

struct ArrowSearch {
  const Permutation& u;
  int m;
  int target_steps;
  std::vector<ChainStep> path;
  // Dead states additionally remember which b positions were consumed.
  std::set<std::pair<std::vector<int>, std::uint32_t>> dead;

  bool run(const Permutation& c, int depth, std::uint32_t used) {
    if (c == u) return true;
    if (depth == target_steps) return false;
    const int remaining = target_steps - depth;
    int mismatch_lo = 0, mismatch_hi = 0;
    for (int a = 1; a <= m; ++a)
      if (c(a) != u(a)) ++mismatch_lo;
    for (int b = m + 1; b <= c.window(); ++b) {
      if (c(b) == u(b)) continue;
      // A consumed position can never change again.
      if (used & (1u << b)) return false;
      ++mismatch_hi;
    }
    if (mismatch_lo > remaining || mismatch_hi > remaining) return false;
    if (dead.contains({c.images(), used})) return false;
    for (int a = 1; a <= m; ++a) {
      for (int b = m + 1; b <= c.window(); ++b) {
        if (used & (1u << b)) continue;
        // The value parked at b is final, so it must already match u.
        if (c(a) != u(b)) continue;
        if (!raises_length_by_one(c, a, b)) continue;
        Permutation next = c.with_swap(a, b);
        if (!chain_feasible(next, u, m)) continue;
        path.push_back({a, b});
        if (run(next, depth + 1, used | (1u << b))) return true;
        path.pop_back();
      }
    }
    dead.insert({c.images(), used});
    return false;
  }
};

void check_chain_args(const Permutation& w, const Permutation& u, int m,
                      const char* what) {
  check_window(w, u, what);
  if (m < 1 || m >= w.window())
    throw std::invalid_argument(std::string(what) + ": need 1 <= m < n");
}

}  // namespace

std::optional<ChainWitness> m_bruhat_chain(const Permutation& w,
                                           const Permutation& u, int m) {
  check_chain_args(w, u, m, "m_bruhat_chain");
  const int steps = u.length() - w.length();
  if (steps < 0) return std::nullopt;
  if (!chain_feasible(w, u, m)) return std::nullopt;
  ChainSearch search{u, m, steps, {}, {}};
  if (!search.run(w, 0)) return std::nullopt;
  return ChainWitness{m, std::move(search.path)};
}

std::optional<ChainWitness> r_arrow(const Permutation& w,
                                    const Permutation& u, int m) {
  check_chain_args(w, u, m, "r_arrow");
  if (w.window() > 31)
    throw std::invalid_argument("r_arrow: windows above 31 are unsupported");
  const int steps = u.length() - w.length();
  if (steps < 0) return std::nullopt;
  if (!chain_feasible(w, u, m)) return std::nullopt;
  ArrowSearch search{u, m, steps, {}, {}};
  if (!search.run(w, 0, 0)) return std::nullopt;
  return ChainWitness{m, std::move(search.path)};
}

}  // namespace schubert
