#include "schubert/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <thread>
#include <utility>

namespace schubert {

namespace {

// S_{w0}(x;y) = prod_{i+j <= n} (x_i - y_j).
Polynomial top_schubert(int n) {
  Polynomial f(1L);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j)
      f *= Polynomial::variable(xvar(i)) - Polynomial::variable(yvar(j));
  return f;
}

struct SchubertTable {
  std::shared_mutex mutex;
  std::map<Permutation, Polynomial> memo;
};

SchubertTable& schubert_table() {
  static SchubertTable table;
  return table;
}

}  // namespace

Polynomial double_schubert(const Permutation& w) {
  auto& table = schubert_table();
  {
    std::shared_lock lock(table.mutex);
    auto it = table.memo.find(w);
    if (it != table.memo.end()) return it->second;
  }
  // Compute outside the lock; a racing thread at worst redoes the work.
  Polynomial result;
  if (w == Permutation::longest_element(w.window())) {
    result = top_schubert(w.window());
  } else {
    int i = 1;
    while (w(i) > w(i + 1)) ++i;  // first ascent; exists since w != w0
    result = divided_difference(double_schubert(w.with_swap(i, i + 1)), i);
  }
  std::unique_lock lock(table.mutex);
  auto [it, inserted] = table.memo.emplace(w, std::move(result));
  return it->second;
}

std::vector<int> straightening_positions(const Permutation& u) {
  std::vector<int> c = u.images();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(u.length()));
  // Values above v are already home, so v sits at a position <= v and
  // only needs to move right.  Each swap removes one inversion.
  for (int v = u.window(); v >= 1; --v) {
    int pos = 1;
    while (c[static_cast<size_t>(pos) - 1] != v) ++pos;
    for (int j = pos; j < v; ++j) {
      std::swap(c[static_cast<size_t>(j) - 1], c[static_cast<size_t>(j)]);
      out.push_back(j);
    }
  }
  return out;
}

std::map<Permutation, Polynomial> expand_product(const Permutation& w,
                                                 const Permutation& v,
                                                 int max_n) {
  if (w.window() != v.window())
    throw std::invalid_argument("expand_product: window mismatch");
  const int n = w.window();
  if (n > max_n)
    throw std::invalid_argument(
        "expand_product: window " + std::to_string(n) +
        " exceeds the tractability bound " + std::to_string(max_n));

  const Polynomial f = double_schubert(w) * double_schubert(v);
  const int max_length = w.length() + v.length();

  // Divided differences can push the x alphabet up to x_n.
  std::map<Variable, Polynomial> x_to_y;
  for (int i = 1; i <= n; ++i)
    x_to_y.emplace(xvar(i), Polynomial::variable(yvar(i)));

  std::map<Permutation, Polynomial> out;
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    Permutation u(img);
    if (u.length() > max_length) continue;
    Polynomial g = f;
    for (int i : straightening_positions(u)) {
      g = divided_difference(g, i);
      if (g.is_zero()) break;
    }
    if (g.is_zero()) continue;
    // S_v(y;y) = 0 for v != id, so evaluating at x := y isolates c_u.
    Polynomial c = g.substitute(x_to_y);
    if (!c.is_zero()) out.emplace(u, std::move(c));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

ConventionMap::ConventionMap(IndexForm form, int sign)
    : form_(form), sign_(sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("ConventionMap: sign must be +1 or -1");
}

Polynomial ConventionMap::to_t(const Polynomial& f, int n) const {
  for (Alphabet a : {Alphabet::x, Alphabet::t, Alphabet::d, Alphabet::c})
    if (f.involves(a))
      throw std::invalid_argument("ConventionMap: expects the y alphabet only");
  if (f.max_index(Alphabet::y) > n)
    throw std::invalid_argument("ConventionMap: y index exceeds the window");
  std::map<Variable, Polynomial> sub;
  for (int j = 1; j <= n; ++j) {
    const int idx = form_ == IndexForm::identity ? j : n + 1 - j;
    Polynomial repl = Polynomial::variable(tvar(idx));
    if (sign_ < 0) repl = -repl;
    sub.emplace(yvar(j), std::move(repl));
  }
  return f.substitute(sub);
}

std::string ConventionMap::describe() const {
  std::string rhs = form_ == IndexForm::identity ? "t_j" : "t_{n+1-j}";
  return std::string("y_j -> ") + (sign_ < 0 ? "-" : "") + rhs;
}

ConventionMap calibrate(int n_cal) {
  if (n_cal < 3 || n_cal > 5)
    throw std::invalid_argument("calibrate: need 3 <= n_cal <= 5");
  std::vector<ConventionMap> candidates = {
      {ConventionMap::IndexForm::identity, 1},
      {ConventionMap::IndexForm::identity, -1},
      {ConventionMap::IndexForm::reversed, 1},
      {ConventionMap::IndexForm::reversed, -1},
  };
  std::vector<bool> alive(candidates.size(), true);

  std::vector<int> img(static_cast<size_t>(n_cal));
  std::iota(img.begin(), img.end(), 1);
  do {
    const Permutation w(img);
    for (int m = 1; m < n_cal; ++m) {
      for (int p = 1; p <= n_cal - m; ++p) {
        const auto expansion = pieri_expand(w, m, p);
        const auto oracle =
            expand_product(w, Permutation::special_cycle(m, p, n_cal), n_cal);
        std::map<Permutation, Polynomial> formula;
        for (const auto& term : expansion.terms)
          formula.emplace(term.u, term.coefficient);

        std::set<Permutation> keys;
        for (const auto& [u, c] : formula) keys.insert(u);
        for (const auto& [u, c] : oracle) keys.insert(u);
        for (size_t k = 0; k < candidates.size(); ++k) {
          if (!alive[k]) continue;
          for (const Permutation& u : keys) {
            auto fit = formula.find(u);
            auto oit = oracle.find(u);
            const Polynomial lhs =
                fit == formula.end() ? Polynomial() : fit->second;
            const Polynomial rhs =
                oit == oracle.end() ? Polynomial()
                                    : candidates[k].to_t(oit->second, n_cal);
            if (lhs != rhs) {
              alive[k] = false;
              break;
            }
          }
        }
      }
    }
  } while (std::next_permutation(img.begin(), img.end()));

  std::optional<ConventionMap> winner;
  for (size_t k = 0; k < candidates.size(); ++k) {
    if (!alive[k]) continue;
    if (winner)
      throw std::invalid_argument(
          "calibrate: dictionary ambiguous at this window; raise n_cal");
    winner = candidates[k];
  }
  if (!winner)
    throw std::logic_error(
        "calibrate: no torus-weight dictionary reconciles the formula with "
        "the double Schubert oracle");
  return *winner;
}

const ConventionMap& calibrated_convention() {
  static const ConventionMap map = calibrate(3);
  return map;
}

namespace {

// The factorial-Schur evaluation point and shift alphabet admit the same
// kind of indexing/sign freedom as the y-t dictionary.  The form is fixed
// once by calibration below.
struct LocalizationForm {
  bool reflect_point;    // evaluate at {n+1-c : c in nu} instead of nu
  bool reverse_shift;    // shift alphabet a_l = y_{n+1-l} instead of y_l
  int sign;              // applied to every factor
};

// Complete homogeneous factorial sum in the y alphabet:
//   sum over 1 <= i_1 <= ... <= i_q <= k of
//     prod_j sign * (y_{S(i_j)} - a_{i_j + j - 1}).
Polynomial localization_value_y(const std::vector<int>& nu, int q, int n,
                                const LocalizationForm& form) {
  std::vector<int> s = nu;
  if (form.reflect_point) {
    for (int& c : s) c = n + 1 - c;
    std::sort(s.begin(), s.end());
  }
  const int k = static_cast<int>(s.size());
  Polynomial total;
  std::vector<int> tuple(static_cast<size_t>(q));
  auto recurse = [&](auto&& self, int pos, int low) -> void {
    if (pos == q) {
      Polynomial prod(1L);
      for (int j = 0; j < q; ++j) {
        const int i = tuple[static_cast<size_t>(j)];
        const int l = i + j;  // i_j + j - 1, both 1-based
        const int shift_index = form.reverse_shift ? n + 1 - l : l;
        Polynomial factor =
            Polynomial::variable(yvar(s[static_cast<size_t>(i) - 1])) -
            Polynomial::variable(yvar(shift_index));
        if (form.sign < 0) factor = -factor;
        prod *= factor;
      }
      total += prod;
      return;
    }
    for (int i = low; i <= k; ++i) {
      tuple[static_cast<size_t>(pos)] = i;
      self(self, pos + 1, i);
    }
  };
  recurse(recurse, 0, 1);
  return total;
}

LocalizationForm calibrate_localization() {
  const ConventionMap& conv = calibrated_convention();

  // Reference data set one: a window-9 datum with defects 1, 2 and 3 whose
  // coefficients are known in closed form.
  const std::vector<int> nu9 = {1, 2, 4, 5, 7, 9};
  auto t = [](int i) { return Polynomial::variable(tvar(i)); };
  const std::vector<std::pair<int, Polynomial>> references = {
      {1, (t(6) - t(1)) + (t(8) - t(2))},
      {2, (t(3) - t(1)) * (t(6) - t(1)) + (t(3) - t(1)) * (t(8) - t(2)) +
              (t(6) - t(2)) * (t(8) - t(2))},
      {3, (t(3) - t(1)) * (t(6) - t(1)) * (t(8) - t(1))},
  };

  std::vector<LocalizationForm> survivors;
  for (bool reflect : {false, true}) {
    for (bool reverse : {false, true}) {
      for (int sign : {1, -1}) {
        const LocalizationForm form{reflect, reverse, sign};
        bool ok = true;
        for (const auto& [q, expected] : references) {
          if (conv.to_t(localization_value_y(nu9, q, 9, form), 9) != expected) {
            ok = false;
            break;
          }
        }
        if (ok) survivors.push_back(form);
      }
    }
  }

  // Reference data set two (tiebreaker): every nonvanishing quadruple in
  // the full window-3 table.
  if (survivors.size() > 1) {
    std::vector<LocalizationForm> refined;
    for (const LocalizationForm& form : survivors) {
      bool ok = true;
      std::vector<int> img = {1, 2, 3};
      do {
        const Permutation w(img);
        for (int m = 1; m < 3 && ok; ++m) {
          for (int p = 1; p <= 3 - m && ok; ++p) {
            for (const auto& term : pieri_expand(w, m, p).terms) {
              const PieriDatum d = compute_datum(w, term.u, m, p);
              if (conv.to_t(localization_value_y(d.nu, d.q, 3, form), 3) !=
                  term.coefficient) {
                ok = false;
                break;
              }
            }
          }
        }
        if (!ok) break;
      } while (std::next_permutation(img.begin(), img.end()));
      if (ok) refined.push_back(form);
    }
    survivors = std::move(refined);
  }

  if (survivors.empty())
    throw std::logic_error(
        "calibrate_localization: no factorial-Schur form matches the "
        "reference coefficients");
  if (survivors.size() > 1)
    throw std::logic_error(
        "calibrate_localization: factorial-Schur form is ambiguous");
  return survivors.front();
}

const LocalizationForm& calibrated_localization() {
  static const LocalizationForm form = calibrate_localization();
  return form;
}

}  // namespace

Polynomial localization_special(const std::vector<int>& nu, int q, int n) {
  if (nu.empty())
    throw std::invalid_argument("localization_special: nu must be nonempty");
  for (size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 1 || nu[i] > n)
      throw std::invalid_argument("localization_special: nu out of range");
    if (i + 1 < nu.size() && nu[i] >= nu[i + 1])
      throw std::invalid_argument(
          "localization_special: nu must be strictly increasing");
  }
  if (q < 0) throw std::invalid_argument("localization_special: q < 0");
  const int k = static_cast<int>(nu.size());
  if (k + q > n + 1)
    throw std::invalid_argument("localization_special: k + q exceeds n + 1");
  return calibrated_convention().to_t(
      localization_value_y(nu, q, n, calibrated_localization()), n);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Permutation unrank_permutation(std::uint64_t rank, int n) {
  std::vector<std::uint64_t> factorial(static_cast<size_t>(n), 1);
  for (int i = 1; i < n; ++i)
    factorial[static_cast<size_t>(i)] =
        factorial[static_cast<size_t>(i) - 1] * static_cast<std::uint64_t>(i);
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  img.reserve(static_cast<size_t>(n));
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial[static_cast<size_t>(i) - 1];
    const auto digit = static_cast<size_t>(rank / f);
    rank %= f;
    img.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(img));
}

struct SweepTriple {
  Permutation w;
  int m = 0;
  int p = 0;
};

}  // namespace

VerifyReport verify_sweep(int n, const VerifyOptions& options) {
  if (n < 2) throw std::invalid_argument("verify_sweep: need n >= 2");
  if (n > 20) throw std::invalid_argument("verify_sweep: n > 20 unsupported");

  std::vector<SweepTriple> triples;
  if (options.sample) {
    if (*options.sample < 0)
      throw std::invalid_argument("verify_sweep: negative sample count");
    std::uint64_t nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= static_cast<std::uint64_t>(i);
    std::uint64_t state = options.seed;
    for (long i = 0; i < *options.sample; ++i) {
      Permutation w = unrank_permutation(splitmix64(state) % nfact, n);
      const int m = 1 + static_cast<int>(splitmix64(state) %
                                         static_cast<std::uint64_t>(n - 1));
      const int p = 1 + static_cast<int>(splitmix64(state) %
                                         static_cast<std::uint64_t>(n - m));
      triples.push_back({std::move(w), m, p});
    }
  } else {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
      const Permutation w(img);
      for (int m = 1; m < n; ++m)
        for (int p = 1; p <= n - m; ++p) triples.push_back({w, m, p});
    } while (std::next_permutation(img.begin(), img.end()));
  }

  const ConventionMap& conv = calibrated_convention();

  auto check_triple = [&](const SweepTriple& triple,
                          std::vector<VerifyMismatch>& out) {
    const auto expansion = pieri_expand(triple.w, triple.m, triple.p);
    const auto oracle = expand_product(
        triple.w, Permutation::special_cycle(triple.m, triple.p, n),
        options.max_n);
    std::map<Permutation, Polynomial> formula;
    for (const auto& term : expansion.terms)
      formula.emplace(term.u, term.coefficient);
    std::set<Permutation> keys;
    for (const auto& [u, c] : formula) keys.insert(u);
    for (const auto& [u, c] : oracle) keys.insert(u);
    for (const Permutation& u : keys) {
      auto fit = formula.find(u);
      auto oit = oracle.find(u);
      const Polynomial lhs = fit == formula.end() ? Polynomial() : fit->second;
      const Polynomial rhs =
          oit == oracle.end() ? Polynomial() : conv.to_t(oit->second, n);
      if (lhs != rhs)
        out.push_back({triple.w, u, triple.m, triple.p, lhs, rhs});
    }
  };

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (triples.size() < static_cast<size_t>(2 * workers)) workers = 1;

  std::vector<std::vector<VerifyMismatch>> partial(workers);
  std::vector<std::future<void>> futures;
  const size_t chunk = (triples.size() + workers - 1) / std::max(workers, 1u);
  for (unsigned t = 0; t < workers; ++t) {
    const size_t begin = t * chunk;
    const size_t end = std::min(triples.size(), begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&, begin, end, t] {
      for (size_t i = begin; i < end; ++i)
        check_triple(triples[i], partial[t]);
    }));
  }
  for (auto& f : futures) f.get();

  VerifyReport report;
  report.n = n;
  report.pairs_checked = static_cast<long>(triples.size());
  report.convention = conv.describe();
  for (auto& block : partial)
    for (auto& mm : block) report.mismatches.push_back(std::move(mm));
  return report;
}

}  // namespace schubert
