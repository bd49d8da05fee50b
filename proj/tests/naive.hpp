#pragma once

// Slow reference implementations used only to cross-check the library.
// Nothing here calls into the library's containment or statistic code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace naive {

using Word = std::vector<int>;

inline Word standardize(const Word& w) {
  Word idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return out;
}

/// Tries every subset of positions of the pattern's size.
inline bool contains(const Word& w, const Word& p) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(p.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Word sub;
    for (int i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(w[i]);
    if (standardize(sub) == p) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool avoids_all(const Word& w, const std::vector<Word>& ps) {
  return std::none_of(ps.begin(), ps.end(), [&](const Word& p) { return contains(w, p); });
}

inline int pos(const Word& w, int v) {
  return static_cast<int>(std::find(w.begin(), w.end(), v) - w.begin()) + 1;
}

inline bool skew_decomposable(const Word& w) {
  const int n = static_cast<int>(w.size());
  // split after i entries: the prefix holds exactly the top i values
  for (int i = 1; i < n; ++i)
    if (*std::min_element(w.begin(), w.begin() + i) == n - i + 1) return true;
  return false;
}

/// counts[n][k] of words of size n in the class with statistic value k.
template <class Admit, class Stat>
std::map<int, std::map<int, long>> triangle(int n_max, const std::vector<Word>& patterns,
                                            Admit admit, Stat stat) {
  std::map<int, std::map<int, long>> out;
  for (int n = 1; n <= n_max; ++n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      if (!avoids_all(w, patterns) || !admit(w)) continue;
      if (int k = stat(w); k > 0) ++out[n][k];
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

inline Word random_permutation(int n, std::mt19937& rng) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

/// Large Schroeder numbers r_0..r_m by r_n = r_{n-1} + sum r_k r_{n-1-k}.
inline std::vector<mpz_class> large_schroeder(int m) {
  std::vector<mpz_class> r(m + 1);
  r[0] = 1;
  for (int n = 1; n <= m; ++n) {
    r[n] = r[n - 1];
    for (int k = 0; k < n; ++k) r[n] += r[k] * r[n - 1 - k];
  }
  return r;
}

/// n choose k by the multiplicative formula.
inline mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace naive
