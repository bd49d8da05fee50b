#include "schroeder/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace schroeder {

namespace {

struct Landmarks {
  int pos_1 = 0;
  int pos_n = 0;
};

Landmarks landmarks(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  Landmarks l;
  for (int p = 0; p < n; ++p) {
    if (w[p] == 1) l.pos_1 = p + 1;
    if (w[p] == n) l.pos_n = p + 1;
  }
  return l;
}

bool skew_indecomposable_word(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  int lo = n + 1;
  for (int i = 1; i < n; ++i) {
    lo = std::min(lo, w[i - 1]);
    if (lo == n - i + 1) return false;
  }
  return true;
}

bool passes_filter(std::span<const int> w, Filter f) {
  switch (f) {
    case Filter::none:
      return true;
    case Filter::skew_indecomposable:
      return !w.empty() && skew_indecomposable_word(w);
    case Filter::one_before_n: {
      const auto l = landmarks(w);
      return w.size() >= 2 && l.pos_1 < l.pos_n;
    }
    case Filter::one_adjacent_left_of_n: {
      const auto l = landmarks(w);
      return w.size() >= 2 && l.pos_n - l.pos_1 == 1;
    }
  }
  return false;
}

bool admits_generic(std::span<const int> w, const ClassSpec& cls) {
  for (const auto& p : cls.patterns.patterns())
    if (contains_generic(w, p.values())) return false;
  return passes_filter(w, cls.filter);
}

}  // namespace

bool ClassSpec::admits(std::span<const int> word) const {
  return avoids(word, patterns) && passes_filter(word, filter);
}

bool ClassSpec::admits(const Permutation& sigma) const { return admits(sigma.values()); }

std::optional<int> StatisticSpec::evaluate(std::span<const int> w) const {
  const int n = static_cast<int>(w.size());
  if (n == 0) return std::nullopt;
  switch (kind) {
    case StatisticKind::position_of_1:
      return landmarks(w).pos_1;
    case StatisticKind::position_of_n:
      return landmarks(w).pos_n;
    case StatisticKind::distance_1_to_n: {
      const auto l = landmarks(w);
      if (l.pos_1 >= l.pos_n) return std::nullopt;
      return l.pos_n - l.pos_1;
    }
    case StatisticKind::distance_a_to_n: {
      if (a < 1 || a >= n) return std::nullopt;
      int pos_a = 0, pos_n = 0;
      for (int p = 0; p < n; ++p) {
        if (w[p] == a) pos_a = p + 1;
        if (w[p] == n) pos_n = p + 1;
      }
      if (pos_a >= pos_n) return std::nullopt;
      for (int p = 0; p < pos_n - 1; ++p)
        if (w[p] < a) return std::nullopt;
      return pos_n - pos_a;
    }
    case StatisticKind::last_entry:
      return w.back();
    case StatisticKind::first_entry:
      return w.front();
  }
  return std::nullopt;
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& patterns) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    if (avoids(w, patterns)) out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> class_members(int n, const ClassSpec& cls) {
  std::vector<Permutation> out;
  for (auto& sigma : enumerate_avoiders(n, cls.patterns))
    if (passes_filter(sigma.values(), cls.filter)) out.push_back(std::move(sigma));
  return out;
}

Parallelism Parallelism::from_environment() {
  Parallelism p;
  if (const char* env = std::getenv("SCHROEDER_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) p.threads = t;
  }
  return p;
}

namespace {

using Counts = std::vector<std::uint64_t>;

// Tallies one lexicographic chunk: all permutations of 1..n whose leading
// entries equal `prefix`.
Counts tally_chunk(int n, std::span<const int> prefix, const ClassSpec& cls,
                   const StatisticSpec& stat) {
  Counts counts(n + 1, 0);
  std::vector<int> w(prefix.begin(), prefix.end());
  for (int v = 1; v <= n; ++v)
    if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) w.push_back(v);
  const auto tail = w.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    if (!cls.admits(w)) continue;
    if (auto k = stat.evaluate(w)) ++counts[*k];
  } while (std::next_permutation(tail, w.end()));
  return counts;
}

std::vector<std::vector<int>> chunk_prefixes(int n) {
  std::vector<std::vector<int>> out;
  if (n < 2) {
    out.emplace_back();
    return out;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) out.push_back({a, b});
  return out;
}

Triangle natural_shape(int n_max) { return Triangle::shaped(RowLayout{1, 1, 0}, n_max); }

}  // namespace

Triangle triangle_from_oracle(int n_max, const ClassSpec& cls, const StatisticSpec& stat,
                              Parallelism par) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  Triangle out = natural_shape(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const auto prefixes = chunk_prefixes(n);
    std::vector<Counts> partial(prefixes.size());
    const int threads = par.threads > 0 ? par.threads : omp_get_max_threads();
    const auto chunks = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t c = 0; c < chunks; ++c)
      partial[c] = tally_chunk(n, prefixes[c], cls, stat);

    Counts merged(n + 1, 0);
    for (const auto& p : partial)
      for (int k = 0; k <= n; ++k) merged[k] += p[k];
    for (int k = 1; k <= n; ++k) out.cell(n, k) = static_cast<unsigned long>(merged[k]);
  }
  return out;
}

Triangle triangle_from_oracle_serial(int n_max, const ClassSpec& cls,
                                     const StatisticSpec& stat) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  Triangle out = natural_shape(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      if (!admits_generic(w, cls)) continue;
      if (auto k = stat.evaluate(w)) out.cell(n, *k) += 1;
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

TableDef table_def(int table_id) {
  switch (table_id) {
    case 1:
      return {1, {patterns::separable(), Filter::none}, {StatisticKind::position_of_1},
              {1, 1, 0}, "separable permutations by position of 1"};
    case 2:
      return {2, {patterns::separable(), Filter::one_before_n},
              {StatisticKind::distance_1_to_n}, {2, 1, -1},
              "separable permutations with 1 before n, by distance from 1 to n"};
    case 3:
      return {3, {patterns::p1324_1423(), Filter::skew_indecomposable},
              {StatisticKind::position_of_1}, {1, 1, -1},
              "skew-indecomposable (1324,1423)-avoiders by position of 1"};
    case 4:
      return {4, {patterns::p1423_2413(), Filter::one_before_n},
              {StatisticKind::position_of_n}, {2, 2, 0},
              "(1423,2413)-avoiders with 1 before n, by position of n"};
    case 5:
      return {5, {patterns::p1324_2134(), Filter::none}, {StatisticKind::last_entry},
              {1, 1, 0}, "(1324,2134)-avoiders by last entry"};
    case 6:
      return {6, {patterns::p1243_1324(), Filter::one_adjacent_left_of_n},
              {StatisticKind::first_entry}, {2, 1, -1},
              "(1243,1324)-avoiders with 1 immediately left of n, by first entry"};
    default:
      throw std::out_of_range("table id must be 1..6, got " + std::to_string(table_id));
  }
}

Triangle table_oracle(int table_id, int n_max, Parallelism par) {
  const TableDef def = table_def(table_id);
  return reshape(triangle_from_oracle(n_max, def.cls, def.stat, par), def.layout, n_max);
}

}  // namespace schroeder
