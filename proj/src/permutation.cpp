#include "schroeder/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace schroeder {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  positions_.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    const int v = values_[p];
    if (v < 1 || v > n || positions_[v - 1] != 0)
      throw std::invalid_argument("not a permutation of 1..n: " + to_string());
    positions_[v - 1] = p + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  const bool separated =
      text.find_first_of(", ") != std::string_view::npos;
  if (separated) {
    std::string token;
    for (char c : std::string(text) + ",") {
      if (c == ',' || c == ' ') {
        if (!token.empty()) v.push_back(std::stoi(token));
        token.clear();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        token.push_back(c);
      } else {
        throw std::invalid_argument("bad permutation text: " + std::string(text));
      }
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad permutation text: " + std::string(text));
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  const bool compact = std::all_of(values_.begin(), values_.end(),
                                   [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns)) {}

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("empty pattern set");
  for (const auto& p : patterns_)
    if (p.empty()) throw std::invalid_argument("empty pattern in pattern set");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find_first_of(",;", start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    if (!piece.empty()) out.push_back(Permutation::parse(piece));
    start = end + 1;
  }
  return PatternSet(std::move(out));
}

std::string PatternSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ",";
    out += patterns_[i].to_string();
  }
  return out + "}";
}

namespace patterns {
PatternSet separable() { return {{2, 4, 1, 3}, {3, 1, 4, 2}}; }
PatternSet p1324_1423() { return {{1, 3, 2, 4}, {1, 4, 2, 3}}; }
PatternSet p1423_2413() { return {{1, 4, 2, 3}, {2, 4, 1, 3}}; }
PatternSet p1324_2134() { return {{1, 3, 2, 4}, {2, 1, 3, 4}}; }
PatternSet p1243_1324() { return {{1, 2, 4, 3}, {1, 3, 2, 4}}; }
}  // namespace patterns

// --- containment ---------------------------------------------------------------

namespace {

bool extend(std::span<const int> word, std::span<const int> pattern,
            std::vector<int>& chosen, int from) {
  const std::size_t t = chosen.size();
  if (t == pattern.size()) return true;
  const int n = static_cast<int>(word.size());
  const int remaining = static_cast<int>(pattern.size() - t);
  for (int i = from; i <= n - remaining; ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s)
      ok = (word[chosen[s]] < word[i]) == (pattern[s] < pattern[t]);
    if (!ok) continue;
    chosen.push_back(i);
    if (extend(word, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_generic(std::span<const int> word, std::span<const int> pattern) {
  if (pattern.size() > word.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return extend(word, pattern, chosen, 0);
}

bool contains_length4(std::span<const int> w, std::span<const int> p) {
  if (p.size() != 4) throw std::invalid_argument("contains_length4 needs a length-4 pattern");
  const int n = static_cast<int>(w.size());
  const bool r01 = p[0] < p[1];
  const bool r02 = p[0] < p[2], r12 = p[1] < p[2];
  const bool r03 = p[0] < p[3], r13 = p[1] < p[3], r23 = p[2] < p[3];
  for (int a = 0; a < n - 3; ++a) {
    const int wa = w[a];
    for (int b = a + 1; b < n - 2; ++b) {
      const int wb = w[b];
      if ((wa < wb) != r01) continue;
      for (int c = b + 1; c < n - 1; ++c) {
        const int wc = w[c];
        if ((wa < wc) != r02 || (wb < wc) != r12) continue;
        for (int d = c + 1; d < n; ++d) {
          const int wd = w[d];
          if ((wa < wd) == r03 && (wb < wd) == r13 && (wc < wd) == r23)
            return true;
        }
      }
    }
  }
  return false;
}

bool contains_pattern(std::span<const int> word, std::span<const int> pattern) {
  if (pattern.empty()) return true;
  if (pattern.size() == 4) return contains_length4(word, pattern);
  return contains_generic(word, pattern);
}

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
  return contains_pattern(sigma.values(), pattern.values());
}

bool avoids(std::span<const int> word, const PatternSet& set) {
  for (const auto& p : set.patterns())
    if (contains_pattern(word, p.values())) return false;
  return true;
}

bool avoids(const Permutation& sigma, const PatternSet& set) {
  return avoids(sigma.values(), set);
}

// --- symmetries ------------------------------------------------------------

Permutation apply_symmetry(const Permutation& sigma, Symmetry which) {
  const int n = sigma.size();
  std::vector<int> out(n);
  switch (which) {
    case Symmetry::reverse:
      for (int p = 1; p <= n; ++p) out[p - 1] = sigma.value_at(n + 1 - p);
      break;
    case Symmetry::complement:
      for (int p = 1; p <= n; ++p) out[p - 1] = n + 1 - sigma.value_at(p);
      break;
    case Symmetry::inverse:
      for (int v = 1; v <= n; ++v) out[v - 1] = sigma.position_of(v);
      break;
    case Symmetry::reverse_complement:
      for (int p = 1; p <= n; ++p) out[p - 1] = n + 1 - sigma.value_at(n + 1 - p);
      break;
  }
  return Permutation(std::move(out));
}

PatternSet apply_symmetry(const PatternSet& set, Symmetry which) {
  std::vector<Permutation> out;
  for (const auto& p : set.patterns()) out.push_back(apply_symmetry(p, which));
  return PatternSet(std::move(out));
}

// --- sums ------------------------------------------------------------------------

Permutation direct_sum(const Permutation& pi, const Permutation& tau) {
  std::vector<int> out(pi.values().begin(), pi.values().end());
  for (int v : tau.values()) out.push_back(v + pi.size());
  return Permutation(std::move(out));
}

Permutation skew_sum(const Permutation& pi, const Permutation& tau) {
  std::vector<int> out;
  out.reserve(pi.size() + tau.size());
  for (int v : pi.values()) out.push_back(v + tau.size());
  for (int v : tau.values()) out.push_back(v);
  return Permutation(std::move(out));
}

namespace {

// Splits at every prefix length i where the prefix is a block:
// max(prefix) == i for direct sums, min(prefix) == n - i + 1 for skew sums.
std::vector<Permutation> split_blocks(const Permutation& sigma, bool skew) {
  if (sigma.empty()) throw std::invalid_argument("decomposition of the empty permutation");
  const int n = sigma.size();
  std::vector<Permutation> out;
  int start = 0;
  int extreme = skew ? n + 1 : 0;
  for (int i = 1; i <= n; ++i) {
    const int v = sigma.value_at(i);
    extreme = skew ? std::min(extreme, v) : std::max(extreme, v);
    const bool cut = skew ? extreme == n - i + 1 : extreme == i;
    if (cut) {
      out.push_back(reduce(sigma.values().subspan(start, i - start)));
      start = i;
    }
  }
  return out;
}

}  // namespace

std::vector<Permutation> sum_components(const Permutation& sigma) {
  return split_blocks(sigma, false);
}

std::vector<Permutation> skew_components(const Permutation& sigma) {
  return split_blocks(sigma, true);
}

bool is_sum_indecomposable(const Permutation& sigma) {
  return sum_components(sigma).size() == 1;
}

bool is_skew_indecomposable(const Permutation& sigma) {
  return skew_components(sigma).size() == 1;
}

// --- insertion / reduction ---------------------------------------------------

Permutation reduce(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

Permutation insert_value(const Permutation& pi, int k, int j) {
  const int n = pi.size() + 1;
  if (k < 1 || k > n || j < 1 || j > n)
    throw std::out_of_range("insert_value: k=" + std::to_string(k) + " j=" +
                            std::to_string(j) + " for size " + std::to_string(n));
  std::vector<int> out;
  out.reserve(n);
  for (int p = 1; p <= n - 1; ++p) {
    if (p == j) out.push_back(k);
    const int v = pi.value_at(p);
    out.push_back(v >= k ? v + 1 : v);
  }
  if (j == n) out.push_back(k);
  return Permutation(std::move(out));
}

Permutation delete_position(const Permutation& sigma, int j) {
  if (j < 1 || j > sigma.size())
    throw std::out_of_range("delete_position: j=" + std::to_string(j));
  const int removed = sigma.value_at(j);
  std::vector<int> out;
  out.reserve(sigma.size() - 1);
  for (int p = 1; p <= sigma.size(); ++p) {
    if (p == j) continue;
    const int v = sigma.value_at(p);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

}  // namespace schroeder
