#include "schroeder/bijections.hpp"

#include "schroeder/oracle.hpp"
#include "schroeder/recurrences.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

namespace schroeder {

namespace {

[[noreturn]] void fail(const std::string& what, const Permutation& p) {
  throw PreconditionError(what + " (input " + p.to_string() + ")");
}

void require(bool ok, const std::string& what, const Permutation& p) {
  if (!ok) fail(what, p);
}

std::vector<int> shifted_above(std::span<const int> word, int threshold) {
  std::vector<int> out(word.begin(), word.end());
  for (int& v : out)
    if (v > threshold) ++v;
  return out;
}

// --- verification plumbing --------------------------------------------------

using Cells = std::map<int, std::vector<Permutation>>;

Cells cells_by_statistic(int n, const ClassSpec& cls, const StatisticSpec& stat) {
  Cells cells;
  for (const Permutation& p : class_members(n, cls))
    if (auto k = stat.evaluate(p)) cells[*k].push_back(p);
  return cells;
}

const std::vector<Permutation>& cell_of(const Cells& cells, int k) {
  static const std::vector<Permutation> kEmpty;
  auto it = cells.find(k);
  return it == cells.end() ? kEmpty : it->second;
}

struct Branch {
  std::string name;
  std::vector<Permutation> images;
};

class Checker {
public:
  Checker(BijectionReport& report) : report_(report) {}

  void witness(std::string text) {
    if (report_.witnesses.size() < kMaxWitnesses) report_.witnesses.push_back(std::move(text));
  }

  std::string where(int k) const {
    return std::string(to_string(report_.construction)) + " n=" + std::to_string(report_.n) +
           " k=" + std::to_string(k) + ": ";
  }

  // Injectivity, pairwise disjointness and coverage of one target cell.
  void cell(int k, const std::vector<Permutation>& target, const std::vector<Branch>& branches) {
    CellReport cr;
    cr.k = k;
    cr.target_size = target.size();
    const std::set<Permutation> goal(target.begin(), target.end());
    std::map<Permutation, std::string> seen;
    for (const Branch& b : branches) {
      cr.branches.push_back({b.name, b.images.size()});
      add_image_size(b.name, b.images.size());
      std::set<Permutation> own;
      for (const Permutation& p : b.images) {
        if (!own.insert(p).second) {
          report_.injective = false;
          witness(where(k) + b.name + " hits " + p.to_string() + " twice");
          continue;
        }
        auto [it, fresh] = seen.emplace(p, b.name);
        if (!fresh) {
          cr.disjoint = false;
          witness(where(k) + p.to_string() + " in both " + it->second + " and " + b.name);
        }
        if (!goal.count(p)) {
          cr.covers = false;
          witness(where(k) + b.name + " image " + p.to_string() + " outside target");
        }
      }
    }
    for (const Permutation& p : target)
      if (!seen.count(p)) {
        cr.covers = false;
        witness(where(k) + p.to_string() + " not reached");
      }
    report_.target_size += target.size();
    report_.disjoint = report_.disjoint && cr.disjoint;
    report_.covers_target = report_.covers_target && cr.covers;
    report_.cells.push_back(std::move(cr));
  }

  // A structural claim that must hold; false records a witness.
  void marker(bool ok, int k, const std::string& what) {
    if (ok) return;
    report_.markers_hold = false;
    witness(where(k) + what);
  }

  // Applies f to every domain element, turning precondition errors into
  // failures instead of exceptions.
  template <class F>
  std::vector<Permutation> map_all(int k, const std::string& branch,
                                   const std::vector<Permutation>& domain, F f) {
    std::vector<Permutation> out;
    out.reserve(domain.size());
    for (const Permutation& p : domain) {
      try {
        out.push_back(f(p));
      } catch (const std::exception& e) {
        report_.markers_hold = false;
        witness(where(k) + branch + " rejected " + p.to_string() + ": " + e.what());
      }
    }
    return out;
  }

private:
  void add_image_size(const std::string& name, std::size_t size) {
    for (BranchCount& bc : report_.image_sizes)
      if (bc.branch == name) {
        bc.size += size;
        return;
      }
    report_.image_sizes.push_back({name, size});
  }

  BijectionReport& report_;
};

void verify_prop31(int n, Checker& check) {
  const TableDef def = table_def(3);
  const Cells big = cells_by_statistic(n, def.cls, def.stat);
  const Cells small = cells_by_statistic(n - 1, def.cls, def.stat);
  for (int ell = 1; ell <= n - 1; ++ell) {
    std::vector<Branch> branches;
    Branch left{"left_j", {}};
    for (int j = 1; j < ell; ++j) {
      auto imgs = check.map_all(ell, "left_j", cell_of(small, j), [&](const Permutation& t) {
        return prop31_child(t, ell, Prop31Branch::left_j);
      });
      left.images.insert(left.images.end(), imgs.begin(), imgs.end());
    }
    for (const Permutation& s : left.images)
      check.marker(s.position_of(2) < s.position_of(1), ell, "left_j output " + s.to_string() +
                                                                 " has 2 right of 1");
    branches.push_back(std::move(left));
    if (ell < n - 1) {
      for (auto [name, br] : {std::pair{"adjacent", Prop31Branch::adjacent},
                              std::pair{"end", Prop31Branch::end}}) {
        Branch b{name, check.map_all(ell, name, cell_of(small, ell), [&](const Permutation& t) {
                   return prop31_child(t, ell, br);
                 })};
        for (const Permutation& s : b.images)
          check.marker(!(s.value_at(n - 1) == 1 && s.value_at(n) == 2), ell,
                       std::string(name) + " output " + s.to_string() + " ends with 1 2");
        branches.push_back(std::move(b));
      }
    }
    // The dispatch predicate: a 2 right of the 1 is adjacent to it or last.
    for (const Permutation& s : cell_of(big, ell)) {
      const int p1 = s.position_of(1), p2 = s.position_of(2);
      check.marker(p2 < p1 || p2 == p1 + 1 || p2 == n, ell,
                   "target " + s.to_string() + " has its 2 neither adjacent nor last");
    }
    check.cell(ell, cell_of(big, ell), branches);
  }
}

// Which of phi1/phi2/phi3 must have produced tau, read off tau alone.
std::string classify41(const Permutation& tau, int k) {
  const int n = tau.size();
  if (k == n) return tau.value_at(n - 1) == 1 ? "phi3" : "phi1";
  if (tau.value_at(k - 1) > tau.value_at(k + 1)) return "phi1";
  return tau.value_at(k + 1) == n - 1 ? "phi2" : "phi3";
}

void verify_prop41(int n, Checker& check) {
  const TableDef def = table_def(4);
  const Cells big = cells_by_statistic(n, def.cls, def.stat);
  const Cells small = cells_by_statistic(n - 1, def.cls, def.stat);

  std::vector<int> base{1, n};
  for (int v = n - 1; v >= 2; --v) base.push_back(v);
  check.cell(2, cell_of(big, 2), {Branch{"base", {Permutation(base)}}});

  for (int k = 3; k <= n; ++k) {
    std::vector<Branch> branches;
    branches.push_back({"phi1", check.map_all(k, "phi1", cell_of(big, k - 1), phi1)});
    if (k < n)
      branches.push_back({"phi2", check.map_all(k, "phi2", cell_of(small, k),
                                                [&](const Permutation& s) { return phi2(s, k); })});
    branches.push_back({"phi3", check.map_all(k, "phi3", cell_of(small, k - 1), phi3)});
    for (const Branch& b : branches)
      for (const Permutation& t : b.images)
        check.marker(classify41(t, k) == b.name, k,
                     b.name + " output " + t.to_string() + " carries the " + classify41(t, k) +
                         " marker");
    check.cell(k, cell_of(big, k), branches);
  }
}

void verify_prop51(int n, Checker& check) {
  const TableDef def = table_def(5);
  const Cells big = cells_by_statistic(n, def.cls, def.stat);
  const Cells small = cells_by_statistic(n - 1, def.cls, def.stat);
  std::vector<Permutation> all_small;
  for (const auto& [k, ps] : small) all_small.insert(all_small.end(), ps.begin(), ps.end());

  for (int ell = 1; ell <= n; ++ell) {
    std::vector<Branch> branches;
    if (ell <= 3) {
      branches.push_back({"last", check.map_all(ell, "last", all_small, [&](const Permutation& t) {
                            return insert_value(t, ell, n);
                          })});
      check.cell(ell, cell_of(big, ell), branches);
      continue;
    }
    Branch descent{"descent", {}};
    for (int m = ell; m <= n - 1; ++m)
      for (const Permutation& t : cell_of(small, m)) descent.images.push_back(insert_value(t, ell, n));
    const auto& domain = cell_of(small, ell - 1);
    Branch u{"U", check.map_all(ell, "U", domain,
                                [&](const Permutation& t) { return insert_value(t, 1, n - 1); })};
    Branch v{"V", check.map_all(ell, "V", domain,
                                [&](const Permutation& t) { return alpha(t, ell); })};

    for (const Permutation& s : descent.images)
      check.marker(s.value_at(n - 1) > ell, ell, "descent output " + s.to_string());
    for (const Permutation& s : u.images)
      check.marker(s.value_at(n - 1) == 1, ell, "U output " + s.to_string());
    for (const Permutation& s : v.images) {
      const int second = s.value_at(n - 1);
      check.marker(1 < second && second < ell, ell, "V output " + s.to_string());
    }
    for (const Permutation& t : domain) {
      try {
        const Permutation s = alpha(t, ell);
        check.marker(alpha_inverse(s) == t, ell, "alpha inverse fails on " + t.to_string());
        // alpha's three cases leave distinct values before the last entry.
        const int second = s.value_at(n - 1);
        const AlphaCase c = alpha_case(t);
        const bool agrees = (c == AlphaCase::two_left_of_one && second == 2) ||
                            (c == AlphaCase::prefix_large_or_empty && second == ell - 1) ||
                            (c == AlphaCase::prefix_min && 2 < second && second < ell - 1);
        check.marker(agrees, ell, "alpha case of " + t.to_string() + " not visible in output");
      } catch (const std::exception&) {
        // already recorded by map_all
      }
    }
    const std::size_t expected = domain.size();
    check.marker(u.images.size() == expected && v.images.size() == expected, ell,
                 "|U| or |V| differs from s_{n-1,l-1}");
    branches.push_back(std::move(descent));
    branches.push_back(std::move(u));
    branches.push_back(std::move(v));
    check.cell(ell, cell_of(big, ell), branches);
  }
}

void verify_prop53(int n, Checker& check) {
  const ClassSpec cls{patterns::p1243_1324(), Filter::one_before_n};
  const StatisticSpec stat{StatisticKind::distance_1_to_n};
  const Cells big = cells_by_statistic(n, cls, stat);
  const Cells small = cells_by_statistic(n - 1, cls, stat);

  const auto& first = cell_of(big, 1);
  check.marker(BigInt(static_cast<unsigned long>(first.size())) == binomial(2 * n - 4, n - 2), 1,
               "cell size " + std::to_string(first.size()) + " differs from C(2n-4,n-2)");
  check.cell(1, first, {Branch{"closed", first}});
  check.cell(n - 1, cell_of(big, n - 1), {Branch{"identity", {Permutation::identity(n)}}});

  for (int k = 2; k <= n - 2; ++k) {
    const auto& target = cell_of(big, k);
    Branch theta{"A_theta", check.map_all(k, "A_theta", cell_of(small, k - 1), [](const Permutation& s) {
                   return dist_step(s, DistBranch::A_theta);
                 })};
    Branch tau{"A_tau", {}};
    for (const Permutation& s : target)
      if (s.position_of(n - 1) < s.position_of(1)) tau.images.push_back(s);

    // A_tau part maps bijectively onto the next cell.
    const auto moved = check.map_all(k, "A_tau", tau.images, [](const Permutation& s) {
      return dist_step(s, DistBranch::A_tau);
    });
    const std::set<Permutation> moved_set(moved.begin(), moved.end());
    const auto& next = cell_of(big, k + 1);
    check.marker(moved_set.size() == moved.size(), k, "A_tau relabelling is not injective");
    check.marker(moved_set == std::set<Permutation>(next.begin(), next.end()), k,
                 "A_tau relabelling does not land exactly on cell k+1");
    check.cell(k, target, {std::move(theta), std::move(tau)});
  }
}

constexpr std::array<std::pair<Construction, std::string_view>, 4> kConstructionNames{{
    {Construction::PROP31, "PROP31"},
    {Construction::PROP41, "PROP41"},
    {Construction::PROP51, "PROP51"},
    {Construction::PROP53, "PROP53"},
}};

}  // namespace

// --- maps ---------------------------------------------------------------------

Permutation prop31_child(const Permutation& tau, int ell, Prop31Branch branch) {
  const int n = tau.size() + 1;
  require(n >= 2 && ell >= 1 && ell <= n - 1, "prop31: ell out of range", tau);
  require(avoids(tau, patterns::p1324_1423()), "prop31: tau contains 1324 or 1423", tau);
  require(is_skew_indecomposable(tau), "prop31: tau is skew-decomposable", tau);
  const int j = tau.position_of(1);
  switch (branch) {
    case Prop31Branch::left_j:
      require(j < ell, "prop31 left_j: the 1 of tau must sit left of ell", tau);
      return insert_value(tau, 1, ell);
    case Prop31Branch::adjacent:
    case Prop31Branch::end:
      require(j == ell && ell < n - 1, "prop31: tau must have its 1 at ell < n-1", tau);
      return insert_value(tau, 2, branch == Prop31Branch::adjacent ? ell + 1 : n);
  }
  fail("prop31: unknown branch", tau);
}

Permutation phi1(const Permutation& sigma) {
  const int n = sigma.size();
  require(n >= 2, "phi1: size below 2", sigma);
  require(avoids(sigma, patterns::p1423_2413()), "phi1: sigma contains 1423 or 2413", sigma);
  const int p = sigma.position_of(n);
  require(sigma.position_of(1) < p && p < n, "phi1: need 1 before n and n not last", sigma);
  std::vector<int> v(sigma.values().begin(), sigma.values().end());
  std::swap(v[p - 1], v[p]);
  return Permutation(std::move(v));
}

Permutation phi2(const Permutation& sigma, int k) {
  const int big = sigma.size();
  require(big >= 1, "phi2: empty input", sigma);
  require(avoids(sigma, patterns::p1423_2413()), "phi2: sigma contains 1423 or 2413", sigma);
  require(sigma.position_of(big) == k, "phi2: maximum not at position k", sigma);
  require(sigma.position_of(1) < k || big == 1, "phi2: need 1 before the maximum", sigma);
  return insert_value(sigma, big + 1, k);
}

Permutation phi3(const Permutation& sigma) {
  const int big = sigma.size();  // n - 1
  require(big >= 2, "phi3: size below 2", sigma);
  require(avoids(sigma, patterns::p1423_2413()), "phi3: sigma contains 1423 or 2413", sigma);
  const int q = sigma.position_of(big);
  const int p = sigma.position_of(1);
  require(p < q, "phi3: need 1 before the maximum", sigma);
  if (q == big) return insert_value(sigma, 1, big);

  const auto w = sigma.values();
  const int m = w[q];  // entry right of the maximum
  // Prefix before 1: pi (above m) then L1 (below m).
  std::vector<int> pi, l1, l2, rho;
  for (int i = 0; i < p - 1; ++i) {
    if (w[i] > m) {
      require(l1.empty(), "phi3: prefix is not pi then L1", sigma);
      pi.push_back(w[i]);
    } else {
      l1.push_back(w[i]);
    }
  }
  // Between 1 and the maximum: L2 (below m) then rho (above m).
  for (int i = p; i < q - 1; ++i) {
    if (w[i] < m) {
      require(rho.empty(), "phi3: middle is not L2 then rho", sigma);
      l2.push_back(w[i]);
    } else {
      rho.push_back(w[i]);
    }
  }
  std::vector<int> tail(w.begin() + q + 1, w.end());
  for (int v : tail) require(v < m, "phi3: entry right of m exceeds m", sigma);

  std::vector<int> out = shifted_above(pi, m);
  out.push_back(m + 1);
  for (int v : shifted_above(rho, m)) out.push_back(v);
  out.insert(out.end(), l1.begin(), l1.end());
  out.push_back(1);
  out.insert(out.end(), l2.begin(), l2.end());
  out.push_back(big + 1);
  out.push_back(m);
  out.insert(out.end(), tail.begin(), tail.end());
  return Permutation(std::move(out));
}

AlphaCase alpha_case(const Permutation& tau) {
  const int i = tau.position_of(1);
  if (tau.position_of(2) < i) return AlphaCase::two_left_of_one;
  const int top = tau.last();
  const auto w = tau.values();
  const bool large = std::all_of(w.begin(), w.begin() + (i - 1), [&](int v) { return v > top; });
  return large ? AlphaCase::prefix_large_or_empty : AlphaCase::prefix_min;
}

Permutation alpha(const Permutation& tau, int ell) {
  const int n = tau.size() + 1;
  require(ell >= 4 && ell <= n, "alpha: need 4 <= ell <= n", tau);
  require(tau.last() == ell - 1, "alpha: tau must end with ell-1", tau);
  require(avoids(tau, patterns::p1324_2134()), "alpha: tau contains 1324 or 2134", tau);
  switch (alpha_case(tau)) {
    case AlphaCase::two_left_of_one:
      return insert_value(tau, 2, n - 1);
    case AlphaCase::prefix_large_or_empty:
      return insert_value(tau, ell - 1, n - 1);
    case AlphaCase::prefix_min: {
      const auto w = tau.values();
      const int m = *std::min_element(w.begin(), w.begin() + (tau.position_of(1) - 1));
      return insert_value(tau, m, n - 1);
    }
  }
  fail("alpha: unknown case", tau);
}

Permutation alpha_inverse(const Permutation& sigma) {
  const int n = sigma.size();
  require(n >= 4, "alpha_inverse: size below 4", sigma);
  const int second = sigma.value_at(n - 1);
  require(1 < second && second < sigma.last(), "alpha_inverse: sigma is not in V", sigma);
  return delete_position(sigma, n - 1);
}

Permutation dist_step(const Permutation& sigma, DistBranch branch) {
  const int n_in = sigma.size();
  require(n_in >= 2, "dist_step: size below 2", sigma);
  require(avoids(sigma, patterns::p1243_1324()), "dist_step: sigma contains 1243 or 1324", sigma);
  require(sigma.position_of(1) < sigma.position_of(n_in), "dist_step: need 1 before the maximum",
          sigma);
  if (branch == DistBranch::A_theta) return insert_value(sigma, n_in + 1, sigma.position_of(n_in) + 1);

  const int n = n_in;
  require(n >= 3, "dist_step A_tau: size below 3", sigma);
  const int q = sigma.position_of(n - 1);
  const int p = sigma.position_of(1);
  const int r = sigma.position_of(n);
  require(q < p, "dist_step A_tau: n-1 must lie left of 1", sigma);
  const auto w = sigma.values();
  const int m = n - 1 - (q - 1);
  std::vector<int> out;
  for (int i = 0; i < q - 1; ++i) out.push_back(w[i] + 1);  // tau_1 raised
  for (int i = q; i < r - 1; ++i) out.push_back(w[i]);      // tau_2 1 theta
  out.push_back(m);
  for (int i = r - 1; i < n; ++i) out.push_back(w[i]);  // n pi
  try {
    return Permutation(std::move(out));
  } catch (const std::invalid_argument&) {
    fail("dist_step A_tau: relabelling does not give a permutation", sigma);
  }
}

// --- reports ------------------------------------------------------------------------

std::string_view to_string(Construction c) {
  for (const auto& [id, name] : kConstructionNames)
    if (id == c) return name;
  return "?";
}

std::optional<Construction> parse_construction(std::string_view name) {
  for (const auto& [id, n] : kConstructionNames)
    if (n == name) return id;
  return std::nullopt;
}

std::size_t BijectionReport::image_total() const {
  std::size_t total = 0;
  for (const BranchCount& b : image_sizes) total += b.size;
  return total;
}

BijectionReport verify_partition(int n, Construction construction, int max_n) {
  if (n < 3 || n > max_n)
    throw std::invalid_argument("verify_partition needs 3 <= n <= " + std::to_string(max_n));
  BijectionReport report;
  report.n = n;
  report.construction = construction;
  Checker check(report);
  switch (construction) {
    case Construction::PROP31:
      verify_prop31(n, check);
      break;
    case Construction::PROP41:
      verify_prop41(n, check);
      break;
    case Construction::PROP51:
      verify_prop51(n, check);
      break;
    case Construction::PROP53:
      verify_prop53(n, check);
      break;
  }
  return report;
}

}  // namespace schroeder
