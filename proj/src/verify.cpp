#include "schroeder/verify.hpp"

#include "schroeder/bijections.hpp"
#include "schroeder/oracle.hpp"
#include "schroeder/recurrences.hpp"
#include "schroeder/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace schroeder {

namespace {

constexpr int kSeriesCheckOrder = 12;

CheckResult compare(std::string name, const Triangle& a, const Triangle& b, int n_max) {
  auto diff = first_difference(a, b, n_max);
  return {std::move(name), !diff, diff ? "first difference at " + diff->describe() : ""};
}

CheckResult identity(std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const IdentityCheck r = check_identity(lhs, rhs);
  return {std::move(name), r.equal,
          r.equal ? "" : "first mismatch at " + r.first_mismatch->to_string()};
}

CheckResult anchor(std::string name, const TruncatedSeries& s, int first_power,
                   const std::vector<long>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const int p = first_power + static_cast<int>(i);
    const Rational& c = s.coefficient({p, 0, 0});
    if (c != expected[i])
      return {std::move(name), false,
              "x^" + std::to_string(p) + ": " + c.get_str() + " vs " + std::to_string(expected[i])};
  }
  return {std::move(name), true, ""};
}

std::string label(int table_id) { return "table " + std::to_string(table_id); }

// Every x^n coefficient of the table's series must land inside the
// printed layout; otherwise coefficient_triangle would drop it silently.
CheckResult series_mass(int table_id, int n_max) {
  const int order = std::max(n_max, 2);
  const auto series = paper_gf(table_formula(table_id), Bounds{order, order, 0});
  const auto total = at_one(series, Var::marker1);
  const Triangle t = table_series(table_id, n_max);
  const std::string name = label(table_id) + " series mass inside layout n<=" + std::to_string(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const BigInt sum = t.has_row(n) ? t.row(n).sum() : BigInt(0);
    if (total.coefficient({n, 0, 0}) != Rational(sum))
      return {name, false, "row n=" + std::to_string(n) + " loses coefficients"};
  }
  return {name, true, ""};
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

void require_oracle_range(int n_max) {
  if (n_max < 1 || n_max > kOracleCeiling)
    throw std::invalid_argument("n_max must be in 1.." + std::to_string(kOracleCeiling));
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> verify_table(int table_id, int n_max) {
  require_oracle_range(n_max);
  const std::string nm = " n<=" + std::to_string(n_max);
  std::vector<CheckResult> out;
  const Triangle oracle = table_oracle(table_id, n_max);
  out.push_back(compare(label(table_id) + " oracle = series" + nm, oracle,
                        table_series(table_id, n_max), n_max));
  out.push_back(series_mass(table_id, n_max));
  if (auto rec = table_recurrence(table_id)) {
    const int wide = std::max(n_max, kSeriesCheckOrder);
    out.push_back(compare(label(table_id) + " oracle = recurrence" + nm, oracle,
                          triangle_by_recurrence(*rec, n_max), n_max));
    out.push_back(compare(label(table_id) + " series = recurrence n<=" + std::to_string(wide),
                          table_series(table_id, wide), triangle_by_recurrence(*rec, wide), wide));
  }
  return out;
}

std::vector<CheckResult> verify_distance_triangle(int n_max) {
  require_oracle_range(n_max);
  const std::string nm = " n<=" + std::to_string(n_max);
  const ClassSpec cls{patterns::p1243_1324(), Filter::one_before_n};
  const StatisticSpec stat{StatisticKind::distance_1_to_n};
  const RowLayout layout = recurrence_layout(RecurrenceId::p53_rec);
  const int n = std::max(n_max, layout.n_min);
  const Triangle oracle = reshape(triangle_from_oracle(n, cls, stat), layout, n);
  const Triangle rec = triangle_by_recurrence(RecurrenceId::p53_rec, n);
  std::vector<CheckResult> out;
  out.push_back(compare("distance triangle oracle = recurrence" + nm, oracle, rec, n_max));
  out.push_back(compare("distance triangle oracle = closed form" + nm, oracle,
                        triangle_by_recurrence(RecurrenceId::p53_closed, n), n_max));
  constexpr int kWide = 30;
  out.push_back(compare("distance triangle recurrence = closed form n<=30",
                        triangle_by_recurrence(RecurrenceId::p53_rec, kWide),
                        triangle_by_recurrence(RecurrenceId::p53_closed, kWide), kWide));
  return out;
}

std::vector<CheckResult> verify_identities(int order) {
  if (order < 2 || order > kMaxSeriesOrder)
    throw std::invalid_argument("order must be in 2.." + std::to_string(kMaxSeriesOrder));
  const std::string at = " to order " + std::to_string(order);
  const Bounds xb{order, 0, 0};
  const Bounds ub{order, order, 0};
  std::vector<CheckResult> out;

  {
    const auto S = schroeder_series(xb);
    const auto x = TruncatedSeries::variable(Var::x, xb);
    const auto three = TruncatedSeries::constant(3, xb);
    const auto two = TruncatedSeries::constant(2, xb);
    out.push_back(identity("S^2 - (3-x)S + 2 = 0" + at, S * S - (three - x) * S + two,
                           TruncatedSeries(xb)));
    const auto g1 = at_one(paper_gf(FormulaId::G_SEP_POS1, ub), Var::marker1);
    out.push_back(
        identity("g(x,1) = S(x) - 1, separable by position of 1" + at, g1,
                 S - TruncatedSeries::constant(1, xb)));
  }

  const auto one = TruncatedSeries::constant(1, ub);
  const auto x = TruncatedSeries::variable(Var::x, ub);
  const auto u = TruncatedSeries::variable(Var::marker1, ub);
  const auto c = [&](long v) { return TruncatedSeries::constant(v, ub); };
  const auto at_u1 = [&](const TruncatedSeries& s) {
    return lift_marker(at_one(s, Var::marker1), Var::marker1, order);
  };

  {
    const auto g = paper_gf(FormulaId::G_P31, ub);
    const auto lhs = (u - one - u * x + c(2) * x) * g;
    const auto rhs = u * x * (one - x) * (u - one) + u * x * scale_argument(at_u1(g), Var::marker1);
    out.push_back(identity("(u-1-ux+2x) g = ux(1-x)(u-1) + ux g(ux,1)" + at, lhs, rhs));
  }
  {
    const auto h = paper_gf(FormulaId::H_P51, ub);
    const auto lhs = (one - u * (one + x) + c(2) * u * u * x) * h;
    const auto rhs = u * x * (one - u) * (one - u * x) + u * x * (one - u * (one - u) * x) * at_u1(h);
    out.push_back(identity("[1-u(1+x)+2u^2x] h = ux(1-u)(1-ux) + ux(1-u(1-u)x) h(x,1)" + at, lhs,
                           rhs));
  }
  {
    const auto g = paper_gf(FormulaId::G_CB, ub);
    const auto lhs = (one - u - x) * g;
    const auto rhs = (u * (one - u) * x * x * (one - x) * (one - x)) / (one - c(2) * x) -
                     u * x * scale_argument(at_u1(g), Var::marker1);
    out.push_back(
        identity("(1-u-x) g = u(1-u)x^2(1-x)^2/(1-2x) - ux g(ux,1)" + at, lhs, rhs));
  }

  const auto S = paper_gf(FormulaId::S, Bounds{std::max(order, 8), 0, 0});
  out.push_back(anchor("S anchors x^0..x^8", S, 0, {1, 1, 2, 6, 22, 90, 394, 1806, 8558}));
  const Bounds big{std::max(order, 8), std::max(order, 8), 0};
  out.push_back(anchor("little Schroeder anchors x^1..x^7",
                       paper_gf(FormulaId::LITTLE, Bounds{big.x, 0, 0}), 1,
                       {1, 1, 3, 11, 45, 197, 903}));
  out.push_back(anchor("central binomial anchors x^2..x^8",
                       at_one(paper_gf(FormulaId::G_CB, big), Var::marker1), 2,
                       {1, 2, 6, 20, 70, 252, 924}));
  out.push_back(anchor("h(x,1) anchors x^1..x^7",
                       at_one(paper_gf(FormulaId::H_P51, big), Var::marker1), 1,
                       {1, 2, 6, 22, 90, 394, 1806}));
  return out;
}

std::vector<CheckResult> verify_symmetries(int n_max) {
  require_oracle_range(n_max);
  const std::string nm = " n<=" + std::to_string(n_max);
  std::vector<CheckResult> out;

  {
    const Triangle t1 = table_oracle(1, n_max);
    CheckResult r{"table 1 rows palindromic" + nm, true, ""};
    for (const auto& row : t1.rows()) {
      std::vector<BigInt> rev(row.cells.rbegin(), row.cells.rend());
      if (rev != row.cells) {
        r.passed = false;
        r.detail = "row n=" + std::to_string(row.n);
        break;
      }
    }
    out.push_back(std::move(r));
  }

  for (const auto& [name, set] :
       {std::pair{"separable", patterns::separable()}, std::pair{"{1423,2413}", patterns::p1423_2413()}}) {
    CheckResult r{std::string(name) + " 1-before-n count = n-before-1 count" + nm, true, ""};
    for (int n = 2; n <= n_max && r.passed; ++n) {
      long before = 0, after = 0;
      for (const Permutation& p : enumerate_avoiders(n, set))
        (p.position_of(1) < p.position_of(n) ? before : after) += 1;
      if (before != after) {
        r.passed = false;
        r.detail = "n=" + std::to_string(n) + ": " + std::to_string(before) + " vs " +
                   std::to_string(after);
      }
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"1-before-n counts of (1324,2134) and (1243,1324) = C(2n-3,n-1)" + nm, true, ""};
    const ClassSpec a{patterns::p1324_2134(), Filter::one_before_n};
    const ClassSpec b{patterns::p1243_1324(), Filter::one_before_n};
    for (int n = 2; n <= n_max && r.passed; ++n) {
      const auto ma = class_members(n, a);
      const auto mb = class_members(n, b);
      const BigInt want = binomial(2L * n - 3, n - 1);
      // reverse-complement carries one class onto the other
      std::vector<Permutation> rc;
      for (const Permutation& p : ma) rc.push_back(apply_symmetry(p, Symmetry::reverse_complement));
      std::sort(rc.begin(), rc.end());
      if (BigInt(static_cast<unsigned long>(ma.size())) != want ||
          BigInt(static_cast<unsigned long>(mb.size())) != want || rc != mb) {
        r.passed = false;
        r.detail = "n=" + std::to_string(n) + ": " + std::to_string(ma.size()) + ", " +
                   std::to_string(mb.size()) + " vs " + want.get_str();
      }
    }
    out.push_back(std::move(r));
  }

  {
    const int order = std::max(n_max, kSeriesCheckOrder);
    const auto g = paper_gf(FormulaId::G_SEP_POS1, Bounds{order, order + 1, 0});
    CheckResult r{"separable position-of-1 coefficients reverse-symmetric n<=" + std::to_string(order),
                  true, ""};
    for (int n = 1; n <= order && r.passed; ++n)
      for (int l = 1; l <= n; ++l)
        if (g.coefficient({n, l, 0}) != g.coefficient({n, n + 1 - l, 0})) {
          r.passed = false;
          r.detail = "n=" + std::to_string(n) + ", l=" + std::to_string(l);
          break;
        }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> verify_bijections(int n_max) {
  require_oracle_range(n_max);
  std::vector<CheckResult> out;
  for (Construction c :
       {Construction::PROP31, Construction::PROP41, Construction::PROP51, Construction::PROP53}) {
    CheckResult r{std::string(to_string(c)) + " injective, disjoint, covering 3<=n<=" +
                      std::to_string(n_max),
                  true, ""};
    for (int n = 3; n <= n_max && r.passed; ++n) {
      const BijectionReport rep = verify_partition(n, c, kOracleCeiling);
      if (!rep.passed()) {
        r.passed = false;
        r.detail = "n=" + std::to_string(n);
        for (const auto& w : rep.witnesses) r.detail += "; " + w;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool valid_scope(std::string_view scope) {
  if (scope == "all" || scope == "bijections" || scope == "identities") return true;
  return scope.size() == 1 && scope[0] >= '1' && scope[0] <= '6';
}

std::vector<CheckResult> run_verify(std::string_view scope, int n_max) {
  if (!valid_scope(scope)) throw std::invalid_argument("unknown scope: " + std::string(scope));
  require_oracle_range(n_max);
  if (scope == "identities") return verify_identities(kSeriesCheckOrder);
  if (scope == "bijections") {
    if (n_max < 3) throw std::invalid_argument("bijection checks need n_max >= 3");
    return verify_bijections(n_max);
  }
  if (scope != "all") return verify_table(scope[0] - '0', std::max(n_max, 2));

  std::vector<CheckResult> out;
  for (int id = 1; id <= 6; ++id) append(out, verify_table(id, std::max(n_max, 2)));
  append(out, verify_distance_triangle(n_max));
  append(out, verify_identities(kSeriesCheckOrder));
  append(out, verify_symmetries(n_max));
  if (n_max >= 3) append(out, verify_bijections(n_max));
  return out;
}

}  // namespace schroeder
