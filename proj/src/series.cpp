#include "schroeder/series.hpp"

#include "schroeder/oracle.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace schroeder {

std::string Exponents::to_string() const {
  return "x^" + std::to_string(x) + " m1^" + std::to_string(m1) + " m2^" + std::to_string(m2);
}

Bounds min_bounds(const Bounds& a, const Bounds& b) {
  return {std::min(a.x, b.x), std::min(a.m1, b.m1), std::min(a.m2, b.m2)};
}

TruncatedSeries::TruncatedSeries(Bounds bounds) : bounds_(bounds) {
  if (bounds.x < 0 || bounds.m1 < 0 || bounds.m2 < 0)
    throw std::invalid_argument("negative truncation bound");
  coeffs_.assign(static_cast<std::size_t>(bounds.x + 1) * (bounds.m1 + 1) * (bounds.m2 + 1),
                 Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, Bounds bounds) {
  return monomial(c, {}, bounds);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, Exponents e, Bounds bounds) {
  TruncatedSeries s(bounds);
  if (bounds.contains(e)) s.coeffs_[s.index(e)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(Var v, Bounds bounds) {
  Exponents e;
  switch (v) {
    case Var::x:
      e.x = 1;
      break;
    case Var::marker1:
      e.m1 = 1;
      break;
    case Var::marker2:
      e.m2 = 1;
      break;
  }
  return monomial(1, e, bounds);
}

std::size_t TruncatedSeries::index(const Exponents& e) const {
  return (static_cast<std::size_t>(e.x) * (bounds_.m1 + 1) + e.m1) * (bounds_.m2 + 1) + e.m2;
}

const Rational& TruncatedSeries::coefficient(Exponents e) const {
  if (!bounds_.contains(e))
    throw std::out_of_range("coefficient " + e.to_string() + " lies beyond the truncation");
  return coeffs_[index(e)];
}

void TruncatedSeries::set(Exponents e, const Rational& value) {
  if (!bounds_.contains(e))
    throw std::out_of_range("coefficient " + e.to_string() + " lies beyond the truncation");
  coeffs_[index(e)] = value;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::vector<std::pair<Exponents, Rational>> TruncatedSeries::terms() const {
  std::vector<std::pair<Exponents, Rational>> out;
  for (int i = 0; i <= bounds_.x; ++i)
    for (int j = 0; j <= bounds_.m1; ++j)
      for (int k = 0; k <= bounds_.m2; ++k) {
        const auto& c = coeffs_[index({i, j, k})];
        if (c != 0) out.emplace_back(Exponents{i, j, k}, c);
      }
  return out;
}

TruncatedSeries TruncatedSeries::restricted(Bounds b) const {
  const Bounds r = min_bounds(b, bounds_);
  TruncatedSeries out(r);
  for (int i = 0; i <= r.x; ++i)
    for (int j = 0; j <= r.m1; ++j)
      for (int k = 0; k <= r.m2; ++k) out.coeffs_[out.index({i, j, k})] = coeffs_[index({i, j, k})];
  out.truncated_ = truncated_;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (!(bounds_ == other.bounds_)) *this = restricted(other.bounds_);
  const Bounds& b = bounds_;
  for (int i = 0; i <= b.x; ++i)
    for (int j = 0; j <= b.m1; ++j)
      for (int k = 0; k <= b.m2; ++k) coeffs_[index({i, j, k})] += other.coefficient({i, j, k});
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  return *this += -TruncatedSeries(other);
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_div(a, b);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Bounds r = min_bounds(a.bounds(), b.bounds());
  TruncatedSeries out(r);
  const auto ta = a.restricted(r).terms();
  const auto tb = b.restricted(r).terms();
  Rational prod;
  for (const auto& [ea, ca] : ta)
    for (const auto& [eb, cb] : tb) {
      const Exponents e{ea.x + eb.x, ea.m1 + eb.m1, ea.m2 + eb.m2};
      if (!r.contains(e)) continue;
      prod = ca * cb;
      out.set(e, out.coefficient(e) + prod);
    }
  if (a.truncation_flag() || b.truncation_flag()) out.mark_truncated();
  return out;
}

namespace {

bool divides(const Exponents& d, const Exponents& e) {
  return d.x <= e.x && d.m1 <= e.m1 && d.m2 <= e.m2;
}

Exponents minus(const Exponents& e, const Exponents& d) {
  return {e.x - d.x, e.m1 - d.m1, e.m2 - d.m2};
}

template <typename Fn>
void for_each_exponent(const Bounds& b, Fn&& fn) {
  for (int i = 0; i <= b.x; ++i)
    for (int j = 0; j <= b.m1; ++j)
      for (int k = 0; k <= b.m2; ++k) fn(Exponents{i, j, k});
}

}  // namespace

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
  const Bounds r = min_bounds(num.bounds(), den.bounds());
  const Rational c0 = den.coefficient({});
  if (c0 == 0) throw SeriesError("non-invertible denominator");
  std::vector<std::pair<Exponents, Rational>> den_terms;
  for (auto& t : den.restricted(r).terms())
    if (!(t.first == Exponents{})) den_terms.push_back(std::move(t));

  TruncatedSeries out(r);
  Rational acc;
  // Lexicographic order visits every proper divisor of e before e.
  for_each_exponent(r, [&](const Exponents& e) {
    acc = num.coefficient(e);
    for (const auto& [d, c] : den_terms)
      if (divides(d, e)) acc -= c * out.coefficient(minus(e, d));
    if (acc != 0) out.set(e, acc / c0);
  });
  if (num.truncation_flag() || den.truncation_flag()) out.mark_truncated();
  return out;
}

TruncatedSeries series_sqrt(const TruncatedSeries& a) {
  if (a.coefficient({}) != 1) throw SeriesError("sqrt requires unit constant term");
  const Bounds& r = a.bounds();
  TruncatedSeries out(r);
  out.set({}, 1);
  std::vector<std::pair<Exponents, Rational>> known;  // nonzero non-constant terms so far
  Rational acc;
  for_each_exponent(r, [&](const Exponents& e) {
    if (e == Exponents{}) return;
    acc = a.coefficient(e);
    for (const auto& [d, c] : known)
      if (divides(d, e)) acc -= c * out.coefficient(minus(e, d));
    // The loop above pairs (d, e-d) for d != 0, e; both orders are
    // included, and r_e itself appears with coefficient 2.
    if (acc != 0) {
      acc /= 2;
      out.set(e, acc);
      known.emplace_back(e, acc);
    }
  });
  if (a.truncation_flag()) out.mark_truncated();
  return out;
}

TruncatedSeries scale_argument(const TruncatedSeries& a, Var marker) {
  if (marker == Var::x) throw std::invalid_argument("scale_argument needs a marker role");
  const Bounds& b = a.bounds();
  TruncatedSeries out(b);
  bool dropped = false;
  for (const auto& [e, c] : a.terms()) {
    Exponents t = e;
    (marker == Var::marker1 ? t.m1 : t.m2) += e.x;
    if (b.contains(t))
      out.set(t, c);
    else
      dropped = true;
  }
  if (dropped || a.truncation_flag()) out.mark_truncated();
  return out;
}

TruncatedSeries at_one(const TruncatedSeries& a, Var marker) {
  if (marker == Var::x) throw std::invalid_argument("at_one needs a marker role");
  Bounds b = a.bounds();
  (marker == Var::marker1 ? b.m1 : b.m2) = 0;
  TruncatedSeries out(b);
  for (const auto& [e, c] : a.terms()) {
    Exponents t = e;
    (marker == Var::marker1 ? t.m1 : t.m2) = 0;
    out.set(t, out.coefficient(t) + c);
  }
  if (a.truncation_flag()) out.mark_truncated();
  return out;
}

TruncatedSeries divide_by_marker(const TruncatedSeries& a, Var marker) {
  if (marker == Var::x) throw std::invalid_argument("divide_by_marker needs a marker role");
  Bounds b = a.bounds();
  int& bound = marker == Var::marker1 ? b.m1 : b.m2;
  if (bound == 0) throw SeriesError("marker bound too small to divide");
  --bound;
  TruncatedSeries out(b);
  for (const auto& [e, c] : a.terms()) {
    Exponents t = e;
    int& deg = marker == Var::marker1 ? t.m1 : t.m2;
    if (deg == 0) throw SeriesError("series is not divisible by the marker");
    --deg;
    out.set(t, c);
  }
  if (a.truncation_flag()) out.mark_truncated();
  return out;
}

TruncatedSeries lift_marker(const TruncatedSeries& a, Var marker, int bound) {
  if (marker == Var::x) throw std::invalid_argument("lift_marker needs a marker role");
  Bounds b = a.bounds();
  int& current = marker == Var::marker1 ? b.m1 : b.m2;
  if (current != 0) throw SeriesError("lift_marker needs a marker-free series");
  current = bound;
  TruncatedSeries out(b);
  for (const auto& [e, c] : a.terms()) out.set(e, c);
  if (a.truncation_flag()) out.mark_truncated();
  return out;
}

IdentityCheck check_identity(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const Bounds r = min_bounds(lhs.bounds(), rhs.bounds());
  IdentityCheck result;
  for_each_exponent(r, [&](const Exponents& e) {
    if (!result.equal) return;
    if (lhs.coefficient(e) != rhs.coefficient(e)) {
      result.equal = false;
      result.first_mismatch = e;
    }
  });
  return result;
}

// --- generating functions --------------------------------------------------------

namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 9> kFormulaNames{{
    {FormulaId::S, "S"},
    {FormulaId::G_SEP_POS1, "G_SEP_POS1"},
    {FormulaId::F_SEP_DIST, "F_SEP_DIST"},
    {FormulaId::F_SEP_A, "F_SEP_A"},
    {FormulaId::G_P31, "G_P31"},
    {FormulaId::G_COR42, "G_COR42"},
    {FormulaId::H_P51, "H_P51"},
    {FormulaId::G_CB, "G_CB"},
    {FormulaId::LITTLE, "LITTLE"},
}};

struct Ring {
  Bounds b;
  TruncatedSeries one() const { return TruncatedSeries::constant(1, b); }
  TruncatedSeries c(const Rational& v) const { return TruncatedSeries::constant(v, b); }
  TruncatedSeries x() const { return TruncatedSeries::variable(Var::x, b); }
  TruncatedSeries u() const { return TruncatedSeries::variable(Var::marker1, b); }
  TruncatedSeries s() const { return TruncatedSeries::variable(Var::marker2, b); }
  TruncatedSeries sqrt_1_6x_x2() const {
    const auto x = this->x();
    return series_sqrt(one() - c(6) * x + x * x);
  }
};

TruncatedSeries sep_position_of_1(const Ring& R) {
  const auto S = schroeder_series(R.b);
  const auto Su = scale_argument(S, Var::marker1);
  return (R.x() * R.u() * S * Su) / (S + Su - S * Su);
}

TruncatedSeries sep_distance(const Ring& R) {
  const auto S = schroeder_series(R.b);
  const auto St = scale_argument(S, Var::marker1);
  const auto kernel = St + S - St * S;
  return (R.x() * R.x() * R.u() * S * St * St) / (kernel * kernel);
}

TruncatedSeries sep_distance_and_a(const Ring& R) {
  const auto S = schroeder_series(R.b);
  const auto Ss = scale_argument(S, Var::marker2);
  return sep_distance(R) * R.s() * Ss;
}

TruncatedSeries skew_indecomposable_1324_1423(const Ring& R) {
  const auto x = R.x(), u = R.u();
  const auto radicand = R.one() - R.c(6) * u * x + u * u * x * x;
  const auto num =
      u * x * (R.c(4) * u - R.c(3) + R.c(4) * x - R.c(3) * u * x - series_sqrt(radicand));
  const auto den = R.c(4) * (u - R.one() - u * x + R.c(2) * x);
  return num / den;
}

// xt^2 (S(xt) - 1) / (1 + t - S(xt)). The denominator has zero constant
// term, so numerator and denominator are divided by t first; the work ring
// carries one extra t degree to absorb that shift.
TruncatedSeries one_before_n_1423_2413(const Bounds& b) {
  const Ring W{{b.x, b.m1 + 1, 0}};
  const auto t = W.u();
  const auto St = scale_argument(schroeder_series(W.b), Var::marker1);
  const auto num = W.x() * t * t * (St - W.one());
  const auto den = W.one() + t - St;
  return divide_by_marker(num, Var::marker1) / divide_by_marker(den, Var::marker1);
}

TruncatedSeries last_entry_1324_2134(const Ring& R) {
  const auto x = R.x(), u = R.u(), one = R.one();
  const auto h1_times_2 = one - x - R.sqrt_1_6x_x2();
  const auto num = R.c(2) * u * x * (one - u) * (one - u * x) +
                   u * x * (one - u * (one - u) * x) * h1_times_2;
  const auto den = R.c(2) * (one - u * (one + x) + R.c(2) * u * u * x);
  return num / den;
}

TruncatedSeries first_entry_1243_1324(const Ring& R) {
  const auto x = R.x(), u = R.u(), one = R.one();
  const auto one_minus_x = one - x;
  const auto first = (u * (one - u) * x * x * one_minus_x * one_minus_x) / (one - R.c(2) * x);
  const auto second = (u * u * u * x * x * x) / series_sqrt(one - R.c(4) * u * x);
  return (first - second) / (one - u - x);
}

}  // namespace

std::string_view to_string(FormulaId id) {
  for (const auto& [fid, name] : kFormulaNames)
    if (fid == id) return name;
  return "?";
}

std::optional<FormulaId> parse_formula_id(std::string_view name) {
  for (const auto& [fid, n] : kFormulaNames)
    if (n == name) return fid;
  return std::nullopt;
}

int marker_count(FormulaId id) {
  switch (id) {
    case FormulaId::S:
    case FormulaId::LITTLE:
      return 0;
    case FormulaId::F_SEP_A:
      return 2;
    default:
      return 1;
  }
}

Bounds formula_bounds(FormulaId id, int order) {
  const int markers = marker_count(id);
  return {order, markers >= 1 ? order : 0, markers >= 2 ? order : 0};
}

TruncatedSeries schroeder_series(Bounds bounds) {
  const Ring R{bounds};
  return (R.c(3) - R.x() - R.sqrt_1_6x_x2()) * Rational(1, 2);
}

TruncatedSeries paper_gf(FormulaId id, Bounds bounds) {
  if (bounds.x < 2) throw std::invalid_argument("paper_gf needs x-order >= 2");
  const Ring R{bounds};
  switch (id) {
    case FormulaId::S:
      return schroeder_series(bounds);
    case FormulaId::G_SEP_POS1:
      return sep_position_of_1(R);
    case FormulaId::F_SEP_DIST:
      return sep_distance(R);
    case FormulaId::F_SEP_A:
      return sep_distance_and_a(R);
    case FormulaId::G_P31:
      return skew_indecomposable_1324_1423(R);
    case FormulaId::G_COR42:
      return one_before_n_1423_2413(bounds);
    case FormulaId::H_P51:
      return last_entry_1324_2134(R);
    case FormulaId::G_CB:
      return first_entry_1243_1324(R);
    case FormulaId::LITTLE:
      return (R.one() + R.x() - R.sqrt_1_6x_x2()) * Rational(1, 4);
  }
  throw std::invalid_argument("unknown formula id");
}

FormulaId table_formula(int table_id) {
  switch (table_id) {
    case 1:
      return FormulaId::G_SEP_POS1;
    case 2:
      return FormulaId::F_SEP_DIST;
    case 3:
      return FormulaId::G_P31;
    case 4:
      return FormulaId::G_COR42;
    case 5:
      return FormulaId::H_P51;
    case 6:
      return FormulaId::G_CB;
    default:
      throw std::out_of_range("table id must be 1..6, got " + std::to_string(table_id));
  }
}

MarkerIndexing table_indexing(int table_id) {
  return table_id == 2 ? MarkerIndexing::reflected : MarkerIndexing::direct;
}

Triangle coefficient_triangle(const TruncatedSeries& series, const RowLayout& layout,
                              int n_max, MarkerIndexing indexing) {
  Triangle t = Triangle::shaped(layout, n_max);
  for (int n = layout.n_min; n <= n_max; ++n)
    for (int k = layout.k_min; k <= layout.k_max(n); ++k) {
      const Exponents e{n, indexing == MarkerIndexing::direct ? k : n - k, 0};
      const Rational& c = series.coefficient(e);
      if (c.get_den() != 1) throw SeriesError("non-integer coefficient at " + e.to_string());
      t.cell(n, k) = c.get_num();
    }
  return t;
}

Triangle table_series(int table_id, int n_max) {
  const int order = std::max(n_max, 2);
  const auto series = paper_gf(table_formula(table_id), Bounds{order, order, 0});
  return coefficient_triangle(series, table_def(table_id).layout, n_max,
                              table_indexing(table_id));
}

}  // namespace schroeder
