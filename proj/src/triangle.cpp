#include "schroeder/triangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace schroeder {

BigInt Triangle::Row::sum() const {
  BigInt s = 0;
  for (const auto& c : cells) s += c;
  return s;
}

Triangle Triangle::shaped(const RowLayout& layout, int n_max) {
  Triangle t;
  for (int n = layout.n_min; n <= n_max; ++n) t.add_row(n, layout.k_min, layout.k_max(n));
  return t;
}

void Triangle::add_row(int n, int k_min, int k_max) {
  if (!rows_.empty() && n <= rows_.back().n)
    throw std::invalid_argument("rows must be added in increasing n");
  if (k_max < k_min) throw std::invalid_argument("empty row range");
  rows_.push_back(Row{n, k_min, std::vector<BigInt>(k_max - k_min + 1, BigInt(0))});
}

Triangle::Row* Triangle::find_row(int n) {
  return const_cast<Row*>(std::as_const(*this).find_row(n));
}

const Triangle::Row* Triangle::find_row(int n) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), n,
                             [](const Row& r, int v) { return r.n < v; });
  return (it != rows_.end() && it->n == n) ? &*it : nullptr;
}

BigInt Triangle::value(int n, int k) const {
  const Row* r = find_row(n);
  if (r == nullptr || k < r->k_min || k > r->k_max()) return 0;
  return r->cells[k - r->k_min];
}

BigInt& Triangle::cell(int n, int k) {
  Row* r = find_row(n);
  if (r == nullptr || k < r->k_min || k > r->k_max())
    throw std::out_of_range("cell (" + std::to_string(n) + "," + std::to_string(k) +
                            ") outside declared rows");
  return r->cells[k - r->k_min];
}

bool Triangle::has_row(int n) const { return find_row(n) != nullptr; }

const Triangle::Row& Triangle::row(int n) const {
  const Row* r = find_row(n);
  if (r == nullptr) throw std::out_of_range("no row " + std::to_string(n));
  return *r;
}

Triangle Triangle::truncated(int n_max) const {
  Triangle t;
  for (const auto& r : rows_)
    if (r.n <= n_max) t.rows_.push_back(r);
  return t;
}

Triangle& Triangle::operator+=(const Triangle& other) {
  if (rows_.size() != other.rows_.size())
    throw std::invalid_argument("triangle shapes differ");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto& a = rows_[i];
    const auto& b = other.rows_[i];
    if (a.n != b.n || a.k_min != b.k_min || a.cells.size() != b.cells.size())
      throw std::invalid_argument("triangle shapes differ");
    for (std::size_t k = 0; k < a.cells.size(); ++k) a.cells[k] += b.cells[k];
  }
  return *this;
}

bool operator==(const Triangle& a, const Triangle& b) {
  if (a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    const auto& x = a.rows_[i];
    const auto& y = b.rows_[i];
    if (x.n != y.n || x.k_min != y.k_min || x.cells != y.cells) return false;
  }
  return true;
}

std::vector<BigInt> row_sums(const Triangle& t) {
  std::vector<BigInt> out;
  out.reserve(t.rows().size());
  for (const auto& r : t.rows()) out.push_back(r.sum());
  return out;
}

Triangle reshape(const Triangle& source, const RowLayout& layout, int n_max) {
  Triangle out = Triangle::shaped(layout, n_max);
  for (const auto& r : source.rows()) {
    if (r.n > n_max) continue;
    for (int k = r.k_min; k <= r.k_max(); ++k) {
      const BigInt& v = r.cells[k - r.k_min];
      if (v == 0) continue;
      if (!out.has_row(r.n) || k < layout.k_min || k > layout.k_max(r.n))
        throw std::logic_error("nonzero cell (" + std::to_string(r.n) + "," +
                               std::to_string(k) + ") outside target layout");
      out.cell(r.n, k) = v;
    }
  }
  return out;
}

std::string CellMismatch::describe() const {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): " + left.get_str() +
         " vs " + right.get_str();
}

std::optional<CellMismatch> first_difference(const Triangle& a, const Triangle& b,
                                             int n_max) {
  const int hi = std::min(n_max, std::max(a.n_max(), b.n_max()));
  const int lo = std::min(a.empty() ? INT_MAX : a.n_min(), b.empty() ? INT_MAX : b.n_min());
  for (int n = lo; n <= hi; ++n) {
    const bool ha = a.has_row(n), hb = b.has_row(n);
    if (!ha && !hb) continue;
    if (ha != hb) {
      const auto& r = ha ? a.row(n) : b.row(n);
      return CellMismatch{n, r.k_min, a.value(n, r.k_min), b.value(n, r.k_min)};
    }
    const auto& ra = a.row(n);
    const auto& rb = b.row(n);
    const int k_lo = std::min(ra.k_min, rb.k_min);
    const int k_hi = std::max(ra.k_max(), rb.k_max());
    for (int k = k_lo; k <= k_hi; ++k) {
      const bool in_a = k >= ra.k_min && k <= ra.k_max();
      const bool in_b = k >= rb.k_min && k <= rb.k_max();
      BigInt va = a.value(n, k), vb = b.value(n, k);
      if (va != vb || in_a != in_b) return CellMismatch{n, k, va, vb};
    }
  }
  return std::nullopt;
}

}  // namespace schroeder
