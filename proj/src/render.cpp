#include "schroeder/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace schroeder {

namespace {

std::string rational_literal(const Rational& c) {
  return c.get_den() == 1 ? c.get_num().get_str() : "\"" + c.get_str() + "\"";
}

// Exponent labels actually present in the series bounds.
std::vector<std::pair<std::string, int Exponents::*>> active_vars(const TruncatedSeries& s,
                                                                 FormulaId id) {
  std::vector<std::pair<std::string, int Exponents::*>> vars{{"x", &Exponents::x}};
  const auto names = marker_names(id);
  if (names.size() > 0 && s.bounds().m1 > 0) vars.emplace_back(names[0], &Exponents::m1);
  if (names.size() > 1 && s.bounds().m2 > 0) vars.emplace_back(names[1], &Exponents::m2);
  return vars;
}

std::string plain_triangle(const Triangle& t, int table_id) {
  std::size_t width = 1;
  int k_lo = 0, k_hi = 0;
  bool first = true;
  for (const auto& row : t.rows()) {
    for (const auto& c : row.cells) width = std::max(width, c.get_str().size());
    width = std::max(width, row.sum().get_str().size());
    k_lo = first ? row.k_min : std::min(k_lo, row.k_min);
    k_hi = first ? row.k_max() : std::max(k_hi, row.k_max());
    first = false;
  }
  const int w = static_cast<int>(width);
  std::ostringstream os;
  os << "Table " << table_id << '\n';
  os << std::setw(3) << "n\\k";
  for (int k = k_lo; k <= k_hi; ++k) os << ' ' << std::setw(w) << k;
  os << " | " << std::setw(w) << "sum" << '\n';
  for (const auto& row : t.rows()) {
    os << std::setw(3) << row.n;
    for (int k = k_lo; k <= k_hi; ++k) {
      os << ' ' << std::setw(w);
      if (k >= row.k_min && k <= row.k_max())
        os << row.cells[k - row.k_min].get_str();
      else
        os << "";
    }
    os << " | " << std::setw(w) << row.sum().get_str() << '\n';
  }
  return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "bfile") return OutputFormat::bfile;
  return std::nullopt;
}

std::vector<std::string> marker_names(FormulaId id) {
  switch (id) {
    case FormulaId::F_SEP_DIST:
    case FormulaId::G_COR42:
      return {"t"};
    case FormulaId::F_SEP_A:
      return {"t", "s"};
    case FormulaId::G_SEP_POS1:
    case FormulaId::G_P31:
    case FormulaId::H_P51:
    case FormulaId::G_CB:
      return {"u"};
    case FormulaId::S:
    case FormulaId::LITTLE:
      return {};
  }
  return {};
}

std::string render_triangle(const Triangle& t, int table_id, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain:
      return plain_triangle(t, table_id);
    case OutputFormat::csv:
      os << "n,k,value\n";
      for (const auto& row : t.rows())
        for (std::size_t i = 0; i < row.cells.size(); ++i)
          os << row.n << ',' << row.k_min + static_cast<int>(i) << ',' << row.cells[i].get_str()
             << '\n';
      break;
    case OutputFormat::json: {
      os << "{\"table\": " << table_id << ", \"rows\": [";
      bool first = true;
      for (const auto& row : t.rows()) {
        os << (first ? "" : ", ") << "{\"n\": " << row.n << ", \"k_min\": " << row.k_min
           << ", \"entries\": [";
        for (std::size_t i = 0; i < row.cells.size(); ++i)
          os << (i ? ", " : "") << row.cells[i].get_str();
        os << "], \"sum\": " << row.sum().get_str() << '}';
        first = false;
      }
      os << "]}\n";
      break;
    }
    case OutputFormat::bfile: {
      long index = 1;
      for (const auto& row : t.rows())
        for (const auto& c : row.cells) os << index++ << ' ' << c.get_str() << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_series(const TruncatedSeries& s, FormulaId id, OutputFormat format) {
  const auto vars = active_vars(s, id);
  const auto terms = s.terms();
  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain:
      os << to_string(id) << '\n';
      for (const auto& [e, c] : terms) {
        for (std::size_t v = 0; v < vars.size(); ++v)
          os << (v ? " " : "") << vars[v].first << '^' << e.*(vars[v].second);
        os << ": " << c.get_str() << '\n';
      }
      break;
    case OutputFormat::csv:
      for (const auto& v : vars) os << v.first << ',';
      os << "coefficient\n";
      for (const auto& [e, c] : terms) {
        for (const auto& v : vars) os << e.*(v.second) << ',';
        os << c.get_str() << '\n';
      }
      break;
    case OutputFormat::json: {
      os << "{\"formula\": \"" << to_string(id) << "\", \"order\": " << s.bounds().x
         << ", \"terms\": [";
      bool first = true;
      for (const auto& [e, c] : terms) {
        os << (first ? "" : ", ") << '{';
        for (const auto& v : vars) os << '"' << v.first << "\": " << e.*(v.second) << ", ";
        os << "\"coefficient\": " << rational_literal(c) << '}';
        first = false;
      }
      os << "]}\n";
      break;
    }
    case OutputFormat::bfile:
      if (vars.size() == 1) {
        for (int n = 0; n <= s.bounds().x; ++n)
          os << n << ' ' << s.coefficient({n, 0, 0}).get_str() << '\n';
      } else {
        long index = 1;
        for (const auto& [e, c] : terms) os << index++ << ' ' << c.get_str() << '\n';
      }
      break;
  }
  return os.str();
}

std::string render_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      ++failed;
      if (!c.detail.empty()) os << ": " << c.detail;
    }
    os << '\n';
  }
  os << checks.size() << " checks, " << failed << " failed\n";
  return os.str();
}

}  // namespace schroeder
