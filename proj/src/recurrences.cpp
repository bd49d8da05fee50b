#include "schroeder/recurrences.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace schroeder {

namespace {

constexpr std::array<std::pair<RecurrenceId, std::string_view>, 6> kNames{{
    {RecurrenceId::p31, "P31"},
    {RecurrenceId::p41, "P41"},
    {RecurrenceId::p51, "P51"},
    {RecurrenceId::t_lemmas, "T_LEMMAS"},
    {RecurrenceId::p53_rec, "P53_REC"},
    {RecurrenceId::p53_closed, "P53_CLOSED"},
}};

BigInt pow2(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

BigInt previous_row_sum(const Triangle& t, int n) { return t.row(n - 1).sum(); }

void fill_p31(Triangle& t, int n_max) {
  t.cell(1, 1) = 1;
  if (n_max >= 2) t.cell(2, 1) = 1;
  for (int n = 3; n <= n_max; ++n) {
    BigInt prefix = 0;  // sum_{j < l} a_{n-1,j}
    for (int l = 1; l <= n - 1; ++l) {
      // a_{n-1,n-1} reads as zero: that cell is outside row n-1.
      t.cell(n, l) = 2 * t.value(n - 1, l) + prefix;
      prefix += t.value(n - 1, l);
    }
  }
}

void fill_p41(Triangle& t, int n_max) {
  t.cell(2, 2) = 1;
  for (int n = 3; n <= n_max; ++n) {
    t.cell(n, 2) = 1;
    for (int k = 3; k < n; ++k)
      t.cell(n, k) = t.value(n, k - 1) + t.value(n - 1, k) + t.value(n - 1, k - 1);
    t.cell(n, n) = t.value(n, n - 1) + t.value(n - 1, n - 1);
  }
}

void fill_p51(Triangle& t, int n_max) {
  t.cell(1, 1) = 1;
  if (n_max >= 2) t.cell(2, 1) = t.cell(2, 2) = 1;
  for (int n = 3; n <= n_max; ++n) {
    const BigInt total = previous_row_sum(t, n);
    // l <= 3 takes precedence, so s_{3,3} is a previous-row sum.
    for (int l = 1; l <= 3; ++l) t.cell(n, l) = total;
    BigInt tail = 0;  // sum_{m >= l} s_{n-1,m}, accumulated from the right
    for (int l = n; l >= 4; --l) {
      tail += t.value(n - 1, l);
      t.cell(n, l) = 2 * t.value(n - 1, l - 1) + tail;
    }
  }
}

void fill_t_lemmas(Triangle& t, int n_max) {
  t.cell(2, 1) = 1;
  for (int n = 3; n <= n_max; ++n) {
    const BigInt power = pow2(n - 3);
    const BigInt total = previous_row_sum(t, n);
    for (int l = 1; l <= n - 1; ++l) {
      if (l <= 2)
        t.cell(n, l) = power;
      else if (l >= n - 2)
        t.cell(n, l) = total;
      else
        t.cell(n, l) = t.value(n, l - 1) + t.value(n - 1, l);
    }
  }
}

void fill_p53_rec(Triangle& t, int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    t.cell(n, n - 1) = 1;
    t.cell(n, 1) = binomial(2 * n - 4, n - 2);
    for (int k = n - 2; k >= 2; --k) t.cell(n, k) = t.value(n, k + 1) + t.value(n - 1, k - 1);
  }
}

void fill_p53_closed(Triangle& t, int n_max) {
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k <= n - 1; ++k) t.cell(n, k) = closed_form_dist(n, k);
}

}  // namespace

std::string_view to_string(RecurrenceId id) {
  for (const auto& [rid, name] : kNames)
    if (rid == id) return name;
  return "?";
}

std::optional<RecurrenceId> parse_recurrence_id(std::string_view name) {
  for (const auto& [rid, n] : kNames)
    if (n == name) return rid;
  return std::nullopt;
}

RowLayout recurrence_layout(RecurrenceId id) {
  switch (id) {
    case RecurrenceId::p31:
      return {1, 1, -1};
    case RecurrenceId::p41:
      return {2, 2, 0};
    case RecurrenceId::p51:
      return {1, 1, 0};
    case RecurrenceId::t_lemmas:
    case RecurrenceId::p53_rec:
    case RecurrenceId::p53_closed:
      return {2, 1, -1};
  }
  throw std::invalid_argument("unknown recurrence id");
}

std::optional<int> recurrence_table(RecurrenceId id) {
  switch (id) {
    case RecurrenceId::p31:
      return 3;
    case RecurrenceId::p41:
      return 4;
    case RecurrenceId::p51:
      return 5;
    case RecurrenceId::t_lemmas:
      return 6;
    default:
      return std::nullopt;
  }
}

std::optional<RecurrenceId> table_recurrence(int table_id) {
  switch (table_id) {
    case 3:
      return RecurrenceId::p31;
    case 4:
      return RecurrenceId::p41;
    case 5:
      return RecurrenceId::p51;
    case 6:
      return RecurrenceId::t_lemmas;
    default:
      return std::nullopt;
  }
}

Triangle triangle_by_recurrence(RecurrenceId id, int n_max) {
  const RowLayout layout = recurrence_layout(id);
  if (n_max < layout.n_min)
    throw std::invalid_argument("n_max below the base-case floor of " +
                                std::string(to_string(id)));
  Triangle t = Triangle::shaped(layout, n_max);
  switch (id) {
    case RecurrenceId::p31:
      fill_p31(t, n_max);
      break;
    case RecurrenceId::p41:
      fill_p41(t, n_max);
      break;
    case RecurrenceId::p51:
      fill_p51(t, n_max);
      break;
    case RecurrenceId::t_lemmas:
      fill_t_lemmas(t, n_max);
      break;
    case RecurrenceId::p53_rec:
      fill_p53_rec(t, n_max);
      break;
    case RecurrenceId::p53_closed:
      fill_p53_closed(t, n_max);
      break;
  }
  return t;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt closed_form_dist(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw std::out_of_range("closed_form_dist needs n >= 2 and 1 <= k <= n-1");
  return binomial(2L * n - k - 3, n - 2);
}

}  // namespace schroeder
