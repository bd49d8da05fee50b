// Acceptance suite: one PASS/FAIL line per criterion; exit 0 iff all pass.

#include "golden.hpp"
#include "naive.hpp"

#include "schroeder/bijections.hpp"
#include "schroeder/oracle.hpp"
#include "schroeder/recurrences.hpp"
#include "schroeder/series.hpp"
#include "schroeder/verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace schroeder;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::string failures(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return c.name + ": " + c.detail;
  return "";
}

Outcome golden_tables() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const golden::Table& g : golden::tables()) {
    if (g.id == 2) continue;
    if (auto m = golden::mismatch(g, table_oracle(g.id, golden::n_max(g))); !m.empty()) o.fail(m);
  }
  const auto sums = row_sums(table_oracle(2, 8));
  if (sums.size() != golden::kTable2RowSums.size()) o.fail("table 2 row count");
  for (std::size_t i = 0; i < sums.size() && i < golden::kTable2RowSums.size(); ++i)
    if (sums[i] != golden::kTable2RowSums[i]) o.fail("table 2 row sum " + std::to_string(i + 2));
  const double s = seconds_since(t0);
  if (s >= 30) o.fail("took " + std::to_string(s) + " s");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(s) + " s";
  return o;
}

Outcome recurrence_vs_oracle() {
  Outcome o;
  for (int id = 3; id <= 6; ++id) {
    const int n = golden::n_max(golden::table(id));
    if (auto d = first_difference(triangle_by_recurrence(*table_recurrence(id), n),
                                  table_oracle(id, n)))
      o.fail("table " + std::to_string(id) + " " + d->describe());
  }
  constexpr int kFar = 50;
  for (RecurrenceId id : {RecurrenceId::p31, RecurrenceId::p41, RecurrenceId::p51,
                          RecurrenceId::t_lemmas})
    if (triangle_by_recurrence(id, kFar).n_max() != kFar) o.fail(std::string(to_string(id)) + " short");
  const Triangle closed = triangle_by_recurrence(RecurrenceId::p53_closed, kFar);
  if (closed.value(50, 1) != naive::choose(96, 48)) o.fail("P53_CLOSED(50,1) != C(96,48)");
  if (auto d = first_difference(triangle_by_recurrence(RecurrenceId::p53_rec, kFar), closed))
    o.fail("P53_REC vs P53_CLOSED " + d->describe());
  return o;
}

Outcome series_matches() {
  Outcome o;
  for (int id = 1; id <= 6; ++id)
    if (auto d = first_difference(table_series(id, 8), table_oracle(id, 8)))
      o.fail("series vs oracle, table " + std::to_string(id) + " " + d->describe());
  for (int id = 3; id <= 6; ++id)
    if (auto d = first_difference(table_series(id, 12),
                                  triangle_by_recurrence(*table_recurrence(id), 12)))
      o.fail("series vs recurrence, table " + std::to_string(id) + " " + d->describe());
  // The remaining formulas against oracle counts.
  const auto F = paper_gf(FormulaId::F_SEP_A, Bounds{8, 8, 8});
  const ClassSpec sep{patterns::separable(), Filter::none};
  for (int a = 1; a < 8; ++a) {
    const Triangle t = triangle_from_oracle(8, sep, StatisticSpec::distance_a(a));
    for (int n = a + 1; n <= 8; ++n)
      for (int k = 1; k <= n - a; ++k)
        if (F.coefficient({n, (n - a + 1) - k, a}) != Rational(t.value(n, k)))
          o.fail("F_SEP_A a=" + std::to_string(a) + " n=" + std::to_string(n));
  }
  const auto S = paper_gf(FormulaId::S, 8);
  const auto little = paper_gf(FormulaId::LITTLE, 8);
  const auto t3 = table_oracle(3, 8);
  for (int n = 1; n <= 8; ++n) {
    if (S.coefficient({n, 0, 0}) != Rational(enumerate_avoiders(n, patterns::separable()).size()))
      o.fail("S vs separable count n=" + std::to_string(n));
    if (little.coefficient({n, 0, 0}) != Rational(t3.row(n).sum()))
      o.fail("LITTLE vs table 3 row n=" + std::to_string(n));
  }
  return o;
}

Outcome anchors() {
  Outcome o;
  std::vector<CheckResult> checks;
  for (auto& c : verify_identities(12))
    if (c.name.find("anchors") != std::string::npos) checks.push_back(c);
  if (checks.size() != 4) o.fail("expected 4 anchor checks");
  if (auto f = failures(checks); !f.empty()) o.fail(f);
  return o;
}

Outcome identities() {
  Outcome o;
  std::vector<CheckResult> checks;
  for (auto& c : verify_identities(12))
    if (c.name.find("anchors") == std::string::npos) checks.push_back(c);
  if (checks.size() != 5) o.fail("expected 5 identities");
  if (auto f = failures(checks); !f.empty()) o.fail(f);
  return o;
}

Outcome bijections() {
  Outcome o;
  for (Construction c : {Construction::PROP31, Construction::PROP41, Construction::PROP51,
                         Construction::PROP53})
    for (int n = 3; n <= 8; ++n) {
      const BijectionReport r = verify_partition(n, c);
      if (!r.passed())
        o.fail(std::string(to_string(c)) + " n=" + std::to_string(n) +
               (r.witnesses.empty() ? "" : " " + r.witnesses.front()));
    }
  return o;
}

Outcome symmetries() {
  Outcome o;
  if (auto f = failures(verify_symmetries(8)); !f.empty()) o.fail(f);
  // C(2n-3, n-1) at n = 8 from the binomial itself
  const ClassSpec cls{patterns::p1243_1324(), Filter::one_before_n};
  if (naive::choose(13, 7) != 1716 || class_members(8, cls).size() != 1716) o.fail("n=8 count");
  return o;
}

Outcome cli_verify_all() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::string cmd = std::string(SCHROEDER_CLI) + " verify --scope all --n-max 7 >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  const double s = seconds_since(t0);
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  if (status != 0) o.fail("exit status " + std::to_string(status));
  if (s >= 60) o.fail("took " + std::to_string(s) + " s");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(s) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 golden tables from the oracle", golden_tables},
      {"2 recurrences equal the oracle and reach n = 50", recurrence_vs_oracle},
      {"3 series equal oracle and recurrences", series_matches},
      {"4 sequence anchors", anchors},
      {"5 identity suite to order 12", identities},
      {"6 bijection suite 3 <= n <= 8", bijections},
      {"7 symmetry suite n <= 8", symmetries},
      {"8 verify all --n-max 7 exits 0 within 60 s", cli_verify_all},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << "criterion " << name;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << '\n';
    failed += o.ok ? 0 : 1;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
