// schroeder: tables, series coefficients and cross-checks from the command line.
//
// Exit status: 0 on success, 1 when a verification check fails, 2 on a
// usage error.

#include "schroeder/oracle.hpp"
#include "schroeder/recurrences.hpp"
#include "schroeder/render.hpp"
#include "schroeder/series.hpp"
#include "schroeder/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

using namespace schroeder;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultRecurrenceNMax = 20;
constexpr int kMaxRecurrenceNMax = 1000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats{{"plain", OutputFormat::plain},
                                                   {"csv", OutputFormat::csv},
                                                   {"json", OutputFormat::json},
                                                   {"bfile", OutputFormat::bfile}};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + out_path + " for writing");
  out << text;
}

struct TableArgs {
  int table = 0;
  std::string method = "oracle";
  int n_max = 0;  // 0: per-method default
  OutputFormat format = OutputFormat::plain;
  std::string out;
};

int run_table(const TableArgs& a) {
  Triangle t;
  if (a.method == "oracle") {
    const int n = a.n_max ? a.n_max : kDefaultOracleNMax;
    if (n < 1 || n > kOracleCeiling)
      throw UsageError("--n-max for the oracle must be in 1.." + std::to_string(kOracleCeiling));
    t = table_oracle(a.table, n);
  } else if (a.method == "recurrence") {
    auto rec = table_recurrence(a.table);
    if (!rec) throw UsageError("table " + std::to_string(a.table) + " has no recurrence method");
    const int n = a.n_max ? a.n_max : kDefaultRecurrenceNMax;
    if (n < recurrence_layout(*rec).n_min || n > kMaxRecurrenceNMax)
      throw UsageError("--n-max out of range for the recurrence");
    t = triangle_by_recurrence(*rec, n);
  } else {
    const int n = a.n_max ? a.n_max : kDefaultSeriesOrder;
    if (n < 2 || n > kMaxSeriesOrder)
      throw UsageError("--n-max for the series must be in 2.." + std::to_string(kMaxSeriesOrder));
    t = table_series(a.table, n);
  }
  emit(render_triangle(t, a.table, a.format), a.out);
  return 0;
}

struct VerifyArgs {
  std::string scope = "all";
  int n_max = kDefaultOracleNMax;
};

int run_verify_cmd(const VerifyArgs& a) {
  if (!valid_scope(a.scope)) throw UsageError("unknown scope " + a.scope);
  if (a.n_max < 1 || a.n_max > kOracleCeiling)
    throw UsageError("--n-max must be in 1.." + std::to_string(kOracleCeiling));
  if (a.scope == "bijections" && a.n_max < 3) throw UsageError("bijection checks need --n-max >= 3");
  const auto checks = run_verify(a.scope, a.n_max);
  std::cout << render_checks(checks);
  return all_passed(checks) ? 0 : kExitFailed;
}

struct SeriesArgs {
  std::string formula;
  int order = kDefaultSeriesOrder;
  OutputFormat format = OutputFormat::plain;
  bool at_one = false;
  std::string out;
};

int run_series(const SeriesArgs& a) {
  const auto id = parse_formula_id(a.formula);
  if (!id) throw UsageError("unknown formula " + a.formula);
  if (a.order < 2 || a.order > kMaxSeriesOrder)
    throw UsageError("--order must be in 2.." + std::to_string(kMaxSeriesOrder));
  TruncatedSeries s = paper_gf(*id, a.order);
  if (a.at_one) {
    if (marker_count(*id) >= 2) s = at_one(s, Var::marker2);
    if (marker_count(*id) >= 1) s = at_one(s, Var::marker1);
  }
  emit(render_series(s, *id, a.format), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positional statistics of Schroeder-counted permutation classes"};
  app.require_subcommand(1);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print a triangle of counts");
  table->add_option("--table", table_args.table, "Table id")->required()->check(CLI::Range(1, 6));
  table->add_option("--method", table_args.method, "oracle, recurrence or series")
      ->check(CLI::IsMember({"oracle", "recurrence", "series"}));
  table->add_option("--n-max", table_args.n_max,
                    "Largest n (defaults: oracle 8, recurrence 20, series 12)");
  table->add_option("--format", table_args.format, "plain, csv, json or bfile")
      ->transform(CLI::CheckedTransformer(kFormats));
  table->add_option("--out", table_args.out, "Write to this file instead of stdout");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run cross-checks; exit 0 iff all pass");
  verify->add_option("--scope", verify_args.scope, "all, 1..6, bijections or identities");
  verify->add_option("--n-max", verify_args.n_max, "Largest n for oracle-backed checks");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Dump generating-function coefficients");
  series->add_option("--formula", series_args.formula,
                     "S, G_SEP_POS1, F_SEP_DIST, F_SEP_A, G_P31, G_COR42, H_P51, G_CB, LITTLE")
      ->required();
  series->add_option("--order", series_args.order, "Truncation order in x (max 20)");
  series->add_option("--format", series_args.format, "plain, csv, json or bfile")
      ->transform(CLI::CheckedTransformer(kFormats));
  series->add_flag("--at-one", series_args.at_one, "Set every marker to 1");
  series->add_option("--out", series_args.out, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return run_table(table_args);
    if (*verify) return run_verify_cmd(verify_args);
    return run_series(series_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}
