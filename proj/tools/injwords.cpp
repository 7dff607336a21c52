#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "injwords/characters.hpp"
#include "injwords/errors.hpp"
#include "injwords/poset.hpp"
#include "injwords/table.hpp"
#include "injwords/verify.hpp"

using injwords::Int;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 resource budget exceeded

ordered_json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();  // decimal string once past 64 bits
}

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\" \n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CommonOptions {
  int n = 0;
  int r = 1;
  std::string format = "json";
  long long budget = 10'000'000;
  int jobs = 1;
  long long seed = 0;  // reserved; accepted for forward compatibility
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--n", opts.n, "Number of values (word alphabet size)")
      ->required()
      ->check(CLI::Range(0, 1000000));
  cmd->add_option("--r", opts.r, "Number of colors")->check(CLI::Range(1, 1000000));
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  cmd->add_option("--budget", opts.budget, "Element budget for poset enumeration")
      ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()));
  cmd->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::Range(1, 4096));
  cmd->add_option("--seed", opts.seed, "Reserved; all computations are deterministic")
      ->group("");  // hidden
}

std::vector<injwords::RankSet> resolve_rank_sets(const CommonOptions& opts,
                                                 const std::string& rank_set,
                                                 bool rank_set_given) {
  if (rank_set_given) {
    const auto s = injwords::RankSet::parse(rank_set);
    if (!s.within(opts.n))
      throw std::invalid_argument("rank set " + s.to_string() + " not within [n]");
    return {s};
  }
  if (opts.n > 16)
    throw std::invalid_argument("full tables are limited to n <= 16; pass --rank-set");
  return injwords::all_rank_sets(opts.n);
}

// ---- table rendering ----

void render_table_json(const injwords::BetaTable& t, std::ostream& os) {
  ordered_json j;
  j["n"] = t.n;
  j["r"] = t.r;
  j["method"] = injwords::method_name(t.method);
  j["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json jr;
    jr["S"] = row.s.elements();
    ordered_json mult = ordered_json::object();
    for (const auto& [lambda, m] : row.multiplicities) mult[lambda.to_string()] = json_int(m);
    jr["multiplicities"] = std::move(mult);
    jr["dimension"] = json_int(row.dimension);
    j["rows"].push_back(std::move(jr));
  }
  os << j.dump(2) << "\n";
}

void render_table_csv(const injwords::BetaTable& t, std::ostream& os) {
  const auto& lambdas = injwords::partitions_of(t.n);
  os << "S,dimension";
  for (const auto& lambda : lambdas) os << ',' << csv_quote(lambda.to_string());
  os << "\n";
  for (const auto& row : t.rows) {
    os << csv_quote(row.s.to_string()) << ',' << row.dimension;
    for (const auto& lambda : lambdas) {
      const auto it = row.multiplicities.find(lambda);
      os << ',' << (it == row.multiplicities.end() ? Int(0) : it->second);
    }
    os << "\n";
  }
}

void render_table_md(const injwords::BetaTable& t, std::ostream& os) {
  const auto& lambdas = injwords::partitions_of(t.n);
  os << "| S | dimension |";
  for (const auto& lambda : lambdas) os << ' ' << lambda.to_string() << " |";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < lambdas.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : t.rows) {
    os << "| " << row.s.to_string() << " | " << row.dimension << " |";
    for (const auto& lambda : lambdas) {
      const auto it = row.multiplicities.find(lambda);
      os << ' ' << (it == row.multiplicities.end() ? Int(0) : it->second) << " |";
    }
    os << "\n";
  }
}

// ---- chains rendering ----

struct ChainsRow {
  injwords::RankSet s;
  Int a;
  Int b;
};

void render_chains_json(int n, int r, const std::vector<ChainsRow>& rows, std::ostream& os) {
  ordered_json j;
  j["n"] = n;
  j["r"] = r;
  j["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json jr;
    jr["S"] = row.s.elements();
    jr["a"] = json_int(row.a);
    jr["b"] = json_int(row.b);
    j["rows"].push_back(std::move(jr));
  }
  os << j.dump(2) << "\n";
}

void render_chains_csv(const std::vector<ChainsRow>& rows, std::ostream& os) {
  os << "S,a,b\n";
  for (const auto& row : rows)
    os << csv_quote(row.s.to_string()) << ',' << row.a << ',' << row.b << "\n";
}

void render_chains_md(const std::vector<ChainsRow>& rows, std::ostream& os) {
  os << "| S | a | b |\n|---|---|---|\n";
  for (const auto& row : rows)
    os << "| " << row.s.to_string() << " | " << row.a << " | " << row.b << " |\n";
}

// ---- verify rendering ----

void render_report_json(const injwords::Report& report,
                        const std::vector<std::string>& suites, std::ostream& os) {
  ordered_json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["suites"] = suites;
  j["records"] = ordered_json::array();
  for (const auto& rec : report.records) {
    ordered_json jr;
    jr["suite"] = rec.suite;
    jr["name"] = rec.name;
    jr["identity"] = rec.identity;
    jr["expected"] = rec.expected;
    jr["actual"] = rec.actual;
    jr["detail"] = rec.detail;
    jr["status"] = injwords::status_name(rec.status);
    j["records"].push_back(std::move(jr));
  }
  j["summary"] = {{"pass", report.passed()},
                  {"fail", report.failed()},
                  {"skipped", report.skipped()}};
  os << j.dump(2) << "\n";
}

void render_report_csv(const injwords::Report& report, std::ostream& os) {
  os << "suite,name,identity,expected,actual,detail,status\n";
  for (const auto& rec : report.records)
    os << csv_quote(rec.suite) << ',' << csv_quote(rec.name) << ','
       << csv_quote(rec.identity) << ',' << csv_quote(rec.expected) << ','
       << csv_quote(rec.actual) << ',' << csv_quote(rec.detail) << ','
       << injwords::status_name(rec.status) << "\n";
}

void render_report_md(const injwords::Report& report, std::ostream& os) {
  os << "| status | suite | check | identity |\n|---|---|---|---|\n";
  for (const auto& rec : report.records) {
    os << "| " << injwords::status_name(rec.status) << " | " << rec.suite << " | "
       << rec.name << " | " << rec.identity;
    if (rec.status == injwords::CheckStatus::fail)
      os << " (expected " << rec.expected << ", got " << rec.actual << ")";
    if (rec.status == injwords::CheckStatus::skipped) os << rec.detail;
    os << " |\n";
  }
  os << "\n" << report.passed() << " passed, " << report.failed() << " failed, "
     << report.skipped() << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-selected homology multiplicities for colored injective words"};
  app.require_subcommand(1);

  CommonOptions table_opts, verify_opts, chains_opts;
  std::string table_rank_set, chains_rank_set;
  std::string method = "tau";
  std::vector<std::string> suites;

  auto* table_cmd =
      app.add_subcommand("table", "Multiplicity table of the rank-selected homology");
  add_common(table_cmd, table_opts);
  auto* table_rs =
      table_cmd->add_option("--rank-set", table_rank_set,
                            "Comma-separated ranks; empty string for the empty selection; "
                            "omit for all 2^n rows");
  table_cmd->add_option("--method", method, "Computation route")
      ->check(CLI::IsMember({"tau", "closed", "oracle"}));

  auto* verify_cmd = app.add_subcommand("verify", "Cross-verify the computation routes");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--suite", suites,
                         "Suite, group (all, identities, oracle), or comma-separated mix");

  auto* chains_cmd = app.add_subcommand("chains", "Chain counts a_P(S) and b_P(S)");
  add_common(chains_cmd, chains_opts);
  auto* chains_rs =
      chains_cmd->add_option("--rank-set", chains_rank_set,
                             "Comma-separated ranks; empty string for the empty selection; "
                             "omit for all 2^n rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help and version exit cleanly
  }

  try {
    if (table_cmd->parsed()) {
      const auto& opts = table_opts;
      const auto sets = resolve_rank_sets(opts, table_rank_set, table_rs->count() > 0);
      const auto table = injwords::compute_beta_table(
          opts.n, opts.r, sets, injwords::parse_method(method), Int(opts.budget), opts.jobs);
      if (opts.format == "json") render_table_json(table, std::cout);
      else if (opts.format == "csv") render_table_csv(table, std::cout);
      else render_table_md(table, std::cout);
      return 0;
    }
    if (chains_cmd->parsed()) {
      const auto& opts = chains_opts;
      const auto sets = resolve_rank_sets(opts, chains_rank_set, chains_rs->count() > 0);
      const injwords::InjectiveWordPoset poset(opts.n, opts.r, Int(opts.budget));
      std::vector<ChainsRow> rows;
      rows.reserve(sets.size());
      for (const auto& s : sets)
        rows.push_back({s, injwords::chain_count(poset, s),
                        injwords::chain_count_alternating(poset, s)});
      if (opts.format == "json") render_chains_json(opts.n, opts.r, rows, std::cout);
      else if (opts.format == "csv") render_chains_csv(rows, std::cout);
      else render_chains_md(rows, std::cout);
      return 0;
    }
    // verify
    const auto& opts = verify_opts;
    injwords::VerifyConfig cfg;
    cfg.n = opts.n;
    cfg.r = opts.r;
    if (!suites.empty()) cfg.suites = suites;
    cfg.budget = Int(opts.budget);
    cfg.jobs = opts.jobs;
    const auto expanded = injwords::expand_suites(cfg.suites);  // validate early
    const auto report = injwords::run_verification(cfg);
    if (opts.format == "json") render_report_json(report, expanded, std::cout);
    else if (opts.format == "csv") render_report_csv(report, std::cout);
    else render_report_md(report, std::cout);
    return report.all_passed() ? 0 : 1;
  } catch (const injwords::resource_error& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
