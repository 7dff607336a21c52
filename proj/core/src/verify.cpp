#include "injwords/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "injwords/characters.hpp"
#include "injwords/errors.hpp"
#include "injwords/rank_selection.hpp"
#include "injwords/rsk.hpp"
#include "injwords/table.hpp"
#include "injwords/tau.hpp"

namespace injwords {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  throw std::logic_error("unreachable");
}

int Report::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& c) {
    return c.status == CheckStatus::pass;
  }));
}
int Report::failed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& c) {
    return c.status == CheckStatus::fail;
  }));
}
int Report::skipped() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& c) {
    return c.status == CheckStatus::skipped;
  }));
}

namespace {

std::string render_multiplicities(const MultiplicityMap& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [lambda, mult] : m) {
    if (!first) os << ", ";
    first = false;
    os << lambda.to_string() << ": " << mult;
  }
  os << '}';
  return os.str();
}

std::string render_class_function(const ClassFunction& f) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < f.class_count(); ++i) {
    if (i) os << ", ";
    os << f.value_at(i);
  }
  os << ')';
  return os.str();
}

class SuiteRunner {
 public:
  SuiteRunner(const VerifyConfig& config, Report& report)
      : config_(config), report_(report) {}

  void equal_tables(const std::string& suite, const std::string& identity,
                    const RankSet& s, const MultiplicityMap& expected,
                    const MultiplicityMap& actual) {
    CheckRecord rec{suite, "S=" + s.to_string(), identity,
                    render_multiplicities(expected), render_multiplicities(actual),
                    "", expected == actual ? CheckStatus::pass : CheckStatus::fail};
    report_.records.push_back(std::move(rec));
  }

  void equal_class_functions(const std::string& suite, const std::string& identity,
                             const std::string& name, const ClassFunction& expected,
                             const ClassFunction& actual) {
    CheckRecord rec{suite, name, identity, render_class_function(expected),
                    render_class_function(actual), "",
                    expected == actual ? CheckStatus::pass : CheckStatus::fail};
    report_.records.push_back(std::move(rec));
  }

  void equal_ints(const std::string& suite, const std::string& identity,
                  const std::string& name, const Int& expected, const Int& actual) {
    CheckRecord rec{suite, name, identity, expected.str(), actual.str(), "",
                    expected == actual ? CheckStatus::pass : CheckStatus::fail};
    report_.records.push_back(std::move(rec));
  }

  void check_true(const std::string& suite, const std::string& identity,
                  const std::string& name, bool ok, const std::string& detail) {
    CheckRecord rec{suite, name, identity, "true", ok ? "true" : "false", detail,
                    ok ? CheckStatus::pass : CheckStatus::fail};
    report_.records.push_back(std::move(rec));
  }

  void skip(const std::string& suite, const std::string& name, const std::string& why) {
    report_.records.push_back(CheckRecord{suite, name, "", "", "", why, CheckStatus::skipped});
  }

  // Runs body, converting a resource_error into one skipped record.
  void guarded(const std::string& suite, const std::function<void()>& body) {
    try {
      body();
    } catch (const resource_error& e) {
      skip(suite, "n=" + std::to_string(config_.n) + ",r=" + std::to_string(config_.r),
           e.what());
    }
  }

  const VerifyConfig& config_;
  Report& report_;
};

Int colored_permutation_total(int n, int r) {
  return factorial(n) * int_pow(Int(r), n);
}

void suite_oracle_vs_tau(SuiteRunner& run) {
  const auto& cfg = run.config_;
  run.guarded("oracle-vs-tau", [&] {
    const auto oracle =
        compute_beta_table_full(cfg.n, cfg.r, Method::oracle, cfg.budget, cfg.jobs);
    const auto tau = compute_beta_table_full(cfg.n, cfg.r, Method::tau, cfg.budget, cfg.jobs);
    for (std::size_t i = 0; i < oracle.rows.size(); ++i)
      run.equal_tables("oracle-vs-tau",
                       "tau-parity pair counts give the homology multiplicities",
                       oracle.rows[i].s, oracle.rows[i].multiplicities,
                       tau.rows[i].multiplicities);
  });
}

void suite_oracle_vs_closed_form(SuiteRunner& run) {
  const auto& cfg = run.config_;
  run.guarded("oracle-vs-closed-form", [&] {
    const auto oracle =
        compute_beta_table_full(cfg.n, cfg.r, Method::oracle, cfg.budget, cfg.jobs);
    const auto closed =
        compute_beta_table_full(cfg.n, cfg.r, Method::closed, cfg.budget, cfg.jobs);
    for (std::size_t i = 0; i < oracle.rows.size(); ++i)
      run.equal_tables("oracle-vs-closed-form",
                       "alternating first-row counts give the homology multiplicities",
                       oracle.rows[i].s, oracle.rows[i].multiplicities,
                       closed.rows[i].multiplicities);
  });
}

void suite_agood(SuiteRunner& run) {
  const auto& cfg = run.config_;
  run.guarded("agood", [&] {
    const InjectiveWordPoset poset(cfg.n, cfg.r, cfg.budget);
    const RankSelection sel(poset);
    for (const auto& s : all_rank_sets(cfg.n)) {
      if (!s.empty()) {
        const int m = s.max();
        ClassFunction expected = sel.alpha(RankSet({m}));
        expected *= boolean_chain_count(m, s.without(m));
        run.equal_class_functions(
            "agood", "alpha factors through the top selected rank",
            "S=" + s.to_string(), expected, sel.alpha(s));
      }
      run.equal_class_functions("agood",
                                "good-action recursion equals inclusion-exclusion",
                                "beta S=" + s.to_string(), sel.beta_inclusion_exclusion(s),
                                sel.beta_good_action(s));
    }
  });
}

void suite_blambdacolor(SuiteRunner& run) {
  const auto& cfg = run.config_;
  run.guarded("blambdacolor", [&] {
    // poset-free: the two counting routes must agree on every rank set
    if (colored_permutation_total(cfg.n, cfg.r) * Int(1 << cfg.n) > cfg.budget)
      throw resource_error("tau enumeration exceeds budget");
    const auto tau = compute_beta_table_full(cfg.n, cfg.r, Method::tau, cfg.budget, cfg.jobs);
    const auto closed =
        compute_beta_table_full(cfg.n, cfg.r, Method::closed, cfg.budget, cfg.jobs);
    for (std::size_t i = 0; i < tau.rows.size(); ++i)
      run.equal_tables("blambdacolor",
                       "tau-parity counts equal the alternating closed form",
                       tau.rows[i].s, closed.rows[i].multiplicities,
                       tau.rows[i].multiplicities);
  });
}

void suite_betacolortrivial(SuiteRunner& run) {
  const auto& cfg = run.config_;
  const int n = cfg.n;
  run.guarded("betacolortrivial", [&] {
    if (colored_permutation_total(n, cfg.r) * Int(1 << n) > cfg.budget)
      throw resource_error("tau enumeration exceeds budget");
    // empty selection is the trivial character in both poset-free routes
    MultiplicityMap trivial_expected;
    trivial_expected[Partition(n == 0 ? std::vector<int>{} : std::vector<int>{n})] = 1;
    run.equal_tables("betacolortrivial", "empty rank selection carries the trivial module",
                     RankSet{}, trivial_expected, beta_multiplicities_tau(n, cfg.r, RankSet{}));
    run.equal_tables("betacolortrivial", "empty rank selection carries the trivial module",
                     RankSet{}, trivial_expected,
                     beta_multiplicities_closed_form(n, cfg.r, RankSet{}));
    // complementary parity classes exhaust all pairs
    for (const auto& s : all_rank_sets(n - 1 < 0 ? 0 : n - 1))
      for (const auto& lambda : partitions_of(n)) {
        const auto [odd, even] = tau_parity_count(n, cfg.r, s, lambda);
        run.equal_ints("betacolortrivial",
                       "odd and even tau pairs sum to all (w, q) pairs",
                       "S=" + s.to_string() + " lambda=" + lambda.to_string(),
                       descent_count(n, s) * f_lambda(lambda) * int_pow(Int(cfg.r), n),
                       odd + even);
      }
  });
}

void suite_rsk_tau(SuiteRunner& run) {
  const auto& cfg = run.config_;
  const int n = cfg.n;
  const int r = cfg.r;
  run.guarded("rsk-tau", [&] {
    // full double loop: r^n n! insertions, each checked against every w
    if (colored_permutation_total(n, r) * factorial(n) > cfg.budget)
      throw resource_error("rsk double enumeration exceeds budget");
    std::set<std::string> images;
    Int total = 0;
    bool colors_ok = true, shapes_ok = true, tau_ok = true;
    for_each_colored_permutation(n, r, [&](const ColoredPermutation& u) {
      ++total;
      const auto [p, q] = colored_rsk(u);
      shapes_ok = shapes_ok && p.shape() == q.tableau().shape();
      images.insert(p.to_string() + "#" + q.to_string());
      for (int i = 1; i <= n; ++i) colors_ok = colors_ok && q.color(i) == u.color(i);
      std::vector<int> img;
      for (int i = 1; i <= n; ++i) img.push_back(i);
      do {
        const Permutation w(img);
        tau_ok = tau_ok && tau_statistic(w, u) == tau_statistic(w, q);
      } while (std::next_permutation(img.begin(), img.end()));
    });
    run.check_true("rsk-tau", "insertion is injective into same-shape pairs", "injectivity",
                   Int(images.size()) == total, "");
    Int pairs = 0;
    for (const auto& shape : partitions_of(n))
      pairs += f_lambda(shape) * f_lambda(shape) * int_pow(Int(r), n);
    run.equal_ints("rsk-tau", "insertion is onto same-shape pairs", "pair count", pairs,
                   total);
    run.check_true("rsk-tau", "recording tableau keeps positional colors", "colors",
                   colors_ok, "");
    run.check_true("rsk-tau", "insertion and recording tableau share a shape", "shapes",
                   shapes_ok, "");
    run.check_true("rsk-tau", "tau transports through insertion", "tau compatibility",
                   tau_ok, "");
  });
}

void suite_derangement(SuiteRunner& run) {
  const auto& cfg = run.config_;
  const int n = cfg.n;
  const int r = cfg.r;
  run.guarded("derangement", [&] {
    if (colored_permutation_total(n, r) > cfg.budget)
      throw resource_error("colored permutation enumeration exceeds budget");
    const Int d = derangement_number(n, r);
    run.equal_ints("derangement",
                   "alternating formula counts even zero-colored prefixes", "even prefixes",
                   d, even_zero_prefix_count(n, r));
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    const auto top = beta_multiplicities_tau(n, r, RankSet(full));
    run.equal_ints("derangement", "top homology dimension is the derangement count",
                   "tau route dimension", d, multiplicity_dimension(top));
  });
  run.guarded("derangement", [&] {
    const InjectiveWordPoset poset(n, r, cfg.budget);
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    run.equal_ints("derangement", "alternating chain count gives the top dimension",
                   "b_P([n])", derangement_number(n, r),
                   chain_count_alternating(poset, RankSet(full)));
  });
}

void suite_r1_equivalence(SuiteRunner& run) {
  const auto& cfg = run.config_;
  const int n = cfg.n;
  run.guarded("r1-equivalence", [&] {
    // statement specific to one color; always checked at r = 1
    if (factorial(n) * factorial(n) > cfg.budget)
      throw resource_error("pairwise tau enumeration exceeds budget");
    bool ok = true;
    Int checked = 0;
    for (const auto& shape : partitions_of(n)) {
      std::vector<ColoredTableau> tabs;
      for_each_colored_syt(shape, 1, [&](const ColoredTableau& q) { tabs.push_back(q); });
      std::vector<int> img;
      for (int i = 1; i <= n; ++i) img.push_back(i);
      do {
        const Permutation w(img);
        for (const auto& q : tabs) {
          ok = ok && tau_statistic(w, q) == tau_statistic_descent_form(w, q);
          ++checked;
        }
      } while (std::next_permutation(img.begin(), img.end()));
    }
    run.check_true("r1-equivalence",
                   "prefix and descent phrasings of tau agree for one color",
                   "pairs checked: " + checked.str(), ok, "");
  });
}

}  // namespace

const std::vector<std::string>& verification_suite_names() {
  static const std::vector<std::string> names = {
      "oracle-vs-tau", "oracle-vs-closed-form", "agood",      "blambdacolor",
      "betacolortrivial", "rsk-tau",            "derangement", "r1-equivalence"};
  return names;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& selectors) {
  std::set<std::string> picked;
  auto add_group = [&](const std::string& sel) {
    if (sel == "all") {
      for (const auto& s : verification_suite_names()) picked.insert(s);
    } else if (sel == "identities") {
      picked.insert("agood");
      picked.insert("blambdacolor");
      picked.insert("betacolortrivial");
      picked.insert("derangement");
    } else if (sel == "oracle") {
      picked.insert("oracle-vs-tau");
      picked.insert("oracle-vs-closed-form");
      picked.insert("agood");
    } else {
      const auto& names = verification_suite_names();
      if (std::find(names.begin(), names.end(), sel) == names.end())
        throw std::invalid_argument("unknown suite: " + sel);
      picked.insert(sel);
    }
  };
  for (const auto& selector : selectors) {
    std::istringstream is(selector);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (!tok.empty()) add_group(tok);
    }
  }
  std::vector<std::string> out;
  for (const auto& name : verification_suite_names())
    if (picked.count(name)) out.push_back(name);
  return out;
}

Report run_verification(const VerifyConfig& config) {
  if (config.n < 0) throw std::invalid_argument("n must be >= 0");
  if (config.r < 1) throw std::invalid_argument("r must be >= 1");
  Report report;
  report.n = config.n;
  report.r = config.r;
  SuiteRunner run(config, report);
  for (const auto& name : expand_suites(config.suites)) {
    if (name == "oracle-vs-tau") suite_oracle_vs_tau(run);
    else if (name == "oracle-vs-closed-form") suite_oracle_vs_closed_form(run);
    else if (name == "agood") suite_agood(run);
    else if (name == "blambdacolor") suite_blambdacolor(run);
    else if (name == "betacolortrivial") suite_betacolortrivial(run);
    else if (name == "rsk-tau") suite_rsk_tau(run);
    else if (name == "derangement") suite_derangement(run);
    else if (name == "r1-equivalence") suite_r1_equivalence(run);
  }
  return report;
}

}  // namespace injwords
