// Acceptance gate: one line per criterion, exact equality throughout.
// Exit status 0 only when every criterion passes. An optional integer
// argument runs a single criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "injwords/characters.hpp"
#include "injwords/poset.hpp"
#include "injwords/rank_selection.hpp"
#include "injwords/rsk.hpp"
#include "injwords/table.hpp"
#include "injwords/tau.hpp"
#include "injwords/verify.hpp"

using namespace injwords;

namespace {

struct Gate {
  bool all_ok = true;
  int only = 0;  // 0 = run everything

  void criterion(int number, const std::string& description, double time_limit_seconds,
                 const std::function<bool(std::ostream&)>& body) {
    if (only != 0 && only != number) return;
    std::ostringstream why;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_seconds > 0 && seconds > time_limit_seconds) {
      ok = false;
      why << " [time limit " << time_limit_seconds << "s exceeded]";
    }
    all_ok = all_ok && ok;
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - "
              << description << " (" << seconds << "s)";
    const std::string detail = why.str();
    if (!ok && !detail.empty()) std::cout << " :: " << detail;
    std::cout << "\n" << std::flush;
  }
};

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img;
  for (int i = 1; i <= n; ++i) img.push_back(i);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

RankSet full_set(int n) {
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(i);
  return RankSet(std::move(e));
}

const Int kBudget = InjectiveWordPoset::default_budget();

// ranges shared by criteria 2, 6, and the nonnegativity part of 11
const std::vector<std::pair<int, int>> kMainRanges = {
    {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2},
    {1, 3}, {2, 3}, {3, 3}};

bool criterion_1(std::ostream& why) {
  // top-homology multiplicity of chi^lambda equals the number of standard
  // tableaux of shape lambda whose smallest descent (n when none) is even
  for (int n = 3; n <= 5; ++n) {
    const InjectiveWordPoset poset(n, 1, kBudget);
    const RankSelection sel(poset);
    const auto oracle = decompose(sel.beta_inclusion_exclusion(full_set(n)));
    MultiplicityMap expected;
    for (const auto& lambda : partitions_of(n)) {
      Int count = 0;
      for (const auto& q : enumerate_syt(lambda)) {
        const RankSet des = q.descent_set();
        const int smallest = des.empty() ? n : des.elements().front();
        if (smallest % 2 == 0) ++count;
      }
      if (count != 0) expected.emplace(lambda, count);
    }
    if (oracle != expected) {
      why << "n=" << n << " table mismatch";
      return false;
    }
    if (n == 3) {
      const MultiplicityMap pinned{{Partition({2, 1}), 1}};
      if (oracle != pinned) {
        why << "n=3 pinned value mismatch";
        return false;
      }
    }
  }
  return true;
}

bool criterion_2(std::ostream& why) {
  for (const auto& [n, r] : kMainRanges) {
    const auto oracle = compute_beta_table_full(n, r, Method::oracle, kBudget, 1);
    const auto tau = compute_beta_table_full(n, r, Method::tau, kBudget, 1);
    for (std::size_t i = 0; i < oracle.rows.size(); ++i)
      if (oracle.rows[i].multiplicities != tau.rows[i].multiplicities) {
        why << "n=" << n << " r=" << r << " S=" << oracle.rows[i].s.to_string();
        return false;
      }
  }
  return true;
}

bool criterion_3(std::ostream& why) {
  std::vector<std::pair<int, int>> ranges;
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r) ranges.emplace_back(n, r);
  ranges.emplace_back(5, 1);
  for (const auto& [n, r] : ranges) {
    const InjectiveWordPoset poset(n, r, kBudget);
    const RankSelection sel(poset);
    for (const auto& s : all_rank_sets(n))
      if (sel.beta_good_action(s) != sel.beta_inclusion_exclusion(s)) {
        why << "n=" << n << " r=" << r << " S=" << s.to_string();
        return false;
      }
  }
  return true;
}

bool criterion_4(std::ostream& why) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r) {
      const InjectiveWordPoset poset(n, r, kBudget);
      const RankSelection sel(poset);
      for (const auto& s : all_rank_sets(n)) {
        if (s.empty()) continue;
        const int m = s.max();
        ClassFunction expected = sel.alpha(RankSet({m}));
        expected *= boolean_chain_count(m, s.without(m));
        if (sel.alpha(s) != expected) {
          why << "n=" << n << " r=" << r << " S=" << s.to_string();
          return false;
        }
      }
    }
  return true;
}

bool criterion_5(std::ostream& why) {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r) {
      const InjectiveWordPoset poset(n, r, kBudget);
      for (int m = 0; m <= n; ++m) {
        const RankSet s = m == 0 ? RankSet{} : RankSet({m});
        if (alpha_rank_m_closed_form(n, r, m) != alpha_character(poset, s)) {
          why << "n=" << n << " r=" << r << " m=" << m;
          return false;
        }
      }
    }
  return true;
}

bool criterion_6(std::ostream& why) {
  for (const auto& [n, r] : kMainRanges) {
    for (const auto& s : all_rank_sets(n - 1))
      for (const auto& lambda : partitions_of(n)) {
        const auto [odd, even] = tau_parity_count(n, r, s, lambda);
        const Int expected = descent_count(n, s) * int_pow(Int(r), n) * f_lambda(lambda);
        if (odd + even != expected) {
          why << "n=" << n << " r=" << r << " S=" << s.to_string()
              << " lambda=" << lambda.to_string();
          return false;
        }
      }
  }
  return true;
}

bool criterion_7(std::ostream& why) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r) {
      const InjectiveWordPoset poset(n, r, kBudget);
      const RankSelection sel(poset);
      ClassFunction sum(n);
      for (const auto& s : all_rank_sets(n)) sum += sel.beta_inclusion_exclusion(s);
      ClassFunction expected = regular_character(n);
      expected *= int_pow(Int(r), n) * factorial(n);
      if (sum != expected) {
        why << "n=" << n << " r=" << r;
        return false;
      }
    }
  return true;
}

bool criterion_8(std::ostream& why) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r) {
      std::vector<std::string> images;
      Int total = 0;
      const auto perms = all_permutations(n);
      bool ok = true;
      for_each_colored_permutation(n, r, [&](const ColoredPermutation& u) {
        ++total;
        const auto [p, q] = colored_rsk(u);
        images.push_back(p.to_string() + "#" + q.to_string());
        ok = ok && p.shape() == q.tableau().shape();
        for (const auto& w : perms) ok = ok && tau_statistic(w, u) == tau_statistic(w, q);
      });
      std::sort(images.begin(), images.end());
      ok = ok && std::adjacent_find(images.begin(), images.end()) == images.end();
      Int pairs = 0;
      for (const auto& lambda : partitions_of(n))
        pairs += f_lambda(lambda) * int_pow(Int(r), n) * f_lambda(lambda);
      ok = ok && Int(images.size()) == total && pairs == total &&
           total == int_pow(Int(r), n) * factorial(n);
      if (!ok) {
        why << "n=" << n << " r=" << r;
        return false;
      }
    }
  return true;
}

bool criterion_9(std::ostream& why) {
  if (derangement_number(3, 1) != 2 || derangement_number(2, 2) != 5) {
    why << "pinned derangement values";
    return false;
  }
  std::vector<std::pair<int, int>> ranges;
  for (int n = 0; n <= 5; ++n) ranges.emplace_back(n, 1);
  for (int n = 0; n <= 4; ++n)
    for (int r = 2; r <= 3; ++r) ranges.emplace_back(n, r);
  for (const auto& [n, r] : ranges) {
    const Int d = derangement_number(n, r);
    if (d != even_zero_prefix_count(n, r)) {
      why << "even-prefix count n=" << n << " r=" << r;
      return false;
    }
    const InjectiveWordPoset poset(n, r, kBudget);
    if (d != chain_count_alternating(poset, full_set(n))) {
      why << "b_P([n]) n=" << n << " r=" << r;
      return false;
    }
  }
  return true;
}

bool criterion_10(std::ostream& why) {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 2; ++r) {
      const Partition sign_shape(std::vector<int>(static_cast<std::size_t>(n), 1));
      for (const auto& s : all_rank_sets(n)) {
        const auto [odd, even] = tau_parity_count(n, r, s.without(n), sign_shape);
        const Int via_pairs = s.contains(n) ? even : odd;
        if (via_pairs != sign_multiplicity_closed_form(n, r, s)) {
          why << "n=" << n << " r=" << r << " S=" << s.to_string();
          return false;
        }
      }
    }
  return true;
}

bool criterion_11(std::ostream& why) {
  // character orthonormality, n <= 6
  for (int n = 1; n <= 6; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (inner_product(irreducible_character(a), irreducible_character(b)) !=
            Rational(a == b ? 1 : 0)) {
          why << "orthonormality n=" << n;
          return false;
        }
  }
  // class-constancy of fixed-chain counts, n <= 5 (r = 1)
  for (int n = 1; n <= 5; ++n) {
    const InjectiveWordPoset poset(n, 1, kBudget);
    const auto perms = all_permutations(n);
    for (const auto& s : all_rank_sets(n)) {
      std::map<Partition, Int> per_class;
      for (const auto& g : perms) {
        const Int fixed = fixed_chain_count(poset, s, g);
        const auto [it, inserted] = per_class.emplace(cycle_type(g).partition(), fixed);
        if (!inserted && it->second != fixed) {
          why << "class constancy n=" << n << " S=" << s.to_string();
          return false;
        }
      }
    }
  }
  // tau qualifying sets are initial segments, n <= 5, r <= 2
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 2; ++r) {
      const auto perms = all_permutations(n);
      for (const auto& shape : partitions_of(n)) {
        bool ok = true;
        for_each_colored_syt(shape, r, [&](const ColoredTableau& q) {
          if (!ok) return;
          for (const auto& w : perms) {
            const auto good = tau_qualifying_set(w, q);
            const int tau = tau_statistic(w, q);
            if (static_cast<int>(good.size()) != tau + 1) ok = false;
            for (std::size_t i = 0; i < good.size() && ok; ++i)
              if (good[i] != static_cast<int>(i)) ok = false;
          }
        });
        if (!ok) {
          why << "nesting n=" << n << " r=" << r << " shape=" << shape.to_string();
          return false;
        }
      }
    }
  // the two tau phrasings agree at one color, n <= 6
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& shape : partitions_of(n)) {
      bool ok = true;
      for_each_colored_syt(shape, 1, [&](const ColoredTableau& q) {
        if (!ok) return;
        for (const auto& w : perms)
          if (tau_statistic(w, q) != tau_statistic_descent_form(w, q)) ok = false;
      });
      if (!ok) {
        why << "tau phrasing equivalence n=" << n << " shape=" << shape.to_string();
        return false;
      }
    }
  }
  // descent_count vs direct enumeration, n <= 7
  for (int n = 1; n <= 7; ++n) {
    std::map<std::uint32_t, Int> histogram;
    std::vector<int> img;
    for (int i = 1; i <= n; ++i) img.push_back(i);
    do {
      ++histogram[Permutation(img).descent_set().to_mask()];
    } while (std::next_permutation(img.begin(), img.end()));
    for (const auto& s : all_rank_sets(n - 1))
      if (descent_count(n, s) != histogram[s.to_mask()]) {
        why << "descent count n=" << n << " S=" << s.to_string();
        return false;
      }
  }
  // every computed multiplicity is nonnegative
  for (const auto& [n, r] : kMainRanges) {
    const auto table = compute_beta_table_full(n, r, Method::tau, kBudget, 1);
    for (const auto& row : table.rows)
      for (const auto& [lambda, mult] : row.multiplicities)
        if (mult < 0) {
          why << "negative multiplicity n=" << n << " r=" << r
              << " S=" << row.s.to_string();
          return false;
        }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Gate gate;
  if (argc > 1) gate.only = std::atoi(argv[1]);
  gate.criterion(1, "uncolored top homology table via even smallest descents", 10,
                 criterion_1);
  gate.criterion(2, "tau pair counts equal oracle multiplicities on all rank sets", 300,
                 criterion_2);
  gate.criterion(3, "good-action recursion equals inclusion-exclusion", 120, criterion_3);
  gate.criterion(4, "alpha factors through its top selected rank", 0, criterion_4);
  gate.criterion(5, "closed form for single-rank alpha", 0, criterion_5);
  gate.criterion(6, "odd and even tau pairs exhaust every descent class", 0, criterion_6);
  gate.criterion(7, "betas over all rank sets resum to the scaled regular character", 0,
                 criterion_7);
  gate.criterion(8, "colored insertion is a tau-compatible bijection", 0, criterion_8);
  gate.criterion(9, "derangement count, even-prefix count, and b_P([n]) coincide", 0,
                 criterion_9);
  gate.criterion(10, "sign multiplicity closed forms", 0, criterion_10);
  gate.criterion(11, "property suites: orthonormality, class constancy, nesting, tau "
                     "phrasings, descent counts, nonnegativity",
                 0, criterion_11);
  std::cout << (gate.all_ok ? "acceptance: ALL PASS" : "acceptance: FAILURES") << "\n";
  return gate.all_ok ? 0 : 1;
}
