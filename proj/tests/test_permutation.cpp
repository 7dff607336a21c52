#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "injwords/permutation.hpp"

using namespace injwords;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img;
  for (int i = 1; i <= n; ++i) img.push_back(i);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  const Permutation w({3, 1, 2});
  CHECK(w(1) == 3);
  CHECK(w.inverse().compose(w) == Permutation::identity(3));
  CHECK(w.compose(w.inverse()) == Permutation::identity(3));
  CHECK(w.to_string() == "[3,1,2]");
  CHECK(Permutation::identity(4).descent_set() == RankSet{});
  CHECK(Permutation({3, 2, 1}).descent_set() == RankSet({1, 2}));
  CHECK(Permutation({3, 2, 1}).inversions() == 3);
}

TEST_CASE("rank set basics") {
  CHECK(RankSet({3, 1, 3}).elements() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(RankSet({0}), std::invalid_argument);
  CHECK(RankSet::from_mask(0b101).elements() == std::vector<int>{1, 3});
  CHECK(RankSet({1, 3}).to_mask() == 0b101u);
  CHECK(RankSet({2, 5}).to_string() == "{2,5}");
  CHECK(RankSet{}.to_string() == "{}");
  CHECK(RankSet::parse("{2,5}") == RankSet({2, 5}));
  CHECK(RankSet::parse("2,5") == RankSet({2, 5}));
  CHECK(RankSet::parse("") == RankSet{});
  CHECK(RankSet::parse("{}") == RankSet{});
  CHECK(RankSet({1, 4}).within(4));
  CHECK_FALSE(RankSet({1, 4}).within(3));
  CHECK(RankSet({2}).with(1) == RankSet({1, 2}));
  CHECK(RankSet({1, 2}).without(1) == RankSet({2}));
  // all_rank_sets is the mask order
  const auto subsets = all_rank_sets(3);
  REQUIRE(subsets.size() == 8);
  CHECK(subsets[0] == RankSet{});
  CHECK(subsets[5] == RankSet({1, 3}));
  CHECK(subsets[7] == RankSet({1, 2, 3}));
}

TEST_CASE("descent class enumeration against direct filter") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    for (const auto& s : all_rank_sets(n - 1)) {
      std::vector<Permutation> expected;
      for (const auto& w : all)
        if (w.descent_set() == s) expected.push_back(w);
      const auto got = enumerate_descent_class(n, s);
      CHECK(got == expected);  // same set, same lexicographic order
    }
  }
}

TEST_CASE("descent_count matches enumeration up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::uint32_t, Int> histogram;
    for (const auto& s : all_rank_sets(n - 1)) histogram[s.to_mask()] = 0;
    std::vector<int> img;
    for (int i = 1; i <= n; ++i) img.push_back(i);
    do {
      Permutation w(img);
      ++histogram[w.descent_set().to_mask()];
    } while (std::next_permutation(img.begin(), img.end()));
    for (const auto& s : all_rank_sets(n - 1))
      CHECK(descent_count(n, s) == histogram[s.to_mask()]);
  }
}

TEST_CASE("boolean_chain_count basics") {
  CHECK(boolean_chain_count(8, RankSet({2, 3})) == 168);   // [DERIVED] 28 * 6
  CHECK(boolean_chain_count(3, RankSet{}) == 1);
  CHECK(boolean_chain_count(3, RankSet({1, 2, 3})) == 6);  // maximal chains of B_3
  CHECK(boolean_chain_count(4, RankSet({4})) == 1);
  // full flag count is n!
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    CHECK(boolean_chain_count(n, RankSet(full)) == factorial(n));
  }
}

TEST_CASE("w_max is the unique maximal-inversion member of its class") {
  CHECK(w_max(8, RankSet({2, 3, 6})) == Permutation({7, 8, 6, 3, 4, 5, 1, 2}));
  CHECK(w_max(3, RankSet{}) == Permutation::identity(3));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : all_rank_sets(n - 1)) {
      const Permutation wm = w_max(n, s);
      CHECK(wm.descent_set() == s);
      Int best = -1;
      int best_count = 0;
      for_each_in_descent_class(n, s, [&](const Permutation& w) {
        if (w.inversions() > best) {
          best = w.inversions();
          best_count = 1;
        } else if (w.inversions() == best) {
          ++best_count;
        }
      });
      CHECK(best == wm.inversions());
      CHECK(best_count == 1);
    }
  }
}

TEST_CASE("descent_count special values") {
  CHECK(descent_count(8, RankSet({2, 3, 6})) == 643);  // [DERIVED] inclusion-exclusion by hand
  CHECK(descent_count(5, RankSet{}) == 1);
  CHECK(descent_count(4, RankSet({1, 2, 3})) == 1);  // only the reversal
}
