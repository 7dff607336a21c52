#include "doctest.h"

#include <map>
#include <set>

#include "injwords/ints.hpp"
#include "injwords/partition.hpp"

using namespace injwords;

namespace {

// independent oracle: p(n) by Euler's recurrence with pentagonal numbers
Int partition_count_oracle(int n) {
  static std::map<int, Int> memo{{0, Int(1)}};
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (int k = 1;; ++k) {
    const int g1 = k * (3 * k - 1) / 2;
    const int g2 = k * (3 * k + 1) / 2;
    if (g1 > n && g2 > n) break;
    const Int sign = (k % 2 == 1) ? 1 : -1;
    if (g1 <= n) total += sign * partition_count_oracle(n - g1);
    if (g2 <= n) total += sign * partition_count_oracle(n - g2);
  }
  memo[n] = total;
  return total;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK(Partition({3, 1, 1}).n() == 5);
  CHECK(Partition{}.n() == 0);
}

TEST_CASE("partition string round trip") {
  CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
  CHECK(Partition{}.to_string() == "-");
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition::parse("-") == Partition{});
  CHECK(Partition::parse("") == Partition{});
  for (const auto& p : partitions_of(7)) CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("enumeration order is reverse-lexicographic") {
  const auto& ps = partitions_of(4);
  REQUIRE(ps.size() == 5);  // [DERIVED] Euler recurrence below agrees
  CHECK(ps[0] == Partition({4}));
  CHECK(ps[1] == Partition({3, 1}));
  CHECK(ps[2] == Partition({2, 2}));
  CHECK(ps[3] == Partition({2, 1, 1}));
  CHECK(ps[4] == Partition({1, 1, 1, 1}));
}

TEST_CASE("enumeration count matches Euler recurrence") {
  for (int n = 0; n <= 12; ++n) {
    const auto& ps = partitions_of(n);
    CHECK(Int(ps.size()) == partition_count_oracle(n));
    std::set<Partition> distinct(ps.begin(), ps.end());
    CHECK(distinct.size() == ps.size());
    for (const auto& p : ps) CHECK(p.n() == n);
  }
}

TEST_CASE("partition_index inverts enumeration") {
  for (int n = 0; n <= 8; ++n) {
    const auto& ps = partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      CHECK(partition_index(n, ps[i]) == static_cast<int>(i));
  }
  CHECK_THROWS_AS(partition_index(3, Partition({4})), std::invalid_argument);
}

TEST_CASE("canonical order puts (n) first and (1^n) last") {
  MultiplicityMap m;
  m[Partition({1, 1, 1})] = 1;
  m[Partition({3})] = 2;
  m[Partition({2, 1})] = 3;
  auto it = m.begin();
  CHECK(it->first == Partition({3}));
  ++it;
  CHECK(it->first == Partition({2, 1}));
  ++it;
  CHECK(it->first == Partition({1, 1, 1}));
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(binomial(8, 2) == 28);
  CHECK(binomial(8, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(int_pow(Int(3), 4) == 81);
  // binomial sums: sum_k C(n,k) = 2^n
  for (int n = 0; n <= 20; ++n) {
    Int sum = 0;
    for (int k = 0; k <= n; ++k) sum += binomial(n, k);
    CHECK(sum == int_pow(Int(2), n));
  }
}
