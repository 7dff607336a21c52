#include "doctest.h"

#include <algorithm>

#include "injwords/characters.hpp"
#include "injwords/tableau.hpp"

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

TEST_CASE("cycle types and class sizes") {
  CHECK(cycle_type(Permutation::identity(4)).partition() == Partition({1, 1, 1, 1}));
  CHECK(cycle_type(Permutation({2, 1, 3})).partition() == Partition({2, 1}));
  CHECK(cycle_type(Permutation({2, 3, 1})).partition() == Partition({3}));
  // class sizes sum to n!, and match direct counting
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    for (const auto& mu : partitions_of(n)) {
      Int direct = 0;
      for (const auto& w : all)
        if (cycle_type(w).partition() == mu) ++direct;
      CHECK(class_size(CycleType(mu)) == direct);
    }
  }
}

TEST_CASE("class representative has the requested type") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      const Permutation g = class_representative(CycleType(mu));
      CHECK(cycle_type(g).partition() == mu);
    }
}

TEST_CASE("small character tables have the textbook values") {
  // S_3, classes in canonical order (3), (2,1), (1,1,1)
  const auto& t3 = character_table(3);
  const auto chi = [&](std::vector<int> l, std::vector<int> m) {
    return t3.values[static_cast<std::size_t>(partition_index(3, Partition(l)))]
                    [static_cast<std::size_t>(partition_index(3, Partition(m)))];
  };
  CHECK(chi({3}, {1, 1, 1}) == 1);
  CHECK(chi({3}, {2, 1}) == 1);
  CHECK(chi({3}, {3}) == 1);
  CHECK(chi({2, 1}, {1, 1, 1}) == 2);
  CHECK(chi({2, 1}, {2, 1}) == 0);
  CHECK(chi({2, 1}, {3}) == -1);
  CHECK(chi({1, 1, 1}, {1, 1, 1}) == 1);
  CHECK(chi({1, 1, 1}, {2, 1}) == -1);
  CHECK(chi({1, 1, 1}, {3}) == 1);
}

TEST_CASE("degrees match the hook length formula") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      CHECK(irreducible_character(lambda).dimension() == f_lambda(lambda));
}

TEST_CASE("memoized table equals direct recursion") {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = character_table(n);
    const auto& ps = partitions_of(n);
    for (std::size_t l = 0; l < ps.size(); ++l)
      for (std::size_t m = 0; m < ps.size(); ++m)
        CHECK(table.values[l][m] == character_value_direct(ps[l], ps[m]));
  }
}

TEST_CASE("orthonormality of irreducible characters") {
  for (int n = 1; n <= 6; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        const Rational ip = inner_product(irreducible_character(a), irreducible_character(b));
        CHECK(ip == Rational(a == b ? 1 : 0));
      }
  }
}

TEST_CASE("sign character values") {
  for (int n = 1; n <= 6; ++n) {
    const auto sign = irreducible_character(Partition(std::vector<int>(n, 1)));
    for (const auto& mu : partitions_of(n)) {
      const Permutation g = class_representative(CycleType(mu));
      const int expected = g.inversions() % 2 == 0 ? 1 : -1;
      CHECK(sign.value(mu) == expected);
    }
  }
}

TEST_CASE("decompose round trips and rejects non-characters") {
  // regular character decomposes with multiplicity f_lambda
  for (int n = 1; n <= 6; ++n) {
    const auto m = decompose(regular_character(n));
    CHECK(m.size() == partitions_of(n).size());
    for (const auto& [lambda, mult] : m) CHECK(mult == f_lambda(lambda));
    CHECK(reconstruct(n, m) == regular_character(n));
  }
  ClassFunction f(3);
  f.set_value(Partition({1, 1, 1}), 1);  // dimension 1 but not a character
  CHECK_THROWS_AS(decompose(f), std::domain_error);
}

TEST_CASE("decompose handles virtual characters") {
  // chi^(3) - chi^(1,1,1) has a negative multiplicity
  ClassFunction f = irreducible_character(Partition({3}));
  f -= irreducible_character(Partition({1, 1, 1}));
  const auto m = decompose(f);
  REQUIRE(m.size() == 2);
  CHECK(m.at(Partition({3})) == 1);
  CHECK(m.at(Partition({1, 1, 1})) == -1);
}

TEST_CASE("trivial and regular class functions") {
  CHECK(ClassFunction::trivial(4).dimension() == 1);
  CHECK(regular_character(4).dimension() == 24);
  CHECK(regular_character(4).value(Partition({2, 1, 1})) == 0);
  const auto m = decompose(ClassFunction::trivial(5));
  REQUIRE(m.size() == 1);
  CHECK(m.at(Partition({5})) == 1);
}
