#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "injwords/ints.hpp"
#include "injwords/partition.hpp"
#include "injwords/permutation.hpp"
#include "injwords/rank_set.hpp"
#include "injwords/tableau.hpp"

namespace injwords {

// Permutation of [n] with a color in [0, r) at every position.
class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  // colors[i-1] colors position i. Throws std::invalid_argument on size
  // mismatch or colors outside [0, r).
  ColoredPermutation(Permutation base, std::vector<int> colors, int r);

  const Permutation& base() const { return base_; }
  int n() const { return base_.n(); }
  int r() const { return r_; }
  int color(int position) const { return colors_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& colors() const { return colors_; }

  // Length of the longest prefix with base values increasing and all
  // colors zero.
  int zero_prefix_length() const;

  std::string to_string() const;  // "[3.0,1.2,2.0]"
  bool operator==(const ColoredPermutation&) const = default;

 private:
  Permutation base_;
  std::vector<int> colors_;
  int r_ = 1;
};

// Base permutations in lexicographic order; for each base the color
// vectors follow base-r odometer order with the color of position 1
// most significant.
void for_each_colored_permutation(int n, int r,
                                  const std::function<void(const ColoredPermutation&)>& fn);

// tau(w, q) for w with Des(w) = s = {s_1 < ... < s_k} and q a colored
// standard tableau with n entries: the largest i in {0, ..., k+1} such
// that, writing t_i = s_{k-i+1} with sentinels s_{k+1} = n and s_0 = 0,
//   (a) w agrees with w_max(n, s) at every position x > t_i, and
//   (b) entries 1 .. n - t_i of q all lie in its first row with color
//       zero.
// i = 0 imposes nothing; i = k+1 forces w = w_max and a fully
// zero-colored first-row prefix of length n. The qualifying set {0..tau}
// is an initial segment; tau_qualifying_set exposes it for tests.
int tau_statistic(const Permutation& w, const ColoredTableau& q);
std::vector<int> tau_qualifying_set(const Permutation& w, const ColoredTableau& q);

// Variant with condition (b) phrased through descents: the underlying
// tableau has no descent smaller than n - t_i (entries keep the color
// zero requirement). Agrees with tau_statistic when r = 1; kept as a
// cross-check oracle for that case.
int tau_statistic_descent_form(const Permutation& w, const ColoredTableau& q);

// tau(w, u) for a colored permutation u: condition (b) becomes "the
// first n - t_i entries of u are increasing with color zero".
int tau_statistic(const Permutation& w, const ColoredPermutation& u);

// Counts pairs (w, q) with Des(w) = s, q a colored standard tableau of
// the shape, split by parity of tau: returns {odd count, even count}.
std::pair<Int, Int> tau_parity_count(int n, int r, const RankSet& s, const Partition& shape);

// Counts pairs (w, u) with Des(w) = s, u any colored permutation,
// split by parity of tau: returns {odd count, even count}.
std::pair<Int, Int> tau_parity_count_permutations(int n, int r, const RankSet& s);

// Multiplicity table of the rank-selected homology via tau counting:
// the entry for lambda counts pairs with tau odd when n is not in s,
// pairs with tau even when it is (the descent condition uses s - {n}).
MultiplicityMap beta_multiplicities_tau(int n, int r, const RankSet& s);

// (-1)^n + sum_{i=1..n} (-1)^{n-i} r^i n!/(n-i)!: the colored derangement
// count, equal to the dimension of the top homology.
Int derangement_number(int n, int r);

// Number of colored permutations whose longest zero-colored increasing
// prefix has even length, by direct enumeration. Equal to
// derangement_number; the agreement is part of the verification suite.
Int even_zero_prefix_count(int n, int r);

// Multiplicity of the sign character chi^(1^n) in beta_P(S), S within [n]:
//   n not in S:  0 unless n-1 in S, else r^{n-1} b_{n-1}(S - {n-1})
//   n in S:      r^n b_n(S - {n}) minus the n-1 term when n-1 in S.
Int sign_multiplicity_closed_form(int n, int r, const RankSet& s);

}  // namespace injwords
