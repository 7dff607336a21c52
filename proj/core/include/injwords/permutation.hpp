#pragma once

#include <functional>
#include <string>
#include <vector>

#include "injwords/ints.hpp"
#include "injwords/rank_set.hpp"

namespace injwords {

// Permutation of [n] in one-line notation, 1-based.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation (n = 0)
  // images[i-1] = w(i). Throws std::invalid_argument unless a bijection on [n].
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  // (*this . o)(i) = (*this)(o(i))
  Permutation compose(const Permutation& o) const;
  Permutation inverse() const;

  // Des(w) = { i in [n-1] : w(i) > w(i+1) }
  RankSet descent_set() const;
  Int inversions() const;

  std::string to_string() const;  // "[3,1,2]"
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// All w in S_n with Des(w) = s, in lexicographic one-line order.
// s must satisfy s within n-1.
std::vector<Permutation> enumerate_descent_class(int n, const RankSet& s);
void for_each_in_descent_class(int n, const RankSet& s,
                               const std::function<void(const Permutation&)>& fn);

// The maximal-inversion representative of the descent class of s:
// split [n] into blocks at the elements of s, then fill blocks left to
// right, each block increasing, using the largest values not yet used.
Permutation w_max(int n, const RankSet& s);

// Number of maximal chains of the rank-selected Boolean lattice B_n:
// a_n(t) = multinomial coefficient prod binom(t_{j+1}, t_j) over the
// chain 0 < t_1 < ... < t_m <= n (with t_{m+1} := n).
Int boolean_chain_count(int n, const RankSet& t);

// b_n(s) = #{ w in S_n : Des(w) = s }, computed by inclusion-exclusion
// over boolean_chain_count. b_n({}) = 1.
Int descent_count(int n, const RankSet& s);

}  // namespace injwords
