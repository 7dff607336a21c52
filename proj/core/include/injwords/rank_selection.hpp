#pragma once

#include <cstdint>
#include <map>
#include <mutex>

#include "injwords/class_function.hpp"
#include "injwords/partition.hpp"
#include "injwords/poset.hpp"
#include "injwords/rank_set.hpp"

namespace injwords {

// Rank-selected homology characters of one poset, with the alpha
// characters cached per rank set. All three beta routes live here or in
// the free functions below:
//   - beta_inclusion_exclusion: the definition, on streamed chains
//   - beta_good_action: the closed recursion valid for good actions
//   - beta_multiplicities_closed_form: no poset at all
class RankSelection {
 public:
  explicit RankSelection(const InjectiveWordPoset& p) : poset_(&p) {}

  const InjectiveWordPoset& poset() const { return *poset_; }

  // alpha_P(S) by chain streaming (the oracle), cached by mask.
  const ClassFunction& alpha(const RankSet& s) const;

  // beta_P(S) = sum over T subset S of (-1)^{|S|-|T|} alpha_P(T).
  ClassFunction beta_inclusion_exclusion(const RankSet& s) const;

  // beta_P(S) = (-1)^k 1 + sum_i (-1)^{k-i} b_{s_i}({s_1..s_{i-1}}) alpha_P({s_i})
  // for S = {s_1 < ... < s_k}. Uses cached oracle alphas for the
  // singletons, so agreement with beta_inclusion_exclusion is a
  // statement about the recursion, not about alpha.
  ClassFunction beta_good_action(const RankSet& s) const;

 private:
  const InjectiveWordPoset* poset_;
  mutable std::mutex mu_;
  mutable std::map<std::uint32_t, ClassFunction> alpha_cache_;
};

// alpha_P({m}) without any enumeration:
// r^m sum_lambda f_lambda_first_row(lambda, n-m) chi^lambda.
ClassFunction alpha_rank_m_closed_form(int n, int r, int m);

// Multiplicity of chi^lambda in beta_P(S) without any enumeration:
//   (-1)^k [lambda = (n)]
//   + sum_i (-1)^{k-i} b_{s_i}({s_1..s_{i-1}}) r^{s_i} f_lambda_first_row(lambda, n-s_i).
// Defined for every S within [n]; zero entries are omitted.
MultiplicityMap beta_multiplicities_closed_form(int n, int r, const RankSet& s);

// sum_lambda mult(lambda) * f_lambda: dimension of the virtual module.
Int multiplicity_dimension(const MultiplicityMap& m);

}  // namespace injwords
