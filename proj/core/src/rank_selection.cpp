#include "injwords/rank_selection.hpp"

#include <stdexcept>

#include "injwords/characters.hpp"
#include "injwords/permutation.hpp"
#include "injwords/tableau.hpp"

namespace injwords {

const ClassFunction& RankSelection::alpha(const RankSet& s) const {
  const std::uint32_t mask = s.to_mask();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = alpha_cache_.find(mask);
    if (it != alpha_cache_.end()) return it->second;
  }
  ClassFunction f = alpha_character(*poset_, s);
  std::lock_guard<std::mutex> lock(mu_);
  return alpha_cache_.emplace(mask, std::move(f)).first->second;
}

ClassFunction RankSelection::beta_inclusion_exclusion(const RankSet& s) const {
  ClassFunction total(poset_->n());
  for_each_subset(s, [&](const RankSet& t) {
    if ((s.size() - t.size()) % 2 == 0)
      total += alpha(t);
    else
      total -= alpha(t);
  });
  return total;
}

ClassFunction RankSelection::beta_good_action(const RankSet& s) const {
  const int n = poset_->n();
  const int k = s.size();
  ClassFunction total = ClassFunction::trivial(n);
  if (k % 2 == 1) total *= Int(-1);
  RankSet prefix;
  const auto& elems = s.elements();
  for (int i = 1; i <= k; ++i) {
    const int si = elems[static_cast<std::size_t>(i - 1)];
    ClassFunction term = alpha(RankSet({si}));
    Int coef = descent_count(si, prefix);
    if ((k - i) % 2 == 1) coef = -coef;
    term *= coef;
    total += term;
    prefix = prefix.with(si);
  }
  return total;
}

ClassFunction alpha_rank_m_closed_form(int n, int r, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("rank out of range");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  ClassFunction total(n);
  for (const auto& lambda : partitions_of(n)) {
    const Int mult = f_lambda_first_row(lambda, n - m);
    if (mult == 0) continue;
    ClassFunction chi = irreducible_character(lambda);
    chi *= mult;
    total += chi;
  }
  total *= int_pow(Int(r), m);
  return total;
}

MultiplicityMap beta_multiplicities_closed_form(int n, int r, const RankSet& s) {
  if (!s.within(n)) throw std::invalid_argument("rank set not within [n]");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  const int k = s.size();
  const auto& elems = s.elements();
  MultiplicityMap out;
  for (const auto& lambda : partitions_of(n)) {
    Int mult = 0;
    if (lambda.rows() <= 1) mult = (k % 2 == 0) ? 1 : -1;  // the (-1)^k [lambda=(n)] term
    RankSet prefix;
    for (int i = 1; i <= k; ++i) {
      const int si = elems[static_cast<std::size_t>(i - 1)];
      Int term = descent_count(si, prefix) * int_pow(Int(r), si) *
                 f_lambda_first_row(lambda, n - si);
      if ((k - i) % 2 == 1) term = -term;
      mult += term;
      prefix = prefix.with(si);
    }
    if (mult != 0) out.emplace(lambda, mult);
  }
  return out;
}

Int multiplicity_dimension(const MultiplicityMap& m) {
  Int dim = 0;
  for (const auto& [lambda, mult] : m) dim += mult * f_lambda(lambda);
  return dim;
}

}  // namespace injwords
