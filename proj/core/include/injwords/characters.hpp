#pragma once

#include <vector>

#include "injwords/class_function.hpp"
#include "injwords/ints.hpp"
#include "injwords/partition.hpp"
#include "injwords/permutation.hpp"

namespace injwords {

// Conjugacy class label: the multiset of cycle lengths, as a partition.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition p) : p_(std::move(p)) {}
  const Partition& partition() const { return p_; }
  int n() const { return p_.n(); }
  bool operator==(const CycleType&) const = default;

 private:
  Partition p_;
};

CycleType cycle_type(const Permutation& w);

// Size of the conjugacy class: n! / prod(i^{m_i} m_i!).
Int class_size(const CycleType& t);

// Canonical representative: cycles laid out on consecutive blocks,
// largest part first. Its cycle type is t.
Permutation class_representative(const CycleType& t);

// Full character table of S_n. value[l][m] = chi^{lambda_l}(mu_m) with
// both indices in canonical partition order.
struct CharacterTable {
  int n = 0;
  std::vector<std::vector<Int>> values;
};

// Cached per n; thread-safe; the reference stays valid for the program
// lifetime. Computed by the Murnaghan-Nakayama rule on beta-sets.
const CharacterTable& character_table(int n);

ClassFunction irreducible_character(const Partition& lambda);

// Single character value chi^lambda(mu), no table caching. Exists so
// tests can cross-check the memoized table against a direct recursion.
Int character_value_direct(const Partition& lambda, const Partition& mu);

// <f, g> = (1/n!) sum_mu |C_mu| f(mu) g(mu). Characters of S_n are
// rational-valued, so no conjugation is involved.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// Writes f as sum m_lambda chi^lambda. Throws std::domain_error when f
// is not an integer combination of irreducibles. Zero multiplicities
// are omitted from the result.
MultiplicityMap decompose(const ClassFunction& f);

// sum over lambda of m_lambda chi^lambda.
ClassFunction reconstruct(int n, const MultiplicityMap& m);

// Character of the regular representation: n! at the identity, 0 elsewhere.
ClassFunction regular_character(int n);

}  // namespace injwords
