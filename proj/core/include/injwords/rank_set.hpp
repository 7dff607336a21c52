#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace injwords {

// A finite set of positive ranks, kept sorted strictly increasing.
// The ambient bound (ranks live in [n] or [n-1] depending on context)
// is validated at call sites, not stored here.
class RankSet {
 public:
  RankSet() = default;
  // Normalizes: sorts and removes duplicates. Throws std::invalid_argument
  // on elements < 1.
  explicit RankSet(std::vector<int> elements);

  // Mask bit i-1 encodes membership of i. This is the canonical subset
  // order used for table rows: masks ascending.
  static RankSet from_mask(std::uint32_t mask);
  std::uint32_t to_mask() const;

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int x) const;
  int max() const;  // throws std::logic_error on empty set
  const std::vector<int>& elements() const { return elems_; }

  // True when every element is <= bound.
  bool within(int bound) const;

  RankSet with(int x) const;
  RankSet without(int x) const;

  // "{}", "{1,3}"
  std::string to_string() const;
  // Inverse of to_string modulo whitespace; also accepts a bare
  // comma-separated list without braces. Empty string means the empty set.
  static RankSet parse(const std::string& text);

  bool operator==(const RankSet&) const = default;

 private:
  std::vector<int> elems_;
};

// All subsets of [n] in mask order (the canonical row order of tables).
std::vector<RankSet> all_rank_sets(int n);

// Subsets T of S, ordered by ascending mask over S's elements.
void for_each_subset(const RankSet& s, const std::function<void(const RankSet&)>& fn);

}  // namespace injwords
