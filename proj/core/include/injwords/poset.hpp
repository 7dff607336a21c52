#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "injwords/class_function.hpp"
#include "injwords/colored_word.hpp"
#include "injwords/ints.hpp"
#include "injwords/rank_set.hpp"

namespace injwords {

// Element handle for the poset of r-colored injective words on [n],
// with an artificial top adjoined. Bottom is the empty word (rank 0),
// words of length k have rank k, top has rank n+1.
class PosetElement {
 public:
  static PosetElement bottom() { return PosetElement(Kind::bottom, {}); }
  static PosetElement top() { return PosetElement(Kind::top, {}); }
  static PosetElement word(ColoredWord w) {
    return w.empty() ? bottom() : PosetElement(Kind::word, std::move(w));
  }

  bool is_bottom() const { return kind_ == Kind::bottom; }
  bool is_top() const { return kind_ == Kind::top; }
  bool is_word() const { return kind_ != Kind::top; }  // bottom is the empty word
  const ColoredWord& as_word() const;

 private:
  enum class Kind { bottom, word, top };
  PosetElement(Kind k, ColoredWord w) : kind_(k), word_(std::move(w)) {}
  Kind kind_;
  ColoredWord word_;
};

// The poset P(n, r), never materialized: elements and chains are
// streamed. Budgets guard against runaway enumeration; exceeding one
// throws resource_error.
class InjectiveWordPoset {
 public:
  // Throws std::invalid_argument on n < 0 or r < 1; throws
  // resource_error when the element count exceeds the budget.
  InjectiveWordPoset(int n, int r, const Int& budget = default_budget());

  static Int default_budget() { return Int(10'000'000); }

  int n() const { return n_; }
  int r() const { return r_; }
  int top_rank() const { return n_ + 1; }

  // Number of poset elements including bottom and top:
  // 1 + sum_k C(n,k) k! r^k + 1.
  const Int& element_count() const { return element_count_; }
  static Int element_count_for(int n, int r);

  int rank(const PosetElement& x) const;
  // Strict order. Words compare by the subword relation.
  bool less(const PosetElement& a, const PosetElement& b) const;

  // All words of the given length, lexicographic by (value, color) per
  // position, values ascending at each slot.
  void for_each_word_of_rank(int k, const std::function<void(const ColoredWord&)>& fn) const;

  // All superwords of w of the given length (w's letters kept in order,
  // new letters use values absent from w).
  void for_each_superword(const ColoredWord& w, int length,
                          const std::function<void(const ColoredWord&)>& fn) const;

  // Cardinality check used by chain counters; counts words (no top).
  Int word_count() const { return element_count_ - 1; }

 private:
  int n_ = 0;
  int r_ = 1;
  Int element_count_;
};

// Maximal chain of the rank-selection P(n,r)_S, recorded by its interior
// elements (bottom and top are implicit). words[i] has rank s_{i+1}.
struct Chain {
  std::vector<ColoredWord> words;
  bool operator==(const Chain&) const = default;
};

// Streams every maximal chain of the rank-selected subposet. s must lie
// within [n]. admit filters elements: a chain is visited only when all
// its interior words pass (used for fixed-point counting; enumeration
// prunes on rejected elements, so the count stays exact).
void for_each_maximal_chain(const InjectiveWordPoset& p, const RankSet& s,
                            const std::function<void(const Chain&)>& fn);
void for_each_maximal_chain(const InjectiveWordPoset& p, const RankSet& s,
                            const std::function<bool(const ColoredWord&)>& admit,
                            const std::function<void(const Chain&)>& fn);

// a_P(S): number of maximal chains of the rank-selection.
Int chain_count(const InjectiveWordPoset& p, const RankSet& s);

// b_P(S) = sum over T subset S of (-1)^{|S|-|T|} a_P(T).
Int chain_count_alternating(const InjectiveWordPoset& p, const RankSet& s);

// Number of maximal chains fixed pointwise by g.
Int fixed_chain_count(const InjectiveWordPoset& p, const RankSet& s, const Permutation& g);

// alpha_P(S) as a class function: the permutation character of the
// action on maximal chains, evaluated by streaming enumeration on one
// representative per class.
ClassFunction alpha_character(const InjectiveWordPoset& p, const RankSet& s);

// Same class function through the structure of the poset: every chain
// through a top word of rank m = max(S) restricts to a Boolean interval,
// so fix counts factor as r^m (fix g)_m * a_m(S - {m}). Used as the
// production path; tests pin it to alpha_character.
ClassFunction alpha_character_fast(const InjectiveWordPoset& p, const RankSet& s);

}  // namespace injwords
