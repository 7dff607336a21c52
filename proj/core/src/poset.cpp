#include "injwords/poset.hpp"

#include <cassert>
#include <stdexcept>

#include "injwords/characters.hpp"
#include "injwords/errors.hpp"

namespace injwords {

const ColoredWord& PosetElement::as_word() const {
  if (is_top()) throw std::logic_error("top element is not a word");
  return word_;
}

InjectiveWordPoset::InjectiveWordPoset(int n, int r, const Int& budget) : n_(n), r_(r) {
  if (n < 0) throw std::invalid_argument("poset: n must be >= 0");
  if (r < 1) throw std::invalid_argument("poset: r must be >= 1");
  element_count_ = element_count_for(n, r);
  if (element_count_ > budget) throw resource_error("poset exceeds element budget");
}

Int InjectiveWordPoset::element_count_for(int n, int r) {
  Int count = 1;  // the top
  for (int k = 0; k <= n; ++k)
    count += binomial(n, k) * factorial(k) * int_pow(Int(r), k);
  return count;
}

int InjectiveWordPoset::rank(const PosetElement& x) const {
  if (x.is_top()) return n_ + 1;
  return x.as_word().length();
}

bool InjectiveWordPoset::less(const PosetElement& a, const PosetElement& b) const {
  if (b.is_top()) return !a.is_top();
  if (a.is_top()) return false;
  return a.as_word().length() < b.as_word().length() &&
         a.as_word().is_subword_of(b.as_word());
}

namespace {

void words_rec(int n, int r, int remaining, std::vector<Letter>& prefix,
               std::vector<bool>& used, const std::function<void(const ColoredWord&)>& fn) {
  if (remaining == 0) {
    fn(ColoredWord(prefix));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v - 1)]) continue;
    used[static_cast<std::size_t>(v - 1)] = true;
    for (int c = 0; c < r; ++c) {
      prefix.push_back({v, c});
      words_rec(n, r, remaining - 1, prefix, used, fn);
      prefix.pop_back();
    }
    used[static_cast<std::size_t>(v - 1)] = false;
  }
}

// Merge DFS: interleave the remaining letters of w with fresh letters.
// Each slot either consumes the next letter of w or introduces a new
// (value, color) not used anywhere; distinct branches yield distinct
// words, so no deduplication is needed.
void superwords_rec(int n, int r, const std::vector<Letter>& w, std::size_t wi, int slots,
                    std::vector<Letter>& prefix, std::vector<bool>& used,
                    const std::function<void(const ColoredWord&)>& fn) {
  const int needed = static_cast<int>(w.size() - wi);
  if (slots < needed) return;  // cannot fit the rest of w
  if (slots == 0) {
    fn(ColoredWord(prefix));
    return;
  }
  if (wi < w.size()) {
    prefix.push_back(w[wi]);
    superwords_rec(n, r, w, wi + 1, slots - 1, prefix, used, fn);
    prefix.pop_back();
  }
  if (slots > needed) {
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v - 1)]) continue;
      used[static_cast<std::size_t>(v - 1)] = true;
      for (int c = 0; c < r; ++c) {
        prefix.push_back({v, c});
        superwords_rec(n, r, w, wi, slots - 1, prefix, used, fn);
        prefix.pop_back();
      }
      used[static_cast<std::size_t>(v - 1)] = false;
    }
  }
}

}  // namespace

void InjectiveWordPoset::for_each_word_of_rank(
    int k, const std::function<void(const ColoredWord&)>& fn) const {
  if (k < 0 || k > n_) throw std::invalid_argument("word rank out of range");
  std::vector<Letter> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n_), false);
  words_rec(n_, r_, k, prefix, used, fn);
}

void InjectiveWordPoset::for_each_superword(
    const ColoredWord& w, int length, const std::function<void(const ColoredWord&)>& fn) const {
  if (length < w.length()) return;
  if (length > n_) throw std::invalid_argument("superword length exceeds n");
  std::vector<Letter> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n_), false);
  for (const Letter& l : w.letters()) {
    if (l.value > n_ || l.color >= r_) throw std::invalid_argument("word not in this poset");
    used[static_cast<std::size_t>(l.value - 1)] = true;
  }
  superwords_rec(n_, r_, w.letters(), 0, length, prefix, used, fn);
}

namespace {

void chains_rec(const InjectiveWordPoset& p, const std::vector<int>& levels, std::size_t li,
                std::vector<ColoredWord>& partial,
                const std::function<bool(const ColoredWord&)>& admit,
                const std::function<void(const Chain&)>& fn) {
  if (li == levels.size()) {
    fn(Chain{partial});
    return;
  }
  const ColoredWord base = partial.empty() ? ColoredWord{} : partial.back();
  p.for_each_superword(base, levels[li], [&](const ColoredWord& next) {
    if (!admit(next)) return;
    partial.push_back(next);
    chains_rec(p, levels, li + 1, partial, admit, fn);
    partial.pop_back();
  });
}

}  // namespace

void for_each_maximal_chain(const InjectiveWordPoset& p, const RankSet& s,
                            const std::function<bool(const ColoredWord&)>& admit,
                            const std::function<void(const Chain&)>& fn) {
  if (!s.within(p.n())) throw std::invalid_argument("rank set not within [n]");
  std::vector<ColoredWord> partial;
  chains_rec(p, s.elements(), 0, partial, admit, fn);
}

void for_each_maximal_chain(const InjectiveWordPoset& p, const RankSet& s,
                            const std::function<void(const Chain&)>& fn) {
  for_each_maximal_chain(p, s, [](const ColoredWord&) { return true; }, fn);
}

Int chain_count(const InjectiveWordPoset& p, const RankSet& s) {
  Int count = 0;
  for_each_maximal_chain(p, s, [&](const Chain&) { ++count; });
  return count;
}

Int chain_count_alternating(const InjectiveWordPoset& p, const RankSet& s) {
  Int total = 0;
  for_each_subset(s, [&](const RankSet& t) {
    const Int a = chain_count(p, t);
    if ((s.size() - t.size()) % 2 == 0)
      total += a;
    else
      total -= a;
  });
  return total;
}

Int fixed_chain_count(const InjectiveWordPoset& p, const RankSet& s, const Permutation& g) {
  if (g.n() != p.n()) throw std::invalid_argument("permutation size mismatch");
  Int count = 0;
  for_each_maximal_chain(
      p, s, [&](const ColoredWord& w) { return w.fixed_by(g); },
      [&](const Chain&) { ++count; });
  return count;
}

ClassFunction alpha_character(const InjectiveWordPoset& p, const RankSet& s) {
  const int n = p.n();
  ClassFunction f(n);
  const auto& mus = partitions_of(n);
  for (std::size_t m = 0; m < mus.size(); ++m) {
    const Permutation g = class_representative(CycleType(mus[m]));
    f.value_at(static_cast<int>(m)) = fixed_chain_count(p, s, g);
  }
  return f;
}

ClassFunction alpha_character_fast(const InjectiveWordPoset& p, const RankSet& s) {
  const int n = p.n();
  if (s.empty()) return ClassFunction::trivial(n);
  const int m = s.max();
  const Int interior = boolean_chain_count(m, s.without(m));
  const Int color_factor = int_pow(Int(p.r()), m);
  ClassFunction f(n);
  const auto& mus = partitions_of(n);
  for (std::size_t i = 0; i < mus.size(); ++i) {
    int fixed = 0;
    for (int part : mus[i].parts())
      if (part == 1) ++fixed;
    f.value_at(static_cast<int>(i)) = color_factor * falling_factorial(fixed, m) * interior;
  }
  return f;
}

}  // namespace injwords
