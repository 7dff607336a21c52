#pragma once

#include <compare>
#include <string>
#include <vector>

#include "injwords/permutation.hpp"

namespace injwords {

struct Letter {
  int value = 0;  // in [n]
  int color = 0;  // in [0, r)
  auto operator<=>(const Letter&) const = default;
};

// Injective word over [n] x colors: letters with pairwise distinct values.
// The empty word is the poset's bottom element.
class ColoredWord {
 public:
  ColoredWord() = default;
  // Throws std::invalid_argument on repeated values, values < 1, colors < 0.
  explicit ColoredWord(std::vector<Letter> letters);

  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }

  bool contains_value(int v) const;

  // Subword order: u <= w when u is obtained by deleting letters of w
  // (colors must match on kept letters).
  bool is_subword_of(const ColoredWord& w) const;

  // g acts on values only; colors ride along with their letter.
  ColoredWord apply(const Permutation& g) const;
  bool fixed_by(const Permutation& g) const;

  std::string to_string() const;  // "3.0 1.2" (value.color)
  auto operator<=>(const ColoredWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace injwords
