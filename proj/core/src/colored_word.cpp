#include "injwords/colored_word.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace injwords {

ColoredWord::ColoredWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::set<int> values;
  for (const Letter& l : letters_) {
    if (l.value < 1) throw std::invalid_argument("letter value must be >= 1");
    if (l.color < 0) throw std::invalid_argument("letter color must be >= 0");
    if (!values.insert(l.value).second)
      throw std::invalid_argument("injective word has distinct values");
  }
}

bool ColoredWord::contains_value(int v) const {
  for (const Letter& l : letters_)
    if (l.value == v) return true;
  return false;
}

bool ColoredWord::is_subword_of(const ColoredWord& w) const {
  std::size_t i = 0;
  for (const Letter& l : w.letters_) {
    if (i < letters_.size() && letters_[i] == l) ++i;
  }
  return i == letters_.size();
}

ColoredWord ColoredWord::apply(const Permutation& g) const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back({g(l.value), l.color});
  return ColoredWord(std::move(out));
}

bool ColoredWord::fixed_by(const Permutation& g) const {
  for (const Letter& l : letters_)
    if (g(l.value) != l.value) return false;
  return true;
}

std::string ColoredWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i].value << '.' << letters_[i].color;
  }
  return os.str();
}

}  // namespace injwords
