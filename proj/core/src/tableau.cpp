#include "injwords/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace injwords {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) n_ += static_cast<int>(row.size());
  pos_.assign(static_cast<std::size_t>(n_), {-1, -1});
  for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
    const auto& row = rows_[ri];
    if (row.empty()) throw std::invalid_argument("empty tableau row");
    if (ri > 0 && row.size() > rows_[ri - 1].size())
      throw std::invalid_argument("tableau shape not a partition");
    for (std::size_t ci = 0; ci < row.size(); ++ci) {
      const int e = row[ci];
      if (e < 1 || e > n_) throw std::invalid_argument("tableau entry out of range");
      if (pos_[static_cast<std::size_t>(e - 1)].first >= 0)
        throw std::invalid_argument("repeated tableau entry");
      pos_[static_cast<std::size_t>(e - 1)] = {static_cast<int>(ri), static_cast<int>(ci)};
      if (ci > 0 && row[ci - 1] >= e)
        throw std::invalid_argument("tableau row not increasing");
      if (ri > 0 && rows_[ri - 1][ci] >= e)
        throw std::invalid_argument("tableau column not increasing");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::pair<int, int> StandardTableau::position_of(int entry) const {
  if (entry < 1 || entry > n_) throw std::out_of_range("tableau entry out of range");
  return pos_[static_cast<std::size_t>(entry - 1)];
}

RankSet StandardTableau::descent_set() const {
  std::vector<int> des;
  for (int i = 1; i < n_; ++i)
    if (position_of(i + 1).first > position_of(i).first) des.push_back(i);
  return RankSet(std::move(des));
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
    if (ri) os << '/';
    for (std::size_t ci = 0; ci < rows_[ri].size(); ++ci) {
      if (ci) os << ' ';
      os << rows_[ri][ci];
    }
  }
  return os.str();
}

ColoredTableau::ColoredTableau(StandardTableau tableau, std::vector<int> colors, int r)
    : tableau_(std::move(tableau)), colors_(std::move(colors)), r_(r) {
  if (r < 1) throw std::invalid_argument("color count must be >= 1");
  if (static_cast<int>(colors_.size()) != tableau_.n())
    throw std::invalid_argument("one color per entry required");
  for (int c : colors_)
    if (c < 0 || c >= r) throw std::invalid_argument("color out of range");
}

int ColoredTableau::zero_prefix_length() const {
  int j = 0;
  while (j < n()) {
    const auto [row, col] = tableau_.position_of(j + 1);
    if (row != 0 || color(j + 1) != 0) break;
    ++j;
  }
  return j;
}

std::string ColoredTableau::to_string() const {
  std::ostringstream os;
  os << tableau_.to_string() << '|';
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i) os << ',';
    os << colors_[i];
  }
  return os.str();
}

namespace {

// Entries 1..n are placed in increasing order; a new entry may extend
// any row whose length currently equals the next row's length + 1 slot
// constraint, i.e. row lengths stay a partition. Rows are tried top to
// bottom.
void enumerate_syt_rec(const Partition& shape, int next, int n,
                       std::vector<std::vector<int>>& rows,
                       std::vector<StandardTableau>& out) {
  if (next > n) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t ri = 0; ri < rows.size() + 1 && ri < static_cast<std::size_t>(shape.rows());
       ++ri) {
    const int len = ri < rows.size() ? static_cast<int>(rows[ri].size()) : 0;
    if (len >= shape.part(static_cast<int>(ri))) continue;
    const int above = ri == 0 ? INT32_MAX : static_cast<int>(rows[ri - 1].size());
    if (len >= above) continue;  // must stay weakly decreasing
    if (ri == rows.size()) rows.emplace_back();
    rows[ri].push_back(next);
    enumerate_syt_rec(shape, next + 1, n, rows, out);
    rows[ri].pop_back();
    if (rows.back().empty()) rows.pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows;
  enumerate_syt_rec(shape, 1, shape.n(), rows, out);
  return out;
}

void for_each_colored_syt(const Partition& shape, int r,
                          const std::function<void(const ColoredTableau&)>& fn) {
  if (r < 1) throw std::invalid_argument("color count must be >= 1");
  const int n = shape.n();
  for (const auto& t : enumerate_syt(shape)) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
      fn(ColoredTableau(t, colors, r));
      // odometer with c_1 most significant: increment from the right
      int i = n - 1;
      while (i >= 0 && colors[static_cast<std::size_t>(i)] == r - 1) {
        colors[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++colors[static_cast<std::size_t>(i)];
    }
  }
}

Int f_lambda(const Partition& shape) {
  const int n = shape.n();
  if (n == 0) return 1;
  // hook lengths: h(i,j) = (lambda_i - j) + (lambda'_j - i) - 1
  std::vector<int> conj(static_cast<std::size_t>(shape.part(0)), 0);
  for (int i = 0; i < shape.rows(); ++i)
    for (int j = 0; j < shape.part(i); ++j) ++conj[static_cast<std::size_t>(j)];
  Int denom = 1;
  for (int i = 0; i < shape.rows(); ++i)
    for (int j = 0; j < shape.part(i); ++j)
      denom *= (shape.part(i) - j) + (conj[static_cast<std::size_t>(j)] - i) - 1;
  return factorial(n) / denom;
}

namespace {

Int first_row_paths(const std::vector<int>& mu, int j,
                    std::map<std::vector<int>, Int>& memo) {
  if (mu.empty()) return j == 0 ? 1 : 0;
  if (mu.size() == 1 && mu[0] == j) return 1;
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  Int total = 0;
  // peel one removable corner; the first j cells of row one are frozen
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const bool corner = (i + 1 == mu.size()) || (mu[i] > mu[i + 1]);
    if (!corner) continue;
    if (i == 0 && mu[0] - 1 < j) continue;
    std::vector<int> next = mu;
    if (--next[i] == 0) next.pop_back();
    total += first_row_paths(next, j, memo);
  }
  memo.emplace(mu, total);
  return total;
}

}  // namespace

Int f_lambda_first_row(const Partition& shape, int j) {
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  if (j > shape.part(0)) return 0;
  if (shape.n() == 0) return 1;  // j == 0 forced by the bound above
  std::map<std::vector<int>, Int> memo;
  return first_row_paths(shape.parts(), j, memo);
}

}  // namespace injwords
