#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "injwords/ints.hpp"
#include "injwords/partition.hpp"
#include "injwords/rank_set.hpp"

namespace injwords {

// Standard Young tableau in English notation: rows_[0] is the top row,
// rows increase left to right, columns increase top to bottom, entries
// are exactly 1..n.
class StandardTableau {
 public:
  StandardTableau() = default;
  // Throws std::invalid_argument unless rows form a standard tableau.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  int n() const { return n_; }
  Partition shape() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // (row, col), 0-based. Entry must be in [n].
  std::pair<int, int> position_of(int entry) const;

  // Des(Q) = { i in [n-1] : i+1 sits in a strictly lower row than i }
  RankSet descent_set() const;

  std::string to_string() const;  // rows joined by "/": "13/2"
  bool operator==(const StandardTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> pos_;  // pos_[e-1] = (row, col)
  int n_ = 0;
};

// Standard tableau with a color in [0, r) attached to each entry.
class ColoredTableau {
 public:
  ColoredTableau() = default;
  // colors[e-1] is the color of entry e. Throws std::invalid_argument
  // on size mismatch or colors outside [0, r).
  ColoredTableau(StandardTableau tableau, std::vector<int> colors, int r);

  const StandardTableau& tableau() const { return tableau_; }
  int n() const { return tableau_.n(); }
  int r() const { return r_; }
  int color(int entry) const { return colors_[static_cast<std::size_t>(entry - 1)]; }
  const std::vector<int>& colors() const { return colors_; }

  // Length of the longest prefix 1..j lying in the first row with all
  // colors zero. This is the quantity rank selections are tested against.
  int zero_prefix_length() const;

  std::string to_string() const;  // "13/2|0,1,0"
  bool operator==(const ColoredTableau&) const = default;

 private:
  StandardTableau tableau_;
  std::vector<int> colors_;
  int r_ = 1;
};

// All standard tableaux of the given shape. Order: entries 1..n are
// placed in increasing order, and at each step candidate rows are tried
// top to bottom; the resulting sequence is deterministic.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

// All colorings of each standard tableau of the shape, streamed.
// Tableaux follow enumerate_syt order; for a fixed tableau the color
// vectors (c_1,...,c_n) follow base-r odometer order with c_1 most
// significant.
void for_each_colored_syt(const Partition& shape, int r,
                          const std::function<void(const ColoredTableau&)>& fn);

// Number of standard tableaux of the shape (hook length formula).
Int f_lambda(const Partition& shape);

// Number of standard tableaux of the shape whose entries 1..j all lie
// in the first row. Zero when j exceeds the first part.
Int f_lambda_first_row(const Partition& shape, int j);

}  // namespace injwords
