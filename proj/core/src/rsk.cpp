#include "injwords/rsk.hpp"

#include <algorithm>

namespace injwords {

std::pair<StandardTableau, ColoredTableau> colored_rsk(const ColoredPermutation& u) {
  std::vector<std::vector<int>> p_rows, q_rows;
  for (int i = 1; i <= u.n(); ++i) {
    int x = u.base()(i);
    std::size_t row = 0;
    while (true) {
      if (row == p_rows.size()) {
        p_rows.emplace_back();
        q_rows.emplace_back();
      }
      auto& pr = p_rows[row];
      auto it = std::upper_bound(pr.begin(), pr.end(), x);
      if (it == pr.end()) {
        pr.push_back(x);
        q_rows[row].push_back(i);
        break;
      }
      std::swap(x, *it);  // bump
      ++row;
    }
  }
  StandardTableau p(std::move(p_rows));
  StandardTableau q(std::move(q_rows));
  return {std::move(p), ColoredTableau(std::move(q), u.colors(), u.r())};
}

}  // namespace injwords
