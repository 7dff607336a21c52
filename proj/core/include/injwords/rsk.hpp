#pragma once

#include <utility>

#include "injwords/tableau.hpp"
#include "injwords/tau.hpp"

namespace injwords {

// Colored Robinson-Schensted correspondence: row insertion of the base
// permutation builds (P, Q); entry i of the recording tableau Q carries
// the color of position i of u. The pair (P plain, Q colored) is a
// bijection from colored permutations to pairs of same-shape tableaux,
// and tau(w, u) = tau(w, Q) for every w.
std::pair<StandardTableau, ColoredTableau> colored_rsk(const ColoredPermutation& u);

}  // namespace injwords
