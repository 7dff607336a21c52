#pragma once

#include <string>
#include <vector>

#include "injwords/ints.hpp"
#include "injwords/partition.hpp"
#include "injwords/rank_set.hpp"

namespace injwords {

// Route used to produce a multiplicity table.
enum class Method { tau, closed, oracle };

std::string method_name(Method m);
// Throws std::invalid_argument on unknown names.
Method parse_method(const std::string& name);

struct BetaRow {
  RankSet s;
  MultiplicityMap multiplicities;
  Int dimension;  // sum of mult * f_lambda
  bool operator==(const BetaRow&) const = default;
};

// Multiplicity tables of the rank-selected homology representations,
// one row per requested rank set, rows in the given order.
struct BetaTable {
  int n = 0;
  int r = 1;
  Method method = Method::tau;
  std::vector<BetaRow> rows;
  bool operator==(const BetaTable&) const = default;
};

// Computes one row per rank set (each within [n]; n itself allowed).
// jobs > 1 parallelizes across independent units; output is identical
// for any jobs value. budget bounds the poset size for the oracle
// method (resource_error past it) and is ignored by the closed and tau
// routes, which enumerate nothing poset-sized.
BetaTable compute_beta_table(int n, int r, const std::vector<RankSet>& selections,
                             Method method, const Int& budget, int jobs);

// Convenience: all 2^n rank sets in mask order.
BetaTable compute_beta_table_full(int n, int r, Method method, const Int& budget, int jobs);

}  // namespace injwords
