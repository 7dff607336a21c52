#include "injwords/table.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "injwords/characters.hpp"
#include "injwords/parallel.hpp"
#include "injwords/poset.hpp"
#include "injwords/rank_selection.hpp"
#include "injwords/tau.hpp"

namespace injwords {

std::string method_name(Method m) {
  switch (m) {
    case Method::tau: return "tau";
    case Method::closed: return "closed";
    case Method::oracle: return "oracle";
  }
  throw std::logic_error("unreachable");
}

Method parse_method(const std::string& name) {
  if (name == "tau") return Method::tau;
  if (name == "closed") return Method::closed;
  if (name == "oracle") return Method::oracle;
  throw std::invalid_argument("unknown method: " + name);
}

namespace {

BetaRow make_row(RankSet s, MultiplicityMap m) {
  BetaRow row{std::move(s), std::move(m), 0};
  row.dimension = multiplicity_dimension(row.multiplicities);
  return row;
}

BetaTable oracle_table(int n, int r, const std::vector<RankSet>& selections,
                       const Int& budget, int jobs) {
  const InjectiveWordPoset poset(n, r, budget);
  // stage 1: every alpha needed by any row, each computed once
  std::map<std::uint32_t, std::size_t> alpha_slot;
  for (const auto& s : selections)
    for_each_subset(s, [&](const RankSet& t) { alpha_slot.emplace(t.to_mask(), 0); });
  std::vector<std::uint32_t> masks;
  masks.reserve(alpha_slot.size());
  for (auto& [mask, slot] : alpha_slot) {
    slot = masks.size();
    masks.push_back(mask);
  }
  std::vector<std::optional<ClassFunction>> alphas(masks.size());
  parallel_for_index(masks.size(), jobs, [&](std::size_t i) {
    alphas[i] = alpha_character(poset, RankSet::from_mask(masks[i]));
  });
  // stage 2: rows are independent inclusion-exclusions over stage 1
  BetaTable table{n, r, Method::oracle, std::vector<BetaRow>(selections.size())};
  parallel_for_index(selections.size(), jobs, [&](std::size_t i) {
    const RankSet& s = selections[i];
    ClassFunction beta(n);
    for_each_subset(s, [&](const RankSet& t) {
      const ClassFunction& a = *alphas[alpha_slot.at(t.to_mask())];
      if ((s.size() - t.size()) % 2 == 0)
        beta += a;
      else
        beta -= a;
    });
    table.rows[i] = make_row(s, decompose(beta));
  });
  return table;
}

}  // namespace

BetaTable compute_beta_table(int n, int r, const std::vector<RankSet>& selections,
                             Method method, const Int& budget, int jobs) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  for (const auto& s : selections)
    if (!s.within(n)) throw std::invalid_argument("rank set " + s.to_string() + " not within [n]");
  if (method == Method::oracle) return oracle_table(n, r, selections, budget, jobs);
  character_table(n);  // fill the shared cache before going parallel
  BetaTable table{n, r, method, std::vector<BetaRow>(selections.size())};
  parallel_for_index(selections.size(), jobs, [&](std::size_t i) {
    const RankSet& s = selections[i];
    MultiplicityMap m = method == Method::tau ? beta_multiplicities_tau(n, r, s)
                                              : beta_multiplicities_closed_form(n, r, s);
    table.rows[i] = make_row(s, std::move(m));
  });
  return table;
}

BetaTable compute_beta_table_full(int n, int r, Method method, const Int& budget, int jobs) {
  return compute_beta_table(n, r, all_rank_sets(n), method, budget, jobs);
}

}  // namespace injwords
