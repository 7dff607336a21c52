#include "injwords/tau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace injwords {

ColoredPermutation::ColoredPermutation(Permutation base, std::vector<int> colors, int r)
    : base_(std::move(base)), colors_(std::move(colors)), r_(r) {
  if (r < 1) throw std::invalid_argument("color count must be >= 1");
  if (static_cast<int>(colors_.size()) != base_.n())
    throw std::invalid_argument("one color per position required");
  for (int c : colors_)
    if (c < 0 || c >= r) throw std::invalid_argument("color out of range");
}

int ColoredPermutation::zero_prefix_length() const {
  int p = 0;
  while (p < n() && color(p + 1) == 0 && (p == 0 || base_(p + 1) > base_(p))) ++p;
  return p;
}

std::string ColoredPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) os << ',';
    os << base_(i) << '.' << color(i);
  }
  os << ']';
  return os.str();
}

void for_each_colored_permutation(int n, int r,
                                  const std::function<void(const ColoredPermutation&)>& fn) {
  if (n < 0 || r < 1) throw std::invalid_argument("bad colored permutation parameters");
  std::vector<int> img;
  for (int i = 1; i <= n; ++i) img.push_back(i);
  do {
    const Permutation base(img);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
      fn(ColoredPermutation(base, colors, r));
      int i = n - 1;
      while (i >= 0 && colors[static_cast<std::size_t>(i)] == r - 1) {
        colors[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++colors[static_cast<std::size_t>(i)];
    }
  } while (std::next_permutation(img.begin(), img.end()));
}

namespace {

// Largest position where w differs from the maximal representative of
// its descent class; 0 when they coincide. Condition (a) for level i is
// then exactly t_i >= this.
int disagreement_bound(const Permutation& w) {
  const Permutation wm = w_max(w.n(), w.descent_set());
  for (int x = w.n(); x >= 1; --x)
    if (w(x) != wm(x)) return x;
  return 0;
}

// t_i = s_{k-i+1} with sentinels s_{k+1} = n, s_0 = 0.
int level_rank(const RankSet& s, int n, int i) {
  const int k = s.size();
  const int idx = k - i + 1;  // 1-based into s
  if (idx == k + 1) return n;
  if (idx == 0) return 0;
  return s.elements()[static_cast<std::size_t>(idx - 1)];
}

// tau = largest i in {0..k+1} with t_i >= bound; t_i is decreasing in i,
// so the qualifying set is {0..tau}.
int tau_from_bound(const RankSet& s, int n, int bound) {
  const int k = s.size();
  for (int i = k + 1; i >= 1; --i)
    if (level_rank(s, n, i) >= bound) return i;
  return 0;
}

}  // namespace

int tau_statistic(const Permutation& w, const ColoredTableau& q) {
  const int n = w.n();
  if (q.n() != n) throw std::invalid_argument("tableau size mismatch");
  const int bound = std::max(disagreement_bound(w), n - q.zero_prefix_length());
  return tau_from_bound(w.descent_set(), n, bound);
}

std::vector<int> tau_qualifying_set(const Permutation& w, const ColoredTableau& q) {
  // checks the definition literally; tests compare with {0..tau}
  const int n = w.n();
  const RankSet s = w.descent_set();
  const Permutation wm = w_max(n, s);
  std::vector<int> good;
  for (int i = 0; i <= s.size() + 1; ++i) {
    const int t = level_rank(s, n, i);
    bool ok = true;
    for (int x = t + 1; x <= n && ok; ++x) ok = w(x) == wm(x);
    for (int e = 1; e <= n - t && ok; ++e)
      ok = q.tableau().position_of(e).first == 0 && q.color(e) == 0;
    if (ok) good.push_back(i);
  }
  return good;
}

int tau_statistic_descent_form(const Permutation& w, const ColoredTableau& q) {
  const int n = w.n();
  if (q.n() != n) throw std::invalid_argument("tableau size mismatch");
  const RankSet s = w.descent_set();
  const int bound_a = disagreement_bound(w);
  const RankSet qdes = q.tableau().descent_set();
  const int min_descent = qdes.empty() ? n + 1 : qdes.elements().front();
  int zero_colors = 0;
  while (zero_colors < n && q.color(zero_colors + 1) == 0) ++zero_colors;
  for (int i = s.size() + 1; i >= 1; --i) {
    const int t = level_rank(s, n, i);
    if (t < bound_a) continue;
    if (min_descent < n - t) continue;  // a descent inside the frozen prefix
    if (zero_colors < n - t) continue;
    return i;
  }
  return 0;
}

int tau_statistic(const Permutation& w, const ColoredPermutation& u) {
  const int n = w.n();
  if (u.n() != n) throw std::invalid_argument("colored permutation size mismatch");
  const int bound = std::max(disagreement_bound(w), n - u.zero_prefix_length());
  return tau_from_bound(w.descent_set(), n, bound);
}

namespace {

// Parity counting shared by tableaux and permutations: tau depends on
// the second argument only through its zero prefix length, so the inner
// object is reduced to a histogram over prefix lengths first.
std::pair<Int, Int> parity_count_from_histogram(int n, const RankSet& s,
                                                const std::vector<Int>& prefix_histogram) {
  Int odd = 0, even = 0;
  for_each_in_descent_class(n, s, [&](const Permutation& w) {
    const int bound_a = disagreement_bound(w);
    for (int j = 0; j <= n; ++j) {
      const Int& count = prefix_histogram[static_cast<std::size_t>(j)];
      if (count == 0) continue;
      const int tau = tau_from_bound(s, n, std::max(bound_a, n - j));
      (tau % 2 == 1 ? odd : even) += count;
    }
  });
  return {odd, even};
}

}  // namespace

std::pair<Int, Int> tau_parity_count(int n, int r, const RankSet& s, const Partition& shape) {
  if (shape.n() != n) throw std::invalid_argument("shape weight mismatch");
  if (!s.within(n - 1)) throw std::invalid_argument("descent set not within [n-1]");
  std::vector<Int> histogram(static_cast<std::size_t>(n) + 1);
  for_each_colored_syt(shape, r, [&](const ColoredTableau& q) {
    ++histogram[static_cast<std::size_t>(q.zero_prefix_length())];
  });
  return parity_count_from_histogram(n, s, histogram);
}

std::pair<Int, Int> tau_parity_count_permutations(int n, int r, const RankSet& s) {
  if (!s.within(n - 1)) throw std::invalid_argument("descent set not within [n-1]");
  std::vector<Int> histogram(static_cast<std::size_t>(n) + 1);
  for_each_colored_permutation(n, r, [&](const ColoredPermutation& u) {
    ++histogram[static_cast<std::size_t>(u.zero_prefix_length())];
  });
  return parity_count_from_histogram(n, s, histogram);
}

MultiplicityMap beta_multiplicities_tau(int n, int r, const RankSet& s) {
  if (!s.within(n)) throw std::invalid_argument("rank set not within [n]");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  const bool with_top = s.contains(n);
  const RankSet interior = s.without(n);
  MultiplicityMap out;
  for (const auto& lambda : partitions_of(n)) {
    const auto [odd, even] = tau_parity_count(n, r, interior, lambda);
    const Int mult = with_top ? even : odd;
    if (mult != 0) out.emplace(lambda, mult);
  }
  return out;
}

Int derangement_number(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("bad derangement parameters");
  Int total = (n % 2 == 0) ? 1 : -1;
  for (int i = 1; i <= n; ++i) {
    Int term = int_pow(Int(r), i) * falling_factorial(n, i);  // n!/(n-i)!
    if ((n - i) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

Int even_zero_prefix_count(int n, int r) {
  Int count = 0;
  for_each_colored_permutation(n, r, [&](const ColoredPermutation& u) {
    if (u.zero_prefix_length() % 2 == 0) ++count;
  });
  return count;
}

Int sign_multiplicity_closed_form(int n, int r, const RankSet& s) {
  if (!s.within(n)) throw std::invalid_argument("rank set not within [n]");
  if (n == 0) return 1;
  const RankSet interior = s.without(n);
  // rank 0 is the bottom of every chain, so the factor below rank n is
  // unconditionally available when n == 1
  Int lower = 0;
  if (n == 1 || interior.contains(n - 1))
    lower = int_pow(Int(r), n - 1) * descent_count(n - 1, interior.without(n - 1));
  if (!s.contains(n)) return lower;
  return int_pow(Int(r), n) * descent_count(n, interior) - lower;
}

}  // namespace injwords
