#include "injwords/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace injwords {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of [n]");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(images_.size());
  for (int i = 1; i <= n(); ++i) img[static_cast<std::size_t>(i - 1)] = (*this)(o(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 1; i <= n(); ++i) img[static_cast<std::size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(img));
}

RankSet Permutation::descent_set() const {
  std::vector<int> des;
  for (int i = 1; i < n(); ++i)
    if ((*this)(i) > (*this)(i + 1)) des.push_back(i);
  return RankSet(std::move(des));
}

Int Permutation::inversions() const {
  Int inv = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) os << ',';
    os << (*this)(i);
  }
  os << ']';
  return os.str();
}

namespace {

// Prefix DFS over one-line notation. At position i > 1 the relation to
// the previous entry is forced by membership of i-1 in the target
// descent set, which prunes to near output-linear work. Candidates are
// tried ascending, so the emitted order is lexicographic.
void descent_class_rec(int n, const RankSet& s, std::vector<int>& prefix,
                       std::vector<bool>& used,
                       const std::function<void(const Permutation&)>& fn) {
  const int i = static_cast<int>(prefix.size());
  if (i == n) {
    fn(Permutation(prefix));
    return;
  }
  const int prev = i == 0 ? 0 : prefix.back();
  const bool want_descent = i > 0 && s.contains(i);
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v - 1)]) continue;
    if (i > 0 && (want_descent ? v > prev : v < prev)) continue;
    used[static_cast<std::size_t>(v - 1)] = true;
    prefix.push_back(v);
    descent_class_rec(n, s, prefix, used, fn);
    prefix.pop_back();
    used[static_cast<std::size_t>(v - 1)] = false;
  }
}

}  // namespace

void for_each_in_descent_class(int n, const RankSet& s,
                               const std::function<void(const Permutation&)>& fn) {
  if (!s.within(n - 1)) throw std::invalid_argument("descent set not within [n-1]");
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  descent_class_rec(n, s, prefix, used, fn);
}

std::vector<Permutation> enumerate_descent_class(int n, const RankSet& s) {
  std::vector<Permutation> out;
  for_each_in_descent_class(n, s, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

Permutation w_max(int n, const RankSet& s) {
  if (!s.within(n - 1)) throw std::invalid_argument("descent set not within [n-1]");
  std::vector<int> bounds = s.elements();
  bounds.push_back(n);
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(n));
  int next = n;  // largest value not yet assigned
  int start = 1;
  for (int b : bounds) {
    const int len = b - start + 1;
    for (int v = next - len + 1; v <= next; ++v) img.push_back(v);
    next -= len;
    start = b + 1;
  }
  return Permutation(std::move(img));
}

Int boolean_chain_count(int n, const RankSet& t) {
  if (!t.within(n)) throw std::invalid_argument("rank set not within [n]");
  Int count = 1;
  int below = 0;
  for (int x : t.elements()) {
    count *= binomial(n - below, x - below);
    below = x;
  }
  return count;
}

Int descent_count(int n, const RankSet& s) {
  Int total = 0;
  for_each_subset(s, [&](const RankSet& t) {
    const Int a = boolean_chain_count(n, t);
    if ((s.size() - t.size()) % 2 == 0)
      total += a;
    else
      total -= a;
  });
  return total;
}

}  // namespace injwords
