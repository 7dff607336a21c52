#include "injwords/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "injwords/tableau.hpp"

namespace injwords {

CycleType cycle_type(const Permutation& w) {
  std::vector<bool> seen(static_cast<std::size_t>(w.n()), false);
  std::vector<int> lens;
  for (int i = 1; i <= w.n(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = w(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return CycleType(Partition(std::move(lens)));
}

Int class_size(const CycleType& t) {
  const auto& parts = t.partition().parts();
  Int z = 1;
  int run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    z *= parts[i];
    ++run;
    if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return factorial(t.n()) / z;
}

Permutation class_representative(const CycleType& t) {
  std::vector<int> img(static_cast<std::size_t>(t.n()));
  int start = 1;
  for (int len : t.partition().parts()) {
    for (int i = start; i < start + len - 1; ++i) img[static_cast<std::size_t>(i - 1)] = i + 1;
    img[static_cast<std::size_t>(start + len - 2)] = start;
    start += len;
  }
  return Permutation(std::move(img));
}

namespace {

// Murnaghan-Nakayama on beta-sets. Removing a border strip of size t
// from lambda is removing t from one element of the beta-set
// { lambda_i + (L-1-i) }; the strip height parity is the number of
// beta elements strictly between the old and new values.
std::vector<int> to_beta(const std::vector<int>& lambda) {
  const int L = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < L; ++i)
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (L - 1 - i);
  return beta;
}

std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int L = static_cast<int>(beta.size());
  std::vector<int> lambda;
  for (int i = 0; i < L; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (L - 1 - i);
    if (part < 0) throw std::logic_error("beta-set does not encode a partition");
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

// chi^lambda evaluated against the suffix mu[idx..]. memo is keyed by
// lambda alone: for a fixed mu the remaining weight determines idx.
Int mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t idx,
           std::map<std::vector<int>, Int>* memo) {
  if (lambda.empty()) return 1;
  if (memo) {
    auto it = memo->find(lambda);
    if (it != memo->end()) return it->second;
  }
  const int t = mu[idx];
  const auto beta = to_beta(lambda);
  Int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < t) continue;
    const int target = b - t;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < b) ++between;
    }
    if (occupied) continue;
    auto next_beta = beta;
    next_beta[i] = target;
    const Int sub = mn_rec(from_beta(std::move(next_beta)), mu, idx + 1, memo);
    if (between % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  if (memo) memo->emplace(lambda, total);
  return total;
}

std::mutex table_mu;
std::map<int, std::unique_ptr<CharacterTable>> table_cache;

}  // namespace

const CharacterTable& character_table(int n) {
  if (n < 0) throw std::invalid_argument("character_table: n < 0");
  {
    std::lock_guard<std::mutex> lock(table_mu);
    auto it = table_cache.find(n);
    if (it != table_cache.end()) return *it->second;
  }
  const auto& lambdas = partitions_of(n);
  auto table = std::make_unique<CharacterTable>();
  table->n = n;
  table->values.resize(lambdas.size());
  for (std::size_t l = 0; l < lambdas.size(); ++l)
    table->values[l].resize(lambdas.size());
  for (std::size_t m = 0; m < lambdas.size(); ++m) {
    std::map<std::vector<int>, Int> memo;
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
      // memo cannot be shared across columns, only across lambdas of one column
      table->values[l][m] = mn_rec(lambdas[l].parts(), lambdas[m].parts(), 0, &memo);
    }
  }
  std::lock_guard<std::mutex> lock(table_mu);
  auto it = table_cache.find(n);
  if (it == table_cache.end()) it = table_cache.emplace(n, std::move(table)).first;
  return *it->second;
}

Int character_value_direct(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("weight mismatch");
  return mn_rec(lambda.parts(), mu.parts(), 0, nullptr);
}

ClassFunction irreducible_character(const Partition& lambda) {
  const int n = lambda.n();
  const auto& table = character_table(n);
  const int l = partition_index(n, lambda);
  ClassFunction f(n);
  for (int m = 0; m < static_cast<int>(table.values.size()); ++m)
    f.value_at(m) = table.values[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
  return f;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("inner_product: size mismatch");
  const int n = f.n();
  const auto& mus = partitions_of(n);
  Int sum = 0;
  for (std::size_t m = 0; m < mus.size(); ++m)
    sum += class_size(CycleType(mus[m])) * f.value_at(static_cast<int>(m)) *
           g.value_at(static_cast<int>(m));
  return Rational(sum, factorial(n));
}

MultiplicityMap decompose(const ClassFunction& f) {
  const int n = f.n();
  const auto& lambdas = partitions_of(n);
  const auto& mus = lambdas;
  const auto& table = character_table(n);
  const Int nfact = factorial(n);
  MultiplicityMap out;
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    Int sum = 0;
    for (std::size_t m = 0; m < mus.size(); ++m)
      sum += class_size(CycleType(mus[m])) * f.value_at(static_cast<int>(m)) *
             table.values[l][m];
    if (sum % nfact != 0)
      throw std::domain_error("class function is not a virtual character");
    const Int mult = sum / nfact;
    if (mult != 0) out.emplace(lambdas[l], mult);
  }
  return out;
}

ClassFunction reconstruct(int n, const MultiplicityMap& m) {
  ClassFunction f(n);
  for (const auto& [lambda, mult] : m) {
    ClassFunction chi = irreducible_character(lambda);
    chi *= mult;
    f += chi;
  }
  return f;
}

ClassFunction regular_character(int n) {
  ClassFunction f(n);
  f.set_value(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), factorial(n));
  return f;
}

}  // namespace injwords
