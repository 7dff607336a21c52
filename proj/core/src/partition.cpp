#include "injwords/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace injwords {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition part must be >= 1");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "-") return Partition{};
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition token: " + tok);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& cur,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    emit_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::mutex cache_mu;
std::map<int, std::vector<Partition>> list_cache;
std::map<int, std::map<Partition, int>> index_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n < 0");
  std::lock_guard<std::mutex> lock(cache_mu);
  auto it = list_cache.find(n);
  if (it == list_cache.end()) {
    std::vector<Partition> out;
    std::vector<int> cur;
    emit_partitions(n, n, cur, out);
    it = list_cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

int partition_index(int n, const Partition& p) {
  if (p.n() != n) throw std::invalid_argument("partition_index: wrong weight");
  const auto& list = partitions_of(n);
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& idx = index_cache[n];
  if (idx.empty()) {
    for (std::size_t i = 0; i < list.size(); ++i) idx.emplace(list[i], static_cast<int>(i));
  }
  auto it = idx.find(p);
  if (it == idx.end()) throw std::invalid_argument("partition_index: not a partition of n");
  return it->second;
}

}  // namespace injwords
