#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "injwords/ints.hpp"

namespace injwords {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;  // the empty partition of 0
  // Throws std::invalid_argument unless parts are weakly decreasing and >= 1.
  explicit Partition(std::vector<int> parts);

  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  // 0-based; returns 0 beyond the last row.
  int part(int i) const {
    return i >= 0 && i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;
  // Lexicographic on the parts vector; used only for container ordering.
  std::strong_ordering operator<=>(const Partition& o) const {
    return parts_ <=> o.parts_;
  }

  // "3,1,1"; the empty partition renders as "-".
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Canonical display order: reverse-lexicographic, (n) first, (1^n) last.
struct PartitionCanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return b.parts() < a.parts();
  }
};

// Multiplicities of irreducibles, keyed by partition in canonical order.
using MultiplicityMap = std::map<Partition, Int, PartitionCanonicalOrder>;

// All partitions of n in canonical order. Cached; the reference stays
// valid for the program lifetime. Thread-safe.
const std::vector<Partition>& partitions_of(int n);

// Index of p within partitions_of(n). Throws std::invalid_argument if
// p is not a partition of n.
int partition_index(int n, const Partition& p);

}  // namespace injwords
