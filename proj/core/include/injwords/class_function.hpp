#pragma once

#include <vector>

#include "injwords/ints.hpp"
#include "injwords/partition.hpp"

namespace injwords {

// Integer-valued class function on S_n, stored as one value per
// conjugacy class in the canonical partition order of partitions_of(n).
class ClassFunction {
 public:
  ClassFunction() = default;  // n = 0: the empty group's single class
  explicit ClassFunction(int n);  // identically zero
  static ClassFunction trivial(int n);

  int n() const { return n_; }
  int class_count() const { return static_cast<int>(values_.size()); }

  const Int& value(const Partition& cycle_type) const;
  void set_value(const Partition& cycle_type, Int v);
  const std::vector<Int>& values() const { return values_; }
  Int& value_at(int class_index) { return values_[static_cast<std::size_t>(class_index)]; }
  const Int& value_at(int class_index) const {
    return values_[static_cast<std::size_t>(class_index)];
  }

  // Value on the identity class (1^n).
  const Int& dimension() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Int& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Int& c, ClassFunction f) { return f *= c; }

  bool operator==(const ClassFunction&) const = default;

 private:
  std::vector<Int> values_ = std::vector<Int>(1);  // n = 0: one class, value 0
  int n_ = 0;
};

}  // namespace injwords
