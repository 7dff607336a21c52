#include "injwords/class_function.hpp"

#include <stdexcept>

namespace injwords {

ClassFunction::ClassFunction(int n)
    : values_(partitions_of(n).size()), n_(n) {}

ClassFunction ClassFunction::trivial(int n) {
  ClassFunction f(n);
  for (auto& v : f.values_) v = 1;
  return f;
}

const Int& ClassFunction::value(const Partition& cycle_type) const {
  return values_[static_cast<std::size_t>(partition_index(n_, cycle_type))];
}

void ClassFunction::set_value(const Partition& cycle_type, Int v) {
  values_[static_cast<std::size_t>(partition_index(n_, cycle_type))] = std::move(v);
}

const Int& ClassFunction::dimension() const {
  // (1^n) is last in canonical order
  return values_.back();
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (n_ != o.n_) throw std::invalid_argument("class function size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (n_ != o.n_) throw std::invalid_argument("class function size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Int& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

}  // namespace injwords
