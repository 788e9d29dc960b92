#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "occ/error.hpp"

namespace occ {

// Flat row-major storage for a growing set of equal-dimension points.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}

  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::size_t dim() const { return dim_; }

  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

  void push_back(std::span<const double> x) {
    if (dim_ == 0) {
      if (x.empty()) throw Error("points must have at least one coordinate");
      dim_ = x.size();
    } else if (x.size() != dim_) {
      throw Error("dimension mismatch: expected " + std::to_string(dim_) +
                  " coordinates, got " + std::to_string(x.size()));
    }
    data_.insert(data_.end(), x.begin(), x.end());
  }

  const std::vector<double>& raw() const { return data_; }

 private:
  std::vector<double> data_;
  std::size_t dim_ = 0;
};

}  // namespace occ
