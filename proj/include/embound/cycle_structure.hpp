#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "embound/errors.hpp"

namespace embound {

/// Cycle type of a permutation on `degree` points: the nontrivial cycle
/// lengths (each >= 2) plus the number of fixed points.
class CycleStructure {
 public:
  CycleStructure() = default;
  CycleStructure(std::vector<std::uint64_t> cycles, std::uint64_t degree) : cycles_(std::move(cycles)), degree_(degree) {
    std::uint64_t moved = 0;
    for (auto len : cycles_) {
      if (len < 2) throw DomainError("cycle lengths must be >= 2");
      moved += len;
    }
    if (moved > degree_) {
      throw DomainError("cycles move " + std::to_string(moved) + " points but degree is " + std::to_string(degree_));
    }
    fixed_points_ = degree_ - moved;
  }

  const std::vector<std::uint64_t>& cycles() const { return cycles_; }
  std::uint64_t fixed_points() const { return fixed_points_; }
  std::uint64_t degree() const { return degree_; }
  std::uint64_t moved_points() const { return degree_ - fixed_points_; }

 private:
  std::vector<std::uint64_t> cycles_;
  std::uint64_t fixed_points_ = 0;
  std::uint64_t degree_ = 0;
};

}  // namespace embound
