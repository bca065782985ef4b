#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "embound/exactmath.hpp"

namespace embound {

/// One certified exclusion: dimension 2^ruled_out_m is impossible because
/// lhs_log2_lo (a lower bound on the group-side quantity) strictly exceeds
/// rhs_log2_hi (an upper bound on the GL-side quantity).
struct ComparisonEvidence {
  std::uint64_t ruled_out_m = 0;
  DyadicRational lhs_log2_lo;
  DyadicRational rhs_log2_hi;
  unsigned precision = 0;

  bool holds() const { return lhs_log2_lo > rhs_log2_hi; }
};

struct DimensionBound {
  std::uint64_t m_min = 0;
  std::vector<ComparisonEvidence> evidence;  // one entry per m < m_min, ascending
  unsigned precision_used = 0;
};

/// Scans m = 0, 1, ... and returns the first m that is not ruled out.
///
/// m is ruled out iff lhs(p).lo > rhs(m, p).hi. The scan stops at m when
/// lhs(p).hi <= rhs(m, p).lo. Overlapping enclosures double p up to
/// kMaxPrecision, then raise InconclusiveError.
DimensionBound scan_dimension_exponent(const std::function<Log2Interval(unsigned)>& lhs,
                                       const std::function<Log2Interval(std::uint64_t, unsigned)>& rhs,
                                       unsigned start_precision, std::string_view what,
                                       std::uint64_t m_cap = 1u << 16);

}  // namespace embound
