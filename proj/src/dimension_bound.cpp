#include "embound/dimension_bound.hpp"

#include <algorithm>
#include <string>

namespace embound {

DimensionBound scan_dimension_exponent(const std::function<Log2Interval(unsigned)>& lhs,
                                       const std::function<Log2Interval(std::uint64_t, unsigned)>& rhs,
                                       unsigned start_precision, std::string_view what, std::uint64_t m_cap) {
  DimensionBound out;
  unsigned p = std::max(start_precision, 1u);
  Log2Interval left = lhs(p);
  for (std::uint64_t m = 0; m <= m_cap; ++m) {
    for (;;) {
      const Log2Interval right = rhs(m, p);
      if (left.lo() > right.hi()) {
        out.evidence.push_back({m, left.lo(), right.hi(), p});
        break;
      }
      if (left.hi() <= right.lo()) {
        out.m_min = m;
        out.precision_used = p;
        return out;
      }
      if (p >= kMaxPrecision) {
        throw InconclusiveError("inconclusive at max precision (" + std::to_string(kMaxPrecision) + " bits): " +
                                std::string(what) + " at m=" + std::to_string(m));
      }
      p = std::min(p * 2, kMaxPrecision);
      left = lhs(p);
    }
  }
  throw InternalError("dimension scan exceeded m cap for " + std::string(what));
}

}  // namespace embound
