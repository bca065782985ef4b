#pragma once

// Brute-force ground truth at desk scale. Nothing here reuses the reasoning
// of the bound engines: partitions and matrices are enumerated exhaustively.

#include <array>
#include <cstdint>

#include "embound/cycle_structure.hpp"
#include "embound/exactmath.hpp"

namespace embound {

struct PartitionConstraint {
  bool require_even_parity = false;
  bool require_even_order = false;
};

inline constexpr unsigned kMaxLandauPoints = 80;

/// Maximum lcm of the parts over all partitions of `points` meeting the
/// constraint; 0 when none does. A partition is even iff it has an even
/// number of even parts, and has even order iff it has an even part.
Natural landau_constrained_exact(unsigned points, PartitionConstraint constraint);

/// N x N matrix over F_2, N <= 8, row-major with bit j of row i = entry (i, j).
class BitMatrix {
 public:
  static constexpr unsigned kMaxDimension = 8;

  explicit BitMatrix(unsigned dimension);
  /// Row i is bits [i*N, (i+1)*N) of `bits`.
  static BitMatrix from_index(unsigned dimension, std::uint64_t bits);
  static BitMatrix identity(unsigned dimension);

  unsigned dimension() const { return dimension_; }
  bool get(unsigned row, unsigned col) const { return (rows_[row] >> col) & 1u; }
  void set(unsigned row, unsigned col, bool value);
  std::uint8_t row(unsigned i) const { return rows_[i]; }

  bool is_invertible() const;
  /// Throws DomainError if singular.
  BitMatrix inverse() const;
  /// Smallest k >= 1 with A^k = I, by repeated multiplication. Throws
  /// InternalError if k exceeds `cap` (use |GL(N,2)|) or DomainError if singular.
  std::uint64_t order(std::uint64_t cap) const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.dimension_ == b.dimension_ && a.rows_ == b.rows_;
  }

 private:
  unsigned dimension_;
  std::array<std::uint8_t, kMaxDimension> rows_{};
};

struct GlEnumerationSummary {
  unsigned dimension = 0;
  std::uint64_t matrices_scanned = 0;
  std::uint64_t invertible_count = 0;  // |GL(N, 2)|
  std::uint64_t max_order = 0;
  std::uint64_t max_even_order = 0;
};

/// Scans matrix indices [begin, end) of the 2^(N^2) matrices. Ranges merge
/// by summing counts and taking maxima.
GlEnumerationSummary gl_enumerate_range(unsigned N, std::uint64_t begin, std::uint64_t end);
GlEnumerationSummary merge(const GlEnumerationSummary& a, const GlEnumerationSummary& b);

/// Exhaustive over all 2^(N^2) matrices, 1 <= N <= 5, split across worker threads.
GlEnumerationSummary gl_enumerate(unsigned N);
Natural gl_max_even_order_exhaustive(unsigned N);

/// k! by binary splitting, k <= 2^20.
Natural factorial_exact(std::uint64_t k);

enum class Parity { kEven, kOdd };

struct OrderAndParity {
  Natural order;
  Parity parity = Parity::kEven;
};

/// Order = lcm of cycle lengths; even iff the count of even-length cycles is even.
OrderAndParity permutation_order_and_parity(const CycleStructure& c);

}  // namespace embound
