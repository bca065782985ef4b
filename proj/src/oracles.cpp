#include "embound/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

namespace embound {

// --------------------------------------------------------------- partitions

namespace {

struct LandauSearch {
  PartitionConstraint constraint;
  std::uint64_t best = 0;

  void consider(std::uint64_t order, unsigned even_parts) {
    if (constraint.require_even_parity && even_parts % 2 != 0) return;
    if (constraint.require_even_order && even_parts == 0) return;
    best = std::max(best, order);
  }

  // Parts in nonincreasing order; the parts of size 1 are implicit.
  void run(unsigned remaining, unsigned max_part, std::uint64_t order, unsigned even_parts) {
    consider(order, even_parts);
    for (unsigned part = std::min(remaining, max_part); part >= 2; --part) {
      run(remaining - part, part, std::lcm(order, std::uint64_t{part}), even_parts + (part % 2 == 0 ? 1 : 0));
    }
  }
};

}  // namespace

Natural landau_constrained_exact(unsigned points, PartitionConstraint constraint) {
  if (points > kMaxLandauPoints) {
    throw CapabilityError("landau_constrained_exact limited to " + std::to_string(kMaxLandauPoints) + " points");
  }
  LandauSearch search{constraint};
  search.run(points, points, 1, 0);
  return Natural(search.best);
}

// --------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(unsigned dimension) : dimension_(dimension) {
  if (dimension == 0 || dimension > kMaxDimension) {
    throw CapabilityError("BitMatrix dimension must lie in [1, 8], got " + std::to_string(dimension));
  }
}

BitMatrix BitMatrix::from_index(unsigned dimension, std::uint64_t bits) {
  BitMatrix m(dimension);
  const std::uint64_t mask = (std::uint64_t{1} << dimension) - 1;
  for (unsigned i = 0; i < dimension; ++i) m.rows_[i] = static_cast<std::uint8_t>((bits >> (i * dimension)) & mask);
  return m;
}

BitMatrix BitMatrix::identity(unsigned dimension) {
  BitMatrix m(dimension);
  for (unsigned i = 0; i < dimension; ++i) m.rows_[i] = static_cast<std::uint8_t>(1u << i);
  return m;
}

void BitMatrix::set(unsigned row, unsigned col, bool value) {
  const auto bit = static_cast<std::uint8_t>(1u << col);
  rows_[row] = value ? static_cast<std::uint8_t>(rows_[row] | bit) : static_cast<std::uint8_t>(rows_[row] & ~bit);
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.dimension_ != b.dimension_) throw DomainError("BitMatrix dimension mismatch");
  BitMatrix c(a.dimension_);
  for (unsigned i = 0; i < a.dimension_; ++i) {
    std::uint8_t acc = 0;
    for (unsigned j = 0; j < a.dimension_; ++j) {
      if ((a.rows_[i] >> j) & 1u) acc ^= b.rows_[j];
    }
    c.rows_[i] = acc;
  }
  return c;
}

bool BitMatrix::is_invertible() const {
  auto rows = rows_;
  for (unsigned col = 0; col < dimension_; ++col) {
    const auto bit = static_cast<std::uint8_t>(1u << col);
    unsigned pivot = col;
    while (pivot < dimension_ && !(rows[pivot] & bit)) ++pivot;
    if (pivot == dimension_) return false;
    std::swap(rows[col], rows[pivot]);
    for (unsigned r = col + 1; r < dimension_; ++r) {
      if (rows[r] & bit) rows[r] ^= rows[col];
    }
  }
  return true;
}

BitMatrix BitMatrix::inverse() const {
  auto rows = rows_;
  BitMatrix inv = identity(dimension_);
  for (unsigned col = 0; col < dimension_; ++col) {
    const auto bit = static_cast<std::uint8_t>(1u << col);
    unsigned pivot = col;
    while (pivot < dimension_ && !(rows[pivot] & bit)) ++pivot;
    if (pivot == dimension_) throw DomainError("BitMatrix is singular");
    std::swap(rows[col], rows[pivot]);
    std::swap(inv.rows_[col], inv.rows_[pivot]);
    for (unsigned r = 0; r < dimension_; ++r) {
      if (r != col && (rows[r] & bit)) {
        rows[r] ^= rows[col];
        inv.rows_[r] ^= inv.rows_[col];
      }
    }
  }
  return inv;
}

std::uint64_t BitMatrix::order(std::uint64_t cap) const {
  if (!is_invertible()) throw DomainError("order of a singular matrix");
  const BitMatrix id = identity(dimension_);
  BitMatrix power = *this;
  std::uint64_t k = 1;
  while (!(power == id)) {
    power = power * *this;
    if (++k > cap) throw InternalError("matrix order exceeds |GL(N,2)| = " + std::to_string(cap));
  }
  return k;
}

// ------------------------------------------------------------ GL(N, 2) scan

namespace {

void require_gl_dimension(unsigned N) {
  if (N < 1 || N > 5) throw CapabilityError("exhaustive GL enumeration limited to 1 <= N <= 5, got " + std::to_string(N));
}

// Lagrange cap for element orders.
std::uint64_t gl_order_cap(unsigned N) {
  std::uint64_t order = 1;
  for (unsigned h = 0; h < N; ++h) order *= (std::uint64_t{1} << N) - (std::uint64_t{1} << h);
  return order;
}

}  // namespace

GlEnumerationSummary gl_enumerate_range(unsigned N, std::uint64_t begin, std::uint64_t end) {
  require_gl_dimension(N);
  const std::uint64_t cap = gl_order_cap(N);
  GlEnumerationSummary s;
  s.dimension = N;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    ++s.matrices_scanned;
    const BitMatrix m = BitMatrix::from_index(N, idx);
    if (!m.is_invertible()) continue;
    ++s.invertible_count;
    const std::uint64_t k = m.order(cap);
    s.max_order = std::max(s.max_order, k);
    if (k % 2 == 0) s.max_even_order = std::max(s.max_even_order, k);
  }
  return s;
}

GlEnumerationSummary merge(const GlEnumerationSummary& a, const GlEnumerationSummary& b) {
  GlEnumerationSummary s;
  s.dimension = std::max(a.dimension, b.dimension);
  s.matrices_scanned = a.matrices_scanned + b.matrices_scanned;
  s.invertible_count = a.invertible_count + b.invertible_count;
  s.max_order = std::max(a.max_order, b.max_order);
  s.max_even_order = std::max(a.max_even_order, b.max_even_order);
  return s;
}

GlEnumerationSummary gl_enumerate(unsigned N) {
  require_gl_dimension(N);
  const std::uint64_t total = std::uint64_t{1} << (N * N);
  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  if (workers == 1 || total < 4096) return gl_enumerate_range(N, 0, total);

  std::vector<GlEnumerationSummary> parts(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t b = std::min(total, w * chunk);
    const std::uint64_t e = std::min(total, b + chunk);
    threads.emplace_back([&parts, w, N, b, e] { parts[w] = gl_enumerate_range(N, b, e); });
  }
  for (auto& t : threads) t.join();
  GlEnumerationSummary s;
  s.dimension = N;
  for (const auto& p : parts) s = merge(s, p);
  return s;
}

Natural gl_max_even_order_exhaustive(unsigned N) { return Natural(gl_enumerate(N).max_even_order); }

// ---------------------------------------------------------------- factorial

namespace {

Natural range_product(std::uint64_t lo, std::uint64_t hi) {  // lo * (lo+1) * ... * hi
  if (lo > hi) return Natural(1);
  if (hi - lo < 8) {
    Natural acc(lo);
    for (std::uint64_t v = lo + 1; v <= hi; ++v) acc *= Natural(v);
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

}  // namespace

Natural factorial_exact(std::uint64_t k) {
  if (k > kMaxExactFactorial) throw CapabilityError("factorial_exact capped at 2^20, got " + std::to_string(k));
  return range_product(1, k);
}

OrderAndParity permutation_order_and_parity(const CycleStructure& c) {
  OrderAndParity out{Natural(1), Parity::kEven};
  std::size_t even_cycles = 0;
  for (auto len : c.cycles()) {
    out.order = lcm(out.order, Natural(len));
    if (len % 2 == 0) ++even_cycles;
  }
  out.parity = even_cycles % 2 == 0 ? Parity::kEven : Parity::kOdd;
  return out;
}

}  // namespace embound
