#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monotop/bigint.hpp"

namespace monotop {

/// Sparse integer matrix stored column by column. Entries within a column are
/// kept sorted by row and contain no zeros.
class SparseIntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, long long>;

  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t j) const { return columns_.at(j); }

  /// Adds `value` at (i, j). Entries must be pushed in increasing row order per
  /// column; use `set` for arbitrary order.
  void push(std::size_t i, std::size_t j, long long value);
  void set(std::size_t i, std::size_t j, long long value);
  long long at(std::size_t i, std::size_t j) const;

  std::vector<std::vector<long long>> to_dense() const;

 private:
  std::size_t rows_;
  std::vector<std::vector<Entry>> columns_;
};

struct SmithForm {
  std::size_t rank = 0;
  /// Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> invariant_factors;

  /// Invariant factors greater than 1.
  std::vector<BigInt> torsion() const;
};

/// Exact Smith normal form. Unit pivots are eliminated sparsely with 64-bit
/// checked arithmetic; the remainder (or everything after an overflow) goes to
/// a dense arbitrary-precision reduction.
SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Image of a vector v in coker(m) = Z^rows / column space of m.
struct CokernelImage {
  /// Coordinates on the free part, in an unspecified but fixed basis.
  std::vector<BigInt> free_coordinates;
  /// (coordinate mod d, d) for each torsion summand Z/d.
  std::vector<std::pair<BigInt, BigInt>> torsion_coordinates;

  /// gcd of the free coordinates (0 when all vanish).
  BigInt free_content() const;
};

CokernelImage cokernel_image(const SparseIntMatrix& m, std::span<const BigInt> v);

/// Normalizes nonzero diagonal entries into the divisibility chain.
std::vector<BigInt> invariant_factors_of_diagonal(std::vector<BigInt> diagonal);

}  // namespace monotop
