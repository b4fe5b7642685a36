#pragma once

#include <cstddef>
#include <vector>

#include "tfhankel/poly.hpp"

namespace tfh {

/// Square matrix of polynomials in the same variable s, row-major.
class PolyMatrix {
 public:
  /// dim x dim zero matrix. Throws std::invalid_argument for dim < 1.
  explicit PolyMatrix(int dim);

  int dim() const noexcept { return dim_; }
  UniPoly& operator()(int row, int col) { return entries_[index(row, col)]; }
  const UniPoly& operator()(int row, int col) const { return entries_[index(row, col)]; }

 private:
  std::size_t index(int row, int col) const;

  int dim_;
  std::vector<UniPoly> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to integer coefficients so every intermediate
/// division is an exact division in Z[s]; the scale is removed at the end.
/// A zero polynomial result is legal.
UniPoly bareiss_det(const PolyMatrix& m);

}  // namespace tfh
