#include "tfhankel/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tfh {

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("PolyMatrix dimension must be >= 1, got " + std::to_string(dim));
  entries_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
}

std::size_t PolyMatrix::index(int row, int col) const {
  if (row < 0 || col < 0 || row >= dim_ || col >= dim_) throw std::out_of_range("PolyMatrix index out of range");
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(col);
}

UniPoly bareiss_det(const PolyMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<UniPoly>> a(static_cast<std::size_t>(n));
  // det(m) = det(scaled) / prod(row scales)
  BigRational scale = 1;
  for (int i = 0; i < n; ++i) {
    auto& row = a[static_cast<std::size_t>(i)];
    BigInt l = 1;
    for (int j = 0; j < n; ++j) {
      const BigInt dj = m(i, j).denominator_lcm();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dj.get_mpz_t());
    }
    const BigRational lq(l);
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.push_back(m(i, j) * lq);
    scale *= lq;
  }

  bool negate = false;
  UniPoly prev_pivot = UniPoly::constant(1);
  for (int k = 0; k + 1 < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    if (a[uk][uk].is_zero()) {
      std::size_t swap_row = uk;
      for (std::size_t r = uk + 1; r < a.size(); ++r) {
        if (!a[r][uk].is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == uk) return {};
      std::swap(a[uk], a[swap_row]);
      negate = !negate;
    }
    const UniPoly& pivot = a[uk][uk];
    for (std::size_t i = uk + 1; i < a.size(); ++i) {
      for (std::size_t j = uk + 1; j < a.size(); ++j) {
        UniPoly num = pivot * a[i][j] - a[i][uk] * a[uk][j];
        a[i][j] = (k == 0) ? std::move(num) : num.exact_div(prev_pivot);
      }
      a[i][uk] = UniPoly();
    }
    prev_pivot = pivot;
  }

  UniPoly det = a.back().back();
  det *= BigRational(negate ? -1 : 1) / scale;
  return det;
}

}  // namespace tfh
