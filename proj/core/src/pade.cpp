#include "tfhankel/pade.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tfhankel/errors.hpp"
#include "tfhankel/roots.hpp"

namespace tfh {

namespace {

BigFloat horner(const std::vector<BigFloat>& c, const BigFloat& t) {
  BigFloat acc(0, std::max(c.front().digits(), t.digits()));
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

BigFloat abs_horner(const std::vector<BigFloat>& c, const BigFloat& t) {
  BigFloat acc(0, std::max(c.front().digits(), t.digits()));
  const BigFloat at = abs(t);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= at;
    acc += abs(*it);
  }
  return acc;
}

int working_digits(std::span<const BigFloat> c) {
  int d = kMinDigits;
  for (const auto& v : c) d = std::max(d, v.digits());
  return d;
}

// Solves A x = rhs by Gaussian elimination with full pivoting.
std::vector<BigFloat> solve_full_pivot(std::vector<std::vector<BigFloat>> A, std::vector<BigFloat> rhs,
                                       const BigFloat& rel_tol) {
  const std::size_t n = rhs.size();
  std::vector<std::size_t> col_of(n);
  std::iota(col_of.begin(), col_of.end(), 0);

  BigFloat scale(0, rel_tol.digits());
  for (const auto& row : A) {
    for (const auto& v : row) scale = std::max(scale, abs(v));
  }
  if (scale.is_zero()) throw SingularSystem("Pade denominator system is identically zero");
  const BigFloat threshold = scale * rel_tol;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    BigFloat best = abs(A[k][k]);
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const BigFloat v = abs(A[i][j]);
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best <= threshold) {
      throw SingularSystem("Pade denominator system is rank-deficient (rank " + std::to_string(k) + " of " +
                           std::to_string(n) + ")");
    }
    std::swap(A[k], A[pr]);
    std::swap(rhs[k], rhs[pr]);
    if (pc != k) {
      for (auto& row : A) std::swap(row[k], row[pc]);
      std::swap(col_of[k], col_of[pc]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigFloat factor = A[i][k] / A[k][k];
      if (factor.is_zero()) continue;
      for (std::size_t j = k; j < n; ++j) A[i][j] -= factor * A[k][j];
      rhs[i] -= factor * rhs[k];
    }
  }

  std::vector<BigFloat> y(n, BigFloat(0, rel_tol.digits()));
  for (std::size_t k = n; k-- > 0;) {
    BigFloat acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= A[k][j] * y[j];
    y[k] = acc / A[k][k];
  }
  std::vector<BigFloat> x(n, BigFloat(0, rel_tol.digits()));
  for (std::size_t k = 0; k < n; ++k) x[col_of[k]] = y[k];
  return x;
}

std::vector<BigFloat> nonnegative_real_zeros(const std::vector<BigFloat>& b) {
  std::vector<BigRational> exact;
  exact.reserve(b.size());
  for (const auto& v : b) exact.push_back(v.to_rational());
  const UniPoly poly(std::move(exact));
  if (poly.degree() < 1) return {};
  const int digits = std::min(b.front().digits(), 30);
  std::vector<BigFloat> out;
  for (auto& r : real_roots(poly, 0, cauchy_bound(poly), digits)) out.push_back(std::move(r.value));
  return out;
}

}  // namespace

BigFloat PadeApproximant::numerator(const BigFloat& t) const { return horner(a, t); }

BigFloat PadeApproximant::denominator(const BigFloat& t) const { return horner(b, t); }

std::vector<BigFloat> taylor_coefficients(const PadeApproximant& p, int order) {
  std::vector<BigFloat> q;
  q.reserve(static_cast<std::size_t>(order) + 1);
  const int digits = p.b.front().digits();
  for (int k = 0; k <= order; ++k) {
    BigFloat acc = k <= p.M ? p.a[static_cast<std::size_t>(k)] : BigFloat(0, digits);
    for (int i = 1; i <= std::min(k, p.N); ++i) acc -= p.b[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(k - i)];
    q.push_back(acc / p.b.front());
  }
  return q;
}

PadeApproximant build_pade(std::span<const BigFloat> coeffs, int M, int N) {
  if (M < 0 || N < 0) throw std::invalid_argument("Pade orders must be non-negative");
  if (static_cast<int>(coeffs.size()) < M + N + 1) {
    throw std::invalid_argument("[" + std::to_string(M) + "/" + std::to_string(N) + "] needs " +
                                std::to_string(M + N + 1) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  const int input_digits = working_digits(coeffs.first(static_cast<std::size_t>(M + N + 1)));
  const int digits = 2 * input_digits;
  const BigFloat zero(0, digits);
  auto c = [&](int k) { return k < 0 ? zero : coeffs[static_cast<std::size_t>(k)].with_digits(digits); };
  // Rank decisions are made at the accuracy of the inputs.
  const BigFloat rel_tol = pow10(-(input_digits - kPadeGuardDigits), digits);

  PadeApproximant p;
  p.M = M;
  p.N = N;
  p.digits = input_digits;
  p.b.assign(1, BigFloat(1, digits));
  if (N > 0) {
    // sum_{k=1..N} b_k c_{m-k} = -c_m  for m = M+1 .. M+N
    std::vector<std::vector<BigFloat>> A(static_cast<std::size_t>(N), std::vector<BigFloat>(static_cast<std::size_t>(N), zero));
    std::vector<BigFloat> rhs(static_cast<std::size_t>(N), zero);
    for (int r = 0; r < N; ++r) {
      const int m = M + 1 + r;
      for (int k = 1; k <= N; ++k) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 1)] = c(m - k);
      rhs[static_cast<std::size_t>(r)] = -c(m);
    }
    for (auto& v : solve_full_pivot(std::move(A), std::move(rhs), rel_tol)) p.b.push_back(std::move(v));
  }
  for (int m = 0; m <= M; ++m) {
    BigFloat acc(0, digits);
    for (int k = 0; k <= std::min(m, N); ++k) acc += p.b[static_cast<std::size_t>(k)] * c(m - k);
    p.a.push_back(std::move(acc));
  }

  p.matching_residual = BigFloat(0, digits);
  const auto q = taylor_coefficients(p, M + N);
  for (int k = 0; k <= M + N; ++k) {
    BigFloat denom = std::max(BigFloat(1, digits), abs(c(k)));
    p.matching_residual = std::max(p.matching_residual, abs(q[static_cast<std::size_t>(k)] - c(k)) / denom);
  }
  p.poles = nonnegative_real_zeros(p.b);
  return p;
}

BigFloat eval_u(const PadeApproximant& p, const BigFloat& x) {
  if (x.sign() < 0) throw std::invalid_argument("eval_u needs x >= 0, got " + x.to_string(12));
  const BigFloat t = sqrt(x.with_digits(std::max(x.digits(), p.precision())));
  const BigFloat den = p.denominator(t);
  const BigFloat floor = abs_horner(p.b, t) * pow10(-(p.precision() - kPadeGuardDigits), p.precision());
  if (abs(den) <= floor) {
    std::string where = "none located";
    if (!p.poles.empty()) {
      const BigFloat* nearest = &p.poles.front();
      for (const auto& pole : p.poles) {
        if (abs(pole - t) < abs(*nearest - t)) nearest = &pole;
      }
      where = "t = " + nearest->to_string(12);
    }
    throw PoleEncountered("denominator of [" + std::to_string(p.M) + "/" + std::to_string(p.N) +
                          "] vanishes at x = " + x.to_string(12) + " (nearest real pole: " + where + ")");
  }
  const BigFloat f = p.numerator(t) / den;
  return f * f;
}

PadeApproximant tf_pade(EquationKind kind, const BigFloat& slope, int M, int N) {
  const int order = std::max(5, M + N);
  const SeriesTable table = expand(kind, order);
  const BigFloat s = slope / 2;
  PadeApproximant p = build_pade(evaluate_at(table, s, M + N), M, N);
  p.slope_used = slope;
  return p;
}

std::vector<TableRow> tf_table(const PadeApproximant& p, std::span<const BigFloat> xs) {
  std::vector<TableRow> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) {
    TableRow row{x, std::nullopt, {}};
    try {
      row.u = eval_u(p, x);
    } catch (const ComputationError& e) {
      row.error = e.what();
    } catch (const std::invalid_argument& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> tf_table(EquationKind kind, const BigFloat& slope, int M, int N, std::span<const BigFloat> xs) {
  return tf_table(tf_pade(kind, slope, M, N), xs);
}

}  // namespace tfh
