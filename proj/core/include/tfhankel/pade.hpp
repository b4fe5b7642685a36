#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tfhankel/big.hpp"
#include "tfhankel/series.hpp"

namespace tfh {

/// Tolerances in this module are 10^-(precision - kPadeGuardDigits).
inline constexpr int kPadeGuardDigits = 10;

/// [M/N](t) = (a_0 + ... + a_M t^M) / (b_0 + ... + b_N t^N), with b_0 = 1.
struct PadeApproximant {
  int M = 0;
  int N = 0;
  std::vector<BigFloat> a;
  std::vector<BigFloat> b;
  /// u'(0) the series was evaluated at, when built through tf_table.
  std::optional<BigFloat> slope_used;
  /// Real zeros of the denominator on t >= 0 (poles of the approximant).
  std::vector<BigFloat> poles;
  /// max_k |taylor(a/b)_k - c_k| over k = 0..M+N, measured after the build.
  BigFloat matching_residual;

  /// Precision of the input coefficients. The solve and the stored
  /// coefficients carry twice as many digits, so that near-singular
  /// denominator systems still reproduce the input to this precision.
  int digits = kMinDigits;
  int precision() const { return digits; }
  BigFloat numerator(const BigFloat& t) const;
  BigFloat denominator(const BigFloat& t) const;
  BigFloat operator()(const BigFloat& t) const { return numerator(t) / denominator(t); }
};

/// Taylor coefficients 0..order of a(t)/b(t).
std::vector<BigFloat> taylor_coefficients(const PadeApproximant& p, int order);

/// Builds [M/N] from series coefficients c_0..c_{M+N} (extra ones are
/// ignored). The denominator system is solved by Gaussian elimination with
/// full pivoting at the precision of the inputs.
///
/// Throws std::invalid_argument if too few coefficients are given and
/// SingularSystem if the denominator system is rank-deficient.
PadeApproximant build_pade(std::span<const BigFloat> coeffs, int M, int N);

/// u(x) = [M/N](sqrt(x))^2. Throws std::invalid_argument for x < 0 and
/// PoleEncountered when the denominator vanishes at working precision.
BigFloat eval_u(const PadeApproximant& p, const BigFloat& x);

struct TableRow {
  BigFloat x;
  std::optional<BigFloat> u;
  /// Why u is missing, when it is.
  std::string error;
};

/// Evaluates u on a grid through the [M/N] approximant of f(t) at the given
/// slope u'(0). Rows that fail are marked rather than aborting the table.
std::vector<TableRow> tf_table(EquationKind kind, const BigFloat& slope, int M, int N, std::span<const BigFloat> xs);
/// Same, reusing an already-built approximant.
std::vector<TableRow> tf_table(const PadeApproximant& p, std::span<const BigFloat> xs);

/// The approximant tf_table uses, exposed for inspection.
PadeApproximant tf_pade(EquationKind kind, const BigFloat& slope, int M, int N);

}  // namespace tfh
