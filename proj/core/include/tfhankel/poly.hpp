#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tfhankel/big.hpp"

namespace tfh {

/// Dense univariate polynomial in s with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of s^k. The list never ends in a zero, so
/// the zero polynomial is the empty list and has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<BigRational> coeffs);
  explicit UniPoly(std::vector<BigRational> coeffs);

  static UniPoly constant(const BigRational& c);
  /// The polynomial `s`.
  static UniPoly variable();
  /// c * s^k
  static UniPoly monomial(const BigRational& c, int k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of s^k; zero past the degree.
  BigRational coeff(int k) const;
  const BigRational& leading() const { return coeffs_.back(); }

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const BigRational& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
  friend UniPoly operator*(const BigRational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  BigRational operator()(const BigRational& s) const;
  BigFloat operator()(const BigFloat& s) const;

  UniPoly derivative() const;

  /// Euclidean division over Q. Throws ZeroPolynomial when dividing by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Quotient of a division known to be exact; throws std::domain_error
  /// when a nonzero remainder shows up.
  UniPoly exact_div(const UniPoly& divisor) const;

  /// Least common multiple of the coefficient denominators.
  BigInt denominator_lcm() const;

  /// Human-readable form, e.g. "-1/4*s^5 - 13/300*s^2".
  std::string to_string(const std::string& var = "s") const;

 private:
  void normalize();

  std::vector<BigRational> coeffs_;
};

inline UniPoly poly_add(const UniPoly& a, const UniPoly& b) { return a + b; }
inline UniPoly poly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

/// Monic greatest common divisor (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace tfh
