#pragma once

// Number types shared by every module: exact integers and rationals (GMP)
// and a precision-carrying binary floating-point value (MPFR).

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace tfh {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Lowest working precision, in decimal digits, that a BigFloat may carry.
inline constexpr int kMinDigits = 16;

/// Binary precision (bits) used to hold `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Arbitrary-precision float that carries its own working precision.
///
/// Unlike a process-wide default precision, each value knows the number of
/// decimal digits it was computed at. Binary operations run at the larger
/// of the two operand precisions, so values can be shared freely between
/// threads.
class BigFloat {
 public:
  explicit BigFloat(int digits = kMinDigits);
  BigFloat(long value, int digits);
  BigFloat(const BigRational& value, int digits);
  BigFloat(const BigInt& value, int digits);

  /// Parses a decimal literal such as "-1.588071022611375313" or "1e-10".
  /// Throws std::invalid_argument on malformed input.
  static BigFloat parse(std::string_view text, int digits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  /// Copy rounded (or widened) to another precision.
  BigFloat with_digits(int digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  friend BigFloat operator*(BigFloat lhs, long rhs) { return lhs *= rhs; }
  friend BigFloat operator*(long lhs, BigFloat rhs) { return rhs *= lhs; }
  friend BigFloat operator/(BigFloat lhs, long rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  /// Exact rational value of the stored binary float. Requires is_finite().
  BigRational to_rational() const;

  /// Decimal rendering with `significant` significant digits, "%g" style.
  std::string to_string(int significant) const;
  /// Decimal rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  void reset_precision(int digits);

  mpfr_t value_;
  int digits_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log10(const BigFloat& x);
/// 10^exponent at the requested precision.
BigFloat pow10(long exponent, int digits);

}  // namespace tfh
