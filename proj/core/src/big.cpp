#include "tfhankel/big.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tfh {

namespace {

int clamp_digits(int digits) { return std::max(digits, kMinDigits); }

std::string format_mpfr(const char* fmt, int n, mpfr_srcptr value) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt, n, value) < 0 || raw == nullptr) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  // log2(10) = 3.3219...; four extra bits keep the last decimal digit honest.
  return static_cast<mpfr_prec_t>(std::ceil(clamp_digits(digits) * 3.321928094887362)) + 4;
}

BigFloat::BigFloat(int digits) : digits_(clamp_digits(digits)) {
  mpfr_init2(value_, digits_to_bits(digits_));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, int digits) : BigFloat(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, int digits) : BigFloat(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, int digits) : BigFloat(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, int digits) {
  BigFloat out(digits);
  const std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == owned.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + owned + "'");
  }
  return out;
}

BigFloat::BigFloat(const BigFloat& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::reset_precision(int digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(value_, digits_to_bits(digits), MPFR_RNDN);
  digits_ = digits;
}

BigFloat BigFloat::with_digits(int digits) const {
  BigFloat out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  reset_precision(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  reset_precision(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  reset_precision(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  reset_precision(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigRational BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("BigFloat::to_rational on a non-finite value");
  BigRational out;
  mpfr_get_q(out.get_mpq_t(), value_);
  return out;
}

std::string BigFloat::to_string(int significant) const {
  return format_mpfr("%.*Rg", std::max(significant, 1), value_);
}

std::string BigFloat::to_fixed(int decimals) const {
  return format_mpfr("%.*Rf", std::max(decimals, 0), value_);
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x);
  mpfr_sqrt(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat log10(const BigFloat& x) {
  BigFloat out(x);
  mpfr_log10(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat pow10(long exponent, int digits) {
  BigFloat out(digits);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

}  // namespace tfh
