#include "tfhankel/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tfhankel/errors.hpp"

namespace tfh {

UniPoly::UniPoly(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { normalize(); }

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly({c}); }

UniPoly UniPoly::variable() { return UniPoly({BigRational(0), BigRational(1)}); }

UniPoly UniPoly::monomial(const BigRational& c, int k) {
  std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  BigRational term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      term = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += term;
    }
  }
  UniPoly r;
  r.coeffs_ = std::move(out);
  while (!r.coeffs_.empty() && r.coeffs_.back() == 0) r.coeffs_.pop_back();
  return r;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BigRational UniPoly::operator()(const BigRational& s) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

BigFloat UniPoly::operator()(const BigFloat& s) const {
  BigFloat acc(0, s.digits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= s;
    acc += BigFloat(*it, s.digits());
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  if (degree() < divisor.degree()) return {UniPoly(), *this};
  std::vector<BigRational> rem = coeffs_;
  std::vector<BigRational> quo(coeffs_.size() - divisor.coeffs_.size() + 1);
  const BigRational& lead = divisor.leading();
  const std::size_t dn = divisor.coeffs_.size();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const BigRational q = rem[k + dn - 1] / lead;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i < dn; ++i) rem[k + i] -= q * divisor.coeffs_[i];
  }
  rem.resize(dn - 1);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("UniPoly::exact_div: division leaves a remainder");
  return q;
}

BigInt UniPoly::denominator_lcm() const {
  BigInt l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * BigRational(BigRational(1) / a.leading());
}

}  // namespace tfh
