#pragma once

#include <vector>

#include "tfhankel/big.hpp"
#include "tfhankel/poly.hpp"

namespace tfh {

/// Polynomial with integer coefficients, index k <-> s^k, no trailing zeros.
using IntPoly = std::vector<BigInt>;

/// Rescales p by a nonzero rational so the coefficients become coprime
/// integers. The roots are unchanged.
IntPoly primitive_part(const UniPoly& p);

/// Sturm chain of a square-free integer polynomial, kept primitive at every
/// step (pseudo-remainders use a positive multiplier, so signs are exact).
class SturmChain {
 public:
  explicit SturmChain(IntPoly p);

  /// Sign changes of the chain evaluated at x (zeros skipped).
  int variations(const BigRational& x) const;
  /// Distinct real roots in (a, b]; a must not be a root.
  int count(const BigRational& a, const BigRational& b) const;
  std::size_t length() const noexcept { return chain_.size(); }
  const std::vector<IntPoly>& polys() const noexcept { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

/// Exact sign of an integer polynomial at a rational point.
int sign_at(const IntPoly& p, const BigRational& x);

/// Every complex root z of p satisfies |z| < cauchy_bound(p).
BigRational cauchy_bound(const UniPoly& p);

struct RealRoot {
  /// Midpoint of the final isolating interval.
  BigFloat value;
  /// Isolating interval; lo == hi marks an exact rational root.
  BigRational lo;
  BigRational hi;
  /// Set when the interval also holds a root of gcd(p, p'), i.e. the root
  /// has multiplicity > 1 in p.
  bool possibly_multiple = false;
};

/// Every distinct real root of p in the open interval (lo, hi), ascending.
///
/// The square-free part of p is isolated with a Sturm chain over the
/// rationals; each root is then bisected with exact sign evaluation until
/// its interval is narrower than 10^-digits. Throws ZeroPolynomial if p is
/// identically zero and std::invalid_argument unless lo < hi.
std::vector<RealRoot> real_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi, int digits);

/// Number of distinct real roots of p in (lo, hi).
int count_real_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi);

}  // namespace tfh
