#include "tfhankel/roots.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "tfhankel/errors.hpp"

namespace tfh {

namespace {

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * static_cast<unsigned long>(k);
  return out;
}

// |lc(b)|^(deg a - deg b + 1) * a mod b: the remainder up to a positive factor.
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const BigInt lead_abs = abs(b.back());
  const int lead_sign = sgn(b.back());
  const int db = degree(b);
  BigInt factor;
  while (!a.empty() && degree(a) >= db) {
    const auto shift = static_cast<std::size_t>(degree(a) - db);
    factor = a.back();
    if (lead_sign < 0) factor = -factor;
    for (auto& c : a) c *= lead_abs;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  make_primitive(a);
  return a;
}

// Quotient of an exact division a / b in Z[s] with b primitive.
IntPoly exact_quotient(IntPoly a, const IntPoly& b) {
  const int db = degree(b);
  if (degree(a) < db) throw std::domain_error("exact_quotient: divisor degree exceeds dividend");
  IntPoly q(static_cast<std::size_t>(degree(a) - db + 1));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = a[k + static_cast<std::size_t>(db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) {
      throw std::domain_error("exact_quotient: division is not exact");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim(a);
  if (!a.empty()) throw std::domain_error("exact_quotient: division leaves a remainder");
  return q;
}

struct Endpoint {
  BigRational x;
  int variations;
  bool is_root;
};

}  // namespace

IntPoly primitive_part(const UniPoly& p) {
  const BigInt l = p.denominator_lcm();
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    BigInt v = c.get_num() * (l / c.get_den());
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

int sign_at(const IntPoly& p, const BigRational& x) {
  if (p.empty()) return 0;
  // Homogeneous Horner: den^n * p(num/den) = sum c_k num^k den^(n-k).
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = p.back();
  BigInt den_pow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += p[k] * den_pow;
  }
  return sgn(acc);
}

SturmChain::SturmChain(IntPoly p) {
  trim(p);
  if (p.empty()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
  make_primitive(p);
  IntPoly dp = derivative(p);
  make_primitive(dp);
  chain_.push_back(std::move(p));
  if (dp.empty()) return;
  chain_.push_back(std::move(dp));
  for (;;) {
    IntPoly r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations(const BigRational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const BigRational& a, const BigRational& b) const {
  return variations(a) - variations(b);
}

BigRational cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("root bound of the zero polynomial");
  BigRational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max<BigRational>(m, abs(p.coeff(k) / p.leading()));
  return m + 1;
}

namespace {

// Square-free decomposition plus both chains, shared by the public entry points.
struct Isolator {
  IntPoly square_free;
  SturmChain chain;
  std::optional<SturmChain> repeated;  // chain of gcd(p, p') when it is non-constant
  int zero_multiplicity = 0;           // power of s dividing p

  static Isolator build(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("real_roots: polynomial is identically zero");
    IntPoly full = primitive_part(p);
    int zeros = 0;
    while (full.size() > 1 && full.front() == 0) {
      full.erase(full.begin());
      ++zeros;
    }
    SturmChain full_chain(full);
    const auto& chain = full_chain.polys();
    IntPoly g = chain.back();
    if (degree(g) <= 0) return Isolator{std::move(full), std::move(full_chain), std::nullopt, zeros};
    make_primitive(g);
    IntPoly q = exact_quotient(full, g);
    make_primitive(q);
    SturmChain q_chain(q);
    return Isolator{std::move(q), std::move(q_chain), SturmChain(g), zeros};
  }

  Endpoint endpoint(const BigRational& x) const {
    return Endpoint{x, chain.variations(x), sign_at(square_free, x) == 0};
  }

  static int open_count(const Endpoint& a, const Endpoint& b) {
    return a.variations - b.variations - (b.is_root ? 1 : 0);
  }
};

}  // namespace

std::vector<RealRoot> real_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi, int digits) {
  if (!(lo < hi)) throw std::invalid_argument("real_roots: need lo < hi");
  const Isolator iso = Isolator::build(p);
  const BigRational width_limit(BigInt(1), [&] {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 1)));
    return t;
  }());

  std::vector<RealRoot> out;
  auto exact_root = [&](const BigRational& x) {
    const bool multiple = iso.repeated && sign_at(iso.repeated->polys().front(), x) == 0;
    out.push_back(RealRoot{BigFloat(x, digits), x, x, multiple});
  };

  if (iso.zero_multiplicity > 0 && lo < 0 && 0 < hi) {
    out.push_back(RealRoot{BigFloat(digits), 0, 0, iso.zero_multiplicity > 1});
  }

  // Sturm bisection down to one root per interval.
  std::vector<std::pair<Endpoint, Endpoint>> pending{{iso.endpoint(lo), iso.endpoint(hi)}};
  std::vector<std::pair<Endpoint, Endpoint>> isolated;
  while (!pending.empty()) {
    auto [a, b] = std::move(pending.back());
    pending.pop_back();
    const int n = Isolator::open_count(a, b);
    if (n <= 0) continue;
    if (n == 1 && !a.is_root && !b.is_root) {
      isolated.emplace_back(std::move(a), std::move(b));
      continue;
    }
    Endpoint m = iso.endpoint((a.x + b.x) / 2);
    if (m.is_root) exact_root(m.x);
    pending.emplace_back(m, std::move(b));
    pending.emplace_back(std::move(a), std::move(m));
  }

  // Refine each simple root of the square-free part by sign bisection.
  for (auto& [a, b] : isolated) {
    BigRational left = a.x;
    BigRational right = b.x;
    const int left_sign = sign_at(iso.square_free, left);
    bool exact = false;
    while (right - left >= width_limit) {
      BigRational mid = (left + right) / 2;
      const int s = sign_at(iso.square_free, mid);
      if (s == 0) {
        exact_root(mid);
        exact = true;
        break;
      }
      (s == left_sign ? left : right) = std::move(mid);
    }
    if (exact) continue;
    bool multiple = false;
    if (iso.repeated) multiple = iso.repeated->count(left, right) > 0;
    out.push_back(RealRoot{BigFloat((left + right) / 2, digits), left, right, multiple});
  }

  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; });
  return out;
}

int count_real_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("count_real_roots: need lo < hi");
  const Isolator iso = Isolator::build(p);
  int n = Isolator::open_count(iso.endpoint(lo), iso.endpoint(hi));
  if (iso.zero_multiplicity > 0 && lo < 0 && 0 < hi) ++n;
  return n;
}

}  // namespace tfh
