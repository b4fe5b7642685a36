#include "tfhankel/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint/stepper/controlled_runge_kutta.hpp>
#include <boost/numeric/odeint/stepper/generation.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "tfhankel/errors.hpp"

namespace tfh {

namespace {

namespace odeint = boost::numeric::odeint;

using Real = long double;
using State = std::array<Real, 2>;
using ErrorStepper = odeint::runge_kutta_fehlberg78<State, Real, State, Real>;

constexpr int kSampleDigits = 20;

struct Rhs {
  EquationKind kind;

  void operator()(const State& y, State& dy, Real x) const {
    // Past a zero crossing u is clamped; the step is then discarded by the
    // event logic, this only keeps the stages finite.
    const Real u = std::max(y[0], Real{0});
    dy[0] = y[1];
    dy[1] = kind == EquationKind::Atom ? std::sqrt(u * u * u / x) : std::sqrt(x * u);
  }
};

SeriesMemo& start_series_memo() {
  static SeriesMemo memo;
  return memo;
}

struct StartPoint {
  Real x;
  Real u;
  Real du;
};

// Steps off the origin along u(x) = f(sqrt(x))^2 until the truncated
// series' last terms drop below tol / 100.
StartPoint series_start(EquationKind kind, const BigFloat& slope, Real tol) {
  const SeriesTable table = start_series_memo().get(kind, kStartSeriesOrder);
  const auto coeffs = evaluate_at(table, slope.with_digits(30) / 2, kStartSeriesOrder);
  std::vector<Real> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.push_back(v.to_long_double());

  const int K = kStartSeriesOrder;
  const Real target = tol / 100;
  Real t = 0.5L;
  auto tail = [&](Real tt) {
    return std::abs(c[static_cast<std::size_t>(K)]) * std::pow(tt, K) +
           std::abs(c[static_cast<std::size_t>(K - 1)]) * std::pow(tt, K - 1);
  };
  while (tail(t) >= target && t > 1e-4L) t *= 0.8L;

  Real f = 0;
  Real df = 0;
  for (int j = K; j >= 0; --j) {
    df = df * t + f;
    f = f * t + c[static_cast<std::size_t>(j)];
  }
  return StartPoint{t * t, f * f, f * df / t};
}

// Series value of (u, u') for x below the integration start.
TrajectorySample series_sample(EquationKind kind, const BigFloat& slope, const BigFloat& x) {
  if (x.is_zero()) return TrajectorySample{x, BigFloat(1, kSampleDigits), slope.with_digits(kSampleDigits)};
  const SeriesTable table = start_series_memo().get(kind, kStartSeriesOrder);
  const auto c = evaluate_at(table, slope.with_digits(30) / 2, kStartSeriesOrder);
  const BigFloat t = sqrt(x.with_digits(30));
  BigFloat f(0, 30);
  BigFloat df(0, 30);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    df = df * t + f;
    f = f * t + *it;
  }
  return TrajectorySample{x, (f * f).with_digits(kSampleDigits), (f * df / t).with_digits(kSampleDigits)};
}

BigFloat to_big(Real v) {
  BigFloat out(kSampleDigits);
  mpfr_set_ld(out.get(), v, MPFR_RNDN);
  return out;
}

// Largest h in [0, h_max] for which stepping from (y0, x0) keeps
// predicate false, found by bisection on the step length.
template <class Pred>
Real locate_event(const Rhs& rhs, const State& y0, Real x0, Real h_max, Pred crossed) {
  ErrorStepper stepper;
  Real lo = 0;
  Real hi = h_max;
  for (int it = 0; it < 80 && hi - lo > std::abs(x0) * 1e-18L; ++it) {
    const Real mid = (lo + hi) / 2;
    State y;
    stepper.do_step(rhs, y0, x0, y, mid);
    (crossed(y) ? hi : lo) = mid;
  }
  return x0 + hi;
}

}  // namespace

std::pair<Trajectory, ShootOutcome> integrate_ivp(EquationKind kind, const BigFloat& slope, const BigFloat& x_max,
                                                  const BigFloat& tol, std::span<const BigFloat> outputs) {
  if (tol.sign() <= 0) throw std::invalid_argument("integrate_ivp: tol must be positive");
  if (x_max.sign() <= 0) throw std::invalid_argument("integrate_ivp: x_max must be positive");
  const Real tolerance = tol.to_long_double();
  const Real end = x_max.to_long_double();
  const Rhs rhs{kind};

  std::vector<BigFloat> grid(outputs.begin(), outputs.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const auto& x : grid) {
    if (x.sign() < 0) throw std::invalid_argument("integrate_ivp: output points must be >= 0");
  }

  const StartPoint start = series_start(kind, slope, tolerance);
  Trajectory traj;
  traj.start = TrajectorySample{to_big(start.x), to_big(start.u), to_big(start.du)};
  ShootOutcome outcome;

  std::size_t next = 0;
  while (next < grid.size() && grid[next].to_long_double() <= start.x) {
    traj.samples.push_back(series_sample(kind, slope, grid[next]));
    ++next;
  }

  auto controlled = odeint::make_controlled<ErrorStepper>(tolerance, tolerance);
  State y{start.u, start.du};
  Real x = start.x;
  Real dt = std::min<Real>(1e-3L, start.x);

  for (;;) {
    const Real target = next < grid.size() ? std::min(end, grid[next].to_long_double()) : end;
    if (x >= target) {
      if (next < grid.size() && grid[next].to_long_double() <= x) {
        traj.samples.push_back(TrajectorySample{grid[next], to_big(y[0]), to_big(y[1])});
        ++next;
        continue;
      }
      // Reached x_max still positive.
      if (y[1] > 0) {
        // u is convex, so once it rises it grows without bound.
        outcome.classification = ShootClass::BlowsUp;
        outcome.x_event = to_big(x);
      }
      break;
    }

    Real h = std::min(dt, target - x);
    const bool reaches_target = h == target - x;
    const State y_old = y;
    const Real x_old = x;
    if (controlled.try_step(rhs, y, x, h) == odeint::fail) {
      ++traj.rejected_steps;
      dt = h;
      if (h < std::max<Real>(std::abs(x), 1) * 1e-17L) {
        throw StepUnderflow("step size underflow at x = " + to_big(x).to_string(12));
      }
      continue;
    }
    ++traj.accepted_steps;
    if (reaches_target) {
      x = target;
      dt = std::max(dt, h);
    } else {
      dt = h;
    }

    if (y[0] <= 0) {
      outcome.classification = ShootClass::CrossesZero;
      outcome.x_event = to_big(locate_event(rhs, y_old, x_old, x - x_old, [](const State& s) { return s[0] <= 0; }));
      break;
    }
    if (y[0] > kBlowUpThreshold) {
      outcome.classification = ShootClass::BlowsUp;
      outcome.x_event = to_big(
          locate_event(rhs, y_old, x_old, x - x_old, [](const State& s) { return s[0] > kBlowUpThreshold; }));
      break;
    }
  }
  return {std::move(traj), std::move(outcome)};
}

ShootClass classify_slope(EquationKind kind, const BigFloat& slope, const ShootOptions& options) {
  BigFloat tol(kSampleDigits);
  mpfr_set_ld(tol.get(), options.integrator_tol, MPFR_RNDN);
  Real horizon = options.x_max;
  for (int attempt = 0; attempt < 3; ++attempt, horizon *= 10) {
    BigFloat x_max(kSampleDigits);
    mpfr_set_ld(x_max.get(), horizon, MPFR_RNDN);
    const auto outcome = integrate_ivp(kind, slope, x_max, tol).second;
    if (outcome.classification != ShootClass::Undecided) return outcome.classification;
  }
  return ShootClass::Undecided;
}

BigFloat shoot_slope(EquationKind kind, const BigFloat& lo, const BigFloat& hi, const BigFloat& tol,
                     const ShootOptions& options) {
  if (tol.sign() <= 0) throw std::invalid_argument("shoot_slope: tol must be positive");
  BigFloat left = lo.with_digits(kSampleDigits);
  BigFloat right = hi.with_digits(kSampleDigits);
  if (right < left) std::swap(left, right);
  const ShootClass left_class = classify_slope(kind, left, options);
  const ShootClass right_class = classify_slope(kind, right, options);
  auto decided = [](ShootClass c) { return c != ShootClass::Undecided; };
  if (!decided(left_class) || !decided(right_class) || left_class == right_class) {
    throw InvalidBracket("slope bracket [" + left.to_string(12) + ", " + right.to_string(12) +
                         "] does not separate a blow-up from a zero crossing");
  }
  while (right - left >= tol) {
    BigFloat mid = (left + right) / 2;
    const ShootClass c = classify_slope(kind, mid, options);
    if (!decided(c)) {
      throw ComputationError("trajectory with slope " + mid.to_string(15) + " is still undecided at x = " +
                             std::to_string(static_cast<double>(options.x_max * 100)));
    }
    (c == left_class ? left : right) = std::move(mid);
  }
  return (left + right) / 2;
}

}  // namespace tfh
