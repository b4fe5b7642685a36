#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tfhankel/big.hpp"
#include "tfhankel/series.hpp"

namespace tfh {

// Direct integration of u'' = sqrt(u^3/x) (atom) or u'' = sqrt(x u)
// (magnetic field) from u(0) = 1 with a trial slope, used to cross-check
// the Hankel slopes by shooting. Runs in long double; aims at ~10 digits.

enum class ShootClass { BlowsUp, CrossesZero, Undecided };

struct ShootOutcome {
  ShootClass classification = ShootClass::Undecided;
  /// Where u passed the blow-up threshold or reached zero.
  std::optional<BigFloat> x_event;
};

struct TrajectorySample {
  BigFloat x;
  BigFloat u;
  BigFloat du;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  long accepted_steps = 0;
  long rejected_steps = 0;
  /// Start of the numerical integration and the series-derived state there.
  TrajectorySample start;
};

/// u above this value classifies a shot as BlowsUp.
inline constexpr long double kBlowUpThreshold = 10.0L;
/// Terms of the series expansion used to step off the singular origin.
inline constexpr int kStartSeriesOrder = 30;

/// Integrates the initial-value problem with u'(0) = slope up to x_max (or
/// the first event) with local error tolerance tol, sampling u and u' at
/// `outputs`. The first step starts at a small x_0 > 0 reached through the
/// series solution. Throws StepUnderflow if the step size collapses and
/// std::invalid_argument for tol <= 0 or x_max <= 0.
std::pair<Trajectory, ShootOutcome> integrate_ivp(EquationKind kind, const BigFloat& slope, const BigFloat& x_max,
                                                  const BigFloat& tol, std::span<const BigFloat> outputs = {});

struct ShootOptions {
  /// Local error tolerance of each trajectory.
  long double integrator_tol = 1e-17L;
  /// Trajectories still undecided here are extended up to 100 x_max.
  long double x_max = 1e4L;
};

/// Bisection on u'(0) between a slope that blows up and one that crosses
/// zero, until the bracket is narrower than tol; returns the midpoint.
/// Throws InvalidBracket if the endpoints classify alike.
BigFloat shoot_slope(EquationKind kind, const BigFloat& lo, const BigFloat& hi, const BigFloat& tol,
                     const ShootOptions& options = {});

/// Classification of a single trial slope, as used by shoot_slope.
ShootClass classify_slope(EquationKind kind, const BigFloat& slope, const ShootOptions& options = {});

}  // namespace tfh
