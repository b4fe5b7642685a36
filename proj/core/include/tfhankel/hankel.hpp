#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tfhankel/big.hpp"
#include "tfhankel/matrix.hpp"
#include "tfhankel/poly.hpp"
#include "tfhankel/series.hpp"

namespace tfh {

/// Smallest and largest offset d accepted by the sequence tracker.
inline constexpr int kMinOffset = 3;
inline constexpr int kMaxOffset = 6;

/// Selects the determinant H_D^d = det[f_{i+j+d+1}], 0 <= i, j < D.
///
/// d >= 3 because f_4 is the first coefficient that depends on the slope.
struct HankelSpec {
  EquationKind kind = EquationKind::Atom;
  int d = kMinOffset;
  int D = 2;

  /// Throws std::invalid_argument unless d >= 3 and D >= 1.
  void validate() const;
  /// Highest series index the matrix touches: 2(D-1) + d + 1.
  int required_order() const noexcept { return 2 * (D - 1) + d + 1; }
};

/// Hankel matrix of the series table. Throws InsufficientOrder when the
/// table is too short (the message states the order needed).
PolyMatrix hankel_matrix(const SeriesTable& table, const HankelSpec& spec);

/// Exact determinant of hankel_matrix(table, spec) as a polynomial in s.
UniPoly hankel_poly(const SeriesTable& table, const HankelSpec& spec);

struct SequenceEntry {
  int D = 0;
  BigFloat s_root;
  /// 2 * s_root, i.e. the estimate of u'(0).
  BigFloat slope;
  /// log10 |slope_D - slope_{D-1}|; absent for the first entry.
  std::optional<BigFloat> L;
  /// True when L was clamped to -precision (successive roots agree to
  /// working precision).
  bool saturated = false;
  /// Real roots of H_D^d inside the search window.
  int candidates = 0;
};

struct RootSequence {
  EquationKind kind = EquationKind::Atom;
  int d = kMinOffset;
  int precision = 0;
  std::vector<SequenceEntry> entries;
};

struct Window {
  BigRational lo = -2;
  BigRational hi = 0;
};

struct TrackOptions {
  int d = kMinOffset;
  int D_max = 15;
  /// Decimal digits each root is refined to.
  int precision = 50;
  Window window{};
};

/// log10 |b - a|, or -precision when |b - a| < 10^-precision. The bool is
/// true in the saturated case.
std::pair<BigFloat, bool> log10_gap(const BigFloat& a, const BigFloat& b, int precision);

/// Follows the root of H_D^d that converges to u'(0)/2 for D = 2..D_max.
///
/// D = 2 takes the candidate nearest the window midpoint; every later D
/// takes the candidate nearest the previous selection (ties go to the more
/// negative root). Throws SequenceLost when a window holds no root and
/// DegenerateDeterminant when a determinant vanishes identically.
RootSequence track_sequence(const SeriesTable& table, const TrackOptions& options);
/// Same, expanding the series internally.
RootSequence track_sequence(EquationKind kind, const TrackOptions& options);

/// (D, L) pairs of the sequence, for plotting convergence.
/// Throws TooShort for fewer than two entries.
std::vector<std::pair<int, BigFloat>> diagnostics(const RootSequence& seq);

}  // namespace tfh
