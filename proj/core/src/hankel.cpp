#include "tfhankel/hankel.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "tfhankel/errors.hpp"
#include "tfhankel/roots.hpp"

namespace tfh {

void HankelSpec::validate() const {
  if (d < kMinOffset) {
    throw std::invalid_argument("Hankel offset d must be >= " + std::to_string(kMinOffset) + ", got " +
                                std::to_string(d));
  }
  if (D < 1) throw std::invalid_argument("Hankel dimension D must be >= 1, got " + std::to_string(D));
}

PolyMatrix hankel_matrix(const SeriesTable& table, const HankelSpec& spec) {
  spec.validate();
  if (table.order() < spec.required_order()) {
    throw InsufficientOrder("H_" + std::to_string(spec.D) + "^" + std::to_string(spec.d) +
                            " needs a series of order " + std::to_string(spec.required_order()) + ", table has order " +
                            std::to_string(table.order()));
  }
  PolyMatrix m(spec.D);
  for (int i = 0; i < spec.D; ++i) {
    for (int j = 0; j < spec.D; ++j) m(i, j) = table.coeffs[static_cast<std::size_t>(i + j + spec.d + 1)];
  }
  return m;
}

UniPoly hankel_poly(const SeriesTable& table, const HankelSpec& spec) {
  return bareiss_det(hankel_matrix(table, spec));
}

std::pair<BigFloat, bool> log10_gap(const BigFloat& a, const BigFloat& b, int precision) {
  const BigFloat gap = abs(b - a);
  if (gap < pow10(-precision, gap.digits())) return {BigFloat(-precision, gap.digits()), true};
  return {log10(gap), false};
}

namespace {

std::string describe_all_roots(const UniPoly& p) {
  const BigRational bound = cauchy_bound(p);
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& r : real_roots(p, -bound, bound, kMinDigits)) {
    os << (first ? "" : ", ") << r.value.to_string(12);
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace

RootSequence track_sequence(const SeriesTable& table, const TrackOptions& options) {
  if (options.d < kMinOffset) {
    throw std::invalid_argument("d must be >= " + std::to_string(kMinOffset) +
                                " (f_4 is the first coefficient that depends on the slope), got " +
                                std::to_string(options.d));
  }
  if (options.D_max < 3) throw std::invalid_argument("D_max must be >= 3, got " + std::to_string(options.D_max));
  if (!(options.window.lo < options.window.hi) || options.window.lo < -2 || options.window.hi > 0) {
    throw std::invalid_argument("search window must satisfy -2 <= lo < hi <= 0");
  }

  RootSequence seq{table.kind, options.d, options.precision, {}};
  const BigRational midpoint = (options.window.lo + options.window.hi) / 2;
  const BigFloat tie_tolerance = pow10(-options.precision, options.precision);

  for (int D = 2; D <= options.D_max; ++D) {
    const HankelSpec spec{table.kind, options.d, D};
    const UniPoly h = hankel_poly(table, spec);
    const std::string label = "H_" + std::to_string(D) + "^" + std::to_string(options.d);
    if (h.is_zero()) throw DegenerateDeterminant(label + " vanishes identically");

    const auto roots = real_roots(h, options.window.lo, options.window.hi, options.precision);
    if (roots.empty()) {
      throw SequenceLost("no real root of " + label + " in the search window; real roots: " + describe_all_roots(h));
    }

    const BigFloat target = seq.entries.empty() ? BigFloat(midpoint, options.precision) : seq.entries.back().s_root;
    const RealRoot* best = &roots.front();
    BigFloat best_gap = abs(best->value - target);
    for (const auto& r : roots) {
      // Ascending order: an equal distance keeps the more negative root.
      const BigFloat gap = abs(r.value - target);
      if (gap + tie_tolerance < best_gap) {
        best = &r;
        best_gap = gap;
      }
    }

    SequenceEntry entry;
    entry.D = D;
    entry.s_root = best->value;
    entry.slope = best->value * 2;
    entry.candidates = static_cast<int>(roots.size());
    if (!seq.entries.empty()) {
      auto [L, saturated] = log10_gap(seq.entries.back().slope, entry.slope, options.precision);
      entry.L = std::move(L);
      entry.saturated = saturated;
    }
    seq.entries.push_back(std::move(entry));
  }
  return seq;
}

RootSequence track_sequence(EquationKind kind, const TrackOptions& options) {
  const int order = std::max(5, 2 * (options.D_max - 1) + options.d + 1);
  return track_sequence(expand(kind, order), options);
}

std::vector<std::pair<int, BigFloat>> diagnostics(const RootSequence& seq) {
  if (seq.entries.size() < 2) {
    throw TooShort("convergence diagnostics need at least two sequence entries, got " +
                   std::to_string(seq.entries.size()));
  }
  std::vector<std::pair<int, BigFloat>> out;
  for (std::size_t k = 1; k < seq.entries.size(); ++k) {
    const auto& e = seq.entries[k];
    if (e.L) {
      out.emplace_back(e.D, *e.L);
    } else {
      out.emplace_back(e.D, log10_gap(seq.entries[k - 1].slope, e.slope, seq.precision).first);
    }
  }
  return out;
}

}  // namespace tfh
