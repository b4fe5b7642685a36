#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "tfhankel/big.hpp"
#include "tfhankel/poly.hpp"

namespace tfh {

/// Which Thomas-Fermi problem is being solved.
///
/// In the variables x = t^2, f(t) = sqrt(u(x)):
///   Atom:          t (f f'' + f'^2) - f f' - 2 t^2 f^3 = 0   (u'' = sqrt(u^3 / x))
///   MagneticField: t (f f'' + f'^2) - f f' - 2 t^4 f   = 0   (u'' = sqrt(x u))
/// with u(0) = 1, u(inf) = 0 in both cases.
enum class EquationKind { Atom, MagneticField };

/// "atom" or "magnetic".
std::string_view to_string(EquationKind kind);
/// Inverse of to_string; std::nullopt for anything else.
std::optional<EquationKind> parse_equation(std::string_view name);

/// Taylor coefficients f_0..f_order of f(t), each a polynomial in the
/// unknown s = f_2 = u'(0) / 2.
struct SeriesTable {
  EquationKind kind = EquationKind::Atom;
  std::vector<UniPoly> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  /// First `order + 1` coefficients as a new table.
  SeriesTable truncated(int order) const;

  friend bool operator==(const SeriesTable&, const SeriesTable&) = default;
};

/// Coefficient of t^n in the left-hand side of the transformed equation for
/// the truncated series f (missing coefficients read as zero).
UniPoly residual_coefficient(EquationKind kind, const std::vector<UniPoly>& f, int n);

/// Solves the transformed equation order by order: the t^(j-1) residual is
/// linear in f_j, which is read off and solved for every j >= 3.
/// Throws OrderTooSmall for order < 5.
SeriesTable expand(EquationKind kind, int order);

/// Numeric coefficients f_0..f_up_to at s = s_value, at the precision of
/// s_value. Throws OrderExceeded if up_to > table.order().
std::vector<BigFloat> evaluate_at(const SeriesTable& table, const BigFloat& s_value, int up_to);

/// Thread-safe memo of expanded tables. Keeps the longest table per kind and
/// serves truncations of it.
class SeriesMemo {
 public:
  SeriesTable get(EquationKind kind, int order);
  /// Seeds the memo with an externally loaded table (e.g. from a disk cache).
  void put(SeriesTable table);
  std::optional<SeriesTable> peek(EquationKind kind, int order) const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<EquationKind, SeriesTable> tables_;
};

}  // namespace tfh
