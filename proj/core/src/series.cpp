#include "tfhankel/series.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "tfhankel/errors.hpp"

namespace tfh {

std::string_view to_string(EquationKind kind) {
  switch (kind) {
    case EquationKind::Atom:
      return "atom";
    case EquationKind::MagneticField:
      return "magnetic";
  }
  return "unknown";
}

std::optional<EquationKind> parse_equation(std::string_view name) {
  if (name == "atom") return EquationKind::Atom;
  if (name == "magnetic") return EquationKind::MagneticField;
  return std::nullopt;
}

SeriesTable SeriesTable::truncated(int new_order) const {
  if (new_order > order()) throw OrderExceeded("cannot truncate a table of order " + std::to_string(order()) + " to order " + std::to_string(new_order));
  SeriesTable out{kind, {}};
  out.coeffs.assign(coeffs.begin(), coeffs.begin() + new_order + 1);
  return out;
}

namespace {

const UniPoly& at(const std::vector<UniPoly>& f, int k) {
  static const UniPoly zero;
  if (k < 0 || k >= static_cast<int>(f.size())) return zero;
  return f[static_cast<std::size_t>(k)];
}

// Coefficient of t^m in f^3.
UniPoly cube_coefficient(const std::vector<UniPoly>& f, int m) {
  UniPoly out;
  for (int a = 0; a <= m; ++a) {
    if (at(f, a).is_zero()) continue;
    UniPoly inner;
    for (int b = 0; a + b <= m; ++b) {
      const UniPoly& fb = at(f, b);
      const UniPoly& fc = at(f, m - a - b);
      if (fb.is_zero() || fc.is_zero()) continue;
      inner += fb * fc;
    }
    out += at(f, a) * inner;
  }
  return out;
}

}  // namespace

UniPoly residual_coefficient(EquationKind kind, const std::vector<UniPoly>& f, int n) {
  UniPoly r;
  // t (f f'' + f'^2): coefficient n-1 of the bracket.
  for (int i = 0; i <= n - 1; ++i) {
    const int k = n - 1 - i;
    const UniPoly& fi = at(f, i);
    if (!fi.is_zero()) r += fi * at(f, k + 2) * BigRational((k + 2) * (k + 1));
    const UniPoly& fi1 = at(f, i + 1);
    if (!fi1.is_zero()) r += fi1 * at(f, k + 1) * BigRational((i + 1) * (k + 1));
  }
  // - f f'
  for (int i = 0; i <= n; ++i) {
    const UniPoly& fi = at(f, i);
    if (!fi.is_zero()) r -= fi * at(f, n - i + 1) * BigRational(n - i + 1);
  }
  switch (kind) {
    case EquationKind::Atom:
      if (n >= 2) r -= cube_coefficient(f, n - 2) * BigRational(2);
      break;
    case EquationKind::MagneticField:
      if (n >= 4) r -= at(f, n - 4) * BigRational(2);
      break;
  }
  return r;
}

SeriesTable expand(EquationKind kind, int order) {
  if (order < 5) throw OrderTooSmall("series order must be >= 5, got " + std::to_string(order));
  std::vector<UniPoly> f{UniPoly::constant(1), UniPoly(), UniPoly::variable()};
  f.reserve(static_cast<std::size_t>(order) + 1);
  for (int j = 3; j <= order; ++j) {
    f.emplace_back();
    const UniPoly without = residual_coefficient(kind, f, j - 1);
    f.back() = UniPoly::constant(1);
    const UniPoly with = residual_coefficient(kind, f, j - 1);
    const UniPoly slope = with - without;
    if (!slope.is_constant() || slope.is_zero()) {
      throw std::logic_error("order-" + std::to_string(j - 1) + " residual is not an invertible linear function of f_" +
                             std::to_string(j));
    }
    f.back() = without * BigRational(BigRational(-1) / slope.leading());
  }
  return SeriesTable{kind, std::move(f)};
}

std::vector<BigFloat> evaluate_at(const SeriesTable& table, const BigFloat& s_value, int up_to) {
  if (up_to > table.order()) {
    throw OrderExceeded("coefficient f_" + std::to_string(up_to) + " requested from a table of order " +
                        std::to_string(table.order()));
  }
  std::vector<BigFloat> out;
  out.reserve(static_cast<std::size_t>(up_to) + 1);
  for (int j = 0; j <= up_to; ++j) out.push_back(table.coeffs[static_cast<std::size_t>(j)](s_value));
  return out;
}

SeriesTable SeriesMemo::get(EquationKind kind, int order) {
  if (auto hit = peek(kind, order)) return *std::move(hit);
  SeriesTable fresh = expand(kind, order);
  std::unique_lock lock(mutex_);
  auto& slot = tables_[kind];
  if (slot.order() < fresh.order()) slot = fresh;
  return fresh;
}

void SeriesMemo::put(SeriesTable table) {
  std::unique_lock lock(mutex_);
  auto it = tables_.find(table.kind);
  if (it == tables_.end()) {
    tables_.emplace(table.kind, std::move(table));
  } else if (it->second.order() < table.order()) {
    it->second = std::move(table);
  }
}

std::optional<SeriesTable> SeriesMemo::peek(EquationKind kind, int order) const {
  std::shared_lock lock(mutex_);
  auto it = tables_.find(kind);
  if (it == tables_.end() || it->second.order() < order) return std::nullopt;
  return it->second.truncated(order);
}

}  // namespace tfh
