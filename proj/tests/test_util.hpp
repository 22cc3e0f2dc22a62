#pragma once

#include <cmath>
#include <vector>

#include "subhardy/points.hpp"
#include "subhardy/symbol.hpp"

namespace testutil {

using subhardy::AnalyticSymbol;
using subhardy::cx;

inline cx random_unit_scaled(subhardy::detail::SplitMix64& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform01());
  const double th = 6.283185307179586 * rng.uniform01();
  return cx(r * std::cos(th), r * std::sin(th));
}

inline std::vector<cx> random_coeffs(subhardy::detail::SplitMix64& rng, int degree, double radius) {
  std::vector<cx> out(degree + 1);
  for (auto& c : out) c = random_unit_scaled(rng, radius);
  return out;
}

// A linear denominator with its only root at distance |w| in [1.15, 3] from
// the origin: zero-free on the closed disk by construction.
inline std::vector<cx> random_safe_denominator(subhardy::detail::SplitMix64& rng) {
  const double root_radius = 1.15 + 1.85 * rng.uniform01();
  const double th = 6.283185307179586 * rng.uniform01();
  const cx w(root_radius * std::cos(th), root_radius * std::sin(th));
  return {cx(1.0, 0.0), -1.0 / w};
}

// One random symbol of every constructor kind; index selects the kind so a
// sweep over kinds is easy.
inline AnalyticSymbol random_symbol_of_kind(subhardy::detail::SplitMix64& rng, int kind) {
  switch (kind % 6) {
    case 0:
      return AnalyticSymbol::polynomial(random_coeffs(rng, 1 + static_cast<int>(rng.next() % 4), 1.0));
    case 1:
      return AnalyticSymbol::constant(random_unit_scaled(rng, 2.0));
    case 2:
      return AnalyticSymbol::blaschke(random_unit_scaled(rng, 0.8));
    case 3:
      return AnalyticSymbol::rational(random_coeffs(rng, 2, 1.0), random_safe_denominator(rng));
    case 4:
      return random_symbol_of_kind(rng, 0) + random_symbol_of_kind(rng, 3);
    default:
      return AnalyticSymbol::scale(random_unit_scaled(rng, 1.5),
                                   random_symbol_of_kind(rng, 2) * random_symbol_of_kind(rng, 0));
  }
}

}  // namespace testutil
