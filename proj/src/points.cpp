#include "subhardy/points.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace subhardy {

namespace {

double min_pairwise_distance(const std::vector<DiskPoint>& pts) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::min(d, std::abs(pts[i].value() - pts[j].value()));
  return pts.size() > 1 ? d : 0.0;
}

}  // namespace

PointSet polar_grid(int n_radii, int n_angles, double rho_max) {
  if (n_radii < 1 || n_angles < 1 || !(rho_max > 0.0 && rho_max < 1.0)) {
    throw std::domain_error("polar_grid: need n_radii, n_angles >= 1 and 0 < rho_max < 1");
  }
  PointSet out;
  out.rho_max = rho_max;
  out.seed = 0;
  out.points.emplace_back(cx(0.0, 0.0));
  for (int j = 1; j <= n_radii; ++j) {
    const double r = rho_max * j / n_radii;
    for (int k = 0; k < n_angles; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n_angles;
      out.points.emplace_back(cx(r * std::cos(th), r * std::sin(th)));
    }
  }
  out.min_separation = min_pairwise_distance(out.points);
  return out;
}

PointSet random_points(int n, double rho_max, std::uint64_t seed) {
  if (n < 1 || !(rho_max > 0.0 && rho_max < 1.0)) {
    throw std::domain_error("random_points: need n >= 1 and 0 < rho_max < 1");
  }
  constexpr double kSeparation = 1e-3;
  constexpr long kMaxAttempts = 1000000;

  PointSet out;
  out.rho_max = rho_max;
  out.seed = seed;
  detail::SplitMix64 rng(seed);
  long attempts = 0;
  while (static_cast<int>(out.points.size()) < n) {
    if (++attempts > kMaxAttempts) {
      throw SamplingError("random_points: could not satisfy separation constraint");
    }
    const double r = rho_max * std::sqrt(rng.uniform01());
    const double th = 2.0 * std::numbers::pi * rng.uniform01();
    const cx cand(r * std::cos(th), r * std::sin(th));
    bool ok = true;
    for (const auto& p : out.points) {
      if (std::abs(p.value() - cand) < kSeparation) {
        ok = false;
        break;
      }
    }
    if (ok) out.points.emplace_back(cand);
  }
  out.min_separation = min_pairwise_distance(out.points);
  return out;
}

}  // namespace subhardy
