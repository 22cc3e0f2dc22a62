#pragma once

#include <cstdint>
#include <vector>

#include "subhardy/symbol.hpp"

namespace subhardy {

namespace detail {

// splitmix64; the fixed generator behind every sampled decision, so verdicts
// reproduce bit-for-bit.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace detail

// A finite, well-separated sample of the open disk.
struct PointSet {
  std::vector<DiskPoint> points;
  double rho_max = 0.9;
  double min_separation = 0.0;  // actual minimum pairwise distance
  std::uint64_t seed = 0;       // 0 for deterministic grids

  std::size_t size() const { return points.size(); }
  const DiskPoint& operator[](std::size_t i) const { return points[i]; }
};

// Origin plus n_radii * n_angles points at radii j*rho_max/n_radii and
// equispaced angles. Deterministic ordering: origin, then (radius, angle)
// lexicographic.
PointSet polar_grid(int n_radii, int n_angles, double rho_max);

// n uniform points on the disk of radius rho_max, rejection-resampled to a
// pairwise separation of 1e-3. Bit-reproducible for a given seed.
PointSet random_points(int n, double rho_max, std::uint64_t seed);

}  // namespace subhardy
