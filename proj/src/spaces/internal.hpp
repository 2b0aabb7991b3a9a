#pragma once

#include <cmath>
#include <vector>

#include "ballgeo/point.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo::detail {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr int kDyadicBits = 16;

/// Uniform in [0, 1) from the top 53 bits; same stream on every platform.
inline double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Rounds to a multiple of 2^-16 so sums and differences of samples stay exact.
inline double dyadic(double x) { return std::ldexp(std::round(std::ldexp(x, kDyadicBits)), -kDyadicBits); }

inline double uniform(Rng& rng, double lo, double hi) { return dyadic(lo + (hi - lo) * unit(rng)); }

/// Covering radius of planar_disk_net relative to eps: grid cell half-diagonal
/// plus a quarter of the boundary spacing.
inline constexpr double kDiskNetFactor = 0.70710678118654752440 + 0.25;

/// Square grid of spacing eps about (cx, cy) clipped to the disk of radius r,
/// plus boundary samples every eps/2. With `upper_only` the set is the disk
/// intersected with y >= 0 and its straight bottom edge is sampled too.
std::vector<Point> planar_disk_net(double cx, double cy, double r, double eps, bool upper_only);

/// Circle samples with arc gaps <= eps; with `upper_only`, the arc in y >= 0
/// including its endpoints on y = 0.
std::vector<Point> planar_circle_net(double cx, double cy, double r, double eps, bool upper_only);

void require_net_step(double eps);
void require_radius(double r);

}  // namespace ballgeo::detail
