#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace ballgeo {

/// Coordinates of a point of an analytic model. The owning model decides how
/// many slots are used and what they mean (Cartesian, hyperboloid, angle,
/// edge id + offset for graph factors, concatenation for products).
struct Point {
  static constexpr std::size_t kCapacity = 6;
  std::array<double, kCapacity> c{};

  Point() = default;
  Point(std::initializer_list<double> values) {
    std::size_t i = 0;
    for (double v : values) c.at(i++) = v;
  }
  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }
  friend bool operator==(const Point&, const Point&) = default;
};

/// (center, radius) pair: a point of X x R>=0 and, through f, of Sigma(X).
struct BallPoint {
  Point center;
  double radius = 0.0;
};

}  // namespace ballgeo
