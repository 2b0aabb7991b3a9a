#include <cmath>

#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"
#include "internal.hpp"

namespace ballgeo {

double HyperbolicPlane::minkowski(const Point& a, const Point& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Point HyperbolicPlane::lift(double x1, double x2) { return {std::sqrt(1.0 + x1 * x1 + x2 * x2), x1, x2}; }

bool HyperbolicPlane::contains(const Point& p) const {
  if (!(p[0] > 0.0) || !std::isfinite(p[0]) || !std::isfinite(p[1]) || !std::isfinite(p[2])) return false;
  return std::abs(minkowski(p, p) + 1.0) <= 1e-9 * p[0] * p[0];
}

// 2 asinh(|a - b|_L / 2) stays accurate for nearby points, unlike acosh(-<a,b>).
double HyperbolicPlane::distance(const Point& a, const Point& b) const {
  Point d{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  double q = minkowski(d, d);
  return 2.0 * std::asinh(std::sqrt(std::max(0.0, q)) / 2.0);
}

Point HyperbolicPlane::exp_polar(const Point& base, double rho, double theta) {
  const double sh = std::sinh(rho);
  const Point v{std::cosh(rho), sh * std::cos(theta), sh * std::sin(theta)};
  const double c0 = base[0];
  const double c1 = base[1];
  const double c2 = base[2];
  const double k = 1.0 + c0;
  // boost taking the origin (1, 0, 0) to base
  return {c0 * v[0] + c1 * v[1] + c2 * v[2],
          c1 * v[0] + (1.0 + c1 * c1 / k) * v[1] + (c1 * c2 / k) * v[2],
          c2 * v[0] + (c1 * c2 / k) * v[1] + (1.0 + c2 * c2 / k) * v[2]};
}

namespace {

void ring(std::vector<Point>& out, const Point& base, double rho, double eps) {
  if (rho == 0.0) {
    out.push_back(base);
    return;
  }
  auto m = static_cast<long>(std::ceil(detail::kTwoPi * std::sinh(rho) / eps));
  if (m < 6) m = 6;
  for (long k = 0; k < m; ++k) {
    out.push_back(HyperbolicPlane::exp_polar(base, rho, detail::kTwoPi * static_cast<double>(k) / static_cast<double>(m)));
  }
}

}  // namespace

// Rings every eps in radius, each with arc gaps <= eps: a point is eps/2
// radially from a ring and eps/2 along it from a sample.
NetSet HyperbolicPlane::ball_net(const BallPoint& ball, double eps) const {
  detail::require_net_step(eps);
  detail::require_radius(ball.radius);
  if (!contains(ball.center)) throw DomainError("ball center is not on the hyperboloid");
  std::vector<Point> pts;
  auto k = static_cast<long>(std::ceil(ball.radius / eps));
  for (long i = 0; i < k; ++i) ring(pts, ball.center, static_cast<double>(i) * eps, eps);
  ring(pts, ball.center, ball.radius, eps);
  return make_net(self(), std::move(pts), eps, ball);
}

std::vector<Point> HyperbolicPlane::sphere_net(const Point& c, double t, double eps) const {
  detail::require_net_step(eps);
  if (!(t > 0.0)) throw DomainError("sphere radius must be positive");
  std::vector<Point> pts;
  ring(pts, c, t, eps);
  return pts;
}

std::optional<Point> HyperbolicPlane::midpoint(const Point& a, const Point& b) const {
  Point s{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  double norm = std::sqrt(-minkowski(s, s));
  return Point{s[0] / norm, s[1] / norm, s[2] / norm};
}

std::optional<Point> HyperbolicPlane::continue_geodesic(const Point& from, const Point& through,
                                                        double r) const {
  double d = distance(from, through);
  if (d == 0.0) return std::nullopt;
  // unit tangent at `from` pointing to `through`
  Point u;
  for (int i = 0; i < 3; ++i) u[i] = (through[i] - from[i] * std::cosh(d)) / std::sinh(d);
  double ch = std::cosh(d + r);
  double sh = std::sinh(d + r);
  Point p;
  for (int i = 0; i < 3; ++i) p[i] = from[i] * ch + u[i] * sh;
  return p;
}

Point HyperbolicPlane::sample_point(Rng& rng, double window) const {
  double rho = detail::uniform(rng, 0.0, window);
  double theta = detail::uniform(rng, 0.0, detail::kTwoPi);
  return exp_polar({1.0, 0.0, 0.0}, rho, theta);
}

std::vector<double> HyperbolicPlane::coordinates(const Point& p) const { return {p[0], p[1], p[2]}; }

}  // namespace ballgeo
