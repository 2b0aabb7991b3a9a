#include <algorithm>
#include <cmath>

#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"
#include "internal.hpp"

namespace ballgeo {

using detail::kDiskNetFactor;
using detail::require_net_step;
using detail::require_radius;

// ---- Euclidean R^n

EuclideanSpace::EuclideanSpace(std::size_t n) : n_(n) {
  if (n < 1 || n > Point::kCapacity) throw DomainError("euclidean dimension must be in [1, 6]");
}

std::string EuclideanSpace::key() const { return "euclidean_rn(n=" + std::to_string(n_) + ")"; }

double EuclideanSpace::distance(const Point& a, const Point& b) const {
  if (n_ == 1) return std::abs(a[0] - b[0]);
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

NetSet EuclideanSpace::ball_net(const BallPoint& ball, double eps) const {
  require_net_step(eps);
  require_radius(ball.radius);
  const Point& c = ball.center;
  const double r = ball.radius;
  if (n_ == 1) {
    std::vector<Point> pts;
    auto m = static_cast<long>(std::ceil(2.0 * r / eps));
    if (m == 0) return make_net(self(), {c}, 0.0, ball);
    for (long i = 0; i <= m; ++i) {
      pts.push_back({c[0] - r + 2.0 * r * static_cast<double>(i) / static_cast<double>(m)});
    }
    return make_net(self(), std::move(pts), r / static_cast<double>(m), ball);
  }
  if (n_ == 2) {
    return make_net(self(), detail::planar_disk_net(c[0], c[1], r, eps, false), kDiskNetFactor * eps, ball);
  }
  throw Unsupported("ball nets are only built for n <= 2");
}

std::vector<Point> EuclideanSpace::sphere_net(const Point& c, double t, double eps) const {
  require_net_step(eps);
  if (!(t > 0.0)) throw DomainError("sphere radius must be positive");
  if (n_ == 1) return {Point{c[0] - t}, Point{c[0] + t}};
  if (n_ == 2) return detail::planar_circle_net(c[0], c[1], t, eps, false);
  throw Unsupported("sphere nets are only built for n <= 2");
}

std::optional<std::pair<double, double>> EuclideanSpace::ball_interval(const BallPoint& ball) const {
  if (n_ != 1) return std::nullopt;
  return std::pair{ball.center[0] - ball.radius, ball.center[0] + ball.radius};
}

std::optional<Point> EuclideanSpace::midpoint(const Point& a, const Point& b) const {
  Point m;
  for (std::size_t i = 0; i < n_; ++i) m[i] = (a[i] + b[i]) / 2.0;
  return m;
}

std::optional<Point> EuclideanSpace::continue_geodesic(const Point& from, const Point& through,
                                                       double r) const {
  double d = distance(from, through);
  if (d == 0.0) return std::nullopt;
  Point p;
  for (std::size_t i = 0; i < n_; ++i) p[i] = through[i] + r * (through[i] - from[i]) / d;
  return p;
}

Point EuclideanSpace::sample_point(Rng& rng, double window) const {
  Point p;
  for (std::size_t i = 0; i < n_; ++i) p[i] = detail::uniform(rng, -window, window);
  return p;
}

// ---- taxicab plane

double TaxicabPlane::distance(const Point& a, const Point& b) const {
  return std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]);
}

namespace {

// Boundary of the l1 ball, each side split into m pieces of l1 length 2t/m.
std::vector<Point> diamond_rim(const Point& c, double t, long m) {
  std::vector<Point> out;
  const double sx[] = {1, -1, -1, 1};
  const double sy[] = {1, 1, -1, -1};
  for (int side = 0; side < 4; ++side) {
    for (long k = 0; k < m; ++k) {
      double lambda = static_cast<double>(k) / static_cast<double>(m);
      // from (sx t, 0) towards (0, sy t) rotated per quadrant
      double x = side % 2 == 0 ? (1.0 - lambda) * t : lambda * t;
      double y = side % 2 == 0 ? lambda * t : (1.0 - lambda) * t;
      out.push_back({c[0] + sx[side] * x, c[1] + sy[side] * y});
    }
  }
  return out;
}

}  // namespace

NetSet TaxicabPlane::ball_net(const BallPoint& ball, double eps) const {
  require_net_step(eps);
  require_radius(ball.radius);
  const Point& c = ball.center;
  const double r = ball.radius;
  if (r == 0.0) return make_net(self(), {c}, 0.0, ball);
  // rotated lattice {((i+j)h, (i-j)h)}: its l1 balls of radius h tile the plane
  const double h = 0.75 * eps;
  auto k = static_cast<long>(std::floor(r / h));
  std::vector<Point> pts;
  for (long a = -k; a <= k; ++a) {
    for (long b = -k; b <= k; ++b) {
      if (((a - b) % 2) != 0 || std::labs(a) + std::labs(b) > k) continue;
      pts.push_back({c[0] + static_cast<double>(a) * h, c[1] + static_cast<double>(b) * h});
    }
  }
  auto rim = diamond_rim(c, r, std::max(1L, static_cast<long>(std::ceil(2.0 * r / (eps / 2.0)))));
  pts.insert(pts.end(), rim.begin(), rim.end());
  return make_net(self(), std::move(pts), h + eps / 4.0, ball);
}

std::vector<Point> TaxicabPlane::sphere_net(const Point& c, double t, double eps) const {
  require_net_step(eps);
  if (!(t > 0.0)) throw DomainError("sphere radius must be positive");
  return diamond_rim(c, t, std::max(1L, static_cast<long>(std::ceil(2.0 * t / eps))));
}

std::optional<Point> TaxicabPlane::midpoint(const Point& a, const Point& b) const {
  return Point{(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0};
}

std::optional<Point> TaxicabPlane::continue_geodesic(const Point& from, const Point& through,
                                                     double r) const {
  double d = distance(from, through);
  if (d == 0.0) return std::nullopt;
  return Point{through[0] + r * (through[0] - from[0]) / d, through[1] + r * (through[1] - from[1]) / d};
}

Point TaxicabPlane::sample_point(Rng& rng, double window) const {
  double x = detail::uniform(rng, -window, window);
  return {x, detail::uniform(rng, -window, window)};
}

// ---- closed upper half-plane

double HalfPlane::distance(const Point& a, const Point& b) const {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

NetSet HalfPlane::ball_net(const BallPoint& ball, double eps) const {
  require_net_step(eps);
  require_radius(ball.radius);
  if (!contains(ball.center)) throw DomainError("ball center below the half-plane");
  const Point& c = ball.center;
  return make_net(self(), detail::planar_disk_net(c[0], c[1], ball.radius, eps, true), kDiskNetFactor * eps,
                  ball);
}

std::vector<Point> HalfPlane::sphere_net(const Point& c, double t, double eps) const {
  require_net_step(eps);
  if (!(t > 0.0)) throw DomainError("sphere radius must be positive");
  return detail::planar_circle_net(c[0], c[1], t, eps, true);
}

std::optional<Point> HalfPlane::midpoint(const Point& a, const Point& b) const {
  return Point{(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0};
}

std::optional<Point> HalfPlane::continue_geodesic(const Point& from, const Point& through, double r) const {
  double d = distance(from, through);
  if (d == 0.0) return std::nullopt;
  Point p{through[0] + r * (through[0] - from[0]) / d, through[1] + r * (through[1] - from[1]) / d};
  if (!contains(p)) return std::nullopt;
  return p;
}

Point HalfPlane::sample_point(Rng& rng, double window) const {
  double x = detail::uniform(rng, -window, window);
  return {x, detail::uniform(rng, 0.0, window)};
}

std::vector<std::pair<BallPoint, BallPoint>> HalfPlane::designated_witnesses() const {
  return {{BallPoint{{0.0, 1.0}, 0.0}, BallPoint{{0.0, 0.0}, 1.0}}};
}

std::optional<ExtendibilityProbe> HalfPlane::designated_failure() const {
  return ExtendibilityProbe{{0.0, 0.5}, {0.0, 2.0}, 1.0};
}

// ---- circle

CircleSpace::CircleSpace(double circumference) : circumference_(circumference) {
  if (!(circumference > 0.0) || !std::isfinite(circumference)) {
    throw DomainError("circumference must be positive");
  }
}

std::string CircleSpace::key() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "circle(L=%.17g)", circumference_);
  return buf;
}

bool CircleSpace::contains(const Point& p) const { return p[0] >= 0.0 && p[0] < circumference_; }

double CircleSpace::wrap(double angle) const {
  double w = std::fmod(angle, circumference_);
  if (w < 0.0) w += circumference_;
  if (w >= circumference_) w = 0.0;
  return w;
}

double CircleSpace::distance(const Point& a, const Point& b) const {
  double delta = std::abs(a[0] - b[0]);
  if (delta >= circumference_) delta = std::fmod(delta, circumference_);
  return std::min(delta, circumference_ - delta);
}

NetSet CircleSpace::ball_net(const BallPoint& ball, double eps) const {
  require_net_step(eps);
  require_radius(ball.radius);
  const double r = ball.radius;
  if (2.0 * r >= circumference_) {
    // the whole circle: one canonical net for every center
    auto m = static_cast<long>(std::ceil(circumference_ / eps));
    std::vector<Point> pts;
    for (long k = 0; k < m; ++k) pts.push_back({circumference_ * static_cast<double>(k) / static_cast<double>(m)});
    return make_net(self(), std::move(pts), circumference_ / (2.0 * static_cast<double>(m)), ball);
  }
  auto m = static_cast<long>(std::ceil(2.0 * r / eps));
  if (m == 0) return make_net(self(), {ball.center}, 0.0, ball);
  std::vector<Point> pts;
  for (long k = 0; k <= m; ++k) {
    pts.push_back({wrap(ball.center[0] - r + 2.0 * r * static_cast<double>(k) / static_cast<double>(m))});
  }
  return make_net(self(), std::move(pts), r / static_cast<double>(m), ball);
}

std::vector<Point> CircleSpace::sphere_net(const Point& c, double t, double eps) const {
  require_net_step(eps);
  if (!(t > 0.0)) throw DomainError("sphere radius must be positive");
  if (2.0 * t > circumference_) return {};
  if (2.0 * t == circumference_) return {Point{wrap(c[0] + t)}};
  return {Point{wrap(c[0] - t)}, Point{wrap(c[0] + t)}};
}

std::optional<Point> CircleSpace::midpoint(const Point& a, const Point& b) const {
  double delta = b[0] - a[0];
  double forward = delta < 0.0 ? delta + circumference_ : delta;
  double step = forward <= circumference_ / 2.0 ? forward / 2.0 : (forward - circumference_) / 2.0;
  return Point{wrap(a[0] + step)};
}

std::optional<Point> CircleSpace::continue_geodesic(const Point& from, const Point& through, double r) const {
  double delta = through[0] - from[0];
  double forward = delta < 0.0 ? delta + circumference_ : delta;
  if (forward == 0.0) return std::nullopt;
  double dir = forward <= circumference_ / 2.0 ? 1.0 : -1.0;
  return Point{wrap(through[0] + dir * r)};
}

Point CircleSpace::sample_point(Rng& rng, double) const {
  return {wrap(detail::uniform(rng, 0.0, circumference_))};
}

std::vector<std::pair<BallPoint, BallPoint>> CircleSpace::designated_witnesses() const {
  const double half = circumference_ / 2.0;
  const double unit = circumference_ / detail::kTwoPi;
  return {{BallPoint{{0.0}, half}, BallPoint{{unit}, half}}};
}

std::optional<ExtendibilityProbe> CircleSpace::designated_failure() const {
  const double unit = circumference_ / detail::kTwoPi;
  return ExtendibilityProbe{{0.0}, {unit}, 3.0 * unit};
}

// ---- pullback line

PullbackLine::PullbackLine(int n) : n_(n) {
  if (n < 2) throw DomainError("pullback index must be >= 2");
}

std::string PullbackLine::key() const { return "pullback_line(n=" + std::to_string(n_) + ")"; }

double PullbackLine::psi(double x) const { return x + std::sin(x) / n_; }

double PullbackLine::psi_inverse(double u) const {
  // |psi(x) - x| <= 1/n <= 1/2 brackets the root
  double lo = u - 1.0;
  double hi = u + 1.0;
  while (hi - lo > kRootTolerance) {
    double mid = lo + (hi - lo) / 2.0;
    if (mid == lo || mid == hi) break;
    (psi(mid) < u ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2.0;
}

double PullbackLine::distance(const Point& a, const Point& b) const { return std::abs(psi(a[0]) - psi(b[0])); }

std::optional<std::pair<double, double>> PullbackLine::ball_interval(const BallPoint& ball) const {
  double u = psi(ball.center[0]);
  return std::pair{psi_inverse(u - ball.radius), psi_inverse(u + ball.radius)};
}

NetSet PullbackLine::ball_net(const BallPoint& ball, double eps) const {
  require_net_step(eps);
  require_radius(ball.radius);
  if (ball.radius == 0.0) return make_net(self(), {ball.center}, 0.0, ball);
  auto [lo, hi] = *ball_interval(ball);
  // psi' <= 1 + 1/n, so an x-gap of eps/(1 + 1/n) is at most eps in d_n
  double step = eps / (1.0 + 1.0 / n_);
  auto m = std::max(1L, static_cast<long>(std::ceil((hi - lo) / step)));
  std::vector<Point> pts;
  for (long k = 0; k <= m; ++k) pts.push_back({lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(m)});
  return make_net(self(), std::move(pts), eps / 2.0 + kRootTolerance * 2.0, ball);
}

std::vector<Point> PullbackLine::sphere_net(const Point& c, double t, double eps) const {
  require_net_step(eps);
  if (!(t > 0.0)) throw DomainError("sphere radius must be positive");
  auto [lo, hi] = *ball_interval({c, t});
  return {Point{lo}, Point{hi}};
}

std::optional<Point> PullbackLine::midpoint(const Point& a, const Point& b) const {
  return Point{psi_inverse((psi(a[0]) + psi(b[0])) / 2.0)};
}

std::optional<Point> PullbackLine::continue_geodesic(const Point& from, const Point& through, double r) const {
  if (from[0] == through[0]) return std::nullopt;
  double dir = through[0] > from[0] ? 1.0 : -1.0;
  return Point{psi_inverse(psi(through[0]) + dir * r)};
}

Point PullbackLine::sample_point(Rng& rng, double window) const { return {detail::uniform(rng, -window, window)}; }

}  // namespace ballgeo
