#include <algorithm>

#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo {

ProductMaxSpace::ProductMaxSpace(std::shared_ptr<const ModelSpace> x, std::shared_ptr<const ModelSpace> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (!x_ || !y_) throw DomainError("product needs two factors");
  if (x_->dimension() + y_->dimension() > Point::kCapacity) throw Unsupported("product has too many coordinates");
}

std::string ProductMaxSpace::key() const { return "product_max(" + x_->key() + "," + y_->key() + ")"; }

GroundTruth ProductMaxSpace::ground_truth() const {
  auto both = [](Truth a, Truth b) {
    if (a == Truth::no || b == Truth::no) return Truth::no;
    if (a == Truth::yes && b == Truth::yes) return Truth::yes;
    return Truth::unknown;
  };
  // the max metric has many midpoints between points differing in both factors
  return {both(x_->ground_truth().strongly_geodesically_complete, y_->ground_truth().strongly_geodesically_complete),
          Truth::no};
}

Point ProductMaxSpace::join(const Point& px, const Point& py) const {
  Point p;
  const std::size_t nx = x_->dimension();
  for (std::size_t i = 0; i < nx; ++i) p[i] = px[i];
  for (std::size_t i = 0; i < y_->dimension(); ++i) p[nx + i] = py[i];
  return p;
}

Point ProductMaxSpace::part_x(const Point& p) const {
  Point q;
  for (std::size_t i = 0; i < x_->dimension(); ++i) q[i] = p[i];
  return q;
}

Point ProductMaxSpace::part_y(const Point& p) const {
  Point q;
  const std::size_t nx = x_->dimension();
  for (std::size_t i = 0; i < y_->dimension(); ++i) q[i] = p[nx + i];
  return q;
}

bool ProductMaxSpace::contains(const Point& p) const { return x_->contains(part_x(p)) && y_->contains(part_y(p)); }

double ProductMaxSpace::distance(const Point& a, const Point& b) const {
  return std::max(x_->distance(part_x(a), part_x(b)), y_->distance(part_y(a), part_y(b)));
}

// B_t((x, y)) = B_t(x) x B_t(y) in the max metric.
NetSet ProductMaxSpace::ball_net(const BallPoint& ball, double eps) const {
  NetSet nx = x_->ball_net({part_x(ball.center), ball.radius}, eps);
  NetSet ny = y_->ball_net({part_y(ball.center), ball.radius}, eps);
  std::vector<Point> pts;
  pts.reserve(nx.points.size() * ny.points.size());
  for (const auto& a : nx.points) {
    for (const auto& b : ny.points) pts.push_back(join(a, b));
  }
  return make_net(self(), std::move(pts), std::max(nx.resolution, ny.resolution), ball);
}

std::vector<Point> ProductMaxSpace::sphere_net(const Point& c, double t, double eps) const {
  const Point cx = part_x(c);
  const Point cy = part_y(c);
  std::vector<Point> pts;
  auto sx = x_->sphere_net(cx, t, eps);
  auto sy = y_->sphere_net(cy, t, eps);
  NetSet bx = x_->ball_net({cx, t}, eps);
  NetSet by = y_->ball_net({cy, t}, eps);
  for (const auto& a : sx) {
    for (const auto& b : by.points) pts.push_back(join(a, b));
  }
  for (const auto& a : bx.points) {
    for (const auto& b : sy) pts.push_back(join(a, b));
  }
  return pts;
}

std::optional<Point> ProductMaxSpace::midpoint(const Point& a, const Point& b) const {
  auto mx = x_->midpoint(part_x(a), part_x(b));
  auto my = y_->midpoint(part_y(a), part_y(b));
  if (!mx || !my) return std::nullopt;
  return join(*mx, *my);
}

// Both factors move at rates d_X/D and d_Y/D, which keeps the max metric speed 1.
std::optional<Point> ProductMaxSpace::continue_geodesic(const Point& from, const Point& through,
                                                         double r) const {
  const double d = distance(from, through);
  if (d == 0.0) return std::nullopt;
  auto step = [&](const ModelSpace& m, const Point& f, const Point& t) -> std::optional<Point> {
    double df = m.distance(f, t);
    if (df == 0.0) return t;
    return m.continue_geodesic(f, t, r * df / d);
  };
  auto px = step(*x_, part_x(from), part_x(through));
  auto py = step(*y_, part_y(from), part_y(through));
  if (!px || !py) return std::nullopt;
  return join(*px, *py);
}

Point ProductMaxSpace::sample_point(Rng& rng, double window) const {
  Point a = x_->sample_point(rng, window);
  Point b = y_->sample_point(rng, window);
  return join(a, b);
}

std::vector<double> ProductMaxSpace::coordinates(const Point& p) const {
  auto out = x_->coordinates(part_x(p));
  auto more = y_->coordinates(part_y(p));
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace ballgeo
