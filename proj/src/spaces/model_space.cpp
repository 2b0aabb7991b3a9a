#include <cmath>
#include <cstdio>
#include <sstream>

#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"
#include "internal.hpp"

namespace ballgeo {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes:
      return "yes";
    case Truth::no:
      return "no";
    case Truth::unknown:
      break;
  }
  return "unknown";
}

bool ModelSpace::contains(const Point& p) const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (!std::isfinite(p[i])) return false;
  }
  return true;
}

double ModelSpace::checked_distance(const Point& a, const Point& b) const {
  if (!contains(a) || !contains(b)) {
    throw DomainError("point " + format_point(contains(a) ? b : a) + " is outside " + id());
  }
  return distance(a, b);
}

std::optional<std::pair<double, double>> ModelSpace::ball_interval(const BallPoint&) const {
  return std::nullopt;
}

std::optional<Point> ModelSpace::midpoint(const Point&, const Point&) const { return std::nullopt; }

std::optional<Point> ModelSpace::continue_geodesic(const Point&, const Point&, double) const {
  return std::nullopt;
}

std::vector<double> ModelSpace::coordinates(const Point& p) const {
  return {p.c.begin(), p.c.begin() + static_cast<std::ptrdiff_t>(dimension())};
}

std::string ModelSpace::format_point(const Point& p, int digits) const {
  std::ostringstream out;
  out << "(";
  auto coords = coordinates(p);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, coords[i] == 0.0 ? 0.0 : coords[i]);
    out << (i ? "," : "") << buf;
  }
  out << ")";
  return out.str();
}

namespace detail {

void require_net_step(double eps) {
  if (!(eps > 0.0)) throw DomainError("net step must be positive");
}

void require_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("radius must be a finite nonnegative number");
}

std::vector<Point> planar_circle_net(double cx, double cy, double r, double eps, bool upper_only) {
  std::vector<Point> out;
  if (r == 0.0) {
    if (!upper_only || cy >= 0.0) out.push_back({cx, cy});
    return out;
  }
  auto m = static_cast<long>(std::ceil(kTwoPi * r / eps));
  if (m < 8) m = 8;
  for (long k = 0; k < m; ++k) {
    double a = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    double y = cy + r * std::sin(a);
    if (upper_only && y < 0.0) continue;
    out.push_back({cx + r * std::cos(a), y});
  }
  if (upper_only && cy < r) {
    double half = std::sqrt(std::max(0.0, r * r - cy * cy));
    out.push_back({cx - half, 0.0});
    out.push_back({cx + half, 0.0});
  }
  return out;
}

std::vector<Point> planar_disk_net(double cx, double cy, double r, double eps, bool upper_only) {
  std::vector<Point> out;
  auto k = static_cast<long>(std::floor(r / eps));
  for (long i = -k; i <= k; ++i) {
    for (long j = -k; j <= k; ++j) {
      double dx = static_cast<double>(i) * eps;
      double dy = static_cast<double>(j) * eps;
      if (dx * dx + dy * dy > r * r) continue;
      double y = cy + dy;
      if (upper_only && y < 0.0) continue;
      out.push_back({cx + dx, y});
    }
  }
  auto rim = planar_circle_net(cx, cy, r, eps / 2.0, upper_only);
  out.insert(out.end(), rim.begin(), rim.end());
  if (upper_only && cy < r) {
    double half = std::sqrt(std::max(0.0, r * r - cy * cy));
    auto m = static_cast<long>(std::ceil(2.0 * half / (eps / 2.0)));
    for (long i = 1; i < m; ++i) {
      out.push_back({cx - half + 2.0 * half * static_cast<double>(i) / static_cast<double>(m), 0.0});
    }
  }
  return out;
}

}  // namespace detail

}  // namespace ballgeo
