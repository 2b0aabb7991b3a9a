#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ballgeo/exact.hpp"
#include "ballgeo/metric_graph.hpp"
#include "ballgeo/point.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo {

/// Breakpoints of an arc-length parameterized curve on a graph.
struct GraphSegment {
  std::vector<GraphPoint> points;
  std::vector<Exact> params;
};

/// Breakpoints of an arc-length parameterized curve on an analytic model.
struct Segment {
  std::vector<Point> points;
  std::vector<double> params;
};

/// Sum of sub-edge lengths; consecutive points must lie on a common edge.
Exact path_length(const GraphSpace& space, const std::vector<GraphPoint>& polyline);
/// Inscribed polygon length of curve: [0, 1] -> X over 2^depth equal steps.
double path_length(const ModelSpace& space, const std::function<Point(double)>& curve, int depth);
/// Polyline interpolated linearly in coordinates, each piece split 2^depth times.
double path_length(const ModelSpace& space, const std::vector<Point>& polyline, int depth);

/// Breakpoints with params given by cumulative distances between neighbours.
GraphSegment graph_segment(const GraphSpace& space, std::vector<GraphPoint> points);
Segment segment(const ModelSpace& space, std::vector<Point> points);

struct RealizingCheck {
  bool realizing = false;
  double deviation = 0.0;
  /// Graph checks only.
  std::optional<Exact> exact_deviation;
};

/// max over breakpoint pairs of |d(p_i, p_j) - |t_i - t_j||, exact.
RealizingCheck is_distance_realizing(const GraphSpace& space, const GraphSegment& segment);
RealizingCheck is_distance_realizing(const ModelSpace& space, const Segment& segment, double tol);

enum class Verdict { holds, fails, inconclusive };
std::string to_string(Verdict v);

/// One (y, r) test of the sphere criterion at x.
struct GraphSphereCheck {
  GraphPoint y;
  Exact r;
  Verdict verdict = Verdict::inconclusive;
  /// Sphere point with d(y, p) = d(y, x) + r when the check holds.
  std::optional<GraphPoint> p;
  /// max over the sphere of d(y, .); empty when the sphere is empty.
  std::optional<Exact> best;
  Exact target;
  /// The r-ball about x reaches an open end of the window.
  bool boundary_affected = false;
};

struct GraphExtendibility {
  GraphPoint x;
  Verdict verdict = Verdict::inconclusive;
  std::vector<GraphSphereCheck> checks;
  std::string sampling;
};

struct SphereCheck {
  Point y;
  double r = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Point> p;
  double best = 0.0;
  double target = 0.0;
  /// target - best; holds below tolerance, certified failure above it.
  double margin = 0.0;
  double tolerance = 0.0;
};

struct Extendibility {
  Point x;
  Verdict verdict = Verdict::inconclusive;
  std::vector<SphereCheck> checks;
  std::string sampling;
};

/// Exact sphere criterion. Failures of boundary-affected checks are reported
/// as inconclusive: the window may hide the continuation.
GraphExtendibility extendibility_at(const GraphSpace& space, const GraphPoint& x, const std::vector<GraphPoint>& ys,
                                    const std::vector<Exact>& radii);

/// Sphere-net criterion with tolerance 1e-6 + 2 * eps. Candidates are the
/// continuation of the geodesic from y through x, then the sphere net when
/// the continuation does not settle the check.
Extendibility extendibility_at(const ModelSpace& space, const Point& x, const std::vector<Point>& ys,
                               const std::vector<double>& radii, double eps);

inline constexpr double kExtendibilityTolerance = 1e-6;

/// Default radius grid {2^-3, ..., 2^3}.
std::vector<double> default_radii();
std::vector<Exact> default_exact_radii();

struct ExtendibleSet {
  std::vector<GraphPoint> holds;
  std::vector<GraphPoint> fails;
  std::vector<GraphPoint> inconclusive;
  /// Candidates within the fixture's boundary margin of an open end; not tested.
  std::vector<GraphPoint> boundary;
  std::vector<GraphExtendibility> details;
};

/// Graph models only; ys defaults to the candidates themselves.
ExtendibleSet extendible_set(const ModelSpace& space, const std::vector<GraphPoint>& candidates,
                             std::optional<std::vector<GraphPoint>> ys, const std::vector<Exact>& radii);

struct GraphMinCut {
  /// Geodesic from x to q = segment.points.back(); minimizing.
  GraphSegment segment;
  /// Arc-length parameter of q, past which the extension stops minimizing.
  Exact failure_parameter;
  /// A point just past q on the extension, with its walk length and true distance.
  GraphPoint beyond;
  Exact beyond_parameter;
  Exact beyond_distance;
};

/// Depth-first search over non-reversing edge walks from x; returns the
/// witness with the smallest failure parameter found within `budget` edge
/// steps. Empty is not a certificate that MinCut(x) is empty.
std::optional<GraphMinCut> mincut_witness(const GraphSpace& space, const GraphPoint& x, std::size_t budget = 10000);

struct MinCut {
  Segment segment;
  double failure_parameter = 0.0;
};

/// Follows the geodesic from x through `toward`, scanning d(x, gamma(s)) = s
/// up to s_max with step h and bisecting the first loss to 1e-12.
std::optional<MinCut> mincut_witness(const ModelSpace& space, const Point& x, const Point& toward, double s_max,
                                     double h = 1e-2);

}  // namespace ballgeo
