#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ballgeo/exact.hpp"
#include "ballgeo/interval_union.hpp"
#include "ballgeo/point.hpp"

namespace ballgeo {

class ModelSpace;

/// Finite sample of a compact set of an analytic model.
///
/// `resolution` is the builder's covering guarantee: every point of the
/// represented set lies within `resolution` of some listed point, and every
/// listed point lies in the set. When `ball` is present the represented set
/// is exactly that closed ball, and distances to it are taken in closed form.
struct NetSet {
  std::shared_ptr<const ModelSpace> model;
  std::vector<Point> points;
  double resolution = 0.0;
  std::optional<BallPoint> ball;
};

NetSet make_net(std::shared_ptr<const ModelSpace> model, std::vector<Point> points, double resolution,
                std::optional<BallPoint> ball = std::nullopt);

using CompactSet = std::variant<IntervalUnion, NetSet>;
using AnyPoint = std::variant<GraphPoint, Point>;

struct HausdorffResult {
  double value = 0.0;
  double error_bound = 0.0;
  /// Set for interval-union inputs; `value` is its rounding.
  std::optional<Exact> exact_value;
  /// Maximizer of sup_{a in A} dist(a, B).
  AnyPoint witness_a;
  /// Maximizer of sup_{b in B} dist(b, A).
  AnyPoint witness_b;
};

Exact dist_point_to_set(const GraphPoint& x, const IntervalUnion& set);
/// Within set.resolution of the true distance to the represented set.
double dist_point_to_set(const Point& x, const NetSet& set);
/// Variant dispatch; throws RepresentationMismatch when kinds differ.
double dist_point_to_set(const AnyPoint& x, const CompactSet& set);

HausdorffResult hausdorff(const IntervalUnion& a, const IntervalUnion& b);
HausdorffResult hausdorff(const NetSet& a, const NetSet& b);
HausdorffResult hausdorff(const CompactSet& a, const CompactSet& b);

/// Hausdorff distance between [a, b] and [c, d] on the real line.
double hausdorff_intervals(double a, double b, double c, double d);
Exact hausdorff_intervals(const Exact& a, const Exact& b, const Exact& c, const Exact& d);

/// Closed tubular neighbourhood {x : dist(x, A) <= r}.
IntervalUnion tubular(const IntervalUnion& set, const Exact& r);
/// Net of the dilation; resolution grows to set.resolution + step.
NetSet tubular(const NetSet& set, double r, double step);

}  // namespace ballgeo
