#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ballgeo/compact_set.hpp"
#include "ballgeo/exact.hpp"
#include "ballgeo/interval_union.hpp"
#include "ballgeo/metric_graph.hpp"
#include "ballgeo/point.hpp"

namespace ballgeo {

enum class Truth { yes, no, unknown };
std::string to_string(Truth t);

struct GroundTruth {
  Truth strongly_geodesically_complete = Truth::unknown;
  Truth unique_midpoints = Truth::unknown;
};

/// (x, y, r) for the sphere criterion: some p on the r-sphere about x with
/// d(y, p) = d(y, x) + r.
struct ExtendibilityProbe {
  Point x;
  Point y;
  double r = 0.0;
};

using Rng = std::mt19937_64;

class GraphSpace;

/// Common contract of every model length space.
class ModelSpace : public std::enable_shared_from_this<ModelSpace> {
 public:
  virtual ~ModelSpace() = default;

  /// Catalog id, e.g. "taxicab_r2".
  virtual std::string id() const = 0;
  /// Id plus parameters; two sets are comparable only when keys agree.
  virtual std::string key() const { return id(); }
  /// Number of coordinate slots of Point used by this model.
  virtual std::size_t dimension() const = 0;
  virtual GroundTruth ground_truth() const = 0;

  virtual bool contains(const Point& p) const;
  virtual double distance(const Point& a, const Point& b) const = 0;
  /// distance() after carrier checks on both arguments.
  double checked_distance(const Point& a, const Point& b) const;

  /// Net of the closed ball with resolution <= eps; the ball itself is recorded.
  virtual NetSet ball_net(const BallPoint& ball, double eps) const = 0;
  /// Net of the metric sphere {p : d(c, p) = t}; may be empty.
  virtual std::vector<Point> sphere_net(const Point& c, double t, double eps) const = 0;
  /// For line models metrized by |phi(a) - phi(b)| with phi increasing, where
  /// balls are intervals: the endpoints.
  virtual std::optional<std::pair<double, double>> ball_interval(const BallPoint& ball) const;

  virtual std::optional<Point> midpoint(const Point& a, const Point& b) const;
  /// Point at arc length r past `through` on the local geodesic from `from`
  /// through `through`; empty when the geodesic cannot be continued or the
  /// model has no continuation rule. The result need not be minimizing.
  virtual std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const;

  virtual Point sample_point(Rng& rng, double window) const = 0;

  /// Ball pairs at which f is known to fail to be an isometry.
  virtual std::vector<std::pair<BallPoint, BallPoint>> designated_witnesses() const { return {}; }
  virtual std::optional<ExtendibilityProbe> designated_failure() const { return std::nullopt; }

  virtual std::vector<double> coordinates(const Point& p) const;
  std::string format_point(const Point& p, int digits = 6) const;

  virtual const GraphSpace* as_graph() const { return nullptr; }

  std::shared_ptr<const ModelSpace> self() const { return shared_from_this(); }
};

/// Euclidean R^n, 1 <= n <= 6 (nets for n <= 2).
class EuclideanSpace final : public ModelSpace {
 public:
  explicit EuclideanSpace(std::size_t n);
  std::string id() const override { return "euclidean_rn"; }
  std::string key() const override;
  std::size_t dimension() const override { return n_; }
  GroundTruth ground_truth() const override { return {Truth::yes, Truth::yes}; }
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  std::optional<std::pair<double, double>> ball_interval(const BallPoint& ball) const override;
  std::optional<Point> midpoint(const Point& a, const Point& b) const override;
  std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const override;
  Point sample_point(Rng& rng, double window) const override;

 private:
  std::size_t n_;
};

/// R^2 with the l1 metric.
class TaxicabPlane final : public ModelSpace {
 public:
  std::string id() const override { return "taxicab_r2"; }
  std::size_t dimension() const override { return 2; }
  GroundTruth ground_truth() const override { return {Truth::yes, Truth::no}; }
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  std::optional<Point> midpoint(const Point& a, const Point& b) const override;
  std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const override;
  Point sample_point(Rng& rng, double window) const override;
};

/// Hyperbolic plane in the hyperboloid model: (x0, x1, x2), -x0^2 + x1^2 + x2^2 = -1, x0 > 0.
class HyperbolicPlane final : public ModelSpace {
 public:
  std::string id() const override { return "hyperbolic_plane"; }
  std::size_t dimension() const override { return 3; }
  GroundTruth ground_truth() const override { return {Truth::yes, Truth::yes}; }
  bool contains(const Point& p) const override;
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  std::optional<Point> midpoint(const Point& a, const Point& b) const override;
  std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const override;
  Point sample_point(Rng& rng, double window) const override;
  std::vector<double> coordinates(const Point& p) const override;

  static Point lift(double x1, double x2);
  /// exp at `base` of the tangent vector of length rho in direction theta
  /// (angles measured in the frame transported from the origin).
  static Point exp_polar(const Point& base, double rho, double theta);
  static double minkowski(const Point& a, const Point& b);
};

/// Closed upper half-plane y >= 0 with the restricted Euclidean metric.
class HalfPlane final : public ModelSpace {
 public:
  std::string id() const override { return "halfplane"; }
  std::size_t dimension() const override { return 2; }
  GroundTruth ground_truth() const override { return {Truth::no, Truth::yes}; }
  bool contains(const Point& p) const override { return p[1] >= 0.0; }
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  std::optional<Point> midpoint(const Point& a, const Point& b) const override;
  std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const override;
  Point sample_point(Rng& rng, double window) const override;
  std::vector<std::pair<BallPoint, BallPoint>> designated_witnesses() const override;
  std::optional<ExtendibilityProbe> designated_failure() const override;
};

/// Circle of the given circumference with its arc-length metric; points are angles in [0, L).
class CircleSpace : public ModelSpace {
 public:
  explicit CircleSpace(double circumference = 2.0 * M_PI);
  std::string id() const override { return "circle"; }
  std::string key() const override;
  std::size_t dimension() const override { return 1; }
  GroundTruth ground_truth() const override { return {Truth::no, Truth::no}; }
  bool contains(const Point& p) const override;
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  std::optional<Point> midpoint(const Point& a, const Point& b) const override;
  std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const override;
  Point sample_point(Rng& rng, double window) const override;
  std::vector<std::pair<BallPoint, BallPoint>> designated_witnesses() const override;
  std::optional<ExtendibilityProbe> designated_failure() const override;

  double circumference() const { return circumference_; }
  double wrap(double angle) const;

 protected:
  double circumference_;
};

/// Real line with d_n(a, b) = |psi_n(a) - psi_n(b)|, psi_n(x) = x + sin(x)/n, n >= 2.
class PullbackLine final : public ModelSpace {
 public:
  explicit PullbackLine(int n);
  std::string id() const override { return "pullback_line"; }
  std::string key() const override;
  std::size_t dimension() const override { return 1; }
  GroundTruth ground_truth() const override { return {Truth::yes, Truth::yes}; }
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  std::optional<std::pair<double, double>> ball_interval(const BallPoint& ball) const override;
  std::optional<Point> midpoint(const Point& a, const Point& b) const override;
  std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const override;
  Point sample_point(Rng& rng, double window) const override;

  int index() const { return n_; }
  double psi(double x) const;
  /// Inverse of psi by bisection to kRootTolerance.
  double psi_inverse(double u) const;
  static constexpr double kRootTolerance = 1e-12;

 private:
  int n_;
};

/// X x Y with d((x, y), (a, b)) = max(d_X(x, a), d_Y(y, b)).
class ProductMaxSpace final : public ModelSpace {
 public:
  ProductMaxSpace(std::shared_ptr<const ModelSpace> x, std::shared_ptr<const ModelSpace> y);
  std::string id() const override { return "product_max"; }
  std::string key() const override;
  std::size_t dimension() const override { return x_->dimension() + y_->dimension(); }
  GroundTruth ground_truth() const override;
  bool contains(const Point& p) const override;
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  std::optional<Point> midpoint(const Point& a, const Point& b) const override;
  std::optional<Point> continue_geodesic(const Point& from, const Point& through, double r) const override;
  Point sample_point(Rng& rng, double window) const override;
  std::vector<double> coordinates(const Point& p) const override;

  const ModelSpace& factor_x() const { return *x_; }
  const ModelSpace& factor_y() const { return *y_; }
  std::shared_ptr<const ModelSpace> factor_x_ptr() const { return x_; }
  std::shared_ptr<const ModelSpace> factor_y_ptr() const { return y_; }
  Point join(const Point& px, const Point& py) const;
  Point part_x(const Point& p) const;
  Point part_y(const Point& p) const;

 private:
  std::shared_ptr<const ModelSpace> x_;
  std::shared_ptr<const ModelSpace> y_;
};

/// Exact ball (center, radius) of a graph model.
struct GraphBall {
  GraphPoint center;
  Exact radius;
};

struct GraphProbe {
  GraphPoint x;
  GraphPoint y;
  Exact r;
};

/// Metric-graph model. Exact operations use GraphPoint/Exact; the analytic
/// interface encodes a point as (edge id, offset) in double precision so
/// graph models can serve as product factors.
class GraphSpace final : public ModelSpace {
 public:
  struct Fixture {
    std::string id;
    std::string key;
    std::shared_ptr<const MetricGraph> graph;
    GroundTruth truth;
    /// Points within this distance of an open end are boundary-affected.
    Exact boundary_margin;
    std::vector<std::pair<GraphBall, GraphBall>> designated_witnesses;
    std::optional<GraphProbe> designated_failure;
  };

  explicit GraphSpace(Fixture fixture);

  std::string id() const override { return fixture_.id; }
  std::string key() const override { return fixture_.key; }
  std::size_t dimension() const override { return 2; }
  GroundTruth ground_truth() const override { return fixture_.truth; }
  bool contains(const Point& p) const override;
  double distance(const Point& a, const Point& b) const override;
  NetSet ball_net(const BallPoint& ball, double eps) const override;
  std::vector<Point> sphere_net(const Point& c, double t, double eps) const override;
  Point sample_point(Rng& rng, double window) const override;
  std::vector<double> coordinates(const Point& p) const override;
  const GraphSpace* as_graph() const override { return this; }

  const MetricGraph& graph() const { return *fixture_.graph; }
  const std::shared_ptr<const MetricGraph>& graph_ptr() const { return fixture_.graph; }

  Exact distance(const GraphPoint& a, const GraphPoint& b) const;
  IntervalUnion closed_ball(const GraphPoint& x, const Exact& t) const;
  IntervalUnion closed_ball(const GraphBall& ball) const { return closed_ball(ball.center, ball.radius); }
  /// Exact finite set {p : d(x, p) = t}, canonical points.
  std::vector<GraphPoint> sphere(const GraphPoint& x, const Exact& t) const;
  /// True when the ball of the unbounded space would continue past an open end.
  bool ball_truncated(const GraphPoint& x, const Exact& t) const;
  bool boundary_affected(const GraphPoint& p) const;
  /// Empty when the graph has no open ends.
  std::optional<Exact> distance_to_open_end(const GraphPoint& p) const;
  const Exact& boundary_margin() const { return fixture_.boundary_margin; }

  /// Uniform-by-length sample with rational offsets, inside the window and
  /// away from the boundary.
  GraphPoint sample_graph_point(Rng& rng, double window) const;
  /// Vertices plus edge midpoints, canonical and deduplicated.
  std::vector<GraphPoint> vertices_and_midpoints() const;

  const std::vector<std::pair<GraphBall, GraphBall>>& designated_graph_witnesses() const {
    return fixture_.designated_witnesses;
  }
  const std::optional<GraphProbe>& designated_graph_failure() const { return fixture_.designated_failure; }

  Point to_point(const GraphPoint& p) const;
  /// Rounds the double offset to a rational; exact for points produced by to_point on rational offsets only.
  GraphPoint to_graph_point(const Point& p) const;

 private:
  Fixture fixture_;
  std::vector<std::vector<double>> vertex_distance_;  // all pairs, double
};

/// Shared immutable 1-complex fixtures.
std::shared_ptr<GraphSpace> make_real_line_graph(long half_width = 64, long edge_length = 8);
std::shared_ptr<GraphSpace> make_diamond(long ray_length = 15);
std::shared_ptr<GraphSpace> make_diamond_chain(long k = 3);
std::shared_ptr<GraphSpace> make_tee(long ray_length = 16);

struct CatalogEntry {
  std::string id;
  std::string description;
  GroundTruth truth;
  std::map<std::string, std::string> parameters;
  bool exact = false;
};

/// Stable-ordered catalog of built-in models with their default parameters.
std::vector<CatalogEntry> list_models();

/// Builds a model by catalog id. Unknown ids or parameters throw ParseError.
std::shared_ptr<const ModelSpace> make_model(const std::string& id,
                                             const std::map<std::string, std::string>& params = {});

}  // namespace ballgeo
