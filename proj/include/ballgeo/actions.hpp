#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ballgeo/ballspace.hpp"
#include "ballgeo/compact_set.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo {

using PointMap = std::function<Point(const Point&)>;

struct IsometryDescriptor {
  std::string id;
  PointMap forward;
  PointMap inverse;
};

IsometryDescriptor identity_isometry();
IsometryDescriptor compose(const IsometryDescriptor& f, const IsometryDescriptor& g);  // f after g
IsometryDescriptor invert(const IsometryDescriptor& g);

IsometryDescriptor euclidean_translation(std::size_t n, const Point& v);
IsometryDescriptor euclidean_rotation(double angle);  // about the origin of R^2
IsometryDescriptor taxicab_reflection();              // (x, y) -> (-x, y)
IsometryDescriptor hyperbolic_translation(double distance);  // along the x1 geodesic through the origin

/// Partial automorphism of a metric graph induced by a map of the embedding
/// plane; edges whose image leaves the window stay unmapped.
class GraphIsometry {
 public:
  using PlaneMap = std::function<PlanePosition(const PlanePosition&)>;

  GraphIsometry(std::shared_ptr<const GraphSpace> space, std::string id, const PlaneMap& forward,
                const PlaneMap& inverse);

  const std::string& id() const { return id_; }
  const GraphSpace& space() const { return *space_; }
  std::optional<GraphPoint> forward(const GraphPoint& p) const;
  std::optional<GraphPoint> inverse(const GraphPoint& p) const;
  /// Image of the whole set, empty when some part is unmapped.
  std::optional<IntervalUnion> forward(const IntervalUnion& set) const;

 private:
  struct EdgeImage {
    EdgeId edge;
    bool reversed;
  };
  std::vector<std::optional<EdgeImage>> build(const PlaneMap& map) const;
  std::optional<GraphPoint> apply(const std::vector<std::optional<EdgeImage>>& table, const GraphPoint& p) const;

  std::shared_ptr<const GraphSpace> space_;
  std::string id_;
  std::vector<std::optional<EdgeImage>> forward_;
  std::vector<std::optional<EdgeImage>> inverse_;
};

GraphIsometry diamond_chain_shift(std::shared_ptr<const GraphSpace> chain, long shift);

/// H[g] on Sigma(X): (x, r) -> (g(x), r), and pointwise on sets.
struct BallMap {
  std::function<BallPoint(const BallPoint&)> forward;
  std::function<BallPoint(const BallPoint&)> inverse;
};
BallMap lift_isometry(const IsometryDescriptor& g);
NetSet lift_isometry(const IsometryDescriptor& g, const NetSet& set);
std::optional<IntervalUnion> lift_isometry(const GraphIsometry& g, const IntervalUnion& set);

struct IsometryAudit {
  std::size_t samples = 0;
  double max_distance_defect = 0.0;
  double max_inverse_defect = 0.0;
};
/// d(g p, g q) = d(p, q) and g^-1 g = id on sampled points.
IsometryAudit audit_isometry(const ModelSpace& space, const IsometryDescriptor& g, const SampleConfig& cfg);

struct LiftReport {
  std::string model;
  std::string isometry;
  std::size_t samples = 0;
  /// max |d_H(F A, F B) - d_H(A, B)|
  double max_deviation = 0.0;
  double tolerance = 0.0;
  /// max distance of F(A) from the ball B_r(g x) and of g^-1 B_r(g x) from A.
  double max_image_defect = 0.0;
  bool radius_preserved = true;
  IsometryAudit audit;
  bool exact = false;
  std::string exact_max_deviation;
  std::string verdict;
};

/// Tolerance for d_H preservation is 2 * eps + cfg.tolerance.
LiftReport check_lift_isometry(const ModelSpace& space, const IsometryDescriptor& g, const SampleConfig& cfg);
LiftReport check_lift_isometry(const GraphIsometry& g, const SampleConfig& cfg);

/// Catalogued isometries addressable by name.
struct CatalogIsometry {
  std::string id;
  std::string model;
  std::map<std::string, std::string> model_params;
  bool graph = false;
};
std::vector<CatalogIsometry> list_isometries();
/// Analytic entries; throws ParseError for unknown ids, Unsupported for graph entries.
IsometryDescriptor make_isometry(const std::string& id);
/// Graph entries, built on the given fixture.
GraphIsometry make_graph_isometry(const std::string& id, std::shared_ptr<const GraphSpace> space);

/// Cyclic group of translations {k v : |k| <= bound} of a Euclidean model.
/// Every element moves every point by exactly |k| |v|.
struct GroupAction {
  std::string id;
  std::shared_ptr<const ModelSpace> model;
  Point generator;
  double step = 0.0;  // |v|
  long bound = 0;

  IsometryDescriptor element(long k) const;
};

GroupAction translation_action(std::shared_ptr<const ModelSpace> model, const Point& v, long bound);
GroupAction trivial_action(std::shared_ptr<const ModelSpace> model);

/// k with g_k(B_r(x)) meeting B_r(x) (open balls; in a geodesic space iff
/// d(x, g_k x) < 2r). Throws BoundTooSmall when elements past the bound could qualify.
std::vector<long> properness_check(const GroupAction& action, const Point& x, double r);

/// k with H[g_k] moving the open d_H-ball of radius R about B_r(x) onto one
/// meeting it, i.e. d_H(g_k B_r(x), B_r(x)) < 2R.
std::vector<long> lifted_properness_check(const GroupAction& action, const Point& x, double r, double big_r,
                                          double eps = 0.01);

struct OrbitPoint {
  Point representative;
  std::string action;
};

/// inf_k d(a, g_k b). Throws BoundTooSmall when elements past the bound
/// could still beat the best enumerated value.
double quotient_distance(const GroupAction& action, const Point& a, const Point& b);
/// Throws ModelMismatch when either orbit belongs to another action.
double quotient_distance(const GroupAction& action, const OrbitPoint& a, const OrbitPoint& b);

/// X/G for a translation group of the line, as a model: a circle whose
/// distance is computed through quotient_distance on representatives in [0, |v|).
class QuotientLineSpace final : public CircleSpace {
 public:
  explicit QuotientLineSpace(GroupAction action);
  std::string id() const override { return "quotient_line"; }
  std::string key() const override;
  double distance(const Point& a, const Point& b) const override;
  const GroupAction& action() const { return action_; }

 private:
  GroupAction action_;
};

struct QuotientReport {
  std::string action;
  std::size_t samples = 0;
  /// |inf_k d_H(g_k B_t(x), B_s(y)) - (d_G(x, y) + |t - s|)|
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  std::string verdict;
};

/// Exact interval route on the line, nets in the plane.
QuotientReport check_quotient_theorem(const GroupAction& action, const SampleConfig& cfg);

struct OrbitReport {
  std::string model;
  std::string isometry;
  std::size_t samples = 0;
  /// d_H(g B_t(x), B_t(g x)); zero exactly on graphs.
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  std::string verdict;
};

OrbitReport orbit_invariants_check(const ModelSpace& space, const IsometryDescriptor& g, const SampleConfig& cfg);
OrbitReport orbit_invariants_check(const GraphIsometry& g, const SampleConfig& cfg);

struct MidpointCandidate {
  BallPoint ball;
  double to_a = 0.0;  // d_H(A, M)
  double to_b = 0.0;  // d_H(M, B)
};

struct MidpointReport {
  double half_distance = 0.0;  // d_H(A, B) / 2, from the taxicab formula
  std::vector<MidpointCandidate> midpoints;
  /// Midpoints grouped by d_H <= 2 eps.
  std::size_t distinct = 0;
};

/// Ball-space midpoints of (B_r(p), B_s(q)) in Euclidean R^2 among the
/// candidates z_a = p + a (q - p)/|q - p|, a = k |q - p| / m, with radius
/// r +- (D/2 - a); kept when both d_H values are within 2 eps of D/2.
/// m is even, between 8 and 256, with spacing near max(|r - s|, 4 eps) / 8.
MidpointReport ball_midpoints(const ModelSpace& euclidean_plane, const BallPoint& a, const BallPoint& b, double eps);

}  // namespace ballgeo
