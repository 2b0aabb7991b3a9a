#include "ballgeo/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballgeo/errors.hpp"
#include "ballgeo/hausdorff_kernels.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo {

namespace {

struct ExactSup {
  Exact value{-1};
  GraphPoint witness;
};

// sup over `from` of the distance to `to`; maxima of a profile on a closed
// interval sit at its ends or at crossings of its pieces.
ExactSup directed_sup(const IntervalUnion& from, const IntervalUnion& to) {
  const auto& g = from.graph();
  auto dv = to.vertex_distances();
  ExactSup best;
  for (const auto& part : from.parts()) {
    EdgeProfile prof = to.profile(part.edge, dv);
    std::vector<Exact> candidates{part.span.lo, part.span.hi};
    for (auto& o : prof.breakpoints()) {
      if (part.span.lo < o && o < part.span.hi) candidates.push_back(std::move(o));
    }
    for (const auto& o : candidates) {
      Exact v = prof.at(o);
      if (v > best.value) best = {std::move(v), g.canonical({part.edge, o})};
    }
  }
  return best;
}

void check_same_graph(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.graph_ptr() != b.graph_ptr()) throw ModelMismatch("sets live on different graphs");
}

void check_same_model(const NetSet& a, const NetSet& b) {
  if (!a.model || !b.model || a.model->key() != b.model->key()) {
    throw ModelMismatch("sets live on different models");
  }
}

// All catalogued models are geodesic, where dist(p, closed r-ball about c) is
// max(0, d(p, c) - r); a ball target then needs no scan of its net.
DirectedSup directed(const NetSet& from, const NetSet& to, const DistanceFn& d) {
  if (!to.ball) return directed_sup_parallel(from.points, to.points, d);
  const BallPoint& ball = *to.ball;
  DirectedSup best{-1.0, 0};
  for (std::size_t i = 0; i < from.points.size(); ++i) {
    double v = std::max(0.0, d(from.points[i], ball.center) - ball.radius);
    if (v > best.value) best = {v, i};
  }
  return best;
}

}  // namespace

NetSet make_net(std::shared_ptr<const ModelSpace> model, std::vector<Point> points, double resolution,
                std::optional<BallPoint> ball) {
  if (!model) throw DomainError("net needs a model");
  if (points.empty()) throw DomainError("compact sets must be nonempty");
  if (!(resolution >= 0.0)) throw DomainError("net resolution must be nonnegative");
  return NetSet{std::move(model), std::move(points), resolution, ball};
}

Exact dist_point_to_set(const GraphPoint& x, const IntervalUnion& set) { return set.distance_from(x); }

double dist_point_to_set(const Point& x, const NetSet& set) {
  if (set.ball) return std::max(0.0, set.model->distance(set.ball->center, x) - set.ball->radius);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : set.points) best = std::min(best, set.model->distance(x, p));
  return best;
}

double dist_point_to_set(const AnyPoint& x, const CompactSet& set) {
  if (const auto* gp = std::get_if<GraphPoint>(&x)) {
    const auto* iu = std::get_if<IntervalUnion>(&set);
    if (!iu) throw RepresentationMismatch("graph point against a net set");
    return dist_point_to_set(*gp, *iu).to_double();
  }
  const auto* net = std::get_if<NetSet>(&set);
  if (!net) throw RepresentationMismatch("analytic point against an interval union");
  return dist_point_to_set(std::get<Point>(x), *net);
}

HausdorffResult hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  check_same_graph(a, b);
  ExactSup ab = directed_sup(a, b);
  ExactSup ba = directed_sup(b, a);
  Exact value = max(ab.value, ba.value);
  HausdorffResult out;
  out.value = value.to_double();
  out.error_bound = 0.0;
  out.exact_value = value;
  out.witness_a = ab.witness;
  out.witness_b = ba.witness;
  return out;
}

HausdorffResult hausdorff(const NetSet& a, const NetSet& b) {
  check_same_model(a, b);
  const ModelSpace* model = a.model.get();
  DistanceFn d = [model](const Point& p, const Point& q) { return model->distance(p, q); };
  DirectedSup ab = directed(a, b, d);
  DirectedSup ba = directed(b, a, d);
  HausdorffResult out;
  out.value = std::max(ab.value, ba.value);
  out.error_bound = a.resolution + b.resolution;
  out.witness_a = a.points[ab.witness];
  out.witness_b = b.points[ba.witness];
  return out;
}

HausdorffResult hausdorff(const CompactSet& a, const CompactSet& b) {
  if (a.index() != b.index()) throw RepresentationMismatch("interval union against a net set");
  if (const auto* ia = std::get_if<IntervalUnion>(&a)) return hausdorff(*ia, std::get<IntervalUnion>(b));
  return hausdorff(std::get<NetSet>(a), std::get<NetSet>(b));
}

double hausdorff_intervals(double a, double b, double c, double d) {
  if (a > b || c > d) throw DomainError("reversed interval");
  return std::max(std::abs(a - c), std::abs(b - d));
}

Exact hausdorff_intervals(const Exact& a, const Exact& b, const Exact& c, const Exact& d) {
  if (a > b || c > d) throw DomainError("reversed interval");
  return max(abs(a - c), abs(b - d));
}

IntervalUnion tubular(const IntervalUnion& set, const Exact& r) {
  if (r.sign() < 0) throw DomainError("negative tube radius");
  const auto& g = set.graph();
  auto dv = set.vertex_distances();
  std::vector<EdgePart> parts;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (auto& span : set.profile(e, dv).sublevel(r)) parts.push_back({e, std::move(span)});
  }
  return IntervalUnion(set.graph_ptr(), std::move(parts));
}

// Valid for geodesic models: a point within r of the set is within `step` of
// some r-ball about a net point after sliding it by set.resolution.
NetSet tubular(const NetSet& set, double r, double step) {
  if (r < 0.0) throw DomainError("negative tube radius");
  if (!(step > 0.0)) throw DomainError("net step must be positive");
  std::vector<Point> points;
  for (const auto& p : set.points) {
    NetSet piece = set.model->ball_net({p, r}, step);
    points.insert(points.end(), piece.points.begin(), piece.points.end());
  }
  std::sort(points.begin(), points.end(), [](const Point& x, const Point& y) { return x.c < y.c; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return make_net(set.model, std::move(points), set.resolution + step);
}

}  // namespace ballgeo
