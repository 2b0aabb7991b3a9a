#include "ballgeo/actions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "ballgeo/errors.hpp"

namespace ballgeo {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

constexpr int kMaxAttempts = 1000;

}  // namespace

IsometryDescriptor identity_isometry() {
  auto id = [](const Point& p) { return p; };
  return {"identity", id, id};
}

IsometryDescriptor compose(const IsometryDescriptor& f, const IsometryDescriptor& g) {
  return {f.id + "*" + g.id, [f, g](const Point& p) { return f.forward(g.forward(p)); },
          [f, g](const Point& p) { return g.inverse(f.inverse(p)); }};
}

IsometryDescriptor invert(const IsometryDescriptor& g) { return {g.id + "^-1", g.inverse, g.forward}; }

IsometryDescriptor euclidean_translation(std::size_t n, const Point& v) {
  if (n < 1 || n > Point::kCapacity) throw DomainError("translation dimension out of range");
  auto shift = [n, v](double sign) {
    return [n, v, sign](const Point& p) {
      Point q = p;
      for (std::size_t i = 0; i < n; ++i) q[i] += sign * v[i];
      return q;
    };
  };
  return {"euclidean_translation", shift(1.0), shift(-1.0)};
}

IsometryDescriptor euclidean_rotation(double angle) {
  auto rot = [](double a) {
    const double c = std::cos(a), s = std::sin(a);
    return [c, s](const Point& p) { return Point{c * p[0] - s * p[1], s * p[0] + c * p[1]}; };
  };
  return {"euclidean_rotation", rot(angle), rot(-angle)};
}

IsometryDescriptor taxicab_reflection() {
  auto flip = [](const Point& p) { return Point{-p[0], p[1]}; };
  return {"taxicab_reflection", flip, flip};
}

IsometryDescriptor hyperbolic_translation(double distance) {
  auto boost = [](double tau) {
    const double ch = std::cosh(tau), sh = std::sinh(tau);
    return [ch, sh](const Point& p) { return Point{ch * p[0] + sh * p[1], sh * p[0] + ch * p[1], p[2]}; };
  };
  return {"hyperbolic_translation", boost(distance), boost(-distance)};
}

// ---------------------------------------------------------------------------
// Graph automorphisms

GraphIsometry::GraphIsometry(std::shared_ptr<const GraphSpace> space, std::string id, const PlaneMap& forward,
                             const PlaneMap& inverse)
    : space_(std::move(space)), id_(std::move(id)) {
  if (!space_) throw DomainError("graph isometry needs a graph");
  forward_ = build(forward);
  inverse_ = build(inverse);
}

std::vector<std::optional<GraphIsometry::EdgeImage>> GraphIsometry::build(const PlaneMap& map) const {
  const MetricGraph& g = space_->graph();
  std::map<std::pair<mpq_class, mpq_class>, VertexId> at;
  for (VertexId v = 0; v < g.vertex_count(); ++v) at[{g.vertex(v).position.x, g.vertex(v).position.y}] = v;
  auto image = [&](VertexId v) -> std::optional<VertexId> {
    PlanePosition p = map(g.vertex(v).position);
    auto it = at.find({p.x, p.y});
    if (it == at.end()) return std::nullopt;
    return it->second;
  };
  std::vector<std::optional<EdgeImage>> table(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const GraphEdge& edge = g.edge(e);
    auto u = image(edge.u);
    auto v = image(edge.v);
    if (!u || !v) continue;
    for (EdgeId f : g.vertex(*u).incident) {
      const GraphEdge& cand = g.edge(f);
      if (cand.length != edge.length) continue;
      if (cand.u == *u && cand.v == *v) {
        table[e] = EdgeImage{f, false};
        break;
      }
      if (cand.u == *v && cand.v == *u) {
        table[e] = EdgeImage{f, true};
        break;
      }
    }
  }
  return table;
}

std::optional<GraphPoint> GraphIsometry::apply(const std::vector<std::optional<EdgeImage>>& table,
                                               const GraphPoint& p) const {
  const MetricGraph& g = space_->graph();
  g.check_point(p);
  auto place = [&](EdgeId e, const Exact& offset) -> std::optional<GraphPoint> {
    if (!table[e]) return std::nullopt;
    const Exact& len = g.edge(e).length;
    return g.canonical({table[e]->edge, table[e]->reversed ? len - offset : offset});
  };
  if (auto v = g.as_vertex(p)) {
    for (EdgeId e : g.vertex(*v).incident) {
      Exact offset = g.edge(e).u == *v ? Exact(0) : g.edge(e).length;
      if (auto q = place(e, offset)) return q;
    }
    return std::nullopt;
  }
  return place(p.edge, p.offset);
}

std::optional<GraphPoint> GraphIsometry::forward(const GraphPoint& p) const { return apply(forward_, p); }
std::optional<GraphPoint> GraphIsometry::inverse(const GraphPoint& p) const { return apply(inverse_, p); }

std::optional<IntervalUnion> GraphIsometry::forward(const IntervalUnion& set) const {
  const MetricGraph& g = space_->graph();
  std::vector<EdgePart> parts;
  for (const EdgePart& part : set.parts()) {
    const auto& img = forward_[part.edge];
    if (!img) {
      // A lone vertex on an unmapped edge can still be carried by another edge.
      if (part.span.lo == part.span.hi) {
        auto q = forward(GraphPoint{part.edge, part.span.lo});
        if (!q) return std::nullopt;
        parts.push_back({q->edge, {q->offset, q->offset}});
        continue;
      }
      return std::nullopt;
    }
    const Exact& len = g.edge(part.edge).length;
    OffsetInterval span = img->reversed ? OffsetInterval{len - part.span.hi, len - part.span.lo} : part.span;
    parts.push_back({img->edge, span});
  }
  return IntervalUnion(set.graph_ptr(), std::move(parts));
}

GraphIsometry diamond_chain_shift(std::shared_ptr<const GraphSpace> chain, long shift) {
  if (!chain || chain->id() != "diamond_chain") throw ModelMismatch("diamond_chain_shift needs a diamond_chain");
  if (shift % 2 != 0) throw DomainError("diamond chain shifts must be even");
  const mpq_class dx(shift);
  return GraphIsometry(
      std::move(chain), "diamond_chain_shift",
      [dx](const PlanePosition& p) { return PlanePosition{p.x + dx, p.y}; },
      [dx](const PlanePosition& p) { return PlanePosition{p.x - dx, p.y}; });
}

// ---------------------------------------------------------------------------
// Lifts

BallMap lift_isometry(const IsometryDescriptor& g) {
  return {[g](const BallPoint& b) { return BallPoint{g.forward(b.center), b.radius}; },
          [g](const BallPoint& b) { return BallPoint{g.inverse(b.center), b.radius}; }};
}

NetSet lift_isometry(const IsometryDescriptor& g, const NetSet& set) {
  NetSet out;
  out.model = set.model;
  out.resolution = set.resolution;
  out.points.reserve(set.points.size());
  for (const Point& p : set.points) out.points.push_back(g.forward(p));
  if (set.ball) out.ball = BallPoint{g.forward(set.ball->center), set.ball->radius};
  return out;
}

std::optional<IntervalUnion> lift_isometry(const GraphIsometry& g, const IntervalUnion& set) { return g.forward(set); }

IsometryAudit audit_isometry(const ModelSpace& space, const IsometryDescriptor& g, const SampleConfig& cfg) {
  Rng rng(cfg.seed);
  IsometryAudit out;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    Point p = space.sample_point(rng, cfg.window);
    Point q = space.sample_point(rng, cfg.window);
    out.max_distance_defect =
        std::max(out.max_distance_defect, std::abs(space.distance(g.forward(p), g.forward(q)) - space.distance(p, q)));
    out.max_inverse_defect = std::max(out.max_inverse_defect, space.distance(g.inverse(g.forward(p)), p));
    ++out.samples;
  }
  return out;
}

namespace {

// max over net points of how far g(p) sits outside the ball
double outside(const ModelSpace& space, const std::vector<Point>& points, const PointMap& g, const BallPoint& ball) {
  double worst = 0.0;
  for (const Point& p : points) worst = std::max(worst, space.distance(g(p), ball.center) - ball.radius);
  return worst;
}

}  // namespace

LiftReport check_lift_isometry(const ModelSpace& space, const IsometryDescriptor& g, const SampleConfig& cfg) {
  LiftReport rep;
  rep.model = space.key();
  rep.isometry = g.id;
  rep.tolerance = 2.0 * cfg.eps + cfg.tolerance;
  rep.audit = audit_isometry(space, g, cfg);
  BallMap lift = lift_isometry(g);
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    BallPoint a = sample_ball(space, rng, cfg.window, cfg.r_max);
    BallPoint b = sample_ball(space, rng, cfg.window, cfg.r_max);
    BallPoint fa = lift.forward(a), fb = lift.forward(b);
    rep.radius_preserved = rep.radius_preserved && fa.radius == a.radius && fb.radius == b.radius;
    NetSet na = space.ball_net(a, cfg.eps), nb = space.ball_net(b, cfg.eps);
    NetSet nfa = space.ball_net(fa, cfg.eps), nfb = space.ball_net(fb, cfg.eps);
    double before = hausdorff(na, nb).value;
    double after = hausdorff(nfa, nfb).value;
    rep.max_deviation = std::max(rep.max_deviation, std::abs(after - before));
    rep.max_image_defect = std::max({rep.max_image_defect, outside(space, na.points, g.forward, fa),
                                     outside(space, nfa.points, g.inverse, a)});
    ++rep.samples;
  }
  const bool ok = rep.max_deviation <= rep.tolerance && rep.max_image_defect <= cfg.tolerance &&
                  rep.audit.max_distance_defect <= 1e-9 && rep.audit.max_inverse_defect <= 1e-9 &&
                  rep.radius_preserved;
  rep.verdict = ok ? "isometry" : "violation";
  return rep;
}

namespace {

struct GraphPair {
  GraphBall ball;
  GraphPoint image;
};

GraphPair sample_mapped_ball(const GraphIsometry& g, Rng& rng, const SampleConfig& cfg) {
  const GraphSpace& space = g.space();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    GraphBall b = sample_graph_ball(space, rng, cfg.window, cfg.r_max);
    auto image = g.forward(b.center);
    if (!image || space.ball_truncated(*image, b.radius)) continue;
    if (!g.forward(space.closed_ball(b))) continue;
    return {b, *image};
  }
  throw DomainError("no sampled ball of " + space.key() + " has an image inside the window");
}

}  // namespace

LiftReport check_lift_isometry(const GraphIsometry& g, const SampleConfig& cfg) {
  const GraphSpace& space = g.space();
  LiftReport rep;
  rep.model = space.key();
  rep.isometry = g.id();
  rep.exact = true;
  rep.tolerance = 0.0;
  Rng rng(cfg.seed);
  std::optional<Exact> worst;
  bool images_exact = true;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    GraphPair a = sample_mapped_ball(g, rng, cfg);
    GraphPair b = sample_mapped_ball(g, rng, cfg);
    IntervalUnion ba = space.closed_ball(a.ball), bb = space.closed_ball(b.ball);
    IntervalUnion fa = space.closed_ball(a.image, a.ball.radius), fb = space.closed_ball(b.image, b.ball.radius);
    Exact before = *hausdorff(ba, bb).exact_value;
    Exact after = *hausdorff(fa, fb).exact_value;
    Exact dev = abs(after - before);
    if (!worst || dev > *worst) worst = dev;
    images_exact = images_exact && g.forward(ba) == fa && g.forward(bb) == fb;
    Exact center_defect = abs(space.distance(a.image, b.image) - space.distance(a.ball.center, b.ball.center));
    rep.audit.max_distance_defect = std::max(rep.audit.max_distance_defect, center_defect.to_double());
    auto back = g.inverse(a.image);
    if (!back || !space.graph().same_point(*back, a.ball.center)) rep.audit.max_inverse_defect = 1.0;
    ++rep.audit.samples;
    ++rep.samples;
  }
  rep.max_deviation = worst ? worst->to_double() : 0.0;
  rep.exact_max_deviation = worst ? worst->str() : "0";
  rep.max_image_defect = images_exact ? 0.0 : 1.0;
  const bool ok = (!worst || worst->sign() == 0) && images_exact && rep.audit.max_distance_defect == 0.0 &&
                  rep.audit.max_inverse_defect == 0.0;
  rep.verdict = ok ? "isometry" : "violation";
  return rep;
}

std::vector<CatalogIsometry> list_isometries() {
  return {
      {"euclidean_translation", "euclidean_rn", {{"n", "2"}}, false},
      {"euclidean_rotation", "euclidean_rn", {{"n", "2"}}, false},
      {"taxicab_reflection", "taxicab_r2", {}, false},
      {"hyperbolic_translation", "hyperbolic_plane", {}, false},
      {"diamond_chain_shift", "diamond_chain", {{"k", "3"}}, true},
  };
}

IsometryDescriptor make_isometry(const std::string& id) {
  if (id == "euclidean_translation") return euclidean_translation(2, Point{1.5, -0.5});
  if (id == "euclidean_rotation") return euclidean_rotation(M_PI / 2.0);
  if (id == "taxicab_reflection") return taxicab_reflection();
  if (id == "hyperbolic_translation") return hyperbolic_translation(1.0);
  if (id == "identity") return identity_isometry();
  if (id == "diamond_chain_shift") throw Unsupported("diamond_chain_shift is a graph isometry");
  throw ParseError("unknown isometry '" + id + "'");
}

GraphIsometry make_graph_isometry(const std::string& id, std::shared_ptr<const GraphSpace> space) {
  if (id == "diamond_chain_shift") return diamond_chain_shift(std::move(space), 4);
  throw ParseError("unknown graph isometry '" + id + "'");
}

// ---------------------------------------------------------------------------
// Group actions

IsometryDescriptor GroupAction::element(long k) const {
  if (k < -bound || k > bound) throw BoundTooSmall("element " + std::to_string(k) + " is outside the bound");
  Point v;
  for (std::size_t i = 0; i < Point::kCapacity; ++i) v[i] = static_cast<double>(k) * generator[i];
  IsometryDescriptor d = euclidean_translation(model->dimension(), v);
  d.id = id + "[" + std::to_string(k) + "]";
  return d;
}

GroupAction translation_action(std::shared_ptr<const ModelSpace> model, const Point& v, long bound) {
  if (!model || model->id() != "euclidean_rn") throw Unsupported("translation actions need a Euclidean model");
  if (bound < 0) throw DomainError("enumeration bound must be >= 0");
  double norm2 = 0.0;
  for (std::size_t i = 0; i < model->dimension(); ++i) norm2 += v[i] * v[i];
  for (std::size_t i = model->dimension(); i < Point::kCapacity; ++i) {
    if (v[i] != 0.0) throw DomainError("generator has more coordinates than the model");
  }
  GroupAction a;
  a.id = "translation(" + model->format_point(v) + ")";
  a.model = std::move(model);
  a.generator = v;
  a.step = std::sqrt(norm2);
  a.bound = bound;
  if (a.step == 0.0) throw DomainError("translation generator must be nonzero");
  return a;
}

GroupAction trivial_action(std::shared_ptr<const ModelSpace> model) {
  if (!model) throw DomainError("action needs a model");
  GroupAction a;
  a.id = "trivial";
  a.model = std::move(model);
  a.step = std::numeric_limits<double>::infinity();
  a.bound = 0;
  return a;
}

namespace {

Point translate(const GroupAction& action, const Point& p, long k) {
  if (k == 0) return p;
  Point q = p;
  for (std::size_t i = 0; i < action.model->dimension(); ++i) q[i] += static_cast<double>(k) * action.generator[i];
  return q;
}

// Smallest guaranteed displacement of any element past the bound.
double beyond_bound(const GroupAction& action) {
  return static_cast<double>(action.bound + 1) * action.step;
}

}  // namespace

std::vector<long> properness_check(const GroupAction& action, const Point& x, double r) {
  if (!(r > 0.0)) throw DomainError("properness radius must be positive");
  if (!(beyond_bound(action) >= 2.0 * r)) {
    throw BoundTooSmall("bound " + std::to_string(action.bound) + " cannot exclude elements moving by less than " +
                        fmt(2.0 * r));
  }
  std::vector<long> out;
  for (long k = -action.bound; k <= action.bound; ++k) {
    if (action.model->distance(x, translate(action, x, k)) < 2.0 * r) out.push_back(k);
  }
  return out;
}

std::vector<long> lifted_properness_check(const GroupAction& action, const Point& x, double r, double big_r,
                                          double eps) {
  if (!(r >= 0.0) || !(big_r > 0.0)) throw DomainError("radii must be positive");
  // d_H(g B, B) >= d(g x, x) - r
  if (!(beyond_bound(action) - r >= 2.0 * big_r)) {
    throw BoundTooSmall("bound " + std::to_string(action.bound) + " cannot certify the lifted properness set");
  }
  const ModelSpace& m = *action.model;
  const BallPoint base{x, r};
  std::vector<long> out;
  for (long k = -action.bound; k <= action.bound; ++k) {
    const BallPoint moved{translate(action, x, k), r};
    auto exact = interval_hausdorff(m, base, moved, nullptr);
    double d = exact ? *exact : hausdorff(m.ball_net(base, eps), m.ball_net(moved, eps)).value;
    if (d < 2.0 * big_r) out.push_back(k);
  }
  return out;
}

double quotient_distance(const GroupAction& action, const Point& a, const Point& b) {
  const ModelSpace& m = *action.model;
  double best = m.distance(a, b);
  for (long k = -action.bound; k <= action.bound; ++k) best = std::min(best, m.distance(a, translate(action, b, k)));
  // d(a, g_k b) >= |k| |v| - d(a, b)
  if (beyond_bound(action) - m.distance(a, b) < best) {
    throw BoundTooSmall("bound " + std::to_string(action.bound) + " is unsound for these representatives");
  }
  return best;
}

double quotient_distance(const GroupAction& action, const OrbitPoint& a, const OrbitPoint& b) {
  if (a.action != action.id || b.action != action.id) throw ModelMismatch("orbit points of another action");
  return quotient_distance(action, a.representative, b.representative);
}

QuotientLineSpace::QuotientLineSpace(GroupAction action)
    : CircleSpace(action.step), action_(std::move(action)) {
  if (action_.model->id() != "euclidean_rn" || action_.model->dimension() != 1) {
    throw Unsupported("quotient_line needs a translation action on the line");
  }
  if (!std::isfinite(action_.step)) throw Unsupported("quotient_line needs a nontrivial action");
  if (action_.bound < 2) throw BoundTooSmall("quotient_line needs an enumeration bound of at least 2");
  // the generator's sign fixes which representatives are canonical
  if (action_.generator[0] < 0.0) action_.generator[0] = -action_.generator[0];
}

std::string QuotientLineSpace::key() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "quotient_line(period=%.17g)", circumference_);
  return buf;
}

double QuotientLineSpace::distance(const Point& a, const Point& b) const { return quotient_distance(action_, a, b); }

// ---------------------------------------------------------------------------
// Quotient theorem

namespace {

struct OrbitBall {
  Point x;
  double t = 0.0;
};

// Exact route: on the line d_H(g_k B_t(x), B_s(y)) = |x + k v - y| + |t - s|.
double quotient_pair_line(const GroupAction& action, const OrbitBall& a, const OrbitBall& b) {
  const mpq_class x(a.x[0]), y(b.x[0]), t(a.t), s(b.t), v(action.generator[0]);
  auto lhs_at = [&](long k) {
    const mpq_class c = x + k * v;
    return hausdorff_intervals(Exact(c - t), Exact(c + t), Exact(y - s), Exact(y + s));
  };
  Exact lhs = lhs_at(0);
  mpq_class quotient = abs(x - y);
  for (long k = -action.bound; k <= action.bound; ++k) {
    lhs = min(lhs, lhs_at(k));
    quotient = std::min(quotient, mpq_class(abs(x + k * v - y)));
  }
  // past the bound: d_H >= (K+1)|v| - |x - y| - min(t, s)
  const mpq_class guard = (action.bound + 1) * abs(v) - abs(x - y) - std::min(t, s);
  if (Exact(guard) < lhs || (action.bound + 1) * abs(v) - abs(x - y) < quotient) {
    throw BoundTooSmall("shift enumeration bound is unsound for this pair");
  }
  Exact rhs = Exact(quotient) + Exact(mpq_class(abs(t - s)));
  return abs(lhs - rhs).to_double();
}

double quotient_pair_net(const GroupAction& action, const OrbitBall& a, const OrbitBall& b, double eps) {
  const ModelSpace& m = *action.model;
  const double dxy = m.distance(a.x, b.x);
  const double floor_radius = std::min(a.t, b.t);
  NetSet target = m.ball_net({b.x, b.t}, eps);
  std::vector<std::pair<double, long>> order;
  for (long k = -action.bound; k <= action.bound; ++k) order.emplace_back(m.distance(translate(action, a.x, k), b.x), k);
  std::sort(order.begin(), order.end());
  double lhs = std::numeric_limits<double>::infinity();
  double err = 0.0;
  for (const auto& [d, k] : order) {
    // d_H(B_t(g x), B_s(y)) >= d(g x, y) - min(t, s)
    if (d - floor_radius >= lhs + err) break;
    HausdorffResult h = hausdorff(m.ball_net({translate(action, a.x, k), a.t}, eps), target);
    if (h.value < lhs) {
      lhs = h.value;
      err = h.error_bound;
    }
  }
  if (beyond_bound(action) - dxy - floor_radius < lhs) {
    throw BoundTooSmall("shift enumeration bound is unsound for this pair");
  }
  const double rhs = quotient_distance(action, a.x, b.x) + std::abs(a.t - b.t);
  return std::abs(lhs - rhs);
}

}  // namespace

QuotientReport check_quotient_theorem(const GroupAction& action, const SampleConfig& cfg) {
  const ModelSpace& m = *action.model;
  if (m.ground_truth().strongly_geodesically_complete != Truth::yes) {
    throw DomainError("the quotient theorem needs a strongly geodesically complete base");
  }
  if (!std::isfinite(action.step)) throw Unsupported("trivial action has no quotient to test");
  QuotientReport rep;
  rep.action = action.id;
  rep.exact = m.dimension() == 1;
  rep.tolerance = rep.exact ? 1e-9 : 2.0 * cfg.eps + cfg.tolerance;
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    BallPoint a = sample_ball(m, rng, cfg.window, cfg.r_max);
    BallPoint b = sample_ball(m, rng, cfg.window, cfg.r_max);
    OrbitBall oa{a.center, a.radius}, ob{b.center, b.radius};
    double dev = rep.exact ? quotient_pair_line(action, oa, ob) : quotient_pair_net(action, oa, ob, cfg.eps);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    ++rep.samples;
  }
  rep.verdict = rep.max_deviation <= rep.tolerance ? "holds" : "violation";
  return rep;
}

// ---------------------------------------------------------------------------
// Orbit balls

OrbitReport orbit_invariants_check(const ModelSpace& space, const IsometryDescriptor& g, const SampleConfig& cfg) {
  if (space.ground_truth().strongly_geodesically_complete != Truth::yes) {
    throw DomainError("orbit invariants need a strongly geodesically complete base");
  }
  OrbitReport rep;
  rep.model = space.key();
  rep.isometry = g.id;
  rep.tolerance = cfg.eps + cfg.tolerance;
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    BallPoint b = sample_ball(space, rng, cfg.window, cfg.r_max);
    NetSet moved = lift_isometry(g, space.ball_net(b, cfg.eps));
    moved.ball.reset();  // compare against the moved points, not their claimed ball
    NetSet target = space.ball_net({g.forward(b.center), b.radius}, cfg.eps);
    rep.max_deviation = std::max(rep.max_deviation, hausdorff(moved, target).value);
    ++rep.samples;
  }
  rep.verdict = rep.max_deviation <= rep.tolerance ? "holds" : "violation";
  return rep;
}

OrbitReport orbit_invariants_check(const GraphIsometry& g, const SampleConfig& cfg) {
  const GraphSpace& space = g.space();
  OrbitReport rep;
  rep.model = space.key();
  rep.isometry = g.id();
  rep.exact = true;
  Rng rng(cfg.seed);
  bool equal = true;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    GraphPair b = sample_mapped_ball(g, rng, cfg);
    IntervalUnion target = space.closed_ball(b.image, b.ball.radius);
    auto moved = g.forward(space.closed_ball(b.ball));
    if (!moved || !(*moved == target)) {
      equal = false;
      if (moved) rep.max_deviation = std::max(rep.max_deviation, hausdorff(*moved, target).value);
    }
    ++rep.samples;
  }
  if (!equal && rep.max_deviation == 0.0) rep.max_deviation = std::numeric_limits<double>::infinity();
  rep.verdict = equal ? "holds" : "violation";
  return rep;
}

// ---------------------------------------------------------------------------
// Midpoints in ball space

MidpointReport ball_midpoints(const ModelSpace& plane, const BallPoint& a, const BallPoint& b, double eps) {
  if (plane.id() != "euclidean_rn" || plane.dimension() != 2) throw Unsupported("ball_midpoints needs euclidean_r2");
  MidpointReport rep;
  const double len = plane.distance(a.center, b.center);
  const double dr = std::abs(a.radius - b.radius);
  const double half = (len + dr) / 2.0;
  rep.half_distance = half;
  const double sign = b.radius >= a.radius ? 1.0 : -1.0;
  const NetSet na = plane.ball_net(a, eps), nb = plane.ball_net(b, eps);
  int steps = 0;
  if (len > 0.0) {
    // spacing at most |r - s| / 8, so the band of midpoints holds several candidates
    const double want = std::ceil(8.0 * len / std::max(dr, 4.0 * eps));
    steps = 2 * static_cast<int>(std::clamp(want / 2.0, 4.0, 128.0));
  }
  for (int k = 0; k <= steps; ++k) {
    const double along = steps ? len * k / steps : 0.0;
    Point z = a.center;
    if (len > 0.0) {
      for (int i = 0; i < 2; ++i) z[i] += along * (b.center[i] - a.center[i]) / len;
    }
    const double w = half - along;
    for (double dir : {sign, -sign}) {
      const double radius = a.radius + dir * w;
      if (radius < 0.0 || (w == 0.0 && dir != sign)) continue;
      BallPoint m{z, radius};
      NetSet nm = plane.ball_net(m, eps);
      double to_a = hausdorff(na, nm).value, to_b = hausdorff(nm, nb).value;
      if (std::abs(to_a - half) <= 2.0 * eps && std::abs(to_b - half) <= 2.0 * eps) {
        rep.midpoints.push_back({m, to_a, to_b});
      }
    }
  }
  std::vector<std::size_t> cluster(rep.midpoints.size());
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    cluster[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& p = rep.midpoints[i].ball;
      const auto& q = rep.midpoints[j].ball;
      if (hausdorff(plane.ball_net(p, eps), plane.ball_net(q, eps)).value <= 2.0 * eps) {
        cluster[i] = cluster[j];
        break;
      }
    }
  }
  std::sort(cluster.begin(), cluster.end());
  rep.distinct = static_cast<std::size_t>(std::unique(cluster.begin(), cluster.end()) - cluster.begin());
  return rep;
}

}  // namespace ballgeo
