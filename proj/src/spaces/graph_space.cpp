#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"
#include "internal.hpp"

namespace ballgeo {

namespace {

bool point_less(const GraphPoint& a, const GraphPoint& b) {
  return a.edge != b.edge ? a.edge < b.edge : a.offset < b.offset;
}

Exact rational_of(double x) { return Exact(mpq_class(x)); }

}  // namespace

GraphSpace::GraphSpace(Fixture fixture) : fixture_(std::move(fixture)) {
  if (!fixture_.graph) throw DomainError("graph space needs a graph");
  const auto& g = *fixture_.graph;
  g.validate();
  vertex_distance_.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto dv = g.vertex_distances({{v, Exact(0)}});
    for (const auto& d : dv) vertex_distance_[v].push_back(d.to_double());
  }
}

bool GraphSpace::contains(const Point& p) const {
  const auto& g = graph();
  if (!(p[0] >= 0.0) || p[0] != std::floor(p[0]) || p[0] >= static_cast<double>(g.edge_count())) return false;
  double len = g.edge(static_cast<EdgeId>(p[0])).length.to_double();
  return p[1] >= -1e-12 && p[1] <= len + 1e-12;
}

double GraphSpace::distance(const Point& a, const Point& b) const {
  const auto& g = graph();
  const auto& ea = g.edge(static_cast<EdgeId>(a[0]));
  const auto& eb = g.edge(static_cast<EdgeId>(b[0]));
  const double la = ea.length.to_double();
  const double lb = eb.length.to_double();
  double best = std::numeric_limits<double>::infinity();
  if (a[0] == b[0]) best = std::abs(a[1] - b[1]);
  const double from_a[2] = {a[1], la - a[1]};
  const VertexId va[2] = {ea.u, ea.v};
  const double to_b[2] = {b[1], lb - b[1]};
  const VertexId vb[2] = {eb.u, eb.v};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) best = std::min(best, from_a[i] + vertex_distance_[va[i]][vb[j]] + to_b[j]);
  }
  return best;
}

NetSet GraphSpace::ball_net(const BallPoint& ball, double eps) const {
  detail::require_net_step(eps);
  detail::require_radius(ball.radius);
  IntervalUnion exact = closed_ball(to_graph_point(ball.center), rational_of(ball.radius));
  std::vector<Point> pts;
  for (const auto& part : exact.parts()) {
    double lo = part.span.lo.to_double();
    double hi = part.span.hi.to_double();
    auto m = static_cast<long>(std::ceil((hi - lo) / eps));
    if (m == 0) {
      pts.push_back({static_cast<double>(part.edge), lo});
      continue;
    }
    for (long k = 0; k <= m; ++k) {
      pts.push_back({static_cast<double>(part.edge), lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(m)});
    }
  }
  return make_net(self(), std::move(pts), eps / 2.0, ball);
}

std::vector<Point> GraphSpace::sphere_net(const Point& c, double t, double eps) const {
  detail::require_net_step(eps);
  std::vector<Point> out;
  for (const auto& p : sphere(to_graph_point(c), rational_of(t))) out.push_back(to_point(p));
  return out;
}

Point GraphSpace::sample_point(Rng& rng, double window) const { return to_point(sample_graph_point(rng, window)); }

std::vector<double> GraphSpace::coordinates(const Point& p) const {
  auto [x, y] = graph().embed(to_graph_point(p));
  return {x, y};
}

Exact GraphSpace::distance(const GraphPoint& a, const GraphPoint& b) const { return graph().distance(a, b); }

IntervalUnion GraphSpace::closed_ball(const GraphPoint& x, const Exact& t) const {
  if (t.sign() < 0) throw DomainError("ball radius must be nonnegative");
  return tubular(IntervalUnion::singleton(graph_ptr(), x), t);
}

std::vector<GraphPoint> GraphSpace::sphere(const GraphPoint& x, const Exact& t) const {
  if (t.sign() <= 0) throw DomainError("sphere radius must be positive; use closed_ball for t = 0");
  const auto& g = graph();
  g.check_point(x);
  auto dv = g.vertex_distances(x);
  std::vector<GraphPoint> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (auto& o : g.profile(e, dv, x).level(t)) out.push_back(g.canonical({e, std::move(o)}));
  }
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GraphSpace::ball_truncated(const GraphPoint& x, const Exact& t) const {
  auto d = distance_to_open_end(x);
  return d && *d < t;
}

std::optional<Exact> GraphSpace::distance_to_open_end(const GraphPoint& p) const {
  const auto& g = graph();
  auto ends = g.open_ends();
  if (ends.empty()) return std::nullopt;
  auto dv = g.vertex_distances(p);
  Exact best = dv[ends.front()];
  for (VertexId v : ends) best = min(best, dv[v]);
  return best;
}

bool GraphSpace::boundary_affected(const GraphPoint& p) const {
  auto d = distance_to_open_end(p);
  return d && *d <= fixture_.boundary_margin;
}

GraphPoint GraphSpace::sample_graph_point(Rng& rng, double window) const {
  const auto& g = graph();
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& e : g.edges()) cumulative.push_back(total += e.length.to_double());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    double s = detail::unit(rng) * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
    if (it == cumulative.end()) continue;
    auto e = static_cast<EdgeId>(it - cumulative.begin());
    const Exact& len = g.edge(e).length;
    double frac = (s - (*it - len.to_double())) / len.to_double();
    Exact offset;
    if (len.rational_part() == 0) {
      // diagonal edge: keep the embedded coordinates rational
      offset = Exact(0, mpq_class(detail::dyadic(frac * len.sqrt2_part().get_d())));
    } else {
      offset = rational_of(detail::dyadic(frac * len.to_double()));
    }
    if (offset.sign() < 0 || offset > len) continue;
    GraphPoint p = g.canonical({e, offset});
    auto [x, y] = g.embed(p);
    if (std::abs(x) > window || std::abs(y) > window) continue;
    if (boundary_affected(p)) continue;
    return p;
  }
  throw DomainError("no sample point inside the window of " + key());
}

std::vector<GraphPoint> GraphSpace::vertices_and_midpoints() const {
  const auto& g = graph();
  std::vector<GraphPoint> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(g.vertex_point(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back({e, g.edge(e).length.half()});
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Point GraphSpace::to_point(const GraphPoint& p) const {
  GraphPoint c = graph().canonical(p);
  return {static_cast<double>(c.edge), c.offset.to_double()};
}

GraphPoint GraphSpace::to_graph_point(const Point& p) const {
  if (!contains(p)) throw DomainError("point is not on graph " + key());
  auto e = static_cast<EdgeId>(p[0]);
  const Exact& len = graph().edge(e).length;
  Exact offset = rational_of(std::max(0.0, p[1]));
  if (offset > len) offset = len;
  return graph().canonical({e, offset});
}

// ---- fixtures

namespace {

struct Builder {
  std::shared_ptr<MetricGraph> graph;
  std::map<std::pair<mpq_class, mpq_class>, VertexId> index;

  explicit Builder(std::string name) : graph(std::make_shared<MetricGraph>(std::move(name))) {}

  VertexId at(long x, long y, bool open_end = false) {
    std::pair<mpq_class, mpq_class> key{x, y};
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    VertexId v = graph->add_vertex({key.first, key.second}, open_end);
    index.emplace(key, v);
    return v;
  }

  void segment(VertexId a, VertexId b) { graph->add_segment(a, b); }

  GraphPoint point(std::string_view x, std::string_view y) const { return graph->point_at(x, y); }
};

}  // namespace

std::shared_ptr<GraphSpace> make_real_line_graph(long half_width, long edge_length) {
  if (edge_length <= 0 || half_width <= 0 || half_width % edge_length != 0) {
    throw DomainError("real line window must be a positive multiple of the edge length");
  }
  Builder b("real_line");
  for (long x = -half_width; x < half_width; x += edge_length) {
    b.segment(b.at(x, 0, x == -half_width), b.at(x + edge_length, 0, x + edge_length == half_width));
  }
  GraphSpace::Fixture f;
  f.id = "real_line";
  f.key = "real_line(W=" + std::to_string(half_width) + ")";
  f.graph = b.graph;
  f.truth = {Truth::yes, Truth::yes};
  f.boundary_margin = Exact(edge_length);
  return std::make_shared<GraphSpace>(std::move(f));
}

std::shared_ptr<GraphSpace> make_diamond(long ray_length) {
  if (ray_length <= 0) throw DomainError("ray length must be positive");
  Builder b("diamond");
  VertexId l = b.at(-1, 0);
  VertexId t = b.at(0, 1);
  VertexId r = b.at(1, 0);
  VertexId s = b.at(0, -1);
  b.segment(l, t);
  b.segment(t, r);
  b.segment(r, s);
  b.segment(s, l);
  b.segment(b.at(-1 - ray_length, 0, true), l);
  b.segment(r, b.at(1 + ray_length, 0, true));
  GraphSpace::Fixture f;
  f.id = "diamond";
  f.key = "diamond(ray=" + std::to_string(ray_length) + ")";
  f.graph = b.graph;
  f.truth = {Truth::no, Truth::no};
  f.boundary_margin = Exact(0, 2);
  f.designated_witnesses = {
      {{b.point("-1/2", "1/2"), Exact::ratio(1, 2)}, {b.point("1/2", "-1/2"), Exact(0)}}};
  f.designated_failure = GraphProbe{b.point("-1/2", "1/2"), b.point("1/2", "-1/2"), Exact::ratio(1, 2)};
  return std::make_shared<GraphSpace>(std::move(f));
}

std::shared_ptr<GraphSpace> make_diamond_chain(long k) {
  if (k < 1) throw DomainError("diamond chain needs k >= 1");
  Builder b("diamond_chain");
  const long edge = 2 * k + 1;
  for (long c = -2 * k; c <= 2 * k; c += 2) {
    VertexId l = b.at(c - 1, 0, c - 1 == -edge);
    VertexId t = b.at(c, 1);
    VertexId r = b.at(c + 1, 0, c + 1 == edge);
    VertexId s = b.at(c, -1);
    b.segment(l, t);
    b.segment(t, r);
    b.segment(r, s);
    b.segment(s, l);
  }
  GraphSpace::Fixture f;
  f.id = "diamond_chain";
  f.key = "diamond_chain(k=" + std::to_string(k) + ")";
  f.graph = b.graph;
  f.truth = {Truth::no, Truth::no};
  f.boundary_margin = Exact(0, 2);
  f.designated_witnesses = {{{b.point("0", "1"), Exact::ratio(1, 2)}, {b.point("0", "-1"), Exact(0)}}};
  f.designated_failure = GraphProbe{b.point("0", "1"), b.point("0", "-1"), Exact::ratio(1, 4)};
  return std::make_shared<GraphSpace>(std::move(f));
}

std::shared_ptr<GraphSpace> make_tee(long ray_length) {
  if (ray_length <= 1) throw DomainError("tee ray must be longer than 1");
  Builder b("tee");
  VertexId p = b.at(-1, 0);
  VertexId o = b.at(0, 0);
  VertexId q = b.at(0, 1);
  b.segment(p, o);
  b.segment(o, q);
  b.segment(o, b.at(ray_length, 0, true));
  GraphSpace::Fixture f;
  f.id = "tee";
  f.key = "tee(ray=" + std::to_string(ray_length) + ")";
  f.graph = b.graph;
  f.truth = {Truth::no, Truth::yes};
  f.boundary_margin = Exact(2);
  f.designated_witnesses = {{{b.point("-1", "0"), Exact(2)}, {b.point("0", "1"), Exact(2)}}};
  f.designated_failure = GraphProbe{b.point("0", "1"), b.point("-1", "0"), Exact::ratio(1, 2)};
  return std::make_shared<GraphSpace>(std::move(f));
}

}  // namespace ballgeo
