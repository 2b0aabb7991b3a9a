#include "ballgeo/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ballgeo/errors.hpp"

namespace ballgeo {

namespace {

// (edge, offset) pairs naming p; a vertex has one per incident edge.
std::vector<std::pair<EdgeId, Exact>> placements(const MetricGraph& g, const GraphPoint& p) {
  if (auto v = g.as_vertex(p)) {
    std::vector<std::pair<EdgeId, Exact>> out;
    for (EdgeId e : g.vertex(*v).incident) out.emplace_back(e, g.edge(e).u == *v ? Exact(0) : g.edge(e).length);
    return out;
  }
  return {{p.edge, p.offset}};
}

Exact distance_from_profile(const MetricGraph& g, const std::vector<Exact>& dv, const GraphPoint& source,
                            const GraphPoint& p) {
  return g.profile(p.edge, dv, source).at(p.offset);
}

std::string describe_sampling(std::size_t ys, const std::vector<std::string>& radii) {
  std::ostringstream out;
  out << "|Y|=" << ys << " R={";
  for (std::size_t i = 0; i < radii.size(); ++i) out << (i ? "," : "") << radii[i];
  out << "}";
  return out.str();
}

Verdict combine(const std::vector<Verdict>& verdicts) {
  bool open = false;
  for (Verdict v : verdicts) {
    if (v == Verdict::fails) return Verdict::fails;
    if (v == Verdict::inconclusive) open = true;
  }
  return open ? Verdict::inconclusive : Verdict::holds;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

Exact path_length(const GraphSpace& space, const std::vector<GraphPoint>& polyline) {
  const auto& g = space.graph();
  Exact total;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    std::optional<Exact> piece;
    for (const auto& [ea, oa] : placements(g, polyline[i])) {
      for (const auto& [eb, ob] : placements(g, polyline[i + 1])) {
        if (ea != eb) continue;
        Exact len = abs(oa - ob);
        if (!piece || len < *piece) piece = len;
      }
    }
    if (!piece) throw DomainError("consecutive points " + g.label(polyline[i]) + " and " + g.label(polyline[i + 1]) +
                                  " share no edge");
    total += *piece;
  }
  return total;
}

double path_length(const ModelSpace& space, const std::function<Point(double)>& curve, int depth) {
  if (depth < 0 || depth > 30) throw DomainError("refinement depth must be in [0, 30]");
  const long n = 1L << depth;
  double total = 0.0;
  Point prev = curve(0.0);
  for (long i = 1; i <= n; ++i) {
    Point next = curve(static_cast<double>(i) / static_cast<double>(n));
    total += space.distance(prev, next);
    prev = next;
  }
  return total;
}

double path_length(const ModelSpace& space, const std::vector<Point>& polyline, int depth) {
  if (polyline.empty()) throw DomainError("empty polyline");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Point& a = polyline[i];
    const Point& b = polyline[i + 1];
    total += path_length(
        space,
        [&](double s) {
          Point p;
          for (std::size_t k = 0; k < Point::kCapacity; ++k) p[k] = a[k] + s * (b[k] - a[k]);
          return p;
        },
        depth);
  }
  return total;
}

GraphSegment graph_segment(const GraphSpace& space, std::vector<GraphPoint> points) {
  if (points.empty()) throw DomainError("empty segment");
  GraphSegment seg;
  seg.params.push_back(Exact(0));
  for (std::size_t i = 1; i < points.size(); ++i) {
    seg.params.push_back(seg.params.back() + space.distance(points[i - 1], points[i]));
  }
  seg.points = std::move(points);
  return seg;
}

Segment segment(const ModelSpace& space, std::vector<Point> points) {
  if (points.empty()) throw DomainError("empty segment");
  Segment seg;
  seg.params.push_back(0.0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    seg.params.push_back(seg.params.back() + space.distance(points[i - 1], points[i]));
  }
  seg.points = std::move(points);
  return seg;
}

RealizingCheck is_distance_realizing(const GraphSpace& space, const GraphSegment& seg) {
  if (seg.points.size() != seg.params.size()) throw DomainError("segment points and params differ in length");
  const auto& g = space.graph();
  Exact worst;
  for (std::size_t i = 0; i < seg.points.size(); ++i) {
    auto dv = g.vertex_distances(seg.points[i]);
    for (std::size_t j = i + 1; j < seg.points.size(); ++j) {
      Exact d = distance_from_profile(g, dv, seg.points[i], seg.points[j]);
      worst = max(worst, abs(d - abs(seg.params[j] - seg.params[i])));
    }
  }
  return {worst.sign() == 0, worst.to_double(), worst};
}

RealizingCheck is_distance_realizing(const ModelSpace& space, const Segment& seg, double tol) {
  if (seg.points.size() != seg.params.size()) throw DomainError("segment points and params differ in length");
  double worst = 0.0;
  for (std::size_t i = 0; i < seg.points.size(); ++i) {
    for (std::size_t j = i + 1; j < seg.points.size(); ++j) {
      double d = space.distance(seg.points[i], seg.points[j]);
      worst = std::max(worst, std::abs(d - std::abs(seg.params[j] - seg.params[i])));
    }
  }
  return {worst <= tol, worst, std::nullopt};
}

std::vector<double> default_radii() { return {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}; }

std::vector<Exact> default_exact_radii() {
  return {Exact::ratio(1, 8), Exact::ratio(1, 4), Exact::ratio(1, 2), Exact(1), Exact(2), Exact(4), Exact(8)};
}

GraphExtendibility extendibility_at(const GraphSpace& space, const GraphPoint& x, const std::vector<GraphPoint>& ys,
                                    const std::vector<Exact>& radii) {
  const auto& g = space.graph();
  g.check_point(x);
  if (ys.empty() || radii.empty()) throw DomainError("extendibility needs sample points and radii");
  GraphExtendibility out;
  out.x = g.canonical(x);
  std::vector<std::vector<Exact>> from_y;
  std::vector<Exact> dyx;
  for (const auto& y : ys) {
    if (g.same_point(x, y)) throw DomainError("sample point equals x");
    from_y.push_back(g.vertex_distances(y));
    dyx.push_back(distance_from_profile(g, from_y.back(), y, x));
  }
  std::vector<Verdict> verdicts;
  std::vector<std::string> radius_text;
  for (const auto& r : radii) {
    radius_text.push_back(r.str());
    auto sphere = space.sphere(x, r);
    bool truncated = space.ball_truncated(x, r);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      GraphSphereCheck check;
      check.y = g.canonical(ys[i]);
      check.r = r;
      check.target = dyx[i] + r;
      check.boundary_affected = truncated;
      for (const auto& p : sphere) {
        Exact d = distance_from_profile(g, from_y[i], ys[i], p);
        if (!check.best || d > *check.best) check.best = d;
        if (!check.p && d == check.target) check.p = p;
      }
      if (check.p) {
        check.verdict = Verdict::holds;
      } else {
        check.verdict = truncated ? Verdict::inconclusive : Verdict::fails;
      }
      verdicts.push_back(check.verdict);
      out.checks.push_back(std::move(check));
    }
  }
  out.verdict = combine(verdicts);
  out.sampling = describe_sampling(ys.size(), radius_text);
  return out;
}

Extendibility extendibility_at(const ModelSpace& space, const Point& x, const std::vector<Point>& ys,
                               const std::vector<double>& radii, double eps) {
  if (!space.contains(x)) throw DomainError("x is outside " + space.id());
  if (ys.empty() || radii.empty()) throw DomainError("extendibility needs sample points and radii");
  const double tol = kExtendibilityTolerance + 2.0 * eps;
  Extendibility out;
  out.x = x;
  std::vector<Verdict> verdicts;
  std::vector<std::string> radius_text;
  for (double r : radii) {
    if (!(r > 0.0)) throw DomainError("radii must be positive");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", r);
    radius_text.emplace_back(buf);
    std::optional<std::vector<Point>> net;  // built on first use
    for (const auto& y : ys) {
      const double dyx = space.checked_distance(y, x);
      if (dyx == 0.0) throw DomainError("sample point equals x");
      SphereCheck check;
      check.y = y;
      check.r = r;
      check.target = dyx + r;
      check.tolerance = tol;
      auto consider = [&](const Point& p) {
        if (std::abs(space.distance(x, p) - r) > tol) return;
        double d = space.distance(y, p);
        if (!check.p || d > check.best) {
          check.best = d;
          check.p = p;
        }
      };
      if (auto c = space.continue_geodesic(y, x, r); c && space.contains(*c)) consider(*c);
      if (!check.p || check.target - check.best >= tol) {
        if (!net) net = space.sphere_net(x, r, eps);
        for (const auto& p : *net) consider(p);
      }
      check.margin = check.p ? check.target - check.best : check.target;
      if (!check.p) {
        check.verdict = Verdict::fails;
      } else if (check.margin < tol) {
        check.verdict = Verdict::holds;
      } else if (check.margin > tol) {
        check.verdict = Verdict::fails;
      } else {
        check.verdict = Verdict::inconclusive;
      }
      if (check.verdict != Verdict::holds) check.p.reset();
      verdicts.push_back(check.verdict);
      out.checks.push_back(std::move(check));
    }
  }
  out.verdict = combine(verdicts);
  out.sampling = describe_sampling(ys.size(), radius_text) + " eps=" + std::to_string(eps);
  return out;
}

ExtendibleSet extendible_set(const ModelSpace& model, const std::vector<GraphPoint>& candidates,
                             std::optional<std::vector<GraphPoint>> ys, const std::vector<Exact>& radii) {
  const GraphSpace* space = model.as_graph();
  if (!space) throw Unsupported("extendible_set needs a graph model; use extendibility_at on " + model.id());
  const auto& g = space->graph();
  const std::vector<GraphPoint>& sample = ys ? *ys : candidates;
  ExtendibleSet out;
  for (const auto& c : candidates) {
    GraphPoint x = g.canonical(c);
    if (space->boundary_affected(x)) {
      out.boundary.push_back(x);
      continue;
    }
    std::vector<GraphPoint> others;
    for (const auto& y : sample) {
      if (!g.same_point(x, y)) others.push_back(y);
    }
    auto verdict = extendibility_at(*space, x, others, radii);
    switch (verdict.verdict) {
      case Verdict::holds:
        out.holds.push_back(x);
        break;
      case Verdict::fails:
        out.fails.push_back(x);
        break;
      case Verdict::inconclusive:
        out.inconclusive.push_back(x);
        break;
    }
    out.details.push_back(std::move(verdict));
  }
  return out;
}

namespace {

struct Walk {
  std::vector<GraphPoint> points;
  std::vector<Exact> params;
};

struct MinCutSearch {
  const GraphSpace& space;
  const MetricGraph& g;
  GraphPoint x;
  std::vector<Exact> dv;
  std::size_t budget;
  std::optional<GraphMinCut> best;

  // Walks edge e from offset a in direction dir; `walk` ends at the start point.
  void traverse(EdgeId e, const Exact& a, int dir, Walk walk) {
    if (budget == 0) return;
    --budget;
    const Exact s0 = walk.params.back();
    if (best && s0 >= best->failure_parameter) return;
    const auto& edge = g.edge(e);
    const Exact rem = dir > 0 ? edge.length - a : a;
    EdgeProfile prof = g.profile(e, dv, x);
    auto offset_at = [&](const Exact& o) { return dir > 0 ? a + o : a - o; };
    auto slack = [&](const Exact& o) { return s0 + o - prof.at(offset_at(o)); };

    std::vector<Exact> candidates{Exact(0), rem};
    auto add = [&](const Exact& offset) {
      Exact o = dir > 0 ? offset - a : a - offset;
      if (o.sign() > 0 && o < rem) candidates.push_back(std::move(o));
    };
    for (const auto& b : prof.breakpoints()) add(b);
    for (const auto& iv : prof.local) {
      add(iv.lo);
      add(iv.hi);
    }
    std::sort(candidates.begin(), candidates.end());
    Exact o_star;
    for (const auto& o : candidates) {
      if (slack(o).sign() == 0) o_star = o;
    }

    if (o_star == rem) {
      GraphPoint end = g.canonical({e, offset_at(rem)});
      walk.points.push_back(end);
      walk.params.push_back(s0 + rem);
      VertexId w = *g.as_vertex(end);
      if (g.vertex(w).open_end) return;
      for (EdgeId next : g.vertex(w).incident) {
        if (next == e) continue;
        const auto& ne = g.edge(next);
        traverse(next, ne.u == w ? Exact(0) : ne.length, ne.u == w ? 1 : -1, walk);
      }
      return;
    }

    GraphMinCut found;
    found.failure_parameter = s0 + o_star;
    walk.points.push_back(g.canonical({e, offset_at(o_star)}));
    walk.params.push_back(found.failure_parameter);
    found.segment = {walk.points, walk.params};
    Exact ob = (o_star + rem).half();
    found.beyond = g.canonical({e, offset_at(ob)});
    found.beyond_parameter = s0 + ob;
    found.beyond_distance = prof.at(offset_at(ob));
    if (!best || found.failure_parameter < best->failure_parameter) best = std::move(found);
  }
};

}  // namespace

std::optional<GraphMinCut> mincut_witness(const GraphSpace& space, const GraphPoint& x, std::size_t budget) {
  const auto& g = space.graph();
  g.check_point(x);
  MinCutSearch search{space, g, g.canonical(x), g.vertex_distances(x), budget, std::nullopt};
  Walk start{{search.x}, {Exact(0)}};
  if (auto v = g.as_vertex(search.x)) {
    for (EdgeId e : g.vertex(*v).incident) {
      const auto& edge = g.edge(e);
      search.traverse(e, edge.u == *v ? Exact(0) : edge.length, edge.u == *v ? 1 : -1, start);
    }
  } else {
    search.traverse(search.x.edge, search.x.offset, 1, start);
    search.traverse(search.x.edge, search.x.offset, -1, start);
  }
  return search.best;
}

std::optional<MinCut> mincut_witness(const ModelSpace& space, const Point& x, const Point& toward, double s_max,
                                     double h) {
  const double d0 = space.checked_distance(x, toward);
  if (d0 == 0.0) throw DomainError("direction point equals x");
  if (!(h > 0.0)) throw DomainError("scan step must be positive");
  auto gamma = [&](double s) { return space.continue_geodesic(x, toward, s - d0); };
  auto minimizing = [&](double s, const Point& p) { return space.distance(x, p) >= s - 1e-12 * std::max(1.0, s); };
  double prev = d0;
  for (double s = d0 + h; s <= s_max + h; s += h) {
    auto p = gamma(s);
    if (!p) return std::nullopt;
    if (minimizing(s, *p)) {
      prev = s;
      continue;
    }
    double lo = prev;
    double hi = s;
    while (hi - lo > 1e-12) {
      double mid = lo + (hi - lo) / 2.0;
      if (mid == lo || mid == hi) break;
      auto q = gamma(mid);
      if (q && minimizing(mid, *q)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    MinCut out;
    out.failure_parameter = lo;
    out.segment = segment(space, {x, toward, *gamma(lo)});
    out.segment.params = {0.0, d0, lo};
    return out;
  }
  return std::nullopt;
}

}  // namespace ballgeo
