#include "ballgeo/metric_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "ballgeo/errors.hpp"

namespace ballgeo {

namespace {

void push_clamped(std::vector<OffsetInterval>& out, Exact lo, Exact hi, const Exact& length) {
  if (lo.sign() < 0) lo = 0;
  if (hi > length) hi = length;
  if (lo <= hi) out.push_back({std::move(lo), std::move(hi)});
}

std::vector<OffsetInterval> merge_sorted(std::vector<OffsetInterval> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const OffsetInterval& a, const OffsetInterval& b) { return a.lo < b.lo; });
  std::vector<OffsetInterval> merged;
  for (auto& p : parts) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      if (p.hi > merged.back().hi) merged.back().hi = p.hi;
    } else {
      merged.push_back(std::move(p));
    }
  }
  return merged;
}

}  // namespace

Exact EdgeProfile::at(const Exact& o) const {
  Exact best = min(from_u + o, from_v + length - o);
  for (const auto& iv : local) {
    if (o < iv.lo) {
      best = min(best, iv.lo - o);
    } else if (o > iv.hi) {
      best = min(best, o - iv.hi);
    } else {
      return Exact(0);
    }
  }
  return best;
}

std::vector<OffsetInterval> EdgeProfile::sublevel(const Exact& t) const {
  std::vector<OffsetInterval> parts;
  if (from_u <= t) push_clamped(parts, 0, t - from_u, length);
  if (from_v <= t) push_clamped(parts, length - (t - from_v), length, length);
  for (const auto& iv : local) push_clamped(parts, iv.lo - t, iv.hi + t, length);
  return merge_sorted(std::move(parts));
}

std::vector<Exact> EdgeProfile::level(const Exact& t) const {
  std::vector<Exact> candidates{t - from_u, length - t + from_v};
  for (const auto& iv : local) {
    candidates.push_back(iv.lo - t);
    candidates.push_back(iv.hi + t);
  }
  std::vector<Exact> out;
  for (auto& c : candidates) {
    if (c.sign() < 0 || c > length) continue;
    if (at(c) == t) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Exact> EdgeProfile::breakpoints() const {
  // increasing pieces o + c, decreasing pieces c - o
  std::vector<Exact> inc{from_u};
  std::vector<Exact> dec{from_v + length};
  for (const auto& iv : local) {
    inc.push_back(-iv.hi);
    dec.push_back(iv.lo);
  }
  std::vector<Exact> out;
  for (const auto& a : inc) {
    for (const auto& b : dec) {
      Exact o = (b - a).half();
      if (o.sign() >= 0 && o <= length) out.push_back(std::move(o));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexId MetricGraph::add_vertex(PlanePosition position, bool open_end) {
  vertices_.push_back({std::move(position), open_end, {}});
  return vertices_.size() - 1;
}

EdgeId MetricGraph::add_edge(VertexId u, VertexId v, Exact length) {
  if (u >= vertices_.size() || v >= vertices_.size()) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("self-loops are not supported");
  if (length.sign() <= 0) throw DomainError("edge lengths must be positive");
  edges_.push_back({u, v, std::move(length)});
  EdgeId id = edges_.size() - 1;
  vertices_[u].incident.push_back(id);
  vertices_[v].incident.push_back(id);
  return id;
}

EdgeId MetricGraph::add_segment(VertexId u, VertexId v) {
  const auto& a = vertices_.at(u).position;
  const auto& b = vertices_.at(v).position;
  mpq_class dx = abs(mpq_class(b.x - a.x));
  mpq_class dy = abs(mpq_class(b.y - a.y));
  if (dx == 0) return add_edge(u, v, Exact(dy));
  if (dy == 0) return add_edge(u, v, Exact(dx));
  if (dx == dy) return add_edge(u, v, Exact(0, dx));
  throw Unsupported("segment length is not in Q(sqrt2)");
}

std::vector<VertexId> MetricGraph::open_ends() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].open_end) out.push_back(v);
  }
  return out;
}

void MetricGraph::validate() const {
  if (vertices_.empty() || edges_.empty()) throw DomainError("graph must have an edge");
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : vertices_[v].incident) {
      VertexId w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("graph '" + name_ + "' is disconnected");
  }
}

GraphPoint MetricGraph::vertex_point(VertexId v) const {
  const auto& incident = vertices_.at(v).incident;
  if (incident.empty()) throw DomainError("isolated vertex");
  EdgeId e = *std::min_element(incident.begin(), incident.end());
  return edges_[e].u == v ? GraphPoint{e, 0} : GraphPoint{e, edges_[e].length};
}

void MetricGraph::check_point(const GraphPoint& p) const {
  if (p.edge >= edges_.size()) throw DomainError("point on unknown edge");
  if (p.offset.sign() < 0 || p.offset > edges_[p.edge].length) {
    throw DomainError("edge offset outside [0, length]");
  }
}

std::optional<VertexId> MetricGraph::as_vertex(const GraphPoint& p) const {
  check_point(p);
  const auto& e = edges_[p.edge];
  if (p.offset.sign() == 0) return e.u;
  if (p.offset == e.length) return e.v;
  return std::nullopt;
}

GraphPoint MetricGraph::canonical(const GraphPoint& p) const {
  if (auto v = as_vertex(p)) return vertex_point(*v);
  return p;
}

std::vector<Exact> MetricGraph::vertex_distances(
    const std::vector<std::pair<VertexId, Exact>>& seeds) const {
  std::vector<std::optional<Exact>> best(vertices_.size());
  using Entry = std::pair<Exact, VertexId>;
  auto later = [](const Entry& a, const Entry& b) { return a.first > b.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  for (const auto& [v, d] : seeds) {
    if (!best[v] || d < *best[v]) {
      best[v] = d;
      queue.emplace(d, v);
    }
  }
  std::vector<bool> done(vertices_.size(), false);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (EdgeId e : vertices_[v].incident) {
      const auto& edge = edges_[e];
      VertexId w = edge.u == v ? edge.v : edge.u;
      Exact nd = d + edge.length;
      if (!best[w] || nd < *best[w]) {
        best[w] = nd;
        queue.emplace(std::move(nd), w);
      }
    }
  }
  std::vector<Exact> out;
  out.reserve(best.size());
  for (auto& b : best) {
    if (!b) throw DomainError("graph '" + name_ + "' is disconnected");
    out.push_back(std::move(*b));
  }
  return out;
}

std::vector<Exact> MetricGraph::vertex_distances(const GraphPoint& source) const {
  check_point(source);
  const auto& e = edges_[source.edge];
  return vertex_distances({{e.u, source.offset}, {e.v, e.length - source.offset}});
}

EdgeProfile MetricGraph::profile(EdgeId e, const std::vector<Exact>& from_vertices,
                                 const std::optional<GraphPoint>& source) const {
  const auto& edge = edges_.at(e);
  EdgeProfile prof{edge.length, from_vertices[edge.u], from_vertices[edge.v], {}};
  if (source && source->edge == e) prof.local.push_back({source->offset, source->offset});
  return prof;
}

Exact MetricGraph::distance(const GraphPoint& a, const GraphPoint& b) const {
  check_point(b);
  auto dv = vertex_distances(a);
  return profile(b.edge, dv, a).at(b.offset);
}

GraphPoint MetricGraph::point_at(const mpq_class& x, const mpq_class& y) const {
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& edge = edges_[id];
    const auto& a = vertices_[edge.u].position;
    const auto& b = vertices_[edge.v].position;
    mpq_class dx = b.x - a.x;
    mpq_class dy = b.y - a.y;
    mpq_class px = x - a.x;
    mpq_class py = y - a.y;
    if (px * dy - py * dx != 0) continue;
    mpq_class lambda = dx != 0 ? mpq_class(px / dx) : mpq_class(py / dy);
    if (lambda < 0 || lambda > 1) continue;
    return canonical({id, Exact(lambda) * edge.length});
  }
  std::ostringstream msg;
  msg << "point (" << x.get_str() << ", " << y.get_str() << ") is not on graph '" << name_ << "'";
  throw DomainError(msg.str());
}

GraphPoint MetricGraph::point_at(std::string_view x, std::string_view y) const {
  Exact ex = Exact::parse(x);
  Exact ey = Exact::parse(y);
  if (!ex.is_rational() || !ey.is_rational()) throw DomainError("coordinates must be rational");
  return point_at(ex.rational_part(), ey.rational_part());
}

std::pair<double, double> MetricGraph::embed(const GraphPoint& p) const {
  check_point(p);
  const auto& edge = edges_[p.edge];
  const auto& a = vertices_[edge.u].position;
  const auto& b = vertices_[edge.v].position;
  double lambda = p.offset.to_double() / edge.length.to_double();
  double ax = a.x.get_d();
  double ay = a.y.get_d();
  return {ax + lambda * (b.x.get_d() - ax), ay + lambda * (b.y.get_d() - ay)};
}

std::string MetricGraph::label(const GraphPoint& p) const {
  GraphPoint c = canonical(p);
  std::ostringstream out;
  if (auto v = as_vertex(c)) {
    const auto& pos = vertices_[*v].position;
    out << "(" << pos.x.get_str() << "," << pos.y.get_str() << ")";
  } else {
    out << "e" << c.edge << "@" << c.offset.str();
  }
  return out.str();
}

}  // namespace ballgeo
