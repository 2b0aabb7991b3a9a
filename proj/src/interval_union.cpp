#include "ballgeo/interval_union.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ballgeo/errors.hpp"

namespace ballgeo {

namespace {

using PartMap = std::map<EdgeId, std::vector<OffsetInterval>>;

void merge_in_place(std::vector<OffsetInterval>& spans) {
  std::sort(spans.begin(), spans.end(),
            [](const OffsetInterval& a, const OffsetInterval& b) { return a.lo < b.lo; });
  std::vector<OffsetInterval> merged;
  for (auto& s : spans) {
    if (!merged.empty() && s.lo <= merged.back().hi) {
      if (s.hi > merged.back().hi) merged.back().hi = s.hi;
    } else {
      merged.push_back(std::move(s));
    }
  }
  spans = std::move(merged);
}

bool covers(const std::vector<OffsetInterval>& spans, const Exact& o) {
  return std::any_of(spans.begin(), spans.end(),
                     [&](const OffsetInterval& s) { return s.lo <= o && o <= s.hi; });
}

}  // namespace

IntervalUnion::IntervalUnion(std::shared_ptr<const MetricGraph> graph, std::vector<EdgePart> parts)
    : graph_(std::move(graph)) {
  if (!graph_) throw DomainError("interval union needs a graph");
  if (parts.empty()) throw DomainError("compact sets must be nonempty");
  PartMap by_edge;
  for (auto& p : parts) {
    if (p.edge >= graph_->edge_count()) throw DomainError("interval on unknown edge");
    const Exact& len = graph_->edge(p.edge).length;
    if (p.span.lo > p.span.hi) throw DomainError("reversed edge interval");
    if (p.span.lo.sign() < 0 || p.span.hi > len) throw DomainError("edge interval outside [0, length]");
    by_edge[p.edge].push_back(std::move(p.span));
  }
  for (auto& [e, spans] : by_edge) merge_in_place(spans);

  std::set<VertexId> vertices;
  for (const auto& [e, spans] : by_edge) {
    const auto& edge = graph_->edge(e);
    if (spans.front().lo.sign() == 0) vertices.insert(edge.u);
    if (spans.back().hi == edge.length) vertices.insert(edge.v);
  }
  for (VertexId v : vertices) {
    for (EdgeId e : graph_->vertex(v).incident) {
      const auto& edge = graph_->edge(e);
      Exact at = edge.u == v ? Exact(0) : edge.length;
      auto& spans = by_edge[e];
      if (!covers(spans, at)) {
        spans.push_back({at, at});
        merge_in_place(spans);
      }
    }
  }
  for (auto& [e, spans] : by_edge) {
    for (auto& s : spans) parts_.push_back({e, std::move(s)});
  }
}

IntervalUnion IntervalUnion::singleton(std::shared_ptr<const MetricGraph> graph, const GraphPoint& p) {
  graph->check_point(p);
  return IntervalUnion(std::move(graph), {{p.edge, {p.offset, p.offset}}});
}

bool IntervalUnion::contains(const GraphPoint& p) const {
  graph_->check_point(p);
  return std::any_of(parts_.begin(), parts_.end(), [&](const EdgePart& part) {
    return part.edge == p.edge && part.span.lo <= p.offset && p.offset <= part.span.hi;
  });
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
  if (graph_ != other.graph_) throw ModelMismatch("interval unions live on different graphs");
  for (const auto& part : parts_) {
    bool inside = std::any_of(other.parts_.begin(), other.parts_.end(), [&](const EdgePart& o) {
      return o.edge == part.edge && o.span.lo <= part.span.lo && part.span.hi <= o.span.hi;
    });
    if (!inside) return false;
  }
  return true;
}

bool IntervalUnion::touches_open_end() const {
  for (VertexId v : graph_->open_ends()) {
    if (contains(graph_->vertex_point(v))) return true;
  }
  return false;
}

Exact IntervalUnion::total_length() const {
  Exact total;
  for (const auto& part : parts_) total += part.span.hi - part.span.lo;
  return total;
}

std::vector<Exact> IntervalUnion::vertex_distances() const {
  std::vector<std::pair<VertexId, Exact>> seeds;
  for (const auto& part : parts_) {
    const auto& edge = graph_->edge(part.edge);
    seeds.emplace_back(edge.u, part.span.lo);
    seeds.emplace_back(edge.v, edge.length - part.span.hi);
  }
  return graph_->vertex_distances(seeds);
}

EdgeProfile IntervalUnion::profile(EdgeId e, const std::vector<Exact>& from_vertices) const {
  const auto& edge = graph_->edge(e);
  EdgeProfile prof{edge.length, from_vertices[edge.u], from_vertices[edge.v], {}};
  for (const auto& part : parts_) {
    if (part.edge == e) prof.local.push_back(part.span);
  }
  return prof;
}

Exact IntervalUnion::distance_from(const GraphPoint& p) const {
  graph_->check_point(p);
  return profile(p.edge, vertex_distances()).at(p.offset);
}

std::string IntervalUnion::str() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ", ";
    out << "e" << parts_[i].edge << "[" << parts_[i].span.lo.str() << "," << parts_[i].span.hi.str() << "]";
  }
  out << "}";
  return out.str();
}

}  // namespace ballgeo
