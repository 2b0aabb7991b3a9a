#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballgeo/exact.hpp"

namespace ballgeo {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Rational position of a vertex in the plane; only used for naming points.
struct PlanePosition {
  mpq_class x;
  mpq_class y;
  friend bool operator==(const PlanePosition&, const PlanePosition&) = default;
};

struct GraphVertex {
  PlanePosition position;
  /// Truncation point of a finite window onto an unbounded space.
  bool open_end = false;
  std::vector<EdgeId> incident;
};

struct GraphEdge {
  VertexId u = 0;
  VertexId v = 0;
  Exact length;
};

/// Point of the 1-complex: `offset` is measured from edge.u along the edge.
struct GraphPoint {
  EdgeId edge = 0;
  Exact offset;
  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

/// Closed sub-interval [lo, hi] of edge offsets.
struct OffsetInterval {
  Exact lo;
  Exact hi;
  friend bool operator==(const OffsetInterval&, const OffsetInterval&) = default;
};

/// Distance from a fixed source set, restricted to one edge.
///
/// On an edge of length L the distance function is
///   o -> min(from_u + o, from_v + L - o, dist(o, local intervals)),
/// a minimum of slope +1/-1 pieces, so level sets, sublevel sets and the
/// maxima over a sub-interval are found from finitely many candidates.
struct EdgeProfile {
  Exact length;
  Exact from_u;
  Exact from_v;
  std::vector<OffsetInterval> local;

  Exact at(const Exact& offset) const;
  /// {o in [0, L] : at(o) <= t}, sorted, merged.
  std::vector<OffsetInterval> sublevel(const Exact& t) const;
  /// {o in [0, L] : at(o) == t}, sorted, deduplicated.
  std::vector<Exact> level(const Exact& t) const;
  /// Crossings of increasing and decreasing pieces inside [0, L].
  std::vector<Exact> breakpoints() const;
};

/// Finite metric graph with exact edge lengths and points on edge interiors.
class MetricGraph {
 public:
  explicit MetricGraph(std::string name = "graph") : name_(std::move(name)) {}

  VertexId add_vertex(PlanePosition position, bool open_end = false);
  EdgeId add_edge(VertexId u, VertexId v, Exact length);
  /// Straight segment; the length is taken from the embedding and must be
  /// axis-aligned or diagonal so that it lies in Q(sqrt 2).
  EdgeId add_segment(VertexId u, VertexId v);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const GraphVertex& vertex(VertexId id) const { return vertices_.at(id); }
  const GraphEdge& edge(EdgeId id) const { return edges_.at(id); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::vector<VertexId> open_ends() const;

  /// Throws DomainError when the graph is empty or disconnected.
  void validate() const;

  GraphPoint vertex_point(VertexId v) const;
  /// Vertices are represented on their lowest-numbered incident edge.
  GraphPoint canonical(const GraphPoint& p) const;
  std::optional<VertexId> as_vertex(const GraphPoint& p) const;
  bool same_point(const GraphPoint& a, const GraphPoint& b) const {
    return canonical(a) == canonical(b);
  }
  void check_point(const GraphPoint& p) const;

  /// Multi-source shortest-path distances to every vertex.
  std::vector<Exact> vertex_distances(const std::vector<std::pair<VertexId, Exact>>& seeds) const;
  std::vector<Exact> vertex_distances(const GraphPoint& source) const;

  /// Profile of the distance from `source` along edge `e`, given its vertex distances.
  EdgeProfile profile(EdgeId e, const std::vector<Exact>& from_vertices,
                      const std::optional<GraphPoint>& source) const;

  Exact distance(const GraphPoint& a, const GraphPoint& b) const;

  /// Locates a point given in embedding coordinates.
  GraphPoint point_at(const mpq_class& x, const mpq_class& y) const;
  GraphPoint point_at(std::string_view x, std::string_view y) const;
  std::pair<double, double> embed(const GraphPoint& p) const;
  std::string label(const GraphPoint& p) const;

 private:
  std::string name_;
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
};

}  // namespace ballgeo
