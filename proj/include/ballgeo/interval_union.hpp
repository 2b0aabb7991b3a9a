#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ballgeo/metric_graph.hpp"

namespace ballgeo {

struct EdgePart {
  EdgeId edge = 0;
  OffsetInterval span;
  friend bool operator==(const EdgePart&, const EdgePart&) = default;
};

/// Compact subset of a metric graph given as a finite union of closed edge
/// sub-intervals.
///
/// The normal form stores, for every edge, the intersection of the set with
/// that closed edge as sorted, pairwise disjoint intervals. A vertex in the
/// set therefore shows up on every incident edge (possibly as a degenerate
/// interval), which makes set equality a plain comparison of parts.
class IntervalUnion {
 public:
  IntervalUnion(std::shared_ptr<const MetricGraph> graph, std::vector<EdgePart> parts);

  static IntervalUnion singleton(std::shared_ptr<const MetricGraph> graph, const GraphPoint& p);

  const MetricGraph& graph() const { return *graph_; }
  const std::shared_ptr<const MetricGraph>& graph_ptr() const { return graph_; }
  const std::vector<EdgePart>& parts() const { return parts_; }

  bool contains(const GraphPoint& p) const;
  bool subset_of(const IntervalUnion& other) const;
  bool touches_open_end() const;
  Exact total_length() const;

  /// Shortest-path distance from the set to every vertex.
  std::vector<Exact> vertex_distances() const;
  /// Distance-to-set profile on edge `e` given vertex_distances().
  EdgeProfile profile(EdgeId e, const std::vector<Exact>& from_vertices) const;
  Exact distance_from(const GraphPoint& p) const;

  std::string str() const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.graph_ == b.graph_ && a.parts_ == b.parts_;
  }

 private:
  std::shared_ptr<const MetricGraph> graph_;
  std::vector<EdgePart> parts_;
};

}  // namespace ballgeo
