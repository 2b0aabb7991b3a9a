#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballgeo/compact_set.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo {

struct SampleConfig {
  std::size_t n = 100;
  std::uint64_t seed = 1;
  double eps = 0.01;
  /// Centers are drawn from [-window, window] per coordinate (model-specific for curved models).
  double window = 5.0;
  double r_max = 3.0;
  double tolerance = 1e-6;
  bool include_designated = false;
};

/// f(x, t) = closed t-ball about x.
IntervalUnion f_map(const GraphSpace& space, const GraphBall& bp);
/// Exact interval union on graph models, eps-net elsewhere.
CompactSet f_map(const ModelSpace& space, const BallPoint& bp, double eps);

/// d_T((x, t), (y, s)) = d(x, y) + |t - s|.
double taxicab_dist(const ModelSpace& space, const BallPoint& a, const BallPoint& b);
Exact taxicab_dist(const GraphSpace& space, const GraphBall& a, const GraphBall& b);

BallPoint sample_ball(const ModelSpace& space, Rng& rng, double window, double r_max);
/// Rational radius; resampled until the ball stays clear of open ends.
GraphBall sample_graph_ball(const GraphSpace& space, Rng& rng, double window, double r_max);

struct BallRecord {
  std::vector<double> center;
  double radius = 0.0;
  /// Exact rendering on graphs ("(-1/2,1/2) r=1/2"), rounded elsewhere.
  std::string label;
};

struct PairRecord {
  BallRecord a;
  BallRecord b;
  double d_h = 0.0;
  double d_t = 0.0;
  double error_bound = 0.0;
  /// Exact values on graphs, empty on nets.
  std::string exact_d_h;
  std::string exact_d_t;
};

struct BallCheckReport {
  std::string model;
  std::string check;
  std::size_t samples = 0;
  double max_deviation = 0.0;
  /// max over samples of d_H - d_T (negative when every pair is strictly contracted).
  double max_excess = 0.0;
  double tolerance = 0.0;
  double max_error_bound = 0.0;
  bool exact = false;
  std::string exact_max_deviation;
  /// isometry | lipschitz-only | violation
  std::string verdict;
  std::vector<PairRecord> witnesses;
  std::optional<PairRecord> worst;
};

/// d_H(f(p), f(q)) against d_T(p, q) over designated and random pairs.
/// "violation" requires |d_H - d_T| above error bound + tolerance.
BallCheckReport check_isometry(const ModelSpace& space, const SampleConfig& cfg);

/// d_H <= d_T + error bound + tolerance on every pair: "isometry" when every
/// pair is also within tolerance of equality, "lipschitz-only" when some pair
/// is certified contracted, "violation" when the bound breaks.
BallCheckReport check_lipschitz(const ModelSpace& space, const SampleConfig& cfg);

/// Pairs with distinct parameters and equal balls: exact on graphs; on nets,
/// d_H within the error bound while d_T exceeds it.
BallCheckReport check_injectivity(const ModelSpace& space, const SampleConfig& cfg,
                                  const std::vector<std::pair<BallPoint, BallPoint>>& extra = {});

struct ProductCheckReport {
  std::string model;
  std::size_t samples = 0;
  /// |d_H in the product - max of factor d_H|
  double max_formula_deviation = 0.0;
  /// |d_H in the product - (max(d_X, d_Y) + |t - s|)|; -1 when a factor is
  /// not strongly geodesically complete and the chain is not checked.
  double max_corollary_deviation = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  std::string verdict;
  std::vector<std::string> witnesses;
};

/// Exact box route when both factors are Euclidean lines, nets otherwise.
ProductCheckReport product_ball_distance_check(const ProductMaxSpace& space, const SampleConfig& cfg);

/// Exact-route Hausdorff distance for models whose balls are intervals of a
/// line metrized by |phi(a) - phi(b)| with phi increasing:
/// max(d(lo_a, lo_b), d(hi_a, hi_b)). Empty for other models.
std::optional<double> interval_hausdorff(const ModelSpace& space, const BallPoint& a, const BallPoint& b,
                                         double* error_bound);

/// Hausdorff distance of two product balls through the factor formula,
/// computed exactly where factors allow (intervals, graphs).
double factor_hausdorff(const ModelSpace& factor, const BallPoint& a, const BallPoint& b, double eps,
                        double* error_bound);

}  // namespace ballgeo
