#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ballgeo/ballspace.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo {

/// Metrics d_n on a common carrier converging uniformly to d, with a
/// certified bound sup |d_n - d| <= bound(n).
class MetricFamily {
 public:
  virtual ~MetricFamily() = default;
  virtual std::string id() const = 0;
  virtual std::shared_ptr<const ModelSpace> member(int n) const = 0;
  virtual std::shared_ptr<const ModelSpace> limit() const = 0;
  virtual double bound(int n) const = 0;
  /// Registered members, audited by audit_family.
  virtual std::vector<int> indices() const = 0;
  /// Numerical slack of one distance evaluation on ball endpoints.
  virtual double slack() const { return 0.0; }
};

/// d_n(a, b) = |psi_n(a) - psi_n(b)|, psi_n(x) = x + sin(x)/n, limit |a - b|, bound 2/n.
class PullbackLineFamily final : public MetricFamily {
 public:
  explicit PullbackLineFamily(std::vector<int> indices = {2, 4, 8, 16, 32, 64});
  std::string id() const override { return "pullback_line"; }
  std::shared_ptr<const ModelSpace> member(int n) const override;
  std::shared_ptr<const ModelSpace> limit() const override { return limit_; }
  double bound(int n) const override;
  std::vector<int> indices() const override { return indices_; }
  double slack() const override { return 4.0 * PullbackLine::kRootTolerance; }

 private:
  std::vector<int> indices_;
  std::shared_ptr<const ModelSpace> limit_;
};

/// d_n = d for every n.
class ConstantFamily final : public MetricFamily {
 public:
  explicit ConstantFamily(std::shared_ptr<const ModelSpace> model, std::vector<int> indices = {1, 2, 4});
  std::string id() const override { return "constant(" + model_->key() + ")"; }
  std::shared_ptr<const ModelSpace> member(int) const override { return model_; }
  std::shared_ptr<const ModelSpace> limit() const override { return model_; }
  double bound(int) const override { return 0.0; }
  std::vector<int> indices() const override { return indices_; }

 private:
  std::shared_ptr<const ModelSpace> model_;
  std::vector<int> indices_;
};

/// Builds "pullback_line" or "constant" (over `model`). Unknown kinds throw ParseError.
std::unique_ptr<MetricFamily> make_family(const std::string& kind, std::shared_ptr<const ModelSpace> model,
                                          std::vector<int> indices);

/// B_t(x) in B^n_{t+eps}(x) and B^n_t(x) in B_{t+eps}(x). Interval endpoints on
/// line models, net points elsewhere. Throws DomainError when eps < bound(n).
bool check_ball_inclusions(const MetricFamily& family, int n, const Point& x, double t, double eps,
                           double net_eps = 0.01);

struct LimitRow {
  int n = 0;
  double d_h = 0.0;
  double deviation = 0.0;
  /// 2 bound(n) + slack
  double allowed = 0.0;
  bool ok = false;
};

struct LimitReport {
  std::string family;
  double limit_d_h = 0.0;
  std::vector<LimitRow> rows;
  /// Deviations never increase along the index list.
  bool monotone = true;
  std::string verdict;  // converges | violation
};

/// d_H^n(B^n_t(x), B^n_s(y)) for every registered n up to n_max against the
/// limit d_H(B_t(x), B_s(y)).
LimitReport hausdorff_limit_check(const MetricFamily& family, const Point& x, const Point& y, double t, double s,
                                  int n_max, double net_eps = 0.01);

/// check_isometry on the limit. Throws DomainError unless every registered
/// member is strongly geodesically complete by ground truth.
BallCheckReport stability_check(const MetricFamily& family, const SampleConfig& cfg);

struct BoundAudit {
  int n = 0;
  double max_gap = 0.0;  // max |d_n - d| on the grid
  double bound = 0.0;
  bool ok = false;
};

/// |d_n - d| on a grid of `grid` point pairs from the sampling window.
std::vector<BoundAudit> audit_family(const MetricFamily& family, std::size_t grid = 10000, double window = 5.0);

}  // namespace ballgeo
