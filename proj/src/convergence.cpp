#include "ballgeo/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "ballgeo/errors.hpp"

namespace ballgeo {

PullbackLineFamily::PullbackLineFamily(std::vector<int> indices)
    : indices_(std::move(indices)), limit_(std::make_shared<EuclideanSpace>(1)) {
  if (indices_.empty()) throw DomainError("family needs at least one index");
  for (int n : indices_) {
    if (n < 2) throw DomainError("pullback family indices must be >= 2");
  }
}

std::shared_ptr<const ModelSpace> PullbackLineFamily::member(int n) const {
  return std::make_shared<PullbackLine>(n);
}

double PullbackLineFamily::bound(int n) const {
  if (n < 2) throw DomainError("pullback family indices must be >= 2");
  return 2.0 / n;
}

ConstantFamily::ConstantFamily(std::shared_ptr<const ModelSpace> model, std::vector<int> indices)
    : model_(std::move(model)), indices_(std::move(indices)) {
  if (!model_) throw DomainError("constant family needs a model");
  if (indices_.empty()) throw DomainError("family needs at least one index");
}

std::unique_ptr<MetricFamily> make_family(const std::string& kind, std::shared_ptr<const ModelSpace> model,
                                          std::vector<int> indices) {
  if (kind == "pullback_line") {
    return indices.empty() ? std::make_unique<PullbackLineFamily>() : std::make_unique<PullbackLineFamily>(indices);
  }
  if (kind == "constant") {
    return indices.empty() ? std::make_unique<ConstantFamily>(std::move(model))
                           : std::make_unique<ConstantFamily>(std::move(model), indices);
  }
  throw ParseError("unknown family '" + kind + "'");
}

namespace {

// inner in outer, up to slack on the endpoints
bool interval_inside(std::pair<double, double> inner, std::pair<double, double> outer, double slack) {
  return outer.first <= inner.first + slack && inner.second <= outer.second + slack;
}

bool net_inside(const ModelSpace& from, const ModelSpace& to, const Point& x, double t, double outer,
                double net_eps) {
  for (const Point& p : from.ball_net({x, t}, net_eps).points) {
    if (to.distance(x, p) > outer + 1e-9) return false;
  }
  return true;
}

}  // namespace

bool check_ball_inclusions(const MetricFamily& family, int n, const Point& x, double t, double eps, double net_eps) {
  if (!(t >= 0.0)) throw DomainError("negative radius");
  if (!(eps >= family.bound(n))) {
    throw DomainError("eps below the certified bound " + std::to_string(family.bound(n)) + " of member " +
                      std::to_string(n));
  }
  auto dn = family.member(n);
  auto d = family.limit();
  auto limit_small = d->ball_interval({x, t});
  auto member_small = dn->ball_interval({x, t});
  if (limit_small && member_small) {
    return interval_inside(*limit_small, *dn->ball_interval({x, t + eps}), family.slack()) &&
           interval_inside(*member_small, *d->ball_interval({x, t + eps}), family.slack());
  }
  return net_inside(*d, *dn, x, t, t + eps, net_eps) && net_inside(*dn, *d, x, t, t + eps, net_eps);
}

namespace {

struct Dh {
  double value = 0.0;
  double error = 0.0;
};

Dh ball_hausdorff(const ModelSpace& m, const BallPoint& a, const BallPoint& b, double net_eps) {
  double err = 0.0;
  if (auto v = interval_hausdorff(m, a, b, &err)) return {*v, err};
  HausdorffResult h = hausdorff(m.ball_net(a, net_eps), m.ball_net(b, net_eps));
  return {h.value, h.error_bound};
}

}  // namespace

LimitReport hausdorff_limit_check(const MetricFamily& family, const Point& x, const Point& y, double t, double s,
                                  int n_max, double net_eps) {
  LimitReport rep;
  rep.family = family.id();
  Dh lim = ball_hausdorff(*family.limit(), {x, t}, {y, s}, net_eps);
  rep.limit_d_h = lim.value;
  bool ok = true;
  for (int n : family.indices()) {
    if (n > n_max) continue;
    Dh dn = ball_hausdorff(*family.member(n), {x, t}, {y, s}, net_eps);
    LimitRow row;
    row.n = n;
    row.d_h = dn.value;
    row.deviation = std::abs(dn.value - lim.value);
    row.allowed = 2.0 * family.bound(n) + family.slack() + dn.error + lim.error;
    row.ok = row.deviation <= row.allowed;
    if (!rep.rows.empty() && row.deviation > rep.rows.back().deviation) rep.monotone = false;
    ok = ok && row.ok;
    rep.rows.push_back(row);
  }
  rep.verdict = ok ? "converges" : "violation";
  return rep;
}

BallCheckReport stability_check(const MetricFamily& family, const SampleConfig& cfg) {
  for (int n : family.indices()) {
    if (family.member(n)->ground_truth().strongly_geodesically_complete != Truth::yes) {
      throw DomainError("member " + std::to_string(n) + " of " + family.id() +
                        " is not strongly geodesically complete");
    }
  }
  return check_isometry(*family.limit(), cfg);
}

std::vector<BoundAudit> audit_family(const MetricFamily& family, std::size_t grid, double window) {
  std::vector<BoundAudit> out;
  auto d = family.limit();
  std::vector<std::pair<Point, Point>> pairs;
  if (d->dimension() == 1) {
    auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(grid))));
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        double a = -window + 2.0 * window * static_cast<double>(i) / static_cast<double>(side - 1);
        double b = -window + 2.0 * window * static_cast<double>(j) / static_cast<double>(side - 1);
        pairs.emplace_back(Point{a}, Point{b});
      }
    }
  } else {
    Rng rng(1);
    for (std::size_t i = 0; i < grid; ++i) {
      Point a = d->sample_point(rng, window);
      pairs.emplace_back(a, d->sample_point(rng, window));
    }
  }
  for (int n : family.indices()) {
    auto dn = family.member(n);
    BoundAudit row;
    row.n = n;
    row.bound = family.bound(n);
    for (const auto& [a, b] : pairs) row.max_gap = std::max(row.max_gap, std::abs(dn->distance(a, b) - d->distance(a, b)));
    row.ok = row.max_gap <= row.bound;
    out.push_back(row);
  }
  return out;
}

}  // namespace ballgeo
