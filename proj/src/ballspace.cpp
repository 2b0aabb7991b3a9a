#include "ballgeo/ballspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ballgeo/errors.hpp"
#include "spaces/internal.hpp"

namespace ballgeo {

namespace {

constexpr std::size_t kMaxWitnesses = 10;

// radius in (0, r_max], a multiple of 2^-16
double sample_radius(Rng& rng, double r_max) {
  double r = detail::dyadic(r_max - r_max * detail::unit(rng));
  return r > 0.0 ? r : r_max;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

BallRecord record(const ModelSpace& space, const BallPoint& bp) {
  return {space.coordinates(bp.center), bp.radius, space.format_point(bp.center) + " r=" + fmt(bp.radius)};
}

BallRecord record(const GraphSpace& space, const GraphBall& bp) {
  auto [x, y] = space.graph().embed(bp.center);
  return {{x, y}, bp.radius.to_double(), space.graph().label(bp.center) + " r=" + bp.radius.str()};
}

struct PairEval {
  PairRecord rec;
  std::optional<Exact> exact_deviation;
  double deviation() const { return std::abs(rec.d_h - rec.d_t); }
  double allowed(double tol) const { return rec.error_bound + tol; }
};

PairEval evaluate(const ModelSpace& space, const BallPoint& a, const BallPoint& b, double eps) {
  double err = 0.0;
  if (auto d = interval_hausdorff(space, a, b, &err)) {
    PairEval out;
    out.rec = {record(space, a), record(space, b), *d, taxicab_dist(space, a, b), err, "", ""};
    return out;
  }
  NetSet na = space.ball_net(a, eps);
  NetSet nb = space.ball_net(b, eps);
  HausdorffResult h = hausdorff(na, nb);
  PairEval out;
  out.rec = {record(space, a), record(space, b), h.value, taxicab_dist(space, a, b), h.error_bound, "", ""};
  return out;
}

PairEval evaluate(const GraphSpace& space, const GraphBall& a, const GraphBall& b) {
  HausdorffResult h = hausdorff(f_map(space, a), f_map(space, b));
  Exact dt = taxicab_dist(space, a, b);
  PairEval out;
  out.rec = {record(space, a), record(space, b), h.value, dt.to_double(), 0.0, h.exact_value->str(), dt.str()};
  out.exact_deviation = abs(*h.exact_value - dt);
  return out;
}

std::vector<PairEval> run_pairs(const ModelSpace& space, const SampleConfig& cfg, bool designated) {
  if (cfg.n < 1 && !designated) throw DomainError("sample count must be >= 1");
  Rng rng(cfg.seed);
  std::vector<PairEval> out;
  if (const GraphSpace* g = space.as_graph()) {
    if (designated) {
      for (const auto& [a, b] : g->designated_graph_witnesses()) out.push_back(evaluate(*g, a, b));
    }
    for (std::size_t i = 0; i < cfg.n; ++i) {
      GraphBall a = sample_graph_ball(*g, rng, cfg.window, cfg.r_max);
      GraphBall b = sample_graph_ball(*g, rng, cfg.window, cfg.r_max);
      out.push_back(evaluate(*g, a, b));
    }
    return out;
  }
  if (designated) {
    for (const auto& [a, b] : space.designated_witnesses()) out.push_back(evaluate(space, a, b, cfg.eps));
  }
  for (std::size_t i = 0; i < cfg.n; ++i) {
    BallPoint a = sample_ball(space, rng, cfg.window, cfg.r_max);
    BallPoint b = sample_ball(space, rng, cfg.window, cfg.r_max);
    out.push_back(evaluate(space, a, b, cfg.eps));
  }
  return out;
}

BallCheckReport summarize(const ModelSpace& space, const SampleConfig& cfg, const std::vector<PairEval>& evals,
                          std::string check) {
  BallCheckReport rep;
  rep.model = space.key();
  rep.check = std::move(check);
  rep.samples = evals.size();
  rep.tolerance = cfg.tolerance;
  rep.exact = space.as_graph() != nullptr;
  rep.max_excess = evals.empty() ? 0.0 : evals.front().rec.d_h - evals.front().rec.d_t;
  std::optional<Exact> exact_worst;
  for (const auto& e : evals) {
    rep.max_excess = std::max(rep.max_excess, e.rec.d_h - e.rec.d_t);
    rep.max_error_bound = std::max(rep.max_error_bound, e.rec.error_bound);
    if (!rep.worst || e.deviation() > rep.max_deviation) {
      rep.max_deviation = e.deviation();
      rep.worst = e.rec;
    }
    if (e.exact_deviation && (!exact_worst || *e.exact_deviation > *exact_worst)) exact_worst = e.exact_deviation;
  }
  if (exact_worst) rep.exact_max_deviation = exact_worst->str();
  return rep;
}

void add_witness(BallCheckReport& rep, const PairRecord& rec) {
  if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(rec);
}

}  // namespace

IntervalUnion f_map(const GraphSpace& space, const GraphBall& bp) { return space.closed_ball(bp); }

CompactSet f_map(const ModelSpace& space, const BallPoint& bp, double eps) {
  if (const GraphSpace* g = space.as_graph()) {
    return g->closed_ball(g->to_graph_point(bp.center), Exact(mpq_class(bp.radius)));
  }
  return space.ball_net(bp, eps);
}

double taxicab_dist(const ModelSpace& space, const BallPoint& a, const BallPoint& b) {
  if (a.radius < 0.0 || b.radius < 0.0) throw DomainError("negative radius");
  return space.checked_distance(a.center, b.center) + std::abs(a.radius - b.radius);
}

Exact taxicab_dist(const GraphSpace& space, const GraphBall& a, const GraphBall& b) {
  if (a.radius.sign() < 0 || b.radius.sign() < 0) throw DomainError("negative radius");
  return space.distance(a.center, b.center) + abs(a.radius - b.radius);
}

BallPoint sample_ball(const ModelSpace& space, Rng& rng, double window, double r_max) {
  if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
  Point c = space.sample_point(rng, window);
  return {c, sample_radius(rng, r_max)};
}

GraphBall sample_graph_ball(const GraphSpace& space, Rng& rng, double window, double r_max) {
  if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GraphPoint c = space.sample_graph_point(rng, window);
    Exact r(mpq_class(sample_radius(rng, r_max)));
    if (!space.ball_truncated(c, r)) return {c, r};
  }
  throw DomainError("every sampled ball of " + space.key() + " reaches the window edge");
}

BallCheckReport check_isometry(const ModelSpace& space, const SampleConfig& cfg) {
  auto evals = run_pairs(space, cfg, cfg.include_designated);
  BallCheckReport rep = summarize(space, cfg, evals, "isometry");
  for (const auto& e : evals) {
    if (e.deviation() > e.allowed(cfg.tolerance)) add_witness(rep, e.rec);
  }
  rep.verdict = rep.witnesses.empty() ? "isometry" : "violation";
  return rep;
}

BallCheckReport check_lipschitz(const ModelSpace& space, const SampleConfig& cfg) {
  auto evals = run_pairs(space, cfg, cfg.include_designated);
  BallCheckReport rep = summarize(space, cfg, evals, "lipschitz");
  bool contracted = false;
  for (const auto& e : evals) {
    if (e.rec.d_h - e.rec.d_t > e.allowed(cfg.tolerance)) add_witness(rep, e.rec);
    if (e.rec.d_t - e.rec.d_h > e.allowed(cfg.tolerance)) contracted = true;
  }
  if (!rep.witnesses.empty()) {
    rep.verdict = "violation";
  } else {
    rep.verdict = contracted ? "lipschitz-only" : "isometry";
  }
  return rep;
}

BallCheckReport check_injectivity(const ModelSpace& space, const SampleConfig& cfg,
                                  const std::vector<std::pair<BallPoint, BallPoint>>& extra) {
  std::vector<PairEval> evals;
  std::vector<bool> equal;
  if (const GraphSpace* g = space.as_graph()) {
    auto consider = [&](const GraphBall& a, const GraphBall& b) {
      bool distinct = !g->graph().same_point(a.center, b.center) || a.radius != b.radius;
      equal.push_back(distinct && f_map(*g, a) == f_map(*g, b));
      evals.push_back(evaluate(*g, a, b));
    };
    for (const auto& [a, b] : g->designated_graph_witnesses()) consider(a, b);
    for (const auto& [a, b] : extra) {
      Exact ra(mpq_class(a.radius));
      Exact rb(mpq_class(b.radius));
      consider({g->to_graph_point(a.center), ra}, {g->to_graph_point(b.center), rb});
    }
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.n; ++i) {
      GraphBall a = sample_graph_ball(*g, rng, cfg.window, cfg.r_max);
      GraphBall b = sample_graph_ball(*g, rng, cfg.window, cfg.r_max);
      consider(a, b);
    }
  } else {
    auto consider = [&](const BallPoint& a, const BallPoint& b) {
      PairEval e = evaluate(space, a, b, cfg.eps);
      equal.push_back(e.rec.d_h <= e.rec.error_bound && e.rec.d_t > e.allowed(cfg.tolerance));
      evals.push_back(std::move(e));
    };
    for (const auto& [a, b] : space.designated_witnesses()) consider(a, b);
    for (const auto& [a, b] : extra) consider(a, b);
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.n; ++i) {
      BallPoint a = sample_ball(space, rng, cfg.window, cfg.r_max);
      BallPoint b = sample_ball(space, rng, cfg.window, cfg.r_max);
      consider(a, b);
    }
  }
  BallCheckReport rep = summarize(space, cfg, evals, "injectivity");
  for (std::size_t i = 0; i < evals.size(); ++i) {
    if (equal[i]) add_witness(rep, evals[i].rec);
  }
  rep.verdict = rep.witnesses.empty() ? "injective" : "not-injective";
  return rep;
}

std::optional<double> interval_hausdorff(const ModelSpace& space, const BallPoint& a, const BallPoint& b,
                                         double* error_bound) {
  auto ja = space.ball_interval(a);
  auto jb = space.ball_interval(b);
  if (!ja || !jb) return std::nullopt;
  if (error_bound) *error_bound = space.id() == "pullback_line" ? 4.0 * PullbackLine::kRootTolerance : 0.0;
  return std::max(space.distance(Point{ja->first}, Point{jb->first}),
                  space.distance(Point{ja->second}, Point{jb->second}));
}

double factor_hausdorff(const ModelSpace& factor, const BallPoint& a, const BallPoint& b, double eps,
                        double* error_bound) {
  double err = 0.0;
  double value = 0.0;
  if (const GraphSpace* g = factor.as_graph()) {
    auto ia = g->closed_ball(g->to_graph_point(a.center), Exact(mpq_class(a.radius)));
    auto ib = g->closed_ball(g->to_graph_point(b.center), Exact(mpq_class(b.radius)));
    value = hausdorff(ia, ib).value;
  } else if (auto d = interval_hausdorff(factor, a, b, &err)) {
    value = *d;
  } else {
    auto h = hausdorff(factor.ball_net(a, eps), factor.ball_net(b, eps));
    value = h.value;
    err = h.error_bound;
  }
  if (error_bound) *error_bound = err;
  return value;
}

namespace {

bool is_line(const ModelSpace& m) { return m.id() == "euclidean_rn" && m.dimension() == 1; }

mpq_class interval_gap(const mpq_class& v, const mpq_class& lo, const mpq_class& hi) {
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return 0;
}

// Sup over corners of the first box of the l-infinity distance to the second;
// that distance is convex, so its maximum over a box sits at a corner.
mpq_class box_directed(const mpq_class a[2][2], const mpq_class b[2][2]) {
  mpq_class best = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpq_class d = std::max(interval_gap(a[0][i], b[0][0], b[0][1]), interval_gap(a[1][j], b[1][0], b[1][1]));
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace

ProductCheckReport product_ball_distance_check(const ProductMaxSpace& space, const SampleConfig& cfg) {
  ProductCheckReport rep;
  rep.model = space.key();
  rep.tolerance = cfg.tolerance;
  Rng rng(cfg.seed);
  const ModelSpace& fx = space.factor_x();
  const ModelSpace& fy = space.factor_y();
  const bool corollary = fx.ground_truth().strongly_geodesically_complete == Truth::yes &&
                         fy.ground_truth().strongly_geodesically_complete == Truth::yes;
  rep.exact = is_line(fx) && is_line(fy);
  bool ok = true;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    BallPoint a = sample_ball(space, rng, cfg.window, cfg.r_max);
    BallPoint b = sample_ball(space, rng, cfg.window, cfg.r_max);
    Point ax = space.part_x(a.center), ay = space.part_y(a.center);
    Point bx = space.part_x(b.center), by = space.part_y(b.center);
    if (rep.exact) {
      const mpq_class t(a.radius), s(b.radius);
      const mpq_class x(ax[0]), y(ay[0]), u(bx[0]), v(by[0]);
      const mpq_class boxa[2][2] = {{x - t, x + t}, {y - t, y + t}};
      const mpq_class boxb[2][2] = {{u - s, u + s}, {v - s, v + s}};
      mpq_class direct = std::max(box_directed(boxa, boxb), box_directed(boxb, boxa));
      Exact formula = max(hausdorff_intervals(Exact(boxa[0][0]), Exact(boxa[0][1]), Exact(boxb[0][0]), Exact(boxb[0][1])),
                          hausdorff_intervals(Exact(boxa[1][0]), Exact(boxa[1][1]), Exact(boxb[1][0]), Exact(boxb[1][1])));
      mpq_class chain = std::max(mpq_class(abs(x - u)), mpq_class(abs(y - v))) + abs(t - s);
      Exact dev_formula = abs(Exact(direct) - formula);
      Exact dev_chain = abs(Exact(direct) - Exact(chain));
      rep.max_formula_deviation = std::max(rep.max_formula_deviation, dev_formula.to_double());
      rep.max_corollary_deviation = std::max(rep.max_corollary_deviation, dev_chain.to_double());
      if (dev_formula.sign() != 0 || dev_chain.sign() != 0) {
        ok = false;
        if (rep.witnesses.size() < kMaxWitnesses) {
          rep.witnesses.push_back(space.format_point(a.center) + " r=" + fmt(a.radius) + " vs " +
                                  space.format_point(b.center) + " r=" + fmt(b.radius));
        }
      }
      ++rep.samples;
      continue;
    }
    HausdorffResult direct = hausdorff(space.ball_net(a, cfg.eps), space.ball_net(b, cfg.eps));
    double ex = 0.0, ey = 0.0;
    double hx = factor_hausdorff(fx, {ax, a.radius}, {bx, b.radius}, cfg.eps, &ex);
    double hy = factor_hausdorff(fy, {ay, a.radius}, {by, b.radius}, cfg.eps, &ey);
    double dev_formula = std::abs(direct.value - std::max(hx, hy));
    rep.max_formula_deviation = std::max(rep.max_formula_deviation, dev_formula);
    bool pair_ok = dev_formula <= direct.error_bound + ex + ey + cfg.tolerance;
    if (corollary) {
      double chain = std::max(fx.distance(ax, bx), fy.distance(ay, by)) + std::abs(a.radius - b.radius);
      double dev_chain = std::abs(direct.value - chain);
      rep.max_corollary_deviation = std::max(rep.max_corollary_deviation, dev_chain);
      pair_ok = pair_ok && dev_chain <= direct.error_bound + cfg.tolerance;
    }
    if (!pair_ok) {
      ok = false;
      if (rep.witnesses.size() < kMaxWitnesses) {
        rep.witnesses.push_back(space.format_point(a.center) + " r=" + fmt(a.radius) + " vs " +
                                space.format_point(b.center) + " r=" + fmt(b.radius));
      }
    }
    ++rep.samples;
  }
  if (!corollary) rep.max_corollary_deviation = -1.0;
  rep.verdict = ok ? "holds" : "violation";
  return rep;
}

}  // namespace ballgeo
