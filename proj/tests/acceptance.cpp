// One PASS/FAIL line per acceptance criterion; exit 1 when any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ballgeo/actions.hpp"
#include "ballgeo/ballspace.hpp"
#include "ballgeo/cli.hpp"
#include "ballgeo/convergence.hpp"
#include "ballgeo/errors.hpp"
#include "ballgeo/geodesy.hpp"

using namespace ballgeo;

namespace {

// pinned tolerances
constexpr double kEps = 0.01;
constexpr double kNetTol = 2 * kEps + 1e-6;
constexpr double kGridStep = 1e-3;
constexpr double kGridTol = 2e-3;
constexpr double kIntervalSeconds = 5.0;
constexpr double kSuiteSeconds = 60.0;
constexpr double kQuotientTol = 1e-9;
constexpr double kAnalyticRealizingTol = 1e-6;
constexpr double kWitnessMargin = 0.5;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SampleConfig config(std::size_t n, std::uint64_t seed, double eps = kEps) {
  SampleConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.eps = eps;
  return cfg;
}

double grid_hausdorff(double a, double b, double c, double d) {
  auto sup = [](double lo, double hi, double lo2, double hi2) {
    double best = 0.0;
    for (double x = lo;; x += kGridStep) {
      double xx = std::min(x, hi);
      best = std::max(best, xx < lo2 ? lo2 - xx : xx > hi2 ? xx - hi2 : 0.0);
      if (xx >= hi) break;
    }
    return best;
  };
  return std::max(sup(a, b, c, d), sup(c, d, a, b));
}

Outcome c1() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    worst = std::max(worst, std::abs(hausdorff_intervals(a, b, c, d) - grid_hausdorff(a, b, c, d)));
  }
  double secs = seconds_since(t0);
  return {worst <= kGridTol && secs < kIntervalSeconds, "max gap " + fmt(worst) + ", " + fmt(secs) + " s"};
}

Outcome c2() {
  int equal = 0, total = 0;
  for (auto space : {make_diamond(), make_diamond_chain(3)}) {
    Rng rng(202);
    for (int i = 0; i < 10; ++i, ++total) {
      GraphPoint c = space->sample_graph_point(rng, 3.0);
      Exact r(mpq_class(static_cast<long>(rng() % 9), 8));
      Exact s(mpq_class(static_cast<long>(rng() % 9), 8));
      Exact t(mpq_class(static_cast<long>(rng() % 9), 8));
      IntervalUnion a = space->closed_ball(c, r);
      if (tubular(tubular(a, s), t) == tubular(a, s + t)) ++equal;
    }
  }
  return {equal == total, std::to_string(equal) + "/" + std::to_string(total) + " exact equalities"};
}

Outcome c3() {
  bool ok = true;
  std::string detail;
  for (const char* id : {"euclidean_r2", "taxicab_r2", "hyperbolic_plane"}) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = check_isometry(*make_model(id), config(100, 303));
    double secs = seconds_since(t0);
    ok = ok && rep.verdict == "isometry" && rep.max_deviation <= kNetTol && secs < kSuiteSeconds;
    detail += std::string(id) + " " + fmt(rep.max_deviation) + " (" + fmt(secs) + " s) ";
  }
  return {ok, detail};
}

Outcome c4() {
  auto rep = check_isometry(*make_real_line_graph(), config(100, 404));
  return {rep.exact && rep.samples == 100 && rep.exact_max_deviation == "0" && rep.verdict == "isometry",
          "exact max deviation " + rep.exact_max_deviation};
}

Outcome c5() {
  SampleConfig cfg = config(10, 505);
  cfg.include_designated = true;
  std::string detail;

  auto hp = check_isometry(*make_model("halfplane"), cfg);
  bool hp_ok = hp.verdict == "violation" && !hp.witnesses.empty();
  if (hp_ok) {
    const auto& w = hp.witnesses.front();
    hp_ok = std::abs(w.d_h - std::sqrt(2.0)) <= 2 * kEps && w.d_t == 2.0 && w.d_t - w.d_h > kWitnessMargin;
    detail += "halfplane d_H=" + fmt(w.d_h) + " d_T=" + fmt(w.d_t) + "; ";
  }

  auto tee_space = make_tee();
  auto tee = check_injectivity(*tee_space, cfg);
  bool tee_ok = tee.exact && tee.verdict == "not-injective" && !tee.witnesses.empty() &&
                tee.witnesses.front().exact_d_h == "0" && tee.witnesses.front().exact_d_t != "0" &&
                check_isometry(*tee_space, cfg).verdict == "violation";
  if (!tee.witnesses.empty()) detail += "tee " + tee.witnesses.front().a.label + " = " + tee.witnesses.front().b.label + "; ";

  auto circle = check_isometry(*make_model("circle"), cfg);
  bool circle_ok = circle.verdict == "violation" && !circle.witnesses.empty();
  if (circle_ok) {
    const auto& w = circle.witnesses.front();
    circle_ok = w.d_h <= w.error_bound && w.d_t == 1.0 && std::abs(w.a.radius - M_PI) < 1e-12;
    detail += "circle d_H=" + fmt(w.d_h) + " d_T=" + fmt(w.d_t);
  }
  return {hp_ok && tee_ok && circle_ok, detail};
}

Outcome c6() {
  bool ok = true;
  double worst = -1e300;
  for (const auto& entry : list_models()) {
    auto rep = check_lipschitz(*make_model(entry.id), config(200, 606));
    ok = ok && rep.verdict != "violation" && rep.max_excess <= kNetTol && rep.samples >= 200;
    worst = std::max(worst, rep.max_excess);
  }
  return {ok, std::to_string(list_models().size()) + " models, max d_H - d_T " + fmt(worst)};
}

bool contains(const MetricGraph& g, const std::vector<GraphPoint>& pts, const GraphPoint& p) {
  return std::any_of(pts.begin(), pts.end(), [&](const GraphPoint& q) { return g.same_point(p, q); });
}

std::vector<Exact> chain_radii() { return {Exact::ratio(1, 4), Exact::ratio(1, 2), Exact(1), Exact(2)}; }

Outcome c7() {
  auto chain = make_diamond_chain(3);
  const auto& g = chain->graph();
  auto set = extendible_set(*chain, chain->vertices_and_midpoints(), std::nullopt, chain_radii());
  std::vector<GraphPoint> expected;
  for (const char* x : {"-3", "-1", "1", "3"}) {
    GraphPoint p = g.point_at(x, "0");
    if (!chain->boundary_affected(p)) expected.push_back(p);
  }
  bool chain_ok = set.holds.size() == expected.size() && set.inconclusive.empty();
  for (const auto& p : expected) chain_ok = chain_ok && contains(g, set.holds, p);
  std::string detail = "chain holds " + std::to_string(set.holds.size()) + "/" + std::to_string(expected.size()) + "; ";

  auto diamond = make_diamond();
  const auto& dg = diamond->graph();
  auto dset = extendible_set(*diamond, diamond->vertices_and_midpoints(), std::nullopt, default_exact_radii());
  bool certified = true;
  for (const auto& d : dset.details) {
    if (d.verdict != Verdict::fails) continue;
    bool any = std::any_of(d.checks.begin(), d.checks.end(), [](const GraphSphereCheck& c) {
      return c.verdict == Verdict::fails && c.best && *c.best < c.target && !c.boundary_affected;
    });
    certified = certified && any;
  }
  bool diamond_ok = dset.holds.empty() && dset.inconclusive.empty() && certified;
  detail += "diamond fails " + std::to_string(dset.fails.size()) + ", holds {";
  for (std::size_t i = 0; i < dset.holds.size(); ++i) detail += (i ? " " : "") + dg.label(dset.holds[i]);
  detail += "}, inconclusive " + std::to_string(dset.inconclusive.size());
  return {chain_ok && diamond_ok, detail};
}

Outcome c8() {
  std::size_t checked = 0;
  bool ok = true;
  double analytic_worst = 0.0;
  auto graph_pass = [&](const GraphSpace& space, const ExtendibleSet& set) {
    for (const auto& d : set.details) {
      for (const auto& c : d.checks) {
        if (c.verdict != Verdict::holds || !c.p) continue;
        auto rc = is_distance_realizing(space, graph_segment(space, {c.y, d.x, *c.p}));
        ok = ok && rc.realizing && rc.exact_deviation && rc.exact_deviation->sign() == 0;
        ++checked;
      }
    }
  };
  auto chain = make_diamond_chain(3);
  graph_pass(*chain, extendible_set(*chain, chain->vertices_and_midpoints(), std::nullopt, chain_radii()));
  auto line = make_real_line_graph();
  graph_pass(*line, extendible_set(*line, line->vertices_and_midpoints(), std::nullopt, default_exact_radii()));
  auto diamond = make_diamond();
  graph_pass(*diamond, extendible_set(*diamond, diamond->vertices_and_midpoints(), std::nullopt, default_exact_radii()));

  for (const char* id : {"euclidean_r2", "taxicab_r2", "hyperbolic_plane"}) {
    auto m = make_model(id);
    Rng rng(808);
    for (int i = 0; i < 5; ++i) {
      Point x = m->sample_point(rng, 2.0);
      std::vector<Point> ys;
      for (int j = 0; j < 4; ++j) ys.push_back(m->sample_point(rng, 2.0));
      auto e = extendibility_at(*m, x, ys, default_radii(), kEps);
      for (const auto& c : e.checks) {
        if (c.verdict != Verdict::holds || !c.p) continue;
        auto rc = is_distance_realizing(*m, segment(*m, {c.y, x, *c.p}), kAnalyticRealizingTol);
        ok = ok && rc.realizing && rc.deviation <= kAnalyticRealizingTol;
        analytic_worst = std::max(analytic_worst, rc.deviation);
        ++checked;
      }
    }
  }
  return {ok && checked > 0, std::to_string(checked) + " witnesses, analytic max " + fmt(analytic_worst)};
}

Outcome c9() {
  auto lines = std::dynamic_pointer_cast<const ProductMaxSpace>(make_model("product_max"));
  auto exact = product_ball_distance_check(*lines, config(100, 909));
  bool exact_ok = exact.exact && exact.samples == 100 && exact.max_formula_deviation == 0.0 &&
                  exact.max_corollary_deviation == 0.0 && exact.verdict == "holds";

  auto mixed = std::dynamic_pointer_cast<const ProductMaxSpace>(
      make_model("product_max", {{"factor_x", "euclidean_r1"}, {"factor_y", "diamond"}}));
  SampleConfig cfg = config(50, 909);
  cfg.window = 2.0;
  cfg.r_max = 1.0;
  auto net = product_ball_distance_check(*mixed, cfg);
  bool net_ok = net.samples == 50 && net.max_formula_deviation <= 2 * kEps && net.verdict == "holds";
  return {exact_ok && net_ok, "R x R " + fmt(exact.max_formula_deviation) + " / chain " +
                                  fmt(exact.max_corollary_deviation) + "; R x diamond " +
                                  fmt(net.max_formula_deviation)};
}

Outcome c10() {
  auto rz = translation_action(make_model("euclidean_r1"), {1.0}, 64);
  auto rep = check_quotient_theorem(rz, config(50, 1010));
  bool theorem_ok = rep.exact && rep.samples == 50 && rep.max_deviation <= kQuotientTol && rep.verdict == "holds";

  auto circle = std::make_shared<QuotientLineSpace>(translation_action(make_model("euclidean_r1"), {2 * M_PI}, 64));
  SampleConfig cfg = config(5, 1010);
  cfg.include_designated = true;
  auto inj = check_injectivity(*circle, cfg);
  bool circle_ok = inj.verdict == "not-injective" && !inj.witnesses.empty() &&
                   inj.witnesses.front().d_h <= inj.witnesses.front().error_bound &&
                   inj.witnesses.front().d_t == 1.0;
  return {theorem_ok && circle_ok, "max deviation " + fmt(rep.max_deviation) + "; quotient circle " + inj.verdict};
}

Outcome c11() {
  auto g = translation_action(make_model("euclidean_r1"), {2 * M_PI}, 64);
  auto base4 = properness_check(g, {0.0}, 4.0);
  auto base1 = properness_check(g, {0.0}, 1.0);
  auto lifted = lifted_properness_check(g, {0.0}, 1.0, 1.0);
  bool inside = std::all_of(lifted.begin(), lifted.end(), [&](long k) {
    return std::find(base1.begin(), base1.end(), k) != base1.end();
  });
  return {base4.size() == 3 && base4 == std::vector<long>{-1, 0, 1} && inside && !lifted.empty(),
          "|base(r=4)| = " + std::to_string(base4.size()) + ", |lifted| = " + std::to_string(lifted.size())};
}

Outcome c12() {
  bool ok = true;
  std::string detail;
  for (const auto& entry : list_isometries()) {
    SampleConfig cfg = config(50, 1212);
    LiftReport rep;
    if (entry.graph) {
      auto space = std::dynamic_pointer_cast<const GraphSpace>(make_model(entry.model, entry.model_params));
      rep = check_lift_isometry(make_graph_isometry(entry.id, space), cfg);
    } else {
      rep = check_lift_isometry(*make_model(entry.model, entry.model_params), make_isometry(entry.id), cfg);
    }
    ok = ok && rep.samples == 50 && rep.max_deviation <= 2 * kEps && rep.radius_preserved && rep.verdict == "isometry";
    detail += entry.id + " " + fmt(rep.max_deviation) + " ";
  }
  return {ok && list_isometries().size() == 5, detail};
}

Outcome c13() {
  auto plane = make_model("euclidean_r2");
  auto two = ball_midpoints(*plane, {{0, 0}, 1.0}, {{4, 0}, 0.5}, kEps);
  bool close = std::all_of(two.midpoints.begin(), two.midpoints.end(), [&](const MidpointCandidate& m) {
    return std::abs(m.to_a - two.half_distance) <= 2 * kEps && std::abs(m.to_b - two.half_distance) <= 2 * kEps;
  });
  auto one = ball_midpoints(*plane, {{0, 0}, 1.0}, {{4, 0}, 1.0}, kEps);
  return {two.distinct >= 2 && close && one.distinct == 1,
          "r != s: " + std::to_string(two.distinct) + " distinct; r = s: " + std::to_string(one.distinct)};
}

Outcome c14() {
  PullbackLineFamily family;
  auto rep = hausdorff_limit_check(family, {0.0}, {2.0}, 1.0, 0.5, 64);
  bool rows_ok = rep.rows.size() == 6;
  double worst = 0.0;
  for (const auto& row : rep.rows) {
    rows_ok = rows_ok && std::abs(row.d_h - 2.5) <= 4.0 / row.n;
    worst = std::max(worst, std::abs(row.d_h - 2.5) * row.n);
  }
  auto stable = stability_check(family, config(100, 1414));
  return {rows_ok && stable.verdict == "isometry" && stable.max_deviation == 0.0,
          "max n |d_H^n - 2.5| = " + fmt(worst) + "; stability " + stable.verdict + " " + fmt(stable.max_deviation)};
}

int run_cli(const std::string& args) {
  int status = std::system((std::string(BALLGEO_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome c15() {
  const std::string dir = BALLGEO_SCENARIO_DIR;
  const std::string tmp = BALLGEO_WORK_DIR;
  int a = run_cli("run " + dir + "/halfplane_witness.scn --format json --out " + tmp + "/acc_a.json");
  int b = run_cli("run " + dir + "/halfplane_witness.scn --format json --out " + tmp + "/acc_b.json");
  std::string ja = slurp(tmp + "/acc_a.json"), jb = slurp(tmp + "/acc_b.json");
  bool same = !ja.empty() && ja == jb && a == 0 && b == 0;
  int taxi = run_cli("run " + dir + "/taxicab_isometry.scn");
  int hp = run_cli("run " + dir + "/halfplane_witness.scn");
  int unknown = run_cli("run " + dir + "/unknown_model.scn");
  bool codes = taxi == 0 && hp == 0 && unknown == 2;
  return {same && codes, std::string(same ? "byte-identical" : "reports differ") + "; exits " +
                             std::to_string(taxi) + " " + std::to_string(hp) + " " + std::to_string(unknown)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {c1, c2,  c3,  c4,  c5,  c6,  c7, c8,
                                                          c9, c10, c11, c12, c13, c14, c15};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
