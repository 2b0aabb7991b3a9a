#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "ballgeo/actions.hpp"
#include "ballgeo/cli.hpp"
#include "ballgeo/convergence.hpp"
#include "ballgeo/errors.hpp"
#include "ballgeo/geodesy.hpp"

namespace ballgeo::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 10;
constexpr std::size_t kExtendibilityYs = 32;

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::shared_ptr<const ModelSpace> euclidean_line() { return std::make_shared<EuclideanSpace>(1); }

Point generator(const Scenario& s) {
  Point v;
  for (std::size_t i = 0; i < s.generator.size(); ++i) v[i] = s.generator[i];
  return v;
}

std::shared_ptr<const ModelSpace> build_model(const Scenario& s) {
  if (s.model == "quotient_line") {
    if (!s.model_params.empty()) throw ParseError("quotient_line takes its period from action.generator");
    if (s.generator.size() != 1) throw ParseError("quotient_line needs a one-dimensional generator");
    return std::make_shared<QuotientLineSpace>(translation_action(euclidean_line(), generator(s), s.bound));
  }
  return make_model(s.model, s.model_params);
}

std::vector<std::string> expected_for(const std::string& suite, const GroundTruth& truth) {
  const Truth sgc = truth.strongly_geodesically_complete;
  if (suite == "isometry") {
    if (sgc == Truth::yes) return {"isometry"};
    if (sgc == Truth::no) return {"violation"};
    return {};
  }
  if (suite == "lipschitz") return {"isometry", "lipschitz-only"};
  if (suite == "injectivity") return sgc == Truth::yes ? std::vector<std::string>{"injective"} : std::vector<std::string>{};
  if (suite == "extendibility") {
    if (sgc == Truth::yes) return {"holds"};
    if (sgc == Truth::no) return {"fails"};
    return {};
  }
  if (suite == "product" || suite == "quotient") return {"holds"};
  if (suite == "convergence") return {"converges"};
  if (suite == "lift") return {"isometry"};
  return {};
}

std::string theorem_for(const std::string& suite, const GroundTruth& truth) {
  if (suite == "isometry") {
    return truth.strongly_geodesically_complete == Truth::yes ? "Theorem main: forward" : "Theorem main: converse";
  }
  if (suite == "lipschitz") return "f is 1-Lipschitz";
  if (suite == "injectivity") return "Theorem main: converse (injectivity of f)";
  if (suite == "extendibility") return "sphere criterion for strong geodesic extendibility";
  if (suite == "product") return "product balls: d_H = max of factor d_H";
  if (suite == "quotient") return "quotient: Sigma(X)/H[G] = (X/G) x R>=0, taxicab";
  if (suite == "convergence") return "uniform limits of strongly geodesically complete metrics";
  if (suite == "lift") return "lifted isometries preserve d_H";
  return suite;
}

Witness witness(const PairRecord& p) {
  Witness w;
  w.description = p.a.label + " vs " + p.b.label;
  w.values = {{"d_h", p.d_h}, {"d_t", p.d_t}, {"error_bound", p.error_bound}};
  if (!p.exact_d_h.empty()) w.exact = {{"d_h", p.exact_d_h}, {"d_t", p.exact_d_t}};
  return w;
}

SuiteResult from_ball_check(const BallCheckReport& r) {
  SuiteResult out;
  out.model = r.model;
  out.verdict = r.verdict;
  out.samples = r.samples;
  out.max_deviation = r.max_deviation;
  out.tolerance = r.tolerance;
  out.exact = r.exact;
  out.details["max_excess"] = g6(r.max_excess);
  out.details["max_error_bound"] = g6(r.max_error_bound);
  if (!r.exact_max_deviation.empty()) out.details["exact_max_deviation"] = r.exact_max_deviation;
  if (r.worst) out.details["worst"] = witness(*r.worst).description;
  for (const auto& p : r.witnesses) out.witnesses.push_back(witness(p));
  return out;
}

SuiteResult run_extendibility(const ModelSpace& model, const SampleConfig& cfg) {
  SuiteResult out;
  out.model = model.key();
  if (const GraphSpace* g = model.as_graph()) {
    out.exact = true;
    auto set = extendible_set(model, g->vertices_and_midpoints(), std::nullopt, default_exact_radii());
    out.samples = set.details.size();
    auto labels = [&](const std::vector<GraphPoint>& pts) {
      std::string s;
      for (const auto& p : pts) s += (s.empty() ? "" : " ") + g->graph().label(p);
      return s;
    };
    out.details["holds"] = labels(set.holds);
    out.details["fails"] = labels(set.fails);
    out.details["inconclusive"] = labels(set.inconclusive);
    out.details["boundary"] = labels(set.boundary);
    for (const auto& d : set.details) {
      if (d.verdict != Verdict::fails || out.witnesses.size() >= kMaxWitnesses) continue;
      for (const auto& c : d.checks) {
        if (c.verdict != Verdict::fails) continue;
        Witness w;
        w.description = "x=" + g->graph().label(d.x) + " y=" + g->graph().label(c.y) + " r=" + c.r.str();
        w.values = {{"target", c.target.to_double()}, {"best", c.best ? c.best->to_double() : -1.0}};
        w.exact = {{"target", c.target.str()}, {"best", c.best ? c.best->str() : "empty sphere"}};
        out.witnesses.push_back(std::move(w));
        break;
      }
    }
    out.verdict = !set.fails.empty() ? "fails" : set.inconclusive.empty() ? "holds" : "inconclusive";
    return out;
  }
  Rng rng(cfg.seed);
  std::vector<std::pair<Point, std::vector<Point>>> probes;
  std::vector<double> radii = default_radii();
  if (cfg.include_designated) {
    if (auto f = model.designated_failure()) {
      probes.push_back({f->x, {f->y}});
      radii.push_back(f->r);
    }
  }
  for (std::size_t i = 0; i < cfg.n; ++i) {
    Point x = model.sample_point(rng, cfg.window);
    std::vector<Point> ys;
    while (ys.size() < kExtendibilityYs) {
      Point y = model.sample_point(rng, cfg.window);
      if (model.distance(x, y) > 0.0) ys.push_back(y);
    }
    probes.push_back({x, std::move(ys)});
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  std::size_t holds = 0, fails = 0, open = 0;
  double worst_margin = 0.0;
  for (const auto& [x, ys] : probes) {
    Extendibility e = extendibility_at(model, x, ys, radii, cfg.eps);
    ++out.samples;
    for (const auto& c : e.checks) {
      worst_margin = std::max(worst_margin, c.margin);
      out.tolerance = c.tolerance;
    }
    if (e.verdict == Verdict::holds) {
      ++holds;
    } else if (e.verdict == Verdict::inconclusive) {
      ++open;
    } else {
      ++fails;
      if (out.witnesses.size() < kMaxWitnesses) {
        for (const auto& c : e.checks) {
          if (c.verdict != Verdict::fails) continue;
          Witness w;
          w.description = "x=" + model.format_point(x) + " y=" + model.format_point(c.y) + " r=" + g6(c.r);
          w.values = {{"target", c.target}, {"best", c.best}, {"margin", c.margin}};
          out.witnesses.push_back(std::move(w));
          break;
        }
      }
    }
  }
  out.max_deviation = worst_margin;
  out.details["holds"] = std::to_string(holds);
  out.details["fails"] = std::to_string(fails);
  out.details["inconclusive"] = std::to_string(open);
  out.verdict = fails ? "fails" : open ? "inconclusive" : "holds";
  return out;
}

SuiteResult run_product(const ModelSpace& model, const SampleConfig& cfg) {
  auto* product = dynamic_cast<const ProductMaxSpace*>(&model);
  if (!product) throw ParseError("the product suite needs a product_max model");
  ProductCheckReport r = product_ball_distance_check(*product, cfg);
  SuiteResult out;
  out.model = r.model;
  out.verdict = r.verdict;
  out.samples = r.samples;
  out.max_deviation = r.max_formula_deviation;
  out.tolerance = r.tolerance;
  out.exact = r.exact;
  out.details["max_corollary_deviation"] =
      r.max_corollary_deviation < 0.0 ? "not applicable" : g6(r.max_corollary_deviation);
  for (const auto& w : r.witnesses) out.witnesses.push_back({w, {}, {}});
  return out;
}

SuiteResult run_quotient(const Scenario& s) {
  auto base = s.model.empty() ? euclidean_line() : make_model(s.model, s.model_params);
  GroupAction action = translation_action(base, generator(s), s.bound);
  QuotientReport r = check_quotient_theorem(action, s.sampling);
  SuiteResult out;
  out.model = base->key();
  out.verdict = r.verdict;
  out.samples = r.samples;
  out.max_deviation = r.max_deviation;
  out.tolerance = r.tolerance;
  out.exact = r.exact;
  out.details["action"] = r.action;
  return out;
}

SuiteResult run_convergence(const Scenario& s) {
  std::shared_ptr<const ModelSpace> base;
  if (s.family == "constant") {
    if (s.model.empty()) throw ParseError("the constant family needs a model");
    base = make_model(s.model, s.model_params);
  }
  auto family = make_family(s.family, base, s.family_indices);
  // limit.x and limit.y are line coordinates; other carriers use sampled points
  Point x{s.limit_x}, y{s.limit_y};
  if (family->limit()->dimension() != 1) {
    Rng rng(s.sampling.seed);
    x = family->limit()->sample_point(rng, s.sampling.window);
    y = family->limit()->sample_point(rng, s.sampling.window);
  }
  LimitReport limit = hausdorff_limit_check(*family, x, y, s.limit_t, s.limit_s, s.limit_n_max, s.sampling.eps);
  BallCheckReport stability = stability_check(*family, s.sampling);
  SuiteResult out;
  out.model = family->id();
  out.samples = stability.samples;
  out.exact = stability.exact;
  for (const auto& row : limit.rows) {
    out.max_deviation = std::max(out.max_deviation, row.deviation);
    out.tolerance = std::max(out.tolerance, row.allowed);
    char key[32];
    std::snprintf(key, sizeof key, "limit.n=%03d", row.n);
    out.details[key] = "d_H=" + g6(row.d_h) + " deviation=" + g6(row.deviation) + " allowed=" + g6(row.allowed);
  }
  out.details["limit.d_H"] = g6(limit.limit_d_h);
  out.details["limit.monotone"] = limit.monotone ? "true" : "false";
  out.details["stability.verdict"] = stability.verdict;
  out.details["stability.max_deviation"] = g6(stability.max_deviation);
  out.verdict = limit.verdict == "converges" && stability.verdict == "isometry" ? "converges" : "violation";
  return out;
}

SuiteResult run_lift(const Scenario& s) {
  if (s.isometry.empty()) throw ParseError("the lift suite needs 'isometry'");
  auto entries = list_isometries();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogIsometry& e) { return e.id == s.isometry; });
  if (it == entries.end()) throw ParseError("unknown isometry '" + s.isometry + "'");
  auto model = s.model.empty() ? make_model(it->model, it->model_params) : make_model(s.model, s.model_params);
  if (model->id() != it->model) throw ParseError(s.isometry + " acts on " + it->model + ", not " + model->id());
  LiftReport r;
  if (it->graph) {
    auto graph = std::dynamic_pointer_cast<const GraphSpace>(model);
    r = check_lift_isometry(make_graph_isometry(it->id, graph), s.sampling);
  } else {
    r = check_lift_isometry(*model, make_isometry(it->id), s.sampling);
  }
  SuiteResult out;
  out.model = r.model;
  out.verdict = r.verdict;
  out.samples = r.samples;
  out.max_deviation = r.max_deviation;
  out.tolerance = r.tolerance;
  out.exact = r.exact;
  out.details["isometry"] = r.isometry;
  out.details["max_image_defect"] = g6(r.max_image_defect);
  out.details["radius_preserved"] = r.radius_preserved ? "true" : "false";
  out.details["max_distance_defect"] = g6(r.audit.max_distance_defect);
  out.details["max_inverse_defect"] = g6(r.audit.max_inverse_defect);
  if (!r.exact_max_deviation.empty()) out.details["exact_max_deviation"] = r.exact_max_deviation;
  return out;
}

}  // namespace

VerificationReport run(const Scenario& s, bool timing) {
  VerificationReport report;
  report.scenario = echo(s);
  std::shared_ptr<const ModelSpace> model;
  if (!s.model.empty()) model = build_model(s);
  for (const auto& suite : s.suites) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    if (suite == "isometry") {
      r = from_ball_check(check_isometry(*model, s.sampling));
    } else if (suite == "lipschitz") {
      r = from_ball_check(check_lipschitz(*model, s.sampling));
    } else if (suite == "injectivity") {
      r = from_ball_check(check_injectivity(*model, s.sampling));
    } else if (suite == "extendibility") {
      r = run_extendibility(*model, s.sampling);
    } else if (suite == "product") {
      r = run_product(*model, s.sampling);
    } else if (suite == "quotient") {
      r = run_quotient(s);
    } else if (suite == "convergence") {
      r = run_convergence(s);
    } else if (suite == "lift") {
      r = run_lift(s);
    } else {
      throw ParseError("unknown suite '" + suite + "'");
    }
    r.suite = suite;
    GroundTruth truth = model ? model->ground_truth() : GroundTruth{Truth::yes, Truth::unknown};
    r.theorem = theorem_for(suite, truth);
    r.expected = s.expect ? std::vector<std::string>{*s.expect} : expected_for(suite, truth);
    r.matches = r.expected.empty() || std::find(r.expected.begin(), r.expected.end(), r.verdict) != r.expected.end();
    if (timing) {
      r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    report.expectations_met = report.expectations_met && r.matches;
    report.results.push_back(std::move(r));
  }
  return report;
}

int exit_code(const VerificationReport& report) { return report.expectations_met ? kExpectationsMet : kMismatch; }

}  // namespace ballgeo::cli
