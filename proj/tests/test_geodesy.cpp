#include <doctest.h>

#include <cmath>

#include "ballgeo/errors.hpp"
#include "ballgeo/geodesy.hpp"

using namespace ballgeo;

namespace {

std::vector<Exact> small_radii() { return {Exact::ratio(1, 4), Exact::ratio(1, 2), Exact(1), Exact(2)}; }

bool has(const MetricGraph& g, const std::vector<GraphPoint>& pts, const GraphPoint& p) {
  return std::any_of(pts.begin(), pts.end(), [&](const GraphPoint& q) { return g.same_point(p, q); });
}

}  // namespace

TEST_SUITE("geodesy") {
  TEST_CASE("path length") {
    auto plane = make_model("euclidean_rn", {{"n", "2"}});
    CHECK(path_length(*plane, std::vector<Point>{{1, 1}}, 3) == 0.0);
    for (int depth : {0, 2, 5}) CHECK(path_length(*plane, std::vector<Point>{{0, 0}, {3, 4}}, depth) == doctest::Approx(5.0));
    auto quarter = [](double s) { return Point{std::cos(s * M_PI / 2), std::sin(s * M_PI / 2)}; };
    double prev = 0.0;
    for (int depth = 1; depth <= 10; ++depth) {
      double len = path_length(*plane, quarter, depth);
      CHECK(len >= prev);
      prev = len;
    }
    CHECK(std::abs(prev - M_PI / 2) <= 1e-4);
  }

  TEST_CASE("graph path length is the exact sum of sub-edges") {
    auto diamond = make_diamond();
    const auto& g = diamond->graph();
    std::vector<GraphPoint> path = {g.point_at("-1/2", "1/2"), g.point_at("0", "1"), g.point_at("1", "0"),
                                    g.point_at("1/2", "-1/2")};
    CHECK(path_length(*diamond, path) == Exact(2) * Exact::sqrt2());
    CHECK_THROWS_AS(path_length(*diamond, {g.point_at("0", "1"), g.point_at("0", "-1")}), DomainError);
  }

  TEST_CASE("distance realizing on the diamond") {
    auto diamond = make_diamond();
    const auto& g = diamond->graph();
    GraphPoint x = g.point_at("-1/2", "1/2"), y = g.point_at("1/2", "-1/2");
    auto seg = graph_segment(*diamond, {x, g.point_at("0", "1"), g.point_at("1", "0"), y});
    CHECK(seg.params.back() == Exact(2) * Exact::sqrt2());
    auto ok = is_distance_realizing(*diamond, seg);
    CHECK(ok.realizing);
    CHECK(ok.exact_deviation->sign() == 0);

    // 1/10 further along the side toward (0,-1): the way back through (-1,0) is shorter
    Exact step = Exact::ratio(1, 10);
    GraphPoint past = y;
    past.offset = y.offset + (g.edge(y.edge).u == *g.as_vertex(g.point_at("1", "0")) ? step : -step);
    GraphSegment longer = seg;
    longer.points.push_back(past);
    longer.params.push_back(seg.params.back() + step);
    auto bad = is_distance_realizing(*diamond, longer);
    CHECK_FALSE(bad.realizing);
    CHECK(*bad.exact_deviation == Exact(2) * step);

    GraphSegment single = graph_segment(*diamond, {g.point_at("-1", "0"), x});
    CHECK(is_distance_realizing(*diamond, single).realizing);
  }

  TEST_CASE("analytic distance realizing") {
    auto plane = make_model("euclidean_rn", {{"n", "2"}});
    CHECK(is_distance_realizing(*plane, segment(*plane, {{0, 0}, {1, 1}, {2, 2}}), 1e-6).realizing);
    CHECK_FALSE(is_distance_realizing(*plane, segment(*plane, {{0, 0}, {1, 0}, {1, 1}}), 1e-6).realizing);
  }

  TEST_CASE("extendibility on the real line") {
    auto line = make_real_line_graph();
    const auto& g = line->graph();
    GraphPoint x = g.point_at("0", "0");
    auto v = extendibility_at(*line, x, {g.point_at("3", "0"), g.point_at("-5/2", "0")}, default_exact_radii());
    CHECK(v.verdict == Verdict::holds);
    for (const auto& c : v.checks) {
      REQUIRE(c.p);
      // the endpoint on the side away from y
      CHECK(line->distance(c.y, *c.p) == line->distance(c.y, x) + c.r);
    }
  }

  TEST_CASE("designated diamond failure is certified") {
    auto diamond = make_diamond();
    const auto& probe = *diamond->designated_graph_failure();
    auto v = extendibility_at(*diamond, probe.x, {probe.y}, {probe.r});
    CHECK(v.verdict == Verdict::fails);
    REQUIRE(v.checks.size() == 1);
    CHECK(v.checks[0].best);
    CHECK(*v.checks[0].best < v.checks[0].target);
    CHECK_FALSE(v.checks[0].boundary_affected);
  }

  TEST_CASE("diamond chain: odd axis points hold") {
    auto chain = make_diamond_chain(3);
    const auto& g = chain->graph();
    std::vector<GraphPoint> ys;
    Rng rng(53);
    for (int i = 0; i < 16; ++i) ys.push_back(chain->sample_graph_point(rng, 5.0));
    auto v = extendibility_at(*chain, g.point_at("1", "0"), ys, small_radii());
    CHECK(v.verdict == Verdict::holds);
  }

  TEST_CASE("extendible sets of the graph fixtures") {
    auto chain = make_diamond_chain(3);
    const auto& g = chain->graph();
    auto set = extendible_set(*chain, chain->vertices_and_midpoints(), std::nullopt, small_radii());
    CHECK(set.holds.size() == 4);
    for (const char* x : {"-3", "-1", "1", "3"}) CHECK(has(g, set.holds, g.point_at(x, "0")));
    CHECK(set.inconclusive.empty());
    CHECK(has(g, set.boundary, g.point_at("5", "0")));

    // radius 8 reaches the open ends from (+-3, 0): undecided, never "fails"
    auto wide = extendible_set(*chain, chain->vertices_and_midpoints(), std::nullopt, default_exact_radii());
    CHECK(has(g, wide.inconclusive, g.point_at("3", "0")));
    CHECK_FALSE(has(g, wide.fails, g.point_at("3", "0")));

    auto line = make_real_line_graph();
    auto lset = extendible_set(*line, line->vertices_and_midpoints(), std::nullopt, default_exact_radii());
    CHECK(lset.fails.empty());
    CHECK(lset.inconclusive.empty());
    CHECK(!lset.holds.empty());

    auto tee = make_tee();
    auto tset = extendible_set(*tee, tee->vertices_and_midpoints(), std::nullopt, default_exact_radii());
    CHECK(has(tee->graph(), tset.fails, tee->graph().point_at("0", "0")));
    CHECK(has(tee->graph(), tset.fails, tee->graph().point_at("0", "1")));
  }

  TEST_CASE("diamond corners on the axis hold because of the rays") {
    auto diamond = make_diamond();
    const auto& g = diamond->graph();
    auto set = extendible_set(*diamond, diamond->vertices_and_midpoints(), std::nullopt, default_exact_radii());
    CHECK(has(g, set.holds, g.point_at("-1", "0")));
    CHECK(has(g, set.holds, g.point_at("1", "0")));
    CHECK(has(g, set.fails, g.point_at("0", "1")));
    CHECK(has(g, set.fails, g.point_at("-1/2", "1/2")));
  }

  TEST_CASE("extendible_set refuses analytic models") {
    auto plane = make_model("euclidean_rn");
    CHECK_THROWS_AS(extendible_set(*plane, {}, std::nullopt, default_exact_radii()), Unsupported);
  }

  TEST_CASE("analytic extendibility") {
    auto plane = make_model("euclidean_rn", {{"n", "2"}});
    Rng rng(59);
    std::vector<Point> ys;
    for (int i = 0; i < 8; ++i) ys.push_back(plane->sample_point(rng, 3.0));
    auto v = extendibility_at(*plane, Point{0.25, -0.5}, ys, default_radii(), 0.01);
    CHECK(v.verdict == Verdict::holds);
    for (const auto& c : v.checks) {
      REQUIRE(c.p);
      auto seg = segment(*plane, {c.y, Point{0.25, -0.5}, *c.p});
      CHECK(is_distance_realizing(*plane, seg, 1e-6).realizing);
    }

    for (const char* id : {"halfplane", "circle"}) {
      auto m = make_model(id);
      auto probe = *m->designated_failure();
      auto f = extendibility_at(*m, probe.x, {probe.y}, {probe.r}, 0.01);
      CHECK(f.verdict == Verdict::fails);
      CHECK(f.checks[0].margin > f.checks[0].tolerance);
    }
    CHECK_THROWS_AS(extendibility_at(*plane, Point{0, 0}, {}, default_radii(), 0.01), DomainError);
    CHECK_THROWS_AS(extendibility_at(*plane, Point{0, 0}, {Point{0, 0}}, default_radii(), 0.01), DomainError);
  }

  TEST_CASE("mincut witnesses") {
    auto diamond = make_diamond();
    const auto& g = diamond->graph();
    auto m = mincut_witness(*diamond, g.point_at("0", "1"));
    REQUIRE(m);
    // minimality survives past (1,0) down to (0,-1), then the way back through (-1,0) wins
    CHECK(m->failure_parameter == Exact(2) * Exact::sqrt2());
    CHECK(g.same_point(m->segment.points.back(), g.point_at("0", "-1")));
    CHECK(is_distance_realizing(*diamond, m->segment).realizing);
    CHECK(m->beyond_distance < m->beyond_parameter);

    auto line = make_real_line_graph();
    CHECK_FALSE(mincut_witness(*line, line->graph().point_at("0", "0")));

    auto circle = make_model("circle");
    auto c = mincut_witness(*circle, Point{0.0}, Point{0.5}, 2 * M_PI);
    REQUIRE(c);
    CHECK(c->failure_parameter == doctest::Approx(M_PI).epsilon(1e-10));
    auto plane = make_model("euclidean_rn", {{"n", "2"}});
    CHECK_FALSE(mincut_witness(*plane, Point{0, 0}, Point{1, 0}, 10.0));
  }
}
