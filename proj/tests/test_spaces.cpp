#include <doctest.h>

#include <cmath>
#include <random>

#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"

using namespace ballgeo;

namespace {

double nearest(const ModelSpace& m, const Point& p, const std::vector<Point>& net) {
  double best = INFINITY;
  for (const auto& q : net) best = std::min(best, m.distance(p, q));
  return best;
}

// Points of B_r(c) drawn by rejection from the coordinate box (flat models).
std::vector<Point> flat_ball_samples(const ModelSpace& m, const BallPoint& b, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-b.radius, b.radius);
  std::vector<Point> out;
  while (out.size() < count) {
    Point p = b.center;
    for (std::size_t i = 0; i < m.dimension(); ++i) p[i] += u(rng);
    if (m.contains(p) && m.distance(p, b.center) <= b.radius) out.push_back(p);
  }
  return out;
}

void check_net(const ModelSpace& m, const BallPoint& b, double eps, const std::vector<Point>& inside) {
  NetSet net = m.ball_net(b, eps);
  REQUIRE(!net.points.empty());
  CHECK(net.resolution <= eps);
  for (const auto& p : net.points) CHECK(m.distance(p, b.center) <= b.radius + 1e-9);
  for (const auto& p : inside) CHECK(nearest(m, p, net.points) <= net.resolution + 1e-9);
}

}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("hyperbolic distance against the Poincare disk formula") {
    HyperbolicPlane h;
    // values from the disk model at 30 digits
    CHECK(h.distance(HyperbolicPlane::lift(0, 0), HyperbolicPlane::lift(1, 0)) ==
          doctest::Approx(0.88137358701954302523).epsilon(1e-13));
    CHECK(h.distance(HyperbolicPlane::lift(0.5, -1.25), HyperbolicPlane::lift(-2, 3)) ==
          doctest::Approx(3.0912449353734861505).epsilon(1e-13));
    CHECK(h.distance(HyperbolicPlane::lift(3, 4), HyperbolicPlane::lift(-3, -4)) ==
          doctest::Approx(4.6248766825455052405).epsilon(1e-13));
    CHECK(h.distance(HyperbolicPlane::lift(0.125, 0.25), HyperbolicPlane::lift(0.125, 0.5)) ==
          doctest::Approx(0.23396114994386441098).epsilon(1e-12));
  }

  TEST_CASE("exp_polar moves by exactly rho") {
    HyperbolicPlane h;
    Point base = HyperbolicPlane::lift(0.7, -0.3);
    for (double rho : {0.01, 0.5, 2.0, 3.0}) {
      for (double theta : {0.0, 1.0, 2.5, 5.0}) {
        Point q = HyperbolicPlane::exp_polar(base, rho, theta);
        CHECK(h.contains(q));
        CHECK(h.distance(base, q) == doctest::Approx(rho).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("pullback inverse against root-finding oracle") {
    CHECK(PullbackLine(10).psi_inverse(1.0) == doctest::Approx(0.92041472025027590708).epsilon(1e-11));
    CHECK(PullbackLine(10).psi_inverse(1.2) == doctest::Approx(1.110411826680455418).epsilon(1e-11));
    CHECK(PullbackLine(2).psi_inverse(0.5) == doctest::Approx(0.33541803238494005946).epsilon(1e-11));
    CHECK(PullbackLine(64).psi_inverse(3.0) == doctest::Approx(2.9977603612843383988).epsilon(1e-11));
    CHECK_THROWS_AS(PullbackLine(1), DomainError);
  }

  TEST_CASE("circle and product distances") {
    CircleSpace c;
    CHECK(c.distance({0.1}, {2 * M_PI - 0.1}) == doctest::Approx(0.2));
    CHECK(c.distance({0.0}, {M_PI}) == doctest::Approx(M_PI));
    auto p = make_model("product_max");
    CHECK(p->distance({0, 0}, {3, -4}) == 4.0);
    TaxicabPlane t;
    CHECK(t.distance({0, 0}, {3, -4}) == 7.0);
  }

  TEST_CASE("metric axioms on every catalogued model") {
    for (const auto& entry : list_models()) {
      auto m = make_model(entry.id);
      Rng rng(41);
      for (int i = 0; i < 30; ++i) {
        Point a = m->sample_point(rng, 3.0), b = m->sample_point(rng, 3.0), c = m->sample_point(rng, 3.0);
        CHECK(m->contains(a));
        CHECK(m->distance(a, a) == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(m->distance(a, b) == doctest::Approx(m->distance(b, a)).epsilon(1e-12));
        CHECK(m->distance(a, c) <= m->distance(a, b) + m->distance(b, c) + 1e-9);
      }
    }
  }

  TEST_CASE("ball nets cover their balls") {
    // nets keep a handle on their model, so models live in shared_ptrs
    auto e2 = std::make_shared<EuclideanSpace>(2);
    check_net(*e2, {{0.3, -0.2}, 1.1}, 0.05, flat_ball_samples(*e2, {{0.3, -0.2}, 1.1}, 300, 1));
    auto t = std::make_shared<TaxicabPlane>();
    check_net(*t, {{0.3, -0.2}, 1.1}, 0.05, flat_ball_samples(*t, {{0.3, -0.2}, 1.1}, 300, 2));
    auto hp = std::make_shared<HalfPlane>();
    check_net(*hp, {{0.3, 0.4}, 1.1}, 0.05, flat_ball_samples(*hp, {{0.3, 0.4}, 1.1}, 300, 3));
    auto e1 = std::make_shared<EuclideanSpace>(1);
    check_net(*e1, {{0.3}, 1.1}, 0.05, flat_ball_samples(*e1, {{0.3}, 1.1}, 100, 4));

    auto h = std::make_shared<HyperbolicPlane>();
    Point base = HyperbolicPlane::lift(1.0, 0.5);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> rho(0.0, 1.5), theta(0.0, 2 * M_PI);
    std::vector<Point> inside;
    for (int i = 0; i < 300; ++i) inside.push_back(HyperbolicPlane::exp_polar(base, rho(rng), theta(rng)));
    check_net(*h, {base, 1.5}, 0.05, inside);

    auto c = std::make_shared<CircleSpace>();
    std::vector<Point> arc;
    for (int i = 0; i <= 50; ++i) arc.push_back({c->wrap(-1.0 + 2.0 * i / 50.0)});
    check_net(*c, {{0.0}, 1.0}, 0.05, arc);
  }

  TEST_CASE("sphere nets lie on spheres") {
    for (const auto& id : {"euclidean_rn", "taxicab_r2", "hyperbolic_plane", "circle", "pullback_line"}) {
      auto m = make_model(id);
      Rng rng(43);
      Point c = m->sample_point(rng, 2.0);
      for (double t : {0.25, 1.0, 2.0}) {
        for (const auto& p : m->sphere_net(c, t, 0.05)) CHECK(m->distance(c, p) == doctest::Approx(t).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("midpoints where unique") {
    for (const auto& id : {"euclidean_rn", "hyperbolic_plane", "pullback_line"}) {
      auto m = make_model(id);
      Rng rng(47);
      for (int i = 0; i < 20; ++i) {
        Point a = m->sample_point(rng, 3.0), b = m->sample_point(rng, 3.0);
        auto mid = m->midpoint(a, b);
        REQUIRE(mid);
        double d = m->distance(a, b);
        CHECK(m->distance(a, *mid) == doctest::Approx(d / 2).epsilon(1e-9));
        CHECK(m->distance(*mid, b) == doctest::Approx(d / 2).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("catalog") {
    auto models = list_models();
    std::vector<std::string> ids;
    for (const auto& m : models) ids.push_back(m.id);
    for (const auto& want : {"euclidean_rn", "taxicab_r2", "hyperbolic_plane", "halfplane", "tee", "diamond",
                             "diamond_chain", "circle", "product_max", "pullback_line"}) {
      CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
    }
    auto chain = std::find_if(models.begin(), models.end(), [](const auto& m) { return m.id == "diamond_chain"; });
    CHECK(chain->parameters.count("k") == 1);
    CHECK(list_models().front().id == models.front().id);
    CHECK_THROWS_AS(make_model("unknown_space"), ParseError);
    CHECK_THROWS_AS(make_model("euclidean_rn", {{"bogus", "1"}}), ParseError);
    CHECK(make_model("diamond_chain", {{"k", "2"}})->key() == "diamond_chain(k=2)");
  }

  TEST_CASE("carrier checks") {
    auto hp = std::make_shared<HalfPlane>();
    CHECK_THROWS_AS(hp->checked_distance({0, -1}, {0, 0}), DomainError);
    CHECK_THROWS_AS(hp->ball_net({{0, 0}, -1.0}, 0.1), DomainError);
    CHECK_THROWS_AS(hp->ball_net({{0, 0}, 1.0}, 0.0), DomainError);
  }
}
