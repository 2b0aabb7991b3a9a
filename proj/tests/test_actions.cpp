#include <doctest.h>

#include <cmath>

#include "ballgeo/actions.hpp"
#include "ballgeo/errors.hpp"

using namespace ballgeo;

namespace {

GroupAction two_pi_z(long bound = 64) { return translation_action(make_model("euclidean_r1"), {2 * M_PI}, bound); }

}  // namespace

TEST_SUITE("actions") {
  TEST_CASE("composition and inverses") {
    auto t = euclidean_translation(2, {1.5, -0.5});
    auto r = euclidean_rotation(M_PI / 2);
    auto rt = compose(r, t);
    Point p = rt.forward({1, 0});
    CHECK(p[0] == doctest::Approx(0.5));
    CHECK(p[1] == doctest::Approx(2.5));
    Point back = rt.inverse(p);
    CHECK(back[0] == doctest::Approx(1.0));
    CHECK(back[1] == doctest::Approx(0.0).epsilon(1e-12));
    auto inv = invert(t);
    CHECK(inv.forward({0, 0}) == Point{-1.5, 0.5});
    CHECK(identity_isometry().forward({3, 4}) == Point{3, 4});
  }

  TEST_CASE("catalogued isometries preserve distance") {
    SampleConfig cfg;
    cfg.n = 50;
    for (const auto& entry : list_isometries()) {
      if (entry.graph) continue;
      CAPTURE(entry.id);
      auto model = make_model(entry.model, entry.model_params);
      auto audit = audit_isometry(*model, make_isometry(entry.id), cfg);
      CHECK(audit.max_distance_defect <= 1e-9);
      CHECK(audit.max_inverse_defect <= 1e-9);
    }
    CHECK_THROWS_AS(make_isometry("no_such"), ParseError);
    CHECK_THROWS_AS(make_isometry("diamond_chain_shift"), Unsupported);
  }

  TEST_CASE("properness of 2 pi Z on the line") {
    auto g = two_pi_z();
    CHECK(properness_check(g, {0.0}, 4.0) == std::vector<long>{-1, 0, 1});
    CHECK(properness_check(g, {0.0}, 1.0) == std::vector<long>{0});
    CHECK(properness_check(g, {1.0}, 3.2) == std::vector<long>{-1, 0, 1});
    CHECK_THROWS_AS(properness_check(two_pi_z(1), {0.0}, 10.0), BoundTooSmall);
    auto trivial = trivial_action(make_model("euclidean_r1"));
    CHECK(properness_check(trivial, {0.0}, 100.0) == std::vector<long>{0});
  }

  TEST_CASE("lifted properness sits inside the base set") {
    auto g = two_pi_z();
    auto lifted = lifted_properness_check(g, {0.0}, 1.0, 1.0);
    auto base = properness_check(g, {0.0}, 1.0);
    CHECK(lifted == std::vector<long>{0});
    for (long k : lifted) CHECK(std::find(base.begin(), base.end(), k) != base.end());
    auto wide = lifted_properness_check(g, {0.0}, 1.0, 4.0);
    CHECK(wide == std::vector<long>{-1, 0, 1});
  }

  TEST_CASE("quotient distances") {
    auto g = two_pi_z();
    CHECK(quotient_distance(g, {0.0}, {M_PI}) == doctest::Approx(M_PI));
    CHECK(quotient_distance(g, {0.0}, {1.5 * M_PI}) == doctest::Approx(M_PI / 2));
    // independent of the representative
    CHECK(quotient_distance(g, {0.3 + 4 * M_PI}, {1.0 - 2 * M_PI}) == doctest::Approx(0.7));
    CHECK_THROWS_AS(quotient_distance(two_pi_z(1), {0.0}, {100.0}), BoundTooSmall);
    OrbitPoint a{{0.0}, g.id}, b{{1.0}, "other"};
    CHECK_THROWS_AS(quotient_distance(g, a, b), ModelMismatch);
    CHECK(quotient_distance(g, a, OrbitPoint{{1.0}, g.id}) == doctest::Approx(1.0));
  }

  TEST_CASE("lift of a rotation") {
    auto lift = lift_isometry(euclidean_rotation(M_PI / 2));
    BallPoint img = lift.forward({{1, 0}, 1});
    CHECK(img.center[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(img.center[1] == doctest::Approx(1.0));
    CHECK(img.radius == 1.0);
  }

  TEST_CASE("lift preserves d_H for the catalogue") {
    SampleConfig cfg;
    cfg.n = 50;
    cfg.eps = 0.05;
    for (const auto& entry : list_isometries()) {
      CAPTURE(entry.id);
      LiftReport rep;
      if (entry.graph) {
        auto space = std::dynamic_pointer_cast<const GraphSpace>(make_model(entry.model, entry.model_params));
        rep = check_lift_isometry(make_graph_isometry(entry.id, space), cfg);
        CHECK(rep.exact);
        CHECK(rep.max_deviation == 0.0);
      } else {
        auto model = make_model(entry.model, entry.model_params);
        rep = check_lift_isometry(*model, make_isometry(entry.id), cfg);
        CHECK(rep.max_deviation <= 2 * cfg.eps + cfg.tolerance);
      }
      CHECK(rep.verdict == "isometry");
      CHECK(rep.radius_preserved);
      CHECK(rep.samples == 50);
    }
  }

  TEST_CASE("diamond chain shift") {
    auto chain = make_diamond_chain(3);
    const auto& g = chain->graph();
    auto shift = diamond_chain_shift(chain, 4);
    auto img = shift.forward(g.point_at("-1/2", "1/2"));
    REQUIRE(img);
    CHECK(g.same_point(*img, g.point_at("7/2", "1/2")));
    CHECK_FALSE(shift.forward(g.point_at("5", "0")));
    CHECK(g.same_point(*shift.inverse(*img), g.point_at("-1/2", "1/2")));
    CHECK_THROWS_AS(diamond_chain_shift(chain, 3), DomainError);
    auto ball = chain->closed_ball(g.point_at("0", "1"), Exact::ratio(1, 2));
    auto moved = shift.forward(ball);
    REQUIRE(moved);
    CHECK(*moved == chain->closed_ball(g.point_at("4", "1"), Exact::ratio(1, 2)));
  }

  TEST_CASE("quotient theorem on R / Z, exact") {
    auto g = translation_action(make_model("euclidean_r1"), {1.0}, 64);
    SampleConfig cfg;
    cfg.n = 50;
    auto rep = check_quotient_theorem(g, cfg);
    CHECK(rep.exact);
    CHECK(rep.samples == 50);
    CHECK(rep.max_deviation <= 1e-9);
    CHECK(rep.verdict == "holds");
  }

  TEST_CASE("quotient theorem in the plane") {
    auto g = translation_action(make_model("euclidean_r2"), {3.0, 1.0}, 16);
    SampleConfig cfg;
    cfg.n = 6;
    cfg.eps = 0.05;
    cfg.r_max = 1.0;
    cfg.window = 2.0;
    auto rep = check_quotient_theorem(g, cfg);
    CHECK_FALSE(rep.exact);
    CHECK(rep.verdict == "holds");
  }

  TEST_CASE("circle as a quotient") {
    auto q = std::make_shared<QuotientLineSpace>(two_pi_z());
    CHECK(q->distance({0.0}, {M_PI}) == doctest::Approx(M_PI));
    CHECK(q->distance({0.2}, {2 * M_PI - 0.2}) == doctest::Approx(0.4));
    SampleConfig cfg;
    cfg.n = 5;
    cfg.include_designated = true;
    auto rep = check_injectivity(*q, cfg);
    CHECK(rep.verdict == "not-injective");
    REQUIRE(!rep.witnesses.empty());
    CHECK(rep.witnesses.front().d_t == doctest::Approx(1.0));
    CHECK_THROWS(QuotientLineSpace(translation_action(make_model("euclidean_r2"), {1, 0}, 4)));
  }

  TEST_CASE("orbit invariants") {
    SampleConfig cfg;
    cfg.n = 10;
    cfg.eps = 0.05;
    auto line = make_model("euclidean_r1");
    CHECK(orbit_invariants_check(*line, euclidean_translation(1, {5.0}), cfg).verdict == "holds");
    auto taxi = make_model("taxicab_r2");
    CHECK(orbit_invariants_check(*taxi, taxicab_reflection(), cfg).verdict == "holds");
    auto chain = make_diamond_chain(3);
    auto rep = orbit_invariants_check(diamond_chain_shift(chain, 4), cfg);
    CHECK(rep.exact);
    CHECK(rep.max_deviation == 0.0);
    CHECK(rep.verdict == "holds");
  }

  TEST_CASE("ball midpoints") {
    auto plane = make_model("euclidean_r2");
    const double eps = 0.01;
    auto two = ball_midpoints(*plane, {{0, 0}, 1.0}, {{4, 0}, 0.5}, eps);
    CHECK(two.half_distance == doctest::Approx(2.25));
    CHECK(two.distinct >= 2);
    for (const auto& m : two.midpoints) {
      CHECK(std::abs(m.to_a - two.half_distance) <= 2 * eps);
      CHECK(std::abs(m.to_b - two.half_distance) <= 2 * eps);
    }
    auto one = ball_midpoints(*plane, {{0, 0}, 1.0}, {{4, 0}, 1.0}, eps);
    CHECK(one.distinct == 1);
    REQUIRE(!one.midpoints.empty());
    CHECK(one.midpoints.front().ball.center[0] == doctest::Approx(2.0));
    CHECK(one.midpoints.front().ball.radius == doctest::Approx(1.0));
  }
}
