#include <doctest.h>

#include <cmath>
#include <map>

#include "ballgeo/convergence.hpp"
#include "ballgeo/errors.hpp"

using namespace ballgeo;

TEST_SUITE("convergence") {
  TEST_CASE("ball inclusions need eps above the bound") {
    PullbackLineFamily family;
    CHECK(family.bound(10) == doctest::Approx(0.2));
    CHECK(check_ball_inclusions(family, 10, {0.0}, 1.0, 0.2));
    CHECK(check_ball_inclusions(family, 64, {3.0}, 2.5, 0.05));
    CHECK_THROWS_AS(check_ball_inclusions(family, 2, {0.0}, 1.0, 0.05), DomainError);
    CHECK_THROWS_AS(check_ball_inclusions(family, 4, {0.0}, -1.0, 1.0), DomainError);
  }

  TEST_CASE("constant family") {
    ConstantFamily family(make_model("euclidean_r2"));
    CHECK(family.bound(7) == 0.0);
    CHECK(check_ball_inclusions(family, 1, {0.0, 0.0}, 1.0, 0.0, 0.1));
    auto rep = hausdorff_limit_check(family, {0, 0}, {1, 1}, 1.0, 0.5, 64, 0.05);
    CHECK(rep.verdict == "converges");
    for (const auto& row : rep.rows) CHECK(row.deviation == 0.0);
  }

  TEST_CASE("limit rows against independent values") {
    // d_H^n = 2 + sin(2)/n + 1/2, high-precision
    const std::map<int, double> oracle = {{2, 2.9546487134128408477},  {4, 2.7273243567064204238},
                                          {8, 2.6136621783532102119},  {16, 2.556831089176605106},
                                          {32, 2.528415544588302553},  {64, 2.5142077722941512765}};
    PullbackLineFamily family;
    auto rep = hausdorff_limit_check(family, {0.0}, {2.0}, 1.0, 0.5, 64);
    CHECK(rep.limit_d_h == 2.5);
    REQUIRE(rep.rows.size() == 6);
    for (const auto& row : rep.rows) {
      CAPTURE(row.n);
      CHECK(std::abs(row.d_h - oracle.at(row.n)) <= 1e-10);
      CHECK(std::abs(row.d_h - 2.5) <= 4.0 / row.n);
      CHECK(row.ok);
    }
    CHECK(rep.monotone);
    CHECK(rep.verdict == "converges");
    CHECK(hausdorff_limit_check(family, {0.0}, {2.0}, 1.0, 0.5, 8).rows.size() == 3);
  }

  TEST_CASE("stability on the limit") {
    PullbackLineFamily family;
    SampleConfig cfg;
    cfg.n = 100;
    auto rep = stability_check(family, cfg);
    CHECK(rep.verdict == "isometry");
    CHECK(rep.max_deviation == 0.0);

    ConstantFamily bad(make_model("halfplane"));
    CHECK_THROWS_AS(stability_check(bad, cfg), DomainError);
  }

  TEST_CASE("bound audit") {
    PullbackLineFamily family;
    for (const auto& row : audit_family(family)) {
      CAPTURE(row.n);
      CHECK(row.ok);
      CHECK(row.max_gap <= row.bound);
      CHECK(row.max_gap > 0.5 * row.bound);
    }
  }

  TEST_CASE("family factory") {
    CHECK(make_family("pullback_line", nullptr, {})->indices().size() == 6);
    CHECK(make_family("constant", make_model("circle"), {3})->indices() == std::vector<int>{3});
    CHECK_THROWS_AS(make_family("wobble", nullptr, {}), ParseError);
    CHECK_THROWS_AS(PullbackLineFamily({1}), DomainError);
  }
}
