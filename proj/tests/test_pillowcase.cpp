#include "doctest.h"

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "psurg/errors.hpp"
#include "psurg/pillowcase.hpp"

using namespace psurg;
using oracle::pi;

TEST_CASE("wrap_angle") {
  CHECK(wrap_angle(pi) == pi);
  CHECK(wrap_angle(-pi) == doctest::Approx(pi));
  CHECK(wrap_angle(0.25) == 0.25);
  CHECK(wrap_angle(2 * pi + 0.5) == doctest::Approx(0.5));
  CHECK(wrap_angle(-7.0) == doctest::Approx(-7.0 + 2 * pi));
}

TEST_CASE("canonicalize: fixed examples") {
  auto c = canonicalize(-1.0, 0.5);
  CHECK(c.alpha == 1.0);
  CHECK(c.beta == -0.5);
  c = canonicalize(0.0, -1.0);
  CHECK(c == PillowcasePoint{0.0, 1.0});
  c = canonicalize(pi, -2.0);
  CHECK(c.alpha == pi);
  CHECK(c.beta == 2.0);
  c = canonicalize(-0.0, -0.0);
  CHECK(!std::signbit(c.alpha));
  CHECK(!std::signbit(c.beta));
  c = canonicalize(1.0, -pi);
  CHECK(c.beta == doctest::Approx(pi));
  c = canonicalize(2 * pi + 1.0, 4 * pi - 1.0);
  CHECK(c.alpha == doctest::Approx(1.0));
  CHECK(c.beta == doctest::Approx(-1.0));
}

TEST_CASE("pc_distance sees the orbit") {
  CHECK(pc_distance({0.1, 3.1}, {0.1, -3.1}) == doctest::Approx(2 * pi - 6.2));
  CHECK(pc_distance({0.0, 1.0}, {0.0, -1.0}) == doctest::Approx(0.0));
  CHECK(pc_distance({1.0, 1.0}, {1.0, 1.0}) == 0.0);
}

TEST_CASE("shift_alpha_pi") {
  const auto s = shift_alpha_pi({0.5, 1.0});
  CHECK(s.alpha == doctest::Approx(pi - 0.5));
  CHECK(s.beta == doctest::Approx(-1.0));
  const auto back = shift_alpha_pi(s);
  CHECK(back.alpha == doctest::Approx(0.5));
  CHECK(back.beta == doctest::Approx(1.0));
}

TEST_CASE("slopes") {
  CHECK_THROWS_AS(Slope(0, 0), InvalidSlope);
  CHECK_THROWS_AS(Slope(2, 4), InvalidSlope);
  CHECK_THROWS_AS(Slope(1, -2), InvalidSlope);
  CHECK_THROWS_AS(Slope(2, 0), InvalidSlope);
  CHECK(Slope::from_rational(-2, -4) == Slope(1, 2));
  CHECK(Slope::from_rational(3, -6) == Slope(-1, 2));
  CHECK(Slope::from_rational(-5, 0) == Slope(1, 0));
  CHECK(std::isinf(Slope(1, 0).value()));
  CHECK(Slope(5, 3).value() == doctest::Approx(5.0 / 3.0));
}

TEST_CASE("filling lines and the reducible locus") {
  const auto untw = filling_lines(Slope(5, 3), false);
  CHECK(untw.c == 0.0);
  const auto tw = filling_lines(Slope(5, 3), true);
  CHECK(tw.c == doctest::Approx(pi));  // 3 pi mod 2 pi
  CHECK(filling_lines(Slope(1, 2), true).c == 0.0);
  // 5 a + 3 b = 0 at (3/5 t, -t) and its negative.
  CHECK(untw.contains(canonicalize(0.6, -1.0), 1e-12));
  CHECK(untw.contains(canonicalize(-0.6, 1.0), 1e-12));
  CHECK_FALSE(untw.contains(canonicalize(0.6, 1.0), 1e-3));
  CHECK(reducible_locus(false).contains({1.0, 0.0}, 0.0));
  CHECK(reducible_locus(true).contains({1.0, pi}, 1e-15));
  CHECK(reducible_locus(true).twisted);
}

TEST_CASE("arc S for 5/3 has the six vertices") {
  const ArcS arc(Slope(5, 3));
  const auto& v = arc.vertices();
  const double r = 5.0 / 3.0;
  CHECK(v[0].alpha == -pi);
  CHECK(v[0].beta == 0.0);
  CHECK(v[1].beta == doctest::Approx(-(1 - r) * pi));
  CHECK(v[1].beta == doctest::Approx(2 * pi / 3));
  CHECK(v[4].beta == doctest::Approx(-2 * pi / 3));
  CHECK(v[2].beta == -pi);
  CHECK(v[3].beta == pi);
  CHECK(arc.polyline().size() == 6);
  CHECK(points_on_beta_pi(arc).raw.size() == 2);
  CHECK(points_on_beta_pi(ArcS(Slope(2, 1))).raw.size() == 4);
  CHECK(ArcS(Slope(1, 1)).polyline().size() == 4);
}

TEST_CASE("arc S rejects slopes outside (0, 2]") {
  CHECK_THROWS_AS(ArcS(Slope(5, 2)), SlopeOutOfRange);
  CHECK_THROWS_AS(ArcS(Slope(-1, 1)), SlopeOutOfRange);
  CHECK_THROWS_AS(ArcS(Slope(0, 1)), SlopeOutOfRange);
  CHECK_THROWS_AS(ArcS(Slope(1, 0)), SlopeOutOfRange);
}

TEST_CASE("arc distance, sampling and the tube") {
  const ArcS arc(Slope(5, 3));
  for (int i = 0; i <= 50; ++i) {
    const auto p = arc.sample(i / 50.0);
    CHECK(arc.distance(canonicalize(p)) < 1e-12);
  }
  CHECK(arc.distance(canonicalize(0.5, 0.0)) > 0.4);
  const Tube t{arc, 0.1};
  CHECK(tube_contains(t, canonicalize(0.05, 0.3), true));
  CHECK_FALSE(tube_contains(t, canonicalize(0.0, pi), true));
  CHECK(tube_contains(t, canonicalize(0.0, pi), false));
  CHECK_FALSE(tube_contains(t, canonicalize(1.5, 0.0), false));
}

TEST_CASE("segment lines of S") {
  const ArcS arc(Slope(5, 3));
  for (int i = 0; i < 5; ++i) {
    const auto l = arc.segment_line(i);
    for (const auto& z : {arc.vertices()[i], arc.vertices()[i + 1]}) {
      CHECK(l.a * z.alpha + l.b * z.beta == doctest::Approx(l.c).epsilon(1e-12));
    }
  }
}

TEST_CASE("reducible points v_{s,k}") {
  const auto pts = reducible_points_for_slope(Slope(5, 3));
  CHECK(pts.size() == 3);  // k and p-k coincide up to the involution
  for (const auto& p : pts) CHECK(p.beta == doctest::Approx(pi));
  CHECK_THROWS_AS(reducible_points_for_slope(Slope(0, 1)), InvalidSlope);
}
