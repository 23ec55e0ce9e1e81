#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "psurg/errors.hpp"
#include "psurg/rep_solver.hpp"
#include "psurg/serialize.hpp"

using namespace psurg;
using oracle::pi;

TEST_CASE("alpha grid") {
  const auto g = alpha_grid(3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(pi / 4));
  CHECK(g[2] == doctest::Approx(3 * pi / 4));
  CHECK_THROWS_AS(alpha_grid(1), InvalidArgument);
  CHECK(pi / (grid_for_spacing(1e-3) + 1) <= 1e-3);
}

TEST_CASE("trefoil: one irreducible on beta = pi - 6 alpha") {
  const auto k = named_knot("trefoil");
  for (double a : {0.6, 1.0, pi / 2, 2.0, 2.5}) {
    const auto s = solve_at_alpha(k, a, 64, 9);
    REQUIRE(s.size() == 1);
    const auto expect = canonicalize(a, pi - 6 * a);
    CHECK(pc_distance(s[0].boundary, expect) < 1e-9);
    CHECK(s[0].relator_residual <= 1e-9);
    CHECK(s[0].irreducible);
    CHECK(s[0].commutator_gap > 1e-6);
  }
  CHECK(solve_at_alpha(k, 0.3, 64, 9).empty());
  CHECK(solve_at_alpha(k, 2.9, 64, 9).empty());
}

TEST_CASE("unknot has no irreducibles") {
  CHECK(solve_at_alpha(named_knot("unknot"), 1.0, 16, 1).empty());
  CHECK(pillowcase_image(named_knot("unknot"), 20, 1).samples.empty());
}

TEST_CASE("torus images match the closed form") {
  for (auto [p, q] : {std::pair{2L, 3L}, {2L, 5L}, {3L, 4L}}) {
    const auto k = torus_knot_presentation(p, q);
    const auto img = pillowcase_image(k, 60, 4);
    const auto ref = oracle::torus_image(p, q, alpha_grid(60), img.options.tol_irr);
    CHECK(hausdorff(boundary_points(img), ref) < 1e-7);
  }
}

TEST_CASE("braid and torus presentations give the same image") {
  const auto a = pillowcase_image(parse_braid("1 2 1 2 1 2 1 2"), 40, 2);
  const auto b = pillowcase_image(torus_knot_presentation(3, 4), 40, 2);
  CHECK(hausdorff(boundary_points(a), boundary_points(b)) < 1e-7);
}

TEST_CASE("image is independent of the worker count") {
  const auto k = named_knot("figure-eight");
  SolverOptions one;
  one.workers = 1;
  SolverOptions four;
  four.workers = 4;
  const auto a = pillowcase_image(k, 30, 17, one);
  const auto b = pillowcase_image(k, 30, 17, four);
  auto strip = [](Json j) {
    j["options"].erase("workers");
    return j.dump();
  };
  CHECK(strip(to_json(a)) == strip(to_json(b)));
  CHECK_FALSE(a.samples.empty());
}

TEST_CASE("figure-eight image is symmetric under beta -> -beta") {
  const auto img = pillowcase_image(named_knot("figure-eight"), 40, 3);
  auto pts = boundary_points(img);
  std::vector<PillowcasePoint> flipped;
  for (const auto& p : pts) flipped.push_back(canonicalize(p.alpha, -p.beta));
  CHECK(hausdorff(pts, flipped) < 1e-7);
}

TEST_CASE("twisting shifts beta by pi") {
  const auto img = pillowcase_image(named_knot("trefoil"), 20, 1);
  const auto tw = to_twisted(img);
  CHECK(tw.twisted);
  REQUIRE(tw.samples.size() == img.samples.size());
  std::vector<PillowcasePoint> shifted;
  for (const auto& s : img.samples) shifted.push_back(canonicalize(s.raw_boundary.alpha, s.raw_boundary.beta + pi));
  CHECK(hausdorff(boundary_points(tw), shifted) < 1e-12);
  CHECK(abelian_locus(named_knot("trefoil")).c == 0.0);
}

TEST_CASE("intersection with a filling line") {
  const auto k = named_knot("trefoil");
  const auto img = pillowcase_image(k, 80, 1);
  const auto hits = intersect_with_line(k, img, filling_lines(Slope(1, 1), false), 0.05);
  REQUIRE_FALSE(hits.empty());
  CHECK(hits.front().boundary.alpha == doctest::Approx(pi / 5).epsilon(1e-9));
  for (const auto& h : hits) {
    CHECK(filling_lines(Slope(1, 1), false).residual(h.raw_boundary.alpha, h.raw_boundary.beta) <= 1e-9);
  }
  CHECK(intersect_with_line(k, img, filling_lines(Slope(5, 1), false), 0.05).empty());
}

TEST_CASE("measure_representation rejects non-commuting boundary") {
  const auto k = named_knot("trefoil");
  oracle::Gen gen(3);
  std::vector<SU2Element> a{gen.su2(), gen.su2(), gen.su2()};
  CHECK_FALSE(measure_representation(k, a).has_value());
}

TEST_CASE("hausdorff") {
  std::vector<PillowcasePoint> a{{0.1, 0.2}, {1.0, 1.0}};
  std::vector<PillowcasePoint> b{{0.1, 0.2}};
  CHECK(hausdorff(a, a) == 0.0);
  CHECK(hausdorff(a, b) == doctest::Approx(std::hypot(0.9, 0.8)));
}
