#include "doctest.h"

#include "psurg/errors.hpp"
#include "psurg/knot.hpp"
#include "psurg/rep_solver.hpp"

using namespace psurg;

TEST_CASE("word algebra") {
  Word w{1, 2, -2, -1, 3};
  CHECK(w.reduced() == Word{3});
  CHECK((w * w.inverse()).reduced().empty());
  Word p;
  p.append_power(1, -3);
  CHECK(p == Word{-2, -2, -2});
  const std::vector<long> ab{1, 1, 1};
  CHECK(Word{1, 2, -3, 1}.exponent_sum(ab) == 2);
  CHECK(Word{1, -2}.to_string() == "1 -2");
}

TEST_CASE("evaluate_word checks indices") {
  const std::vector<SU2Element> a{SU2Element()};
  CHECK_THROWS_AS(evaluate_word(Word{2}, a), IndexOutOfRange);
}

TEST_CASE("braid parsing") {
  const auto k = parse_braid("1 1 1");
  CHECK(k.n_generators == 3);
  CHECK(k.relators.size() == 2);
  CHECK(k.writhe == 3);
  CHECK(k.abelianization_consistent());
  CHECK(parse_braid("s1, s1, s1").hash() == k.hash());
  CHECK(parse_braid("S1 S1 S1").writhe == -3);
  CHECK_THROWS_AS(parse_braid("1 1"), MultiComponentLink);
  CHECK_THROWS_AS(parse_braid("1 x"), ParseError);
  CHECK_THROWS_AS(parse_braid("0"), ParseError);
  const auto unknot = parse_braid("1");
  CHECK(unknot.abelianization_consistent());
}

TEST_CASE("link detection reports the component count") {
  try {
    parse_braid("1 1 2 2");
    FAIL("expected a link");
  } catch (const MultiComponentLink& e) {
    CHECK(e.components() == 3);
  }
}

TEST_CASE("PD parsing") {
  const auto k = parse_pd("PD[(1,5,2,4),(3,1,4,6),(5,3,6,2)]");
  CHECK(k.n_generators == 3);
  CHECK(k.writhe == 3);
  CHECK(k.abelianization_consistent());
  CHECK(parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").hash() == k.hash());
  CHECK(parse_pd("PD[(1,4,2,5),(3,6,4,1),(5,2,6,3)]").writhe == -3);
  CHECK_THROWS_AS(parse_pd("PD[(1,5,2,4),(3,1,4,6),(5,3,6,9)]"), InconsistentPD);
  CHECK_THROWS_AS(parse_pd("nonsense"), ParseError);
  // Hopf link.
  CHECK_THROWS_AS(parse_pd("PD[(4,1,3,2),(2,3,1,4)]"), MultiComponentLink);
}

TEST_CASE("braid to PD round trip keeps the writhe") {
  const std::vector<int> letters{1, -2, 1, -2};
  const auto pd = braid_to_pd(letters);
  CHECK(pd.size() == 4);
  const auto k = presentation_from_pd(pd, "4_1");
  CHECK(k.writhe == 0);
  CHECK(k.abelianization_consistent());
  CHECK(braid_components(letters) == 1);
}

TEST_CASE("torus knot presentations") {
  const auto t = torus_knot_presentation(3, 4);
  CHECK(t.n_generators == 2);
  CHECK_FALSE(t.conjugate_generators);
  CHECK(t.abelianization == std::vector<long>{4, 3});
  CHECK(t.abelianization_consistent());
  CHECK_THROWS_AS(torus_knot_presentation(2, 4), NotCoprime);
  CHECK_THROWS_AS(torus_knot_presentation(1, 4), InvalidArgument);
}

TEST_CASE("peripheral words commute in random representations of the relators") {
  // Meridian and longitude commute in the group, so they commute under any
  // solution; this checks the words against the solver's output.
  for (const auto& k : {named_knot("trefoil"), named_knot("figure-eight"),
                        torus_knot_presentation(2, 5), named_knot("5_1")}) {
    const auto sols = solve_at_alpha(k, 1.9, 32, 3);
    for (const auto& s : sols) {
      const auto m = evaluate_word(k.meridian, s.assignment);
      const auto l = evaluate_word(k.longitude, s.assignment);
      CHECK(commutator_norm(m, l) < 1e-8);
    }
  }
}

TEST_CASE("mirror negates the longitude angle") {
  const auto k = named_knot("trefoil");
  const auto mk = mirror(k);
  CHECK(mk.writhe == -k.writhe);
  CHECK(mk.hash() != k.hash());
  CHECK(mirror(mk).hash() == k.hash());
  const auto a = solve_at_alpha(k, 1.0, 64, 1);
  const auto b = solve_at_alpha(mk, 1.0, 64, 1);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(b[0].boundary.alpha == doctest::Approx(a[0].boundary.alpha));
  CHECK(b[0].boundary.beta == doctest::Approx(-a[0].boundary.beta));
}

TEST_CASE("simplify keeps the group") {
  const auto k = parse_braid("1 2 1 2 1 2 1 2");
  const auto s = simplify(k);
  CHECK(s.n_generators < k.n_generators);
  CHECK(s.abelianization_consistent());
  const auto a = solve_at_alpha(k, 1.0, 64, 2);
  const auto b = solve_at_alpha(s, 1.0, 64, 2);
  CHECK(a.size() == b.size());
}

TEST_CASE("named knots") {
  CHECK(named_knot("3_1").hash() == named_knot("trefoil").hash());
  CHECK(named_knot("unknot").relators.empty());
  CHECK(named_knot("T(2,5)").n_generators == 2);
  CHECK_THROWS_AS(named_knot("7_4"), ParseError);
}

TEST_CASE("hash is stable") {
  CHECK(parse_braid("1 1 1").hash() == parse_braid("1 1 1").hash());
  CHECK(parse_braid("1 1 1").hash().size() == 16);
}
