#include "doctest.h"

#include "invariants.hpp"
#include "oracles.hpp"
#include "psurg/knot.hpp"
#include "psurg/rep_solver.hpp"
#include "psurg/serialize.hpp"

using namespace psurg;

TEST_CASE("canonicalization fuzz") { CHECK(invariants::canonicalization(101, 20000) == 0); }

TEST_CASE("pc_distance metric fuzz") { CHECK(invariants::metric_axioms(102, 5000) == 0); }

TEST_CASE("shift_alpha_pi involution fuzz") { CHECK(invariants::shift_involution(103, 5000) == 0); }

TEST_CASE("class functions are conjugation invariant") {
  CHECK(invariants::conjugation_invariance(104, 2000) == 0);
}

TEST_CASE("evaluate_word is a homomorphism") {
  oracle::Gen gen(105);
  for (int i = 0; i < 300; ++i) {
    std::vector<SU2Element> a{gen.su2(), gen.su2(), gen.su2()};
    Word u, v;
    for (int j = 0; j < 6; ++j) {
      u.append(static_cast<int>(gen.integer(1, 3)) * (gen.integer(0, 1) ? 1 : -1));
      v.append(static_cast<int>(gen.integer(1, 3)) * (gen.integer(0, 1) ? 1 : -1));
    }
    CHECK(distance(evaluate_word(u * v, a), evaluate_word(u, a) * evaluate_word(v, a)) < 1e-13);
    CHECK(distance(evaluate_word(u.reduced(), a), evaluate_word(u, a)) < 1e-13);
    CHECK(distance(evaluate_word(u * u.inverse(), a), SU2Element()) < 1e-13);
  }
}

TEST_CASE("random knot braids give consistent presentations") {
  oracle::Gen gen(106);
  int knots = 0;
  for (int i = 0; i < 200 && knots < 25; ++i) {
    const int strands = static_cast<int>(gen.integer(2, 4));
    std::vector<int> letters;
    const int len = static_cast<int>(gen.integer(1, 8));
    for (int j = 0; j < len; ++j) {
      letters.push_back(static_cast<int>(gen.integer(1, strands - 1)) * (gen.integer(0, 1) ? 1 : -1));
    }
    if (braid_components(letters) != 1) continue;
    ++knots;
    const auto k = presentation_from_pd(braid_to_pd(letters), "random");
    CHECK(k.abelianization_consistent());
    const auto m = mirror(k);
    CHECK(m.abelianization_consistent());
    CHECK(mirror(m).hash() == k.hash());
    for (const auto& s : solve_at_alpha(k, 1.3, 8, static_cast<std::uint64_t>(i))) {
      CHECK(s.peripheral_gap < 1e-8);
      CHECK(s.relator_residual <= 1e-9);
    }
  }
  CHECK(knots >= 10);
}

TEST_CASE("image JSON is reproducible") {
  const auto k = named_knot("trefoil");
  const auto a = to_json(pillowcase_image(k, 25, 9)).dump();
  const auto b = to_json(pillowcase_image(k, 25, 9)).dump();
  CHECK(a == b);
}
