#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "psurg/errors.hpp"
#include "psurg/su2.hpp"

using namespace psurg;

TEST_CASE("quaternion product matches the matrix product") {
  oracle::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.su2();
    const auto b = gen.su2();
    const Eigen::Matrix2cd prod = oracle::su2_matrix(a) * oracle::su2_matrix(b);
    CHECK((prod - oracle::su2_matrix(a * b)).norm() < 1e-13);
    const auto m = (a * b).matrix();
    CHECK(std::abs(m[0] - prod(0, 0)) < 1e-13);
    CHECK(std::abs(m[3] - prod(1, 1)) < 1e-13);
  }
}

TEST_CASE("angle agrees with the eigenvalues") {
  oracle::Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    const auto u = gen.su2();
    CHECK(u.angle() == doctest::Approx(oracle::eigen_angle(u)).epsilon(1e-10));
    CHECK(u.trace() == doctest::Approx(2.0 * std::cos(u.angle())));
  }
  CHECK(SU2Element::identity().angle() == 0.0);
  CHECK(SU2Element::minus_identity().angle() == doctest::Approx(oracle::pi));
}

TEST_CASE("axis-angle construction") {
  const auto u = SU2Element::from_axis_angle({0, 0, 2}, 0.3);
  CHECK(u.w() == doctest::Approx(std::cos(0.3)));
  CHECK(u.z() == doctest::Approx(std::sin(0.3)));
  CHECK_THROWS_AS(SU2Element::from_axis_angle({0, 0, 0}, 1.0), ZeroAxis);
}

TEST_CASE("inverse, conjugation and centrality") {
  oracle::Gen gen(13);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.su2();
    const auto g = gen.su2();
    CHECK(distance(a * a.inverse(), SU2Element()) < 1e-14);
    const auto c = a.conjugated_by(g);
    CHECK(distance(c, g * a * g.inverse()) < 1e-14);
    CHECK(c.angle() == doctest::Approx(a.angle()).epsilon(1e-10));
  }
  CHECK(SU2Element::minus_identity().is_central());
  CHECK_FALSE(SU2Element::from_axis_angle({1, 0, 0}, 0.1).is_central());
}

TEST_CASE("commutator norm is |ab - ba|") {
  oracle::Gen gen(14);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.su2();
    const auto b = gen.su2();
    const Eigen::Matrix2cd d = oracle::su2_matrix(a) * oracle::su2_matrix(b) -
                               oracle::su2_matrix(b) * oracle::su2_matrix(a);
    // Frobenius norm of a quaternion-type matrix is sqrt(2) times its 4-norm.
    CHECK(commutator_norm(a, b) == doctest::Approx(d.norm() / std::sqrt(2.0)).epsilon(1e-10));
  }
}

TEST_CASE("commuting pairs are diagonalized together") {
  oracle::Gen gen(15);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.uniform(-3, 3);
    const double b = gen.uniform(-3, 3);
    const auto g = gen.su2();
    const auto ha = SU2Element::from_axis_angle({1, 0, 0}, a).conjugated_by(g);
    const auto hb = SU2Element::from_axis_angle({1, 0, 0}, b).conjugated_by(g);
    const auto ab = commuting_pair_angles(ha, hb);
    // Up to the simultaneous sign (a, b) -> (-a, -b).
    auto near = [](double x) { return std::abs(std::remainder(x, 2 * oracle::pi)) < 1e-9; };
    CHECK(((near(ab.alpha - a) && near(ab.beta - b)) || (near(ab.alpha + a) && near(ab.beta + b))));
  }
  const auto x = SU2Element::from_axis_angle({1, 0, 0}, 0.5);
  const auto y = SU2Element::from_axis_angle({0, 1, 0}, 0.5);
  CHECK_THROWS_AS(commuting_pair_angles(x, y), NonCommuting);
  const auto c = commuting_pair_angles(SU2Element::minus_identity(), SU2Element());
  CHECK(c.alpha == doctest::Approx(oracle::pi));
  CHECK(c.beta == 0.0);
}

TEST_CASE("class function from g") {
  const ClassFunction zero = classfn_from_g({});
  CHECK(zero(SU2Element::from_axis_angle({0, 1, 0}, 1.2)) == 0.0);

  // g = sin gives f = 1 - cos, i.e. phi(U) = 1 - tr(U)/2.
  const ClassFunction phi = classfn_from_g({1.0});
  oracle::Gen gen(16);
  for (int i = 0; i < 100; ++i) {
    const auto u = gen.su2();
    CHECK(classfn_eval(phi, u) == doctest::Approx(1.0 - u.trace() / 2.0));
  }

  const ClassFunction h(gen.sine_series(8));
  double max_err = 0.0;
  for (double t = -oracle::pi; t <= oracle::pi; t += 1e-3) {
    const double fd = (h.f(t + 1e-5) - h.f(t - 1e-5)) / 2e-5;
    max_err = std::max(max_err, std::abs(fd - h.g(t)));
  }
  CHECK(max_err <= 1e-8);
  double lip = 0.0;
  for (int k = 1; k <= h.degree(); ++k) lip += k * std::abs(h.coefficients()[k - 1]);
  CHECK(h.derivative_bound() == doctest::Approx(lip));
}
