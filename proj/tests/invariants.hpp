#pragma once

// Randomized invariant checks shared by the property tests and the acceptance
// run. Each returns the number of failing cases.

#include <cmath>
#include <cstdint>

#include "oracles.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/su2.hpp"

namespace invariants {

using oracle::pi;

inline bool in_canonical_range(const psurg::PillowcasePoint& c) {
  if (!(c.alpha >= 0.0 && c.alpha <= pi)) return false;
  if (!(c.beta > -pi && c.beta <= pi)) return false;
  if ((c.alpha == 0.0 || c.alpha == pi) && c.beta < 0.0) return false;
  return true;
}

inline bool same_point(const psurg::PillowcasePoint& a, const psurg::PillowcasePoint& b,
                       double tol) {
  return std::abs(a.alpha - b.alpha) <= tol &&
         std::abs(std::remainder(a.beta - b.beta, 2 * pi)) <= tol;
}

// Idempotence, range, and equality of canonical forms across the orbit
// {+-x + 2 pi (m, n)}. Points within 1e-9 of the edges alpha = 0, pi are
// drawn exactly on the edge, where the sign rule applies.
inline long canonicalization(std::uint64_t seed, long cases) {
  oracle::Gen gen(seed);
  long bad = 0;
  for (long i = 0; i < cases; ++i) {
    double a = gen.uniform(-pi, pi);
    const double b = gen.uniform(-pi, pi);
    if (i % 10 == 0) a = (i % 20 == 0) ? 0.0 : pi;
    const auto c = psurg::canonicalize(a, b);
    if (!in_canonical_range(c)) ++bad;
    if (!(psurg::canonicalize(c.alpha, c.beta) == c)) ++bad;
    const double s = gen.integer(0, 1) ? 1.0 : -1.0;
    const long m = gen.integer(-3, 3);
    const long n = gen.integer(-3, 3);
    const auto d = psurg::canonicalize(s * a + 2 * pi * m, s * b + 2 * pi * n);
    const bool edge = c.alpha < 1e-9 || pi - c.alpha < 1e-9;
    if (edge) {
      // On an edge beta and -beta are identified.
      if (!(std::abs(d.alpha - c.alpha) <= 1e-9 &&
            std::abs(std::abs(d.beta) - std::abs(c.beta)) <= 1e-9)) {
        ++bad;
      }
    } else if (!same_point(c, d, 1e-9)) {
      ++bad;
    }
  }
  return bad;
}

inline long metric_axioms(std::uint64_t seed, long cases) {
  oracle::Gen gen(seed);
  long bad = 0;
  auto draw = [&] { return psurg::canonicalize(gen.uniform(-pi, pi), gen.uniform(-pi, pi)); };
  for (long i = 0; i < cases; ++i) {
    const auto x = draw();
    const auto y = draw();
    const auto z = draw();
    const double xy = psurg::pc_distance(x, y);
    if (!(xy >= 0.0)) ++bad;
    if (psurg::pc_distance(x, x) > 1e-15) ++bad;
    if (std::abs(xy - psurg::pc_distance(y, x)) > 1e-12) ++bad;
    if (xy > psurg::pc_distance(x, z) + psurg::pc_distance(z, y) + 1e-12) ++bad;
  }
  return bad;
}

inline long shift_involution(std::uint64_t seed, long cases) {
  oracle::Gen gen(seed);
  long bad = 0;
  for (long i = 0; i < cases; ++i) {
    const auto x = psurg::canonicalize(gen.uniform(-pi, pi), gen.uniform(-pi, pi));
    const auto y = psurg::shift_alpha_pi(psurg::shift_alpha_pi(x));
    if (psurg::pc_distance(x, y) > 1e-12) ++bad;
    if (!in_canonical_range(psurg::shift_alpha_pi(x))) ++bad;
  }
  return bad;
}

inline long conjugation_invariance(std::uint64_t seed, long cases) {
  oracle::Gen gen(seed);
  long bad = 0;
  for (long i = 0; i < cases; ++i) {
    const psurg::ClassFunction phi(gen.sine_series(static_cast<int>(gen.integer(1, 10))),
                                   gen.normal());
    const auto u = gen.su2();
    const auto v = gen.su2();
    const double a = psurg::classfn_eval(phi, u);
    const double b = psurg::classfn_eval(phi, u.conjugated_by(v));
    if (std::abs(a - b) > 1e-10 * (1.0 + std::abs(a))) ++bad;
  }
  return bad;
}

}  // namespace invariants
