#pragma once

#include <array>
#include <numbers>
#include <vector>

#include "psurg/su2.hpp"

namespace psurg {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduces x into (-pi, pi]. Values already in that interval are returned
// unchanged, bit for bit.
double wrap_angle(double x);

// Canonical representative of the orbit {+-(alpha, beta) + 2 pi Z^2}:
// alpha in [0, pi], beta in (-pi, pi], and beta >= 0 on the edges alpha = 0
// and alpha = pi.
struct PillowcasePoint {
  double alpha = 0.0;
  double beta = 0.0;

  friend bool operator==(const PillowcasePoint&, const PillowcasePoint&) = default;
};

PillowcasePoint canonicalize(const AnglePair& raw);
inline PillowcasePoint canonicalize(double alpha, double beta) {
  return canonicalize(AnglePair{alpha, beta});
}

// Quotient metric: minimum Euclidean distance over the orbit of y.
double pc_distance(const PillowcasePoint& x, const PillowcasePoint& y);

// Canonical form of (alpha + pi, beta); an involution of the pillowcase.
PillowcasePoint shift_alpha_pi(const PillowcasePoint& x);

// Surgery slope p*a + q*b (a meridian, b longitude).
class Slope {
 public:
  // Validates: gcd(|p|,|q|) = 1, q >= 0, not (0,0), and q = 0 only for (1,0).
  Slope(long p, long q);
  // Accepts any nonzero pair and normalizes sign and common factors.
  static Slope from_rational(long num, long den);

  long p() const { return p_; }
  long q() const { return q_; }
  double value() const;  // p/q, +inf for (1,0)

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  long p_;
  long q_;
};

// The locus {p alpha + q beta = c mod 2 pi} on the pillowcase. Negation maps
// it to {... = -c}, so membership tests both signs.
struct FillingLine {
  long p = 0;
  long q = 1;
  double c = 0.0;  // normalized to [0, 2 pi)
  bool twisted = false;

  FillingLine() = default;
  FillingLine(long p, long q, double c, bool twisted);

  // Distance of p alpha + q beta from +-c modulo 2 pi.
  double residual(double alpha, double beta) const;
  double residual(const PillowcasePoint& x) const {
    return residual(x.alpha, x.beta);
  }
  bool contains(const PillowcasePoint& x, double tol) const {
    return residual(x) <= tol;
  }
};

FillingLine reducible_locus(bool twisted);
// Untwisted: p alpha + q beta = 0. Twisted: p alpha + q beta = q pi.
FillingLine filling_lines(const Slope& slope, bool twisted);

// The piecewise-linear arc z1..z6 for a slope with p, q > 0 and p/q <= 2.
class ArcS {
 public:
  explicit ArcS(const Slope& slope);

  const Slope& slope() const { return slope_; }
  // Always the six formula vertices, duplicates included.
  const std::array<AnglePair, 6>& vertices() const { return vertices_; }
  // Vertices with consecutive duplicates dropped (p/q = 1 collapses z1z2 and
  // z5z6).
  const std::vector<AnglePair>& polyline() const { return polyline_; }

  // The line carrying segment z_i z_{i+1} (i = 0..4), in raw plane
  // coordinates: {(alpha, beta) : a*alpha + b*beta = c}.
  struct PlaneLine {
    double a, b, c;
  };
  PlaneLine segment_line(int i) const;

  // Orbit distance from x to S.
  double distance(const PillowcasePoint& x) const;
  // Point at arclength fraction t in [0, 1] along the polyline.
  AnglePair sample(double t) const;
  double length() const;

 private:
  Slope slope_;
  std::array<AnglePair, 6> vertices_;
  std::vector<AnglePair> polyline_;
  std::vector<double> cumulative_;
};

ArcS build_arc_S(const Slope& slope);

struct BetaPiContacts {
  std::vector<AnglePair> raw;            // vertices with |beta| = pi
  std::vector<PillowcasePoint> orbits;   // their distinct canonical forms
};
BetaPiContacts points_on_beta_pi(const ArcS& arc);

struct Tube {
  ArcS arc;
  double epsilon;
};

// Treats canonical beta within this distance of pi as lying on beta = pi.
inline constexpr double kBetaPiTol = 1e-12;

bool on_beta_pi(const PillowcasePoint& x);
// Membership in U (star = false) or U* = U minus {beta = +-pi} (star = true).
bool tube_contains(const Tube& tube, const PillowcasePoint& x, bool star);

// Canonical forms of v_{s,k} = (2 pi k / p, pi), k = 0..p-1, deduplicated.
std::vector<PillowcasePoint> reducible_points_for_slope(const Slope& slope);

}  // namespace psurg
