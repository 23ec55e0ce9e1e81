#pragma once

// Reference computations used by the tests. They deliberately avoid the
// library's own algebra: quaternions come from Eigen, eigenvalues from
// Eigen's complex eigensolver.

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "psurg/perturbation.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/rep_solver.hpp"
#include "psurg/su2.hpp"

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

// Hand-rolled generators: a seeded engine plus a few shaped draws.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double normal(double sd = 1.0) { return std::normal_distribution<double>(0.0, sd)(rng); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  psurg::SU2Element su2() {
    double w = normal(), x = normal(), y = normal(), z = normal();
    return {w, x, y, z};
  }
  std::vector<double> sine_series(int degree) {
    std::vector<double> c(static_cast<std::size_t>(degree));
    for (int k = 1; k <= degree; ++k) c[static_cast<std::size_t>(k - 1)] = normal(1.0 / k);
    return c;
  }
};

// Matrix of w + x i + y j + z k with i -> diag(i, -i).
inline Eigen::Matrix2cd su2_matrix(const psurg::SU2Element& u) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  m << C(u.w(), u.x()), C(u.y(), u.z()), C(-u.y(), u.z()), C(u.w(), -u.x());
  return m;
}

// Rotation angle in [0, pi] from the eigenvalues e^{+-i t}.
inline double eigen_angle(const psurg::SU2Element& u) {
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(su2_matrix(u));
  return std::abs(std::arg(es.eigenvalues()(0)));
}

inline Eigen::Quaterniond quat(double t, const Eigen::Vector3d& axis) {
  const Eigen::Vector3d n = axis.normalized();
  return Eigen::Quaterniond(std::cos(t), std::sin(t) * n.x(), std::sin(t) * n.y(),
                            std::sin(t) * n.z());
}

inline Eigen::Quaterniond qpow(const Eigen::Quaterniond& q, long n) {
  Eigen::Quaterniond out = Eigen::Quaterniond::Identity();
  const Eigen::Quaterniond b = n >= 0 ? q : q.conjugate();
  for (long i = 0; i < std::abs(n); ++i) out = out * b;
  return out;
}

// Irreducible image of T(p,q), p,q > 1 coprime, at each alpha: rho(x) of angle
// pi k/p on the z-axis, rho(y) of angle pi l/q on an axis at angle psi, with
// psi fixed by the meridian trace. Meridian x^u y^v with u q + v p = 1 and
// longitude x^p m^{-pq}. Points whose generators commute to within gap_tol
// are dropped, matching the solver's notion of irreducible.
inline std::vector<psurg::PillowcasePoint> torus_image(long p, long q,
                                                       const std::vector<double>& alphas,
                                                       double gap_tol) {
  long u = 0, v = 0;
  for (long a = -q; a <= q && !u; ++a) {
    for (long b = -p; b <= p; ++b) {
      if (a * q + b * p == 1) {
        u = a;
        v = b;
        break;
      }
    }
  }
  std::vector<psurg::PillowcasePoint> out;
  for (double alpha : alphas) {
    for (long k = 1; k < p; ++k) {
      for (long l = 1; l < q; ++l) {
        if ((k - l) % 2 != 0) continue;
        const double tx = pi * k / p;
        const double ty = pi * l / q;
        const double c1 = std::cos(u * tx), s1 = std::sin(u * tx);
        const double c2 = std::cos(v * ty), s2 = std::sin(v * ty);
        if (std::abs(s1 * s2) < 1e-14) continue;
        const double cpsi = (c1 * c2 - std::cos(alpha)) / (s1 * s2);
        if (!(std::abs(cpsi) < 1.0)) continue;
        const double psi = std::acos(cpsi);
        const auto X = quat(tx, {0, 0, 1});
        const auto Y = quat(ty, {std::sin(psi), 0, std::cos(psi)});
        const double gap = 2.0 * X.vec().cross(Y.vec()).norm();
        if (gap <= gap_tol) continue;
        const auto m = qpow(X, u) * qpow(Y, v);
        const auto lam = qpow(X, p) * qpow(m, -p * q);
        const Eigen::Vector3d axis = m.vec().normalized();
        const double a = std::atan2(m.vec().norm(), m.w());
        const double b = std::atan2(lam.vec().dot(axis), lam.w());
        out.push_back(psurg::canonicalize(a, b));
      }
    }
  }
  return out;
}

// Independent emptiness scan: every image sample, plus `n` uniform alphas on
// each line where a point within tol or a sign change of the signed line
// residual counts as a solution.
inline bool brute_force_empty(const psurg::PillowcaseImage& img,
                              const std::vector<psurg::FillingLine>& lines,
                              const psurg::ClassFunction& g, double tol, int n = 1000000) {
  for (const auto& s : img.samples) {
    const double r = std::remainder(s.boundary.beta + g.g(s.boundary.alpha), 2 * pi);
    if (std::abs(r) <= tol) return false;
  }
  for (const auto& line : lines) {
    for (double sign : {1.0, -1.0}) {
      double prev = 0.0;
      for (int i = 0; i <= n; ++i) {
        const double a = -pi + 2 * pi * i / n;
        const double h = std::remainder(line.p * a - line.q * g.g(a) - sign * line.c, 2 * pi);
        if (std::abs(h) <= tol) return false;
        if (i > 0 && (h > 0) != (prev > 0) && std::abs(h - prev) < pi) return false;
        prev = h;
      }
    }
  }
  return true;
}

// A synthetic image whose samples carry only boundary coordinates.
inline psurg::PillowcaseImage synthetic_image(const std::vector<psurg::AnglePair>& pts,
                                              bool twisted) {
  psurg::PillowcaseImage img;
  img.knot = "synthetic";
  img.twisted = twisted;
  for (const auto& p : pts) {
    psurg::RepPoint r;
    r.raw_boundary = p;
    r.boundary = psurg::canonicalize(p);
    r.irreducible = true;
    img.samples.push_back(r);
  }
  return img;
}

}  // namespace oracle
