#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace psurg {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

// Unit quaternion w + x i + y j + z k. Every constructor and product
// renormalizes, so the unit-norm invariant holds to rounding after each step.
//
// The 2x2 matrix view uses i -> diag(i, -i), so elements about the x-axis are
// the diagonal matrices diag(e^{it}, e^{-it}).
class SU2Element {
 public:
  SU2Element() = default;
  // Normalizes (w, x, y, z). A zero quaternion becomes the identity.
  SU2Element(double w, double x, double y, double z);

  static SU2Element identity() { return {}; }
  static SU2Element minus_identity() { return {-1.0, 0.0, 0.0, 0.0}; }
  // cos(t) + sin(t) * axis; throws ZeroAxis for a zero axis. The axis need not
  // be unit length.
  static SU2Element from_axis_angle(const Vec3& axis, double t);

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  Vec3 vec() const { return {x_, y_, z_}; }
  std::array<double, 4> components() const { return {w_, x_, y_, z_}; }

  double trace() const { return 2.0 * w_; }
  // Rotation angle in [0, pi]: arccos of the clamped real part.
  double angle() const;
  bool is_central(double tol = 0.0) const;

  SU2Element inverse() const { return {w_, -x_, -y_, -z_, RawTag{}}; }
  // g * this * g^{-1}
  SU2Element conjugated_by(const SU2Element& g) const;

  std::array<std::complex<double>, 4> matrix() const;

  friend SU2Element operator*(const SU2Element& a, const SU2Element& b);
  friend bool operator==(const SU2Element&, const SU2Element&) = default;

 private:
  struct RawTag {};
  SU2Element(double w, double x, double y, double z, RawTag)
      : w_(w), x_(x), y_(y), z_(z) {}

  double w_ = 1.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

// Euclidean distance between the quaternion 4-vectors.
double distance(const SU2Element& a, const SU2Element& b);
// Norm of a*b - b*a as a quaternion.
double commutator_norm(const SU2Element& a, const SU2Element& b);

struct AnglePair {
  double alpha = 0.0;
  double beta = 0.0;
};

inline constexpr double kDefaultCommuteTol = 1e-8;

// Simultaneously diagonalizes two commuting elements: returns (alpha, beta)
// with ha ~ diag(e^{i alpha}, e^{-i alpha}) and hb ~ diag(e^{i beta},
// e^{-i beta}) under one conjugation. The common axis is taken from whichever
// element is farther from the center; if both are central the angles are 0 or
// pi. Throws NonCommuting when the commutator exceeds tol.
AnglePair commuting_pair_angles(const SU2Element& ha, const SU2Element& hb,
                                double tol = kDefaultCommuteTol);

// Class function phi(U) = f(angle(U)) with f' = g for the finite sine series
// g(t) = sum_k c_k sin(k t), f(t) = offset + sum_k (c_k / k)(1 - cos(k t)).
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(std::vector<double> sine_coeffs, double offset = 0.0);

  std::span<const double> coefficients() const { return coeffs_; }
  double offset() const { return offset_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }

  double g(double t) const;
  double g_prime(double t) const;
  double f(double t) const;
  double operator()(const SU2Element& u) const { return f(u.angle()); }

  // sum_k k |c_k|, a Lipschitz constant for g.
  double derivative_bound() const;

 private:
  std::vector<double> coeffs_;
  double offset_ = 0.0;
};

double classfn_eval(const ClassFunction& phi, const SU2Element& u);
ClassFunction classfn_from_g(std::vector<double> coeffs);

}  // namespace psurg
