#include "psurg/su2.hpp"

#include <algorithm>
#include <cmath>

#include "psurg/errors.hpp"

namespace psurg {

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

SU2Element::SU2Element(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (n == 0.0) return;
  w_ = w / n;
  x_ = x / n;
  y_ = y / n;
  z_ = z / n;
}

SU2Element SU2Element::from_axis_angle(const Vec3& axis, double t) {
  const double n = norm(axis);
  if (n == 0.0) throw ZeroAxis();
  const double s = std::sin(t) / n;
  return {std::cos(t), s * axis[0], s * axis[1], s * axis[2]};
}

double SU2Element::angle() const { return std::acos(std::clamp(w_, -1.0, 1.0)); }

bool SU2Element::is_central(double tol) const {
  return std::sqrt(x_ * x_ + y_ * y_ + z_ * z_) <= tol;
}

SU2Element SU2Element::conjugated_by(const SU2Element& g) const {
  return g * *this * g.inverse();
}

std::array<std::complex<double>, 4> SU2Element::matrix() const {
  using C = std::complex<double>;
  return {C(w_, x_), C(y_, z_), C(-y_, z_), C(w_, -x_)};
}

SU2Element operator*(const SU2Element& a, const SU2Element& b) {
  return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
          a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
          a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
          a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

double distance(const SU2Element& a, const SU2Element& b) {
  const auto p = a.components();
  const auto q = b.components();
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

double commutator_norm(const SU2Element& a, const SU2Element& b) {
  // ab - ba = 2 (a_vec x b_vec) in the vector part; real parts cancel.
  return 2.0 * norm(cross(a.vec(), b.vec()));
}

AnglePair commuting_pair_angles(const SU2Element& ha, const SU2Element& hb,
                                double tol) {
  const double gap = commutator_norm(ha, hb);
  if (gap > tol) throw NonCommuting(gap);
  const Vec3 va = ha.vec();
  const Vec3 vb = hb.vec();
  const double na = norm(va);
  const double nb = norm(vb);
  Vec3 axis{0.0, 0.0, 1.0};
  if (na >= nb && na > 0.0) {
    axis = {va[0] / na, va[1] / na, va[2] / na};
  } else if (nb > 0.0) {
    axis = {vb[0] / nb, vb[1] / nb, vb[2] / nb};
  }
  return {std::atan2(dot(va, axis), ha.w()), std::atan2(dot(vb, axis), hb.w())};
}

ClassFunction::ClassFunction(std::vector<double> sine_coeffs, double offset)
    : coeffs_(std::move(sine_coeffs)), offset_(offset) {}

double ClassFunction::g(double t) const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    s += coeffs_[k] * std::sin(static_cast<double>(k + 1) * t);
  }
  return s;
}

double ClassFunction::g_prime(double t) const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    s += kk * coeffs_[k] * std::cos(kk * t);
  }
  return s;
}

double ClassFunction::f(double t) const {
  double s = offset_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    s += coeffs_[k] / kk * (1.0 - std::cos(kk * t));
  }
  return s;
}

double ClassFunction::derivative_bound() const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    s += static_cast<double>(k + 1) * std::abs(coeffs_[k]);
  }
  return s;
}

double classfn_eval(const ClassFunction& phi, const SU2Element& u) {
  return phi(u);
}

ClassFunction classfn_from_g(std::vector<double> coeffs) {
  return ClassFunction(std::move(coeffs), 0.0);
}

}  // namespace psurg
