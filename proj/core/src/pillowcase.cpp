#include "psurg/pillowcase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "psurg/errors.hpp"

namespace psurg {

double wrap_angle(double x) {
  if (x > -kPi && x <= kPi) return x;
  double r = std::remainder(x, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  return r;
}

PillowcasePoint canonicalize(const AnglePair& raw) {
  double a = wrap_angle(raw.alpha);
  double b = wrap_angle(raw.beta);
  if (a < 0.0) {
    a = -a;
    b = wrap_angle(-b);
  }
  if ((a == 0.0 || a == kPi) && b < 0.0) b = -b;
  // Normalize signed zeros so equality is structural.
  if (a == 0.0) a = 0.0;
  if (b == 0.0) b = 0.0;
  return {a, b};
}

double pc_distance(const PillowcasePoint& x, const PillowcasePoint& y) {
  double best = std::numeric_limits<double>::infinity();
  for (double s : {1.0, -1.0}) {
    const double da = wrap_angle(s * y.alpha - x.alpha);
    const double db = wrap_angle(s * y.beta - x.beta);
    best = std::min(best, std::hypot(da, db));
  }
  return best;
}

PillowcasePoint shift_alpha_pi(const PillowcasePoint& x) {
  return canonicalize(x.alpha + kPi, x.beta);
}

Slope::Slope(long p, long q) : p_(p), q_(q) {
  if (p == 0 && q == 0) throw InvalidSlope("slope (0,0) is not a curve");
  if (q < 0) throw InvalidSlope("slope must have q >= 0");
  if (std::gcd(p, q) != 1) throw InvalidSlope("slope entries must be coprime");
  if (q == 0 && p != 1) throw InvalidSlope("the only slope with q = 0 is (1,0)");
}

Slope Slope::from_rational(long num, long den) {
  if (num == 0 && den == 0) throw InvalidSlope("slope (0,0) is not a curve");
  if (den < 0 || (den == 0 && num < 0)) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num, den);
  return Slope(num / g, den / g);
}

double Slope::value() const {
  if (q_ == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(p_) / static_cast<double>(q_);
}

FillingLine::FillingLine(long p_, long q_, double c_, bool twisted_)
    : p(p_), q(q_), twisted(twisted_) {
  c = std::fmod(c_, kTwoPi);
  if (c < 0.0) c += kTwoPi;
  if (c >= kTwoPi) c = 0.0;
}

double FillingLine::residual(double alpha, double beta) const {
  const double h = static_cast<double>(p) * alpha + static_cast<double>(q) * beta;
  return std::min(std::abs(wrap_angle(h - c)), std::abs(wrap_angle(h + c)));
}

FillingLine reducible_locus(bool twisted) {
  return FillingLine(0, 1, twisted ? kPi : 0.0, twisted);
}

FillingLine filling_lines(const Slope& slope, bool twisted) {
  const double c = twisted ? static_cast<double>(slope.q()) * kPi : 0.0;
  return FillingLine(slope.p(), slope.q(), c, twisted);
}

namespace {

double segment_distance(const AnglePair& x, const AnglePair& a,
                        const AnglePair& b) {
  const double dx = b.alpha - a.alpha;
  const double dy = b.beta - a.beta;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((x.alpha - a.alpha) * dx + (x.beta - a.beta) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  return std::hypot(x.alpha - (a.alpha + t * dx), x.beta - (a.beta + t * dy));
}

}  // namespace

ArcS::ArcS(const Slope& slope) : slope_(slope) {
  const long p = slope.p();
  const long q = slope.q();
  if (p <= 0 || q <= 0) {
    throw SlopeOutOfRange("arc S needs p, q > 0");
  }
  if (p > 2 * q) {
    throw SlopeOutOfRange("arc S needs p/q <= 2, got " + std::to_string(p) +
                          "/" + std::to_string(q));
  }
  const double shift = (1.0 - static_cast<double>(p) / static_cast<double>(q)) * kPi;
  vertices_ = {AnglePair{-kPi, 0.0}, AnglePair{-kPi, -shift},
               AnglePair{0.0, -kPi}, AnglePair{0.0, kPi},
               AnglePair{kPi, shift}, AnglePair{kPi, 0.0}};
  for (const auto& v : vertices_) {
    if (!polyline_.empty() && polyline_.back().alpha == v.alpha &&
        polyline_.back().beta == v.beta) {
      continue;
    }
    polyline_.push_back(v);
  }
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < polyline_.size(); ++i) {
    cumulative_.push_back(cumulative_.back() +
                          std::hypot(polyline_[i].alpha - polyline_[i - 1].alpha,
                                     polyline_[i].beta - polyline_[i - 1].beta));
  }
}

ArcS::PlaneLine ArcS::segment_line(int i) const {
  const double p = static_cast<double>(slope_.p());
  const double q = static_cast<double>(slope_.q());
  switch (i) {
    case 0: return {1.0, 0.0, -kPi};
    case 1: return {p, q, -q * kPi};
    case 2: return {1.0, 0.0, 0.0};
    case 3: return {p, q, q * kPi};
    case 4: return {1.0, 0.0, kPi};
    default: throw IndexOutOfRange("arc S has segments 0..4");
  }
}

double ArcS::distance(const PillowcasePoint& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (double s : {1.0, -1.0}) {
    for (int m = -1; m <= 1; ++m) {
      for (int n = -1; n <= 1; ++n) {
        const AnglePair y{s * x.alpha + kTwoPi * m, s * x.beta + kTwoPi * n};
        for (std::size_t i = 0; i + 1 < polyline_.size(); ++i) {
          best = std::min(best, segment_distance(y, polyline_[i], polyline_[i + 1]));
        }
      }
    }
  }
  return best;
}

double ArcS::length() const { return cumulative_.back(); }

AnglePair ArcS::sample(double t) const {
  const double s = std::clamp(t, 0.0, 1.0) * length();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
  if (i == 0) i = 1;
  if (i >= polyline_.size()) i = polyline_.size() - 1;
  const double seg = cumulative_[i] - cumulative_[i - 1];
  const double u = seg > 0.0 ? (s - cumulative_[i - 1]) / seg : 0.0;
  const auto& a = polyline_[i - 1];
  const auto& b = polyline_[i];
  return {a.alpha + u * (b.alpha - a.alpha), a.beta + u * (b.beta - a.beta)};
}

ArcS build_arc_S(const Slope& slope) { return ArcS(slope); }

BetaPiContacts points_on_beta_pi(const ArcS& arc) {
  BetaPiContacts out;
  for (const auto& v : arc.vertices()) {
    if (std::abs(v.beta) != kPi) continue;
    out.raw.push_back(v);
    const auto c = canonicalize(v);
    const bool seen = std::any_of(out.orbits.begin(), out.orbits.end(),
                                  [&](const PillowcasePoint& o) {
                                    return pc_distance(o, c) <= 1e-12;
                                  });
    if (!seen) out.orbits.push_back(c);
  }
  return out;
}

bool on_beta_pi(const PillowcasePoint& x) {
  return kPi - std::abs(x.beta) <= kBetaPiTol;
}

bool tube_contains(const Tube& tube, const PillowcasePoint& x, bool star) {
  const auto c = canonicalize(x.alpha, x.beta);
  if (star && on_beta_pi(c)) return false;
  return tube.arc.distance(c) <= tube.epsilon;
}

std::vector<PillowcasePoint> reducible_points_for_slope(const Slope& slope) {
  if (slope.p() <= 0) {
    throw InvalidSlope("reducible points need p >= 1");
  }
  std::vector<PillowcasePoint> out;
  const double p = static_cast<double>(slope.p());
  for (long k = 0; k < slope.p(); ++k) {
    const auto c = canonicalize(kTwoPi * static_cast<double>(k) / p, kPi);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) {
      return pc_distance(o, c) <= 1e-12;
    });
    if (!seen) out.push_back(c);
  }
  return out;
}

}  // namespace psurg
