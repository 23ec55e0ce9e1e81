#include "psurg/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "psurg/errors.hpp"

namespace psurg {

namespace {

struct Knot {
  double a;
  double t;
};

// Values of g and g' at t by the angle-addition recurrence; exact enough for
// degree <= a few hundred and much cheaper than K calls to sin/cos.
void eval_series(std::span<const double> c, double t, double& g, double& gp) {
  const double s1 = std::sin(t);
  const double c1 = std::cos(t);
  double s = s1;
  double co = c1;
  g = 0.0;
  gp = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    g += c[k] * s;
    gp += kk * c[k] * co;
    const double sn = s * c1 + co * s1;
    co = co * c1 - s * s1;
    s = sn;
  }
}

// The target graph beta = T(alpha) on [0, pi]: a ramp up from (0, 0) along
// the edge alpha = 0, the segment z4 z5 clamped to |beta| <= level, and a ramp
// back to (pi, 0) along the edge alpha = pi. T is extended oddly.
std::vector<Knot> target_knots(double r, double delta, double level) {
  auto p1 = [&](double a) { return std::clamp(kPi - r * a, -level, level); };
  std::vector<double> xs{0.0, delta, kPi - delta, kPi};
  const double top = (kPi - level) / r;
  const double bottom = (kPi + level) / r;
  if (top > delta && top < kPi - delta) xs.push_back(top);
  if (bottom > delta && bottom < kPi - delta) xs.push_back(bottom);
  std::sort(xs.begin(), xs.end());
  std::vector<Knot> out;
  for (double a : xs) {
    double t = p1(a);
    if (a == 0.0 || a == kPi) t = 0.0;
    out.push_back({a, t});
  }
  return out;
}

// Sine coefficients b_k = (2/pi) int_0^pi T(a) sin(k a) da of a piecewise
// linear T, exactly.
std::vector<double> sine_coefficients(const std::vector<Knot>& knots, int degree) {
  std::vector<double> b(static_cast<std::size_t>(degree), 0.0);
  for (int k = 1; k <= degree; ++k) {
    const double kk = k;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      const auto [a0, t0] = knots[i];
      const auto [a1, t1] = knots[i + 1];
      if (a1 <= a0) continue;
      const double s = (t1 - t0) / (a1 - a0);
      acc += -(t1 * std::cos(kk * a1) - t0 * std::cos(kk * a0)) / kk +
             s * (std::sin(kk * a1) - std::sin(kk * a0)) / (kk * kk);
    }
    b[static_cast<std::size_t>(k - 1)] = 2.0 / kPi * acc;
  }
  return b;
}

double second_derivative_bound(std::span<const double> c) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    s += kk * kk * std::abs(c[k]);
  }
  return s;
}

}  // namespace

PerturbationFn PerturbationFn::from_coefficients(std::vector<double> coeffs) {
  PerturbationFn out;
  out.g = ClassFunction(std::move(coeffs));
  out.derivative_bound = out.g.derivative_bound();
  double sup = 0.0;
  for (double c : out.g.coefficients()) sup += std::abs(c);
  out.sup_norm = sup;
  return out;
}

GraphCertification certify_graph(const ClassFunction& g, const Tube& tube,
                                 int samples) {
  if (samples < 1) throw InvalidArgument("certification needs at least one sample");
  GraphCertification cert;
  cert.samples = samples;
  cert.margin = tube.epsilon / 4.0;
  cert.min_clearance = std::numeric_limits<double>::infinity();
  cert.max_tube_distance = 0.0;

  const auto c = g.coefficients();
  const double lip = g.derivative_bound();
  const double lip2 = second_derivative_bound(c);
  const double h = kTwoPi / samples;
  std::vector<PillowcasePoint> corners;
  for (const auto& z : tube.arc.polyline()) {
    if (std::abs(z.beta) < kPi) corners.push_back(canonicalize(z));
  }
  std::vector<double> corner_best(corners.size(), std::numeric_limits<double>::infinity());
  // Sample j covers [a_j - h/2, a_j + h/2]; on it |g'| <= |g'(a_j)| + lip2 h/2.
  for (int j = 0; j < samples; ++j) {
    const double a = -kPi + (j + 0.5) * h;
    double gv = 0.0;
    double gp = 0.0;
    eval_series(c, a, gv, gp);
    const double local = std::min(lip, std::abs(gp) + lip2 * h / 2.0);
    const double slack = h / 2.0 * local;
    const double beta = -gv;
    const double clearance = std::abs(wrap_angle(beta - kPi)) - slack;
    const PillowcasePoint x = canonicalize(a, beta);
    const double reach = tube.arc.distance(x) + std::hypot(h / 2.0, slack);
    for (std::size_t i = 0; i < corners.size(); ++i) {
      corner_best[i] = std::min(corner_best[i], pc_distance(corners[i], x));
    }
    cert.min_clearance = std::min(cert.min_clearance, clearance);
    cert.max_tube_distance = std::max(cert.max_tube_distance, reach);
  }
  for (double d : corner_best) cert.max_vertex_distance = std::max(cert.max_vertex_distance, d);
  cert.passed = cert.min_clearance >= cert.margin && cert.max_tube_distance < tube.epsilon &&
                cert.max_vertex_distance < tube.epsilon;
  return cert;
}

PerturbationFn construct_g(const Tube& tube, const PerturbationOptions& opt) {
  if (opt.max_degree < 1) throw InvalidArgument("maximum degree must be positive");
  if (!(tube.epsilon > 0.0)) throw InvalidArgument("tube radius must be positive");
  const Slope& s = tube.arc.slope();
  const double r = s.value();
  const double mu = tube.epsilon / 4.0;
  const double delta = std::min(tube.epsilon / 2.0, 0.01 * kPi);
  // Clamping at pi - 2 mu leaves mu of room for truncation error; smoothing
  // by a positive kernel cannot overshoot the clamp.
  const double level = kPi - 2.0 * mu;
  if (level <= 0.0) throw Infeasible("tube radius too large for a graph inside U*");
  const auto knots = target_knots(r, delta, level);
  const auto exact = sine_coefficients(knots, opt.max_degree);

  std::vector<int> degrees;
  for (int d : {16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512}) {
    if (d < opt.max_degree) degrees.push_back(d);
  }
  degrees.push_back(opt.max_degree);

  GraphCertification last;
  for (int degree : degrees) {
    // Gaussian smoothing of width sigma multiplies b_k by exp(-k^2 sigma^2/2);
    // sigma = 3.5/K makes the discarded tail negligible.
    const double sigma = 3.5 / degree;
    std::vector<double> coeffs(static_cast<std::size_t>(degree));
    for (int k = 1; k <= degree; ++k) {
      const double damp = std::exp(-0.5 * k * k * sigma * sigma);
      coeffs[static_cast<std::size_t>(k - 1)] = -exact[static_cast<std::size_t>(k - 1)] * damp;
    }
    ClassFunction g(coeffs);
    last = certify_graph(g, tube, opt.certification_samples);
    if (!last.passed) continue;
    PerturbationFn out = PerturbationFn::from_coefficients(std::move(coeffs));
    out.target = tube;
    out.certification = last;
    const double h = kTwoPi / opt.certification_samples;
    double sup = 0.0;
    for (int j = 0; j < opt.certification_samples; ++j) {
      sup = std::max(sup, std::abs(out.g.g(-kPi + (j + 0.5) * h)));
    }
    out.sup_norm = sup;
    return out;
  }
  throw Infeasible("no sine series up to degree " + std::to_string(opt.max_degree) +
                   " certifies inside the tube (clearance " +
                   std::to_string(last.min_clearance) + ", reach " +
                   std::to_string(last.max_tube_distance) + ")");
}

EmptinessResult perturbed_variety_is_empty(const PillowcaseImage& img,
                                           const std::vector<FillingLine>& reducibles,
                                           const PerturbationFn& g, double tol) {
  for (const auto& line : reducibles) {
    if (line.twisted != img.twisted) {
      throw ConventionMismatch("reducible line and image use different twist conventions");
    }
  }
  EmptinessResult out;
  for (const auto& s : img.samples) {
    const double a = s.boundary.alpha;
    const double res = std::abs(wrap_angle(s.boundary.beta + g.g.g(a)));
    if (res <= tol) {
      out.empty = false;
      out.witness = Witness{s.raw_boundary, s.boundary, "image", res};
      return out;
    }
  }

  const double lip_g = g.g.derivative_bound();
  for (const auto& line : reducibles) {
    const double lip = std::abs(static_cast<double>(line.p)) +
                       std::abs(static_cast<double>(line.q)) * lip_g;
    auto h = [&](double a) { return line.residual(a, -g.g.g(a)); };
    struct Interval {
      double lo, hi;
    };
    std::vector<Interval> stack;
    constexpr int kInitial = 4096;
    for (int i = kInitial - 1; i >= 0; --i) {
      stack.push_back({-kPi + kTwoPi * i / kInitial, -kPi + kTwoPi * (i + 1) / kInitial});
    }
    while (!stack.empty()) {
      const Interval iv = stack.back();
      stack.pop_back();
      const double m = 0.5 * (iv.lo + iv.hi);
      const double v = h(m);
      const bool found = v <= tol;
      const bool undecided = !found && iv.hi - iv.lo < 1e-13;
      if (found || undecided) {
        const AnglePair raw{m, -g.g.g(m)};
        out.empty = false;
        out.witness = Witness{raw, canonicalize(raw), "reducible", v};
        return out;
      }
      if (v - lip * (iv.hi - iv.lo) / 2.0 > tol) continue;
      stack.push_back({m, iv.hi});
      stack.push_back({iv.lo, m});
    }
  }
  return out;
}

ClassFunction phi_from_g(const PerturbationFn& g) {
  const auto c = g.g.coefficients();
  return classfn_from_g(std::vector<double>(c.begin(), c.end()));
}

}  // namespace psurg
