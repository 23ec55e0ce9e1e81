#include "psurg/rep_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "levenberg_marquardt.hpp"
#include "psurg/errors.hpp"

namespace psurg {

namespace {

// Unnormalized quaternion for derivative bookkeeping.
struct Q {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

Q mul(const Q& a, const Q& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Q conj(const Q& a) { return {a.w, -a.x, -a.y, -a.z}; }


std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Relator system in one of two charts:
//  - conjugate: generator i is cos(alpha) + sin(alpha) v_i/|v_i|, 3 params each,
//    plus alpha itself when a line constraint frees it;
//  - free: generator i is q_i/|q_i|, 4 params each, with a row pinning the
//    meridian's real part to cos(alpha) unless a line constraint is present.
class RepSystem {
 public:
  RepSystem(const KnotPresentation& k, double alpha, const FillingLine* line,
            double line_target)
      : k_(k),
        conjugate_(k.conjugate_generators),
        alpha_(alpha),
        line_(line),
        line_target_(line_target) {
    per_ = conjugate_ ? 3 : 4;
    n_params_ = per_ * k.n_generators + (conjugate_ && line_ ? 1 : 0);
    n_rows_ = 4 * static_cast<int>(k.relators.size());
    if (line_ || !conjugate_) n_rows_ += 1;
  }

  int n_params() const { return n_params_; }

  double alpha_of(const Eigen::VectorXd& x) const {
    return conjugate_ && line_ ? x(n_params_ - 1) : alpha_;
  }

  void project(Eigen::VectorXd& x) const {
    for (int g = 0; g < k_.n_generators; ++g) {
      auto seg = x.segment(per_ * g, per_);
      const double n = seg.norm();
      if (n == 0.0 || !std::isfinite(n)) {
        seg.setZero();
        seg(per_ - 1) = 1.0;
      } else {
        seg /= n;
      }
    }
  }

  std::vector<SU2Element> elements(const Eigen::VectorXd& x) const {
    std::vector<SU2Element> out;
    out.reserve(static_cast<std::size_t>(k_.n_generators));
    const double a = alpha_of(x);
    for (int g = 0; g < k_.n_generators; ++g) {
      const auto seg = x.segment(per_ * g, per_);
      if (conjugate_) {
        out.push_back(SU2Element::from_axis_angle({seg(0), seg(1), seg(2)}, a));
      } else {
        out.emplace_back(seg(0), seg(1), seg(2), seg(3));
      }
    }
    return out;
  }

  Eigen::VectorXd params_from(const std::vector<SU2Element>& a) const {
    Eigen::VectorXd x(n_params_);
    for (int g = 0; g < k_.n_generators; ++g) {
      const auto& u = a[static_cast<std::size_t>(g)];
      if (conjugate_) {
        Vec3 v = u.vec();
        if (norm(v) == 0.0) v = {0.0, 0.0, 1.0};
        x.segment(3 * g, 3) << v[0], v[1], v[2];
      } else {
        x.segment(4 * g, 4) << u.w(), u.x(), u.y(), u.z();
      }
    }
    if (conjugate_ && line_) x(n_params_ - 1) = alpha_;
    project(x);
    return x;
  }

  void eval(const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd& J) const {
    r.setZero(n_rows_);
    J.setZero(n_rows_, n_params_);
    const double a = alpha_of(x);
    const double ca = std::cos(a), sa = std::sin(a);
    const int ng = k_.n_generators;
    // Element values and their parameter derivatives.
    std::vector<Q> e(static_cast<std::size_t>(ng));
    std::vector<std::array<Q, 4>> de(static_cast<std::size_t>(ng));
    std::vector<Q> dalpha(static_cast<std::size_t>(ng));
    for (int g = 0; g < ng; ++g) {
      const auto seg = x.segment(per_ * g, per_);
      const double n = seg.norm();
      const auto gi = static_cast<std::size_t>(g);
      if (conjugate_) {
        const double u[3] = {seg(0) / n, seg(1) / n, seg(2) / n};
        e[gi] = {ca, sa * u[0], sa * u[1], sa * u[2]};
        for (int c = 0; c < 3; ++c) {
          double d[3];
          for (int j = 0; j < 3; ++j) d[j] = ((j == c ? 1.0 : 0.0) - u[j] * u[c]) / n;
          de[gi][static_cast<std::size_t>(c)] = {0.0, sa * d[0], sa * d[1], sa * d[2]};
        }
        dalpha[gi] = {-sa, ca * u[0], ca * u[1], ca * u[2]};
      } else {
        const double u[4] = {seg(0) / n, seg(1) / n, seg(2) / n, seg(3) / n};
        e[gi] = {u[0], u[1], u[2], u[3]};
        for (int c = 0; c < 4; ++c) {
          double d[4];
          for (int j = 0; j < 4; ++j) d[j] = ((j == c ? 1.0 : 0.0) - u[j] * u[c]) / n;
          de[gi][static_cast<std::size_t>(c)] = {d[0], d[1], d[2], d[3]};
        }
      }
    }
    const bool alpha_col = conjugate_ && line_;
    int row = 0;
    for (const auto& rel : k_.relators) {
      const Q val = word_with_jacobian(rel, e, de, dalpha, alpha_col, J, row);
      r(row + 0) = val.w - 1.0;
      r(row + 1) = val.x;
      r(row + 2) = val.y;
      r(row + 3) = val.z;
      row += 4;
    }
    if (!conjugate_ && !line_) {
      Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(4, n_params_);
      const Q val = word_with_jacobian(k_.meridian, e, de, dalpha, false, jm, 0);
      r(row) = val.w - std::cos(alpha_);
      J.row(row) = jm.row(0);
      ++row;
    }
    if (line_) {
      r(row) = line_value(x);
      const double h = 1e-7;
      Eigen::VectorXd xp = x;
      for (int c = 0; c < n_params_; ++c) {
        const double keep = xp(c);
        xp(c) = keep + h;
        const double fp = line_value(xp);
        xp(c) = keep - h;
        const double fm = line_value(xp);
        xp(c) = keep;
        J(row, c) = wrap_angle(fp - fm) / (2.0 * h);
      }
    }
  }

  // Signed line residual wrap(p alpha + q beta - target) from the meridian
  // and longitude holonomies.
  double line_value(const Eigen::VectorXd& x) const {
    const auto els = elements(x);
    const SU2Element m = evaluate_word(k_.meridian, els);
    const SU2Element l = evaluate_word(k_.longitude, els);
    const Vec3 mv = m.vec();
    const double mn = norm(mv);
    const double a = std::atan2(mn, m.w());
    double b = 0.0;
    if (mn > 0.0) {
      const Vec3 n{mv[0] / mn, mv[1] / mn, mv[2] / mn};
      b = std::atan2(dot(l.vec(), n), l.w());
    } else {
      b = std::atan2(norm(l.vec()), l.w());
    }
    return wrap_angle(static_cast<double>(line_->p) * a +
                      static_cast<double>(line_->q) * b - line_target_);
  }

 private:
  Q word_with_jacobian(const Word& w, const std::vector<Q>& e,
                       const std::vector<std::array<Q, 4>>& de,
                       const std::vector<Q>& dalpha, bool alpha_col,
                       Eigen::MatrixXd& J, int row) const {
    const auto& L = w.letters();
    const std::size_t m = L.size();
    std::vector<Q> f(m), prefix(m + 1), suffix(m + 1);
    for (std::size_t j = 0; j < m; ++j) {
      const Q& u = e[static_cast<std::size_t>(Word::generator_of(L[j]))];
      f[j] = L[j] > 0 ? u : conj(u);
    }
    prefix[0] = Q{};
    for (std::size_t j = 0; j < m; ++j) prefix[j + 1] = mul(prefix[j], f[j]);
    suffix[m] = Q{};
    for (std::size_t j = m; j-- > 0;) suffix[j] = mul(f[j], suffix[j + 1]);
    for (std::size_t j = 0; j < m; ++j) {
      const int g = Word::generator_of(L[j]);
      const auto gi = static_cast<std::size_t>(g);
      for (int c = 0; c < per_; ++c) {
        Q d = de[gi][static_cast<std::size_t>(c)];
        if (L[j] < 0) d = conj(d);
        const Q t = mul(mul(prefix[j], d), suffix[j + 1]);
        const int col = per_ * g + c;
        J(row + 0, col) += t.w;
        J(row + 1, col) += t.x;
        J(row + 2, col) += t.y;
        J(row + 3, col) += t.z;
      }
      if (alpha_col) {
        Q d = dalpha[gi];
        if (L[j] < 0) d = conj(d);
        const Q t = mul(mul(prefix[j], d), suffix[j + 1]);
        const int col = n_params_ - 1;
        J(row + 0, col) += t.w;
        J(row + 1, col) += t.x;
        J(row + 2, col) += t.y;
        J(row + 3, col) += t.z;
      }
    }
    return prefix[m];
  }

  const KnotPresentation& k_;
  bool conjugate_;
  double alpha_;
  const FillingLine* line_;
  double line_target_;
  int per_ = 3;
  int n_params_ = 0;
  int n_rows_ = 0;
};

SU2Element rotation_to_z(const Vec3& n) {
  // Half-way quaternion taking unit n to +z.
  const Vec3 z{0.0, 0.0, 1.0};
  const double c = dot(n, z);
  if (c < -1.0 + 1e-15) return SU2Element(0.0, 1.0, 0.0, 0.0);
  const Vec3 ax = cross(n, z);
  return SU2Element(1.0 + c, ax[0], ax[1], ax[2]);
}

std::vector<SU2Element> gauge_fix(std::vector<SU2Element> a) {
  auto conj_all = [&](const SU2Element& g) {
    for (auto& u : a) u = u.conjugated_by(g);
  };
  std::size_t first = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (norm(a[i].vec()) > 1e-9) {
      first = i;
      break;
    }
  }
  if (first == a.size()) return a;
  Vec3 n = a[first].vec();
  const double nn = norm(n);
  conj_all(rotation_to_z({n[0] / nn, n[1] / nn, n[2] / nn}));
  // Second axis: first generator clearly off the z-axis, else the farthest.
  std::size_t second = a.size();
  double best = 0.0;
  std::size_t best_i = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec3 v = a[i].vec();
    const double vn = norm(v);
    if (vn <= 1e-9) continue;
    const double perp = std::hypot(v[0], v[1]) / vn;
    if (perp > 1e-4) {
      second = i;
      break;
    }
    if (perp > best) {
      best = perp;
      best_i = i;
    }
  }
  if (second == a.size()) second = best_i;
  if (second == a.size()) return a;
  const Vec3 v = a[second].vec();
  if (std::hypot(v[0], v[1]) == 0.0) return a;
  const double psi = std::atan2(v[1], v[0]);
  conj_all(SU2Element(std::cos(-psi / 2.0), 0.0, 0.0, std::sin(-psi / 2.0)));
  return a;
}

double assignment_distance(const RepPoint& a, const RepPoint& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.assignment.size(); ++i) {
    d = std::max(d, distance(a.assignment[i], b.assignment[i]));
  }
  return d;
}

bool insert_unique(std::vector<RepPoint>& pts, RepPoint p) {
  for (const auto& q : pts) {
    if (assignment_distance(q, p) <= 1e-7) return false;
  }
  pts.push_back(std::move(p));
  return true;
}

bool accept(const RepPoint& p, const SolverOptions& opt) {
  return p.relator_residual <= opt.tol_rep && p.irreducible;
}

std::optional<RepPoint> run_from(const KnotPresentation& k, const RepSystem& sys,
                                 Eigen::VectorXd x0, const SolverOptions& opt) {
  detail::LMOptions lm;
  lm.max_iterations = opt.max_iterations;
  auto res = detail::levenberg_marquardt(
      [&](const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd& J) {
        sys.eval(x, r, J);
      },
      [&](Eigen::VectorXd& x) { sys.project(x); }, std::move(x0), lm);
  if (!(res.residual < 1e-6)) return std::nullopt;
  return measure_representation(k, sys.elements(res.x), opt);
}

Eigen::VectorXd random_start(const RepSystem& sys, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(sys.n_params());
  for (int i = 0; i < x.size(); ++i) x(i) = normal(rng);
  return x;
}

bool sample_less(const RepPoint& a, const RepPoint& b) {
  if (a.boundary.alpha != b.boundary.alpha) return a.boundary.alpha < b.boundary.alpha;
  return a.boundary.beta < b.boundary.beta;
}

}  // namespace

std::optional<RepPoint> measure_representation(const KnotPresentation& k,
                                               std::vector<SU2Element> assignment,
                                               const SolverOptions& opt) {
  RepPoint p;
  p.assignment = gauge_fix(std::move(assignment));
  for (const auto& rel : k.relators) {
    p.relator_residual = std::max(
        p.relator_residual, distance(evaluate_word(rel, p.assignment), SU2Element()));
  }
  for (std::size_t i = 0; i < p.assignment.size(); ++i) {
    for (std::size_t j = i + 1; j < p.assignment.size(); ++j) {
      p.commutator_gap =
          std::max(p.commutator_gap, commutator_norm(p.assignment[i], p.assignment[j]));
    }
  }
  p.irreducible = p.commutator_gap > opt.tol_irr;
  const SU2Element m = evaluate_word(k.meridian, p.assignment);
  const SU2Element l = evaluate_word(k.longitude, p.assignment);
  p.peripheral_gap = commutator_norm(m, l);
  if (p.peripheral_gap > opt.tol_commute) return std::nullopt;
  p.raw_boundary = commuting_pair_angles(m, l, opt.tol_commute);
  p.boundary = canonicalize(p.raw_boundary);
  return p;
}

std::optional<RepPoint> refine_at_alpha(const KnotPresentation& k, double alpha,
                                        const std::vector<SU2Element>& start,
                                        const SolverOptions& opt) {
  RepSystem sys(k, alpha, nullptr, 0.0);
  auto p = run_from(k, sys, sys.params_from(start), opt);
  if (p && accept(*p, opt)) return p;
  return std::nullopt;
}

std::vector<RepPoint> solve_at_alpha(const KnotPresentation& k, double alpha,
                                     int restarts, std::uint64_t seed,
                                     const SolverOptions& opt) {
  std::vector<RepPoint> out;
  if (k.relators.empty()) return out;
  if (k.conjugate_generators && std::abs(std::sin(alpha)) < 1e-12) return out;
  RepSystem sys(k, alpha, nullptr, 0.0);
  std::mt19937_64 rng(splitmix64(seed));
  for (int r = 0; r < restarts; ++r) {
    auto p = run_from(k, sys, random_start(sys, rng), opt);
    if (p && accept(*p, opt)) insert_unique(out, std::move(*p));
  }
  std::sort(out.begin(), out.end(), sample_less);
  return out;
}

std::vector<double> alpha_grid(int grid) {
  if (grid < 2) throw InvalidArgument("alpha grid needs at least 2 points");
  std::vector<double> a(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    a[static_cast<std::size_t>(i)] = kPi * static_cast<double>(i + 1) / static_cast<double>(grid + 1);
  }
  return a;
}

int grid_for_spacing(double step) {
  if (!(step > 0.0)) throw InvalidArgument("grid spacing must be positive");
  return std::max(2, static_cast<int>(std::ceil(kPi / step)) - 1);
}

PillowcaseImage pillowcase_image(const KnotPresentation& k, int grid,
                                 std::uint64_t seed, const SolverOptions& opt) {
  const auto alphas = alpha_grid(grid);
  PillowcaseImage img;
  img.knot = k.name;
  img.knot_hash = k.hash();
  img.grid = grid;
  img.seed = seed;
  img.options = opt;
  if (k.relators.empty()) return img;

  // Independent multi-start at every grid point; seeds depend only on the
  // grid index, so the split across workers does not affect the result.
  std::vector<std::vector<RepPoint>> sols(alphas.size());
  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(alphas.size()));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < alphas.size(); i += workers) {
      sols[i] = solve_at_alpha(k, alphas[i], opt.image_restarts,
                               seed ^ splitmix64(static_cast<std::uint64_t>(i)), opt);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  // Continuation sweeps: carry every solution to its neighbours.
  auto carry = [&](std::size_t from, std::size_t to) {
    bool added = false;
    for (const auto& p : sols[from]) {
      if (auto q = refine_at_alpha(k, alphas[to], p.assignment, opt)) {
        added |= insert_unique(sols[to], std::move(*q));
      }
    }
    return added;
  };
  for (int sweep = 0; sweep < 4; ++sweep) {
    bool changed = false;
    for (std::size_t i = 1; i < alphas.size(); ++i) changed |= carry(i - 1, i);
    for (std::size_t i = alphas.size() - 1; i-- > 0;) changed |= carry(i + 1, i);
    if (!changed) break;
  }

  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i > 0 && sols[i].size() != sols[i - 1].size()) {
      img.endpoint_alphas.push_back(0.5 * (alphas[i] + alphas[i - 1]));
    }
    std::sort(sols[i].begin(), sols[i].end(), sample_less);
    for (auto& p : sols[i]) img.samples.push_back(std::move(p));
  }
  return img;
}

PillowcaseImage to_twisted(const PillowcaseImage& img) {
  PillowcaseImage out = img;
  out.twisted = !img.twisted;
  for (auto& s : out.samples) {
    s.raw_boundary.beta += kPi;
    s.boundary = canonicalize(s.raw_boundary);
  }
  std::sort(out.samples.begin(), out.samples.end(), sample_less);
  return out;
}

FillingLine abelian_locus(const KnotPresentation&) { return reducible_locus(false); }

std::optional<RepPoint> polish_on_line(const KnotPresentation& k,
                                       const std::vector<SU2Element>& start,
                                       const FillingLine& line,
                                       const SolverOptions& opt) {
  if (k.relators.empty()) return std::nullopt;
  const SU2Element m = evaluate_word(k.meridian, start);
  const double alpha = m.angle();
  std::optional<RepPoint> best;
  // Try both signs of the line constant; negation maps one to the other.
  for (double target : {line.c, -line.c}) {
    RepSystem sys(k, alpha, &line, target);
    auto p = run_from(k, sys, sys.params_from(start), opt);
    if (!p || !accept(*p, opt)) continue;
    if (line.residual(p->raw_boundary.alpha, p->raw_boundary.beta) > opt.tol_rep) continue;
    if (!best || line.residual(p->boundary) < line.residual(best->boundary)) best = std::move(p);
    if (line.c == 0.0 || line.c == kPi) break;
  }
  return best;
}

std::vector<RepPoint> intersect_with_line(const KnotPresentation& k,
                                          const PillowcaseImage& img,
                                          const FillingLine& line, double tol,
                                          const SolverOptions& opt) {
  std::vector<RepPoint> out;
  const auto& s = img.samples;
  if (s.empty()) return out;
  // Work in the untwisted convention of the presentation: twisted images and
  // lines are shifted by (0, pi).
  const double shift = img.twisted ? kPi : 0.0;
  const FillingLine ul(line.p, line.q,
                       line.twisted ? line.c - static_cast<double>(line.q) * kPi : line.c,
                       false);
  auto signed_h = [&](const RepPoint& p, double target) {
    return wrap_angle(static_cast<double>(ul.p) * p.raw_boundary.alpha +
                      static_cast<double>(ul.q) * (p.raw_boundary.beta - shift) - target);
  };
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (ul.residual(s[i].raw_boundary.alpha, s[i].raw_boundary.beta - shift) <= tol) {
      candidates.push_back(i);
    }
  }
  // Link each sample to its nearest neighbour at the next grid value and keep
  // pairs that straddle the line.
  std::size_t begin = 0;
  while (begin < s.size()) {
    std::size_t end = begin;
    while (end < s.size() && s[end].boundary.alpha == s[begin].boundary.alpha) ++end;
    std::size_t next_end = end;
    while (next_end < s.size() && s[next_end].boundary.alpha == s[end].boundary.alpha) ++next_end;
    for (std::size_t i = begin; i < end; ++i) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t bj = s.size();
      for (std::size_t j = end; j < next_end; ++j) {
        const double d = assignment_distance(s[i], s[j]);
        if (d < best) {
          best = d;
          bj = j;
        }
      }
      if (bj == s.size() || best > 0.5) continue;
      for (double target : {ul.c, -ul.c}) {
        const double h0 = signed_h(s[i], target);
        const double h1 = signed_h(s[bj], target);
        if ((h0 <= 0.0) != (h1 <= 0.0) && std::abs(h0 - h1) < kPi) {
          candidates.push_back(std::abs(h0) <= std::abs(h1) ? i : bj);
        }
      }
    }
    begin = end;
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::size_t i : candidates) {
    if (s[i].assignment.empty()) continue;
    if (auto p = polish_on_line(k, s[i].assignment, ul, opt)) {
      if (img.twisted) {
        p->raw_boundary.beta += kPi;
        p->boundary = canonicalize(p->raw_boundary);
      }
      insert_unique(out, std::move(*p));
    }
  }
  std::sort(out.begin(), out.end(), sample_less);
  return out;
}

std::vector<PillowcasePoint> boundary_points(const PillowcaseImage& img) {
  std::vector<PillowcasePoint> out;
  out.reserve(img.samples.size());
  for (const auto& s : img.samples) out.push_back(s.boundary);
  return out;
}

double hausdorff(const std::vector<PillowcasePoint>& a,
                 const std::vector<PillowcasePoint>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const auto& x, const auto& y) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : y) {
        best = std::min(best, pc_distance(p, q));
        if (best <= worst) break;
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace psurg
