#include "psurg/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "psurg/errors.hpp"

namespace psurg {

namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double max_relator_residual(const KnotPresentation& k, const std::vector<SU2Element>& a) {
  double r = 0.0;
  for (const auto& rel : k.relators) {
    r = std::max(r, distance(evaluate_word(rel, a), SU2Element()));
  }
  return r;
}

double max_commutator_gap(const std::vector<SU2Element>& a) {
  double g = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) g = std::max(g, commutator_norm(a[i], a[j]));
  }
  return g;
}

std::vector<FillingLine> candidates_for(const Slope& s) {
  std::vector<FillingLine> out{filling_lines(s, false)};
  const FillingLine shifted(s.p(), s.q(), static_cast<double>(s.q()) * kPi, false);
  if (shifted.c != out.front().c) out.push_back(shifted);
  return out;
}

// Fills a certificate for `line` from an already computed image of `used`.
void search(const KnotPresentation& used, const PillowcaseImage& img,
            const FillingLine& line, const CertifyOptions& opt, Certificate& c) {
  c.line = line;
  c.twisted = line.twisted;
  c.meta.seed = img.seed;
  c.meta.grid = img.grid;
  c.meta.image_restarts = opt.solver.image_restarts;
  c.meta.tol_rep = opt.solver.tol_rep;
  c.meta.tol_irr = opt.solver.tol_irr;
  c.meta.image_samples = img.samples.size();
  const auto hits = intersect_with_line(used, img, line, opt.candidate_tol, opt.solver);
  c.meta.solutions_on_line = hits.size();
  for (const auto& h : hits) {
    const double lr = line.residual(h.raw_boundary.alpha, h.raw_boundary.beta);
    if (h.relator_residual <= kLineTol && lr <= kLineTol && h.commutator_gap > kIrreducibleGap) {
      c.rep = h;
      c.residuals = {h.relator_residual, lr, h.commutator_gap};
      c.verdict = Verdict::Found;
      return;
    }
  }
  c.verdict = Verdict::NotFound;
  c.notes.push_back("no irreducible representation found on the line; this is a "
                    "sampled search (grid " + std::to_string(img.grid) + ", " +
                    std::to_string(opt.solver.image_restarts) +
                    " restarts per grid point), not a proof of nonexistence");
}

Certificate blank(const KnotPresentation& k, const Slope& s) {
  Certificate c;
  c.knot_name = k.name;
  c.knot_hash = k.hash();
  c.slope = s;
  c.candidate_lines = candidates_for(s);
  return c;
}

PillowcaseImage image_for(const KnotPresentation& k, bool twisted, std::uint64_t seed,
                          const CertifyOptions& opt) {
  auto img = pillowcase_image(k, opt.grid, seed, opt.solver);
  return twisted ? to_twisted(img) : img;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "Found";
    case Verdict::NotFound: return "NotFound";
    case Verdict::OutOfScope: return "OutOfScope";
  }
  return "?";
}

std::string to_string(PropositionStatus s) {
  switch (s) {
    case PropositionStatus::Empty: return "empty";
    case PropositionStatus::HypothesisFails: return "hypothesis-fails";
    case PropositionStatus::NotEmpty: return "not-empty";
    case PropositionStatus::Infeasible: return "infeasible";
  }
  return "?";
}

Certificate certify_on_line(const KnotPresentation& k, const Slope& slope, bool twisted,
                            std::uint64_t seed, const CertifyOptions& opt) {
  Certificate c = blank(k, slope);
  search(k, image_for(k, twisted, seed, opt), filling_lines(slope, twisted), opt, c);
  if (slope == Slope(1, 0)) c.notes.push_back("meridian filling");
  return c;
}

Certificate certify_surgery(const KnotPresentation& k, long p, long q, std::uint64_t seed,
                            const CertifyOptions& opt) {
  const Slope s = Slope::from_rational(p, q);
  if (s == Slope(1, 0)) {
    throw InvalidSlope("slope 1/0 is the meridian filling and is not a surgery input");
  }
  Certificate c = blank(k, s);
  const KnotPresentation used = s.p() < 0 ? mirror(k) : k;
  c.mirrored = s.p() < 0;
  const Slope on_used(std::abs(s.p()), s.q());
  search(used, image_for(used, false, seed, opt), filling_lines(on_used, false), opt, c);

  const double r = std::abs(s.value());
  c.notes.insert(c.notes.begin(), r <= 2.0 ? "InTheoremRange: |r| <= 2"
                                           : "outside theorem range: |r| > 2");
  if (s.p() == 0) c.notes.push_back("r = 0: longitude line b = 0, an independent numerical check");
  if (c.mirrored) c.notes.push_back("negative slope: searched the mirror image with -r");
  return c;
}

bool verify_certificate(const Certificate& c, const KnotPresentation& k) {
  if (c.knot_hash != k.hash()) {
    throw PresentationMismatch("certificate is for presentation " + c.knot_hash +
                               ", got " + k.hash());
  }
  if (!c.rep) return false;
  const KnotPresentation used = c.mirrored ? mirror(k) : k;
  const auto& a = c.rep->assignment;
  if (static_cast<int>(a.size()) != used.n_generators) return false;

  const long expect_p = c.mirrored ? -c.slope.p() : c.slope.p();
  const FillingLine expect = filling_lines(Slope(expect_p, c.slope.q()), c.twisted);
  if (c.line.p != expect.p || c.line.q != expect.q || c.line.c != expect.c ||
      c.line.twisted != c.twisted) {
    return false;
  }

  if (!(max_relator_residual(used, a) <= kLineTol)) return false;
  if (!(max_commutator_gap(a) > kIrreducibleGap)) return false;
  AnglePair ab;
  try {
    ab = commuting_pair_angles(evaluate_word(used.meridian, a),
                               evaluate_word(used.longitude, a));
  } catch (const NonCommuting&) {
    return false;
  }
  if (c.twisted) ab.beta += kPi;
  return c.line.residual(ab.alpha, ab.beta) <= kLineTol;
}

PropositionReport proposition_pipeline(const KnotPresentation& k, const Slope& slope,
                                       double epsilon, std::uint64_t seed,
                                       const PropositionOptions& opt) {
  if (!(slope.p() > 0 && slope.q() > 0 && slope.p() <= 2 * slope.q())) {
    throw SlopeOutOfRange("the pipeline needs p, q > 0 and p/q <= 2");
  }
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  PropositionReport rep;
  rep.knot_name = k.name;
  rep.knot_hash = k.hash();
  rep.slope = slope;
  rep.epsilon = epsilon;
  rep.seed = seed;

  const auto& copt = opt.certify;
  const auto plain = pillowcase_image(k, copt.grid, seed, copt.solver);
  const auto twisted = to_twisted(plain);

  Certificate meridian = blank(k, Slope(1, 0));
  search(k, plain, filling_lines(Slope(1, 0), false), copt, meridian);
  meridian.notes.push_back("meridian filling");
  rep.hypothesis.push_back(std::move(meridian));

  const FillingLine zero(slope.p(), slope.q(), 0.0, true);
  const FillingLine qpi = filling_lines(slope, true);
  std::vector<FillingLine> lines{zero};
  if (qpi.c != zero.c) {
    lines.push_back(qpi);
  } else {
    rep.notes.push_back("q even: the twisted lines = 0 and = q pi coincide");
  }
  for (const auto& line : lines) {
    Certificate c = blank(k, slope);
    search(k, twisted, line, copt, c);
    rep.hypothesis.push_back(std::move(c));
  }
  rep.hypothesis_holds = std::none_of(rep.hypothesis.begin(), rep.hypothesis.end(),
                                      [](const Certificate& c) {
                                        return c.verdict == Verdict::Found;
                                      });
  if (!rep.hypothesis_holds) {
    rep.status = PropositionStatus::HypothesisFails;
    rep.notes.push_back("an irreducible representation exists on a hypothesis line; "
                        "the perturbation argument does not apply");
    return rep;
  }

  const std::vector<FillingLine> reducibles{reducible_locus(true)};
  auto attempt = [&](double eps, std::optional<PerturbationFn>& g,
                     std::optional<EmptinessResult>& e) {
    try {
      g = construct_g(Tube{ArcS(slope), eps}, opt.perturbation);
    } catch (const Infeasible&) {
      return false;
    }
    e = perturbed_variety_is_empty(twisted, reducibles, *g);
    return e->empty;
  };

  try {
    rep.g = construct_g(Tube{ArcS(slope), epsilon}, opt.perturbation);
  } catch (const Infeasible& err) {
    rep.status = PropositionStatus::Infeasible;
    rep.notes.push_back(err.what());
    return rep;
  }
  rep.phi = phi_from_g(*rep.g);
  rep.emptiness = perturbed_variety_is_empty(twisted, reducibles, *rep.g);
  rep.status = rep.emptiness->empty ? PropositionStatus::Empty : PropositionStatus::NotEmpty;
  if (rep.status != PropositionStatus::Empty || opt.bisection_steps <= 0) return rep;

  // Largest certified epsilon: bisection between the given value and the
  // ceiling, assuming success is monotone in between.
  std::optional<PerturbationFn> g;
  std::optional<EmptinessResult> e;
  double lo = epsilon;
  double hi = std::max(epsilon, opt.epsilon_ceiling);
  if (attempt(hi, g, e)) {
    lo = hi;
  } else {
    for (int i = 0; i < opt.bisection_steps; ++i) {
      const double mid = 0.5 * (lo + hi);
      (attempt(mid, g, e) ? lo : hi) = mid;
    }
  }
  rep.max_certified_epsilon = lo;
  rep.notes.push_back("largest certified epsilon searched up to " +
                      fmt("%.6g", opt.epsilon_ceiling) + " by " +
                      std::to_string(opt.bisection_steps) + " bisection steps");
  return rep;
}

}  // namespace psurg
