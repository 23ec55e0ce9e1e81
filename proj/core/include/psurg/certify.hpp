#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psurg/knot.hpp"
#include "psurg/perturbation.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/rep_solver.hpp"

namespace psurg {

enum class Verdict { Found, NotFound, OutOfScope };
std::string to_string(Verdict v);

inline constexpr int kCertificateVersion = 1;
inline constexpr double kLineTol = 1e-9;
inline constexpr double kIrreducibleGap = 1e-6;

struct CertifyOptions {
  int grid = 240;              // alpha grid for the pillowcase image
  double candidate_tol = 0.05;  // samples this close to the line are polished
  SolverOptions solver;
};

struct Certificate {
  int version = kCertificateVersion;
  std::string knot_name;
  std::string knot_hash;  // of the presentation passed in, before mirroring
  Slope slope{1, 0};      // as requested
  bool twisted = false;
  // Negative slopes are handled on the mirror with the slope negated; `line`
  // and `rep` then refer to mirror(k).
  bool mirrored = false;
  FillingLine line;
  // Lines p a + q b = 0 and = q pi; both are recorded when they differ.
  std::vector<FillingLine> candidate_lines;
  std::optional<RepPoint> rep;
  Verdict verdict = Verdict::NotFound;
  struct Residuals {
    double relator = 0.0;
    double line = 0.0;
    double commutator = 0.0;
  } residuals;
  struct Meta {
    std::uint64_t seed = 0;
    int grid = 0;
    int image_restarts = 0;
    double tol_rep = 0.0;
    double tol_irr = 0.0;
    std::size_t image_samples = 0;
    std::size_t solutions_on_line = 0;
  } meta;
  std::vector<std::string> notes;
};

// Searches for an irreducible representation of the exterior whose boundary
// holonomy kills p a + q b. Slope (1, 0) is rejected with InvalidSlope.
Certificate certify_surgery(const KnotPresentation& k, long p, long q,
                            std::uint64_t seed, const CertifyOptions& opt = {});

// Same search on an explicit line; used for the hypothesis checks, where the
// meridian slope is allowed.
Certificate certify_on_line(const KnotPresentation& k, const Slope& slope,
                            bool twisted, std::uint64_t seed,
                            const CertifyOptions& opt = {});

// Recomputes every residual from the stored quaternions. Throws
// PresentationMismatch if k is not the presentation the certificate names.
bool verify_certificate(const Certificate& c, const KnotPresentation& k);

struct PropositionOptions {
  CertifyOptions certify;
  PerturbationOptions perturbation;
  // Bisection steps for the largest certified epsilon; 0 skips the search.
  int bisection_steps = 8;
  double epsilon_ceiling = kPi / 2.0;
};

enum class PropositionStatus { Empty, HypothesisFails, NotEmpty, Infeasible };
std::string to_string(PropositionStatus s);

struct PropositionReport {
  std::string knot_name;
  std::string knot_hash;
  Slope slope{1, 1};
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  // Meridian filling, then the lines p a + q b = 0 and = q pi in the twisted
  // convention.
  std::vector<Certificate> hypothesis;
  bool hypothesis_holds = false;
  std::optional<PerturbationFn> g;
  std::optional<ClassFunction> phi;
  std::optional<EmptinessResult> emptiness;
  std::optional<double> max_certified_epsilon;
  PropositionStatus status = PropositionStatus::HypothesisFails;
  std::vector<std::string> notes;
};

// Throws SlopeOutOfRange unless p, q > 0 and p/q <= 2.
PropositionReport proposition_pipeline(const KnotPresentation& k, const Slope& slope,
                                       double epsilon, std::uint64_t seed,
                                       const PropositionOptions& opt = {});

}  // namespace psurg
