#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psurg/pillowcase.hpp"
#include "psurg/rep_solver.hpp"
#include "psurg/su2.hpp"

namespace psurg {

struct GraphCertification {
  int samples = 0;
  double margin = 0.0;             // required clearance from beta = +-pi
  double min_clearance = 0.0;      // smallest sampled |beta -+ pi| minus slack
  double max_tube_distance = 0.0;  // largest sampled distance to S plus slack
  // Largest distance from a vertex of S off beta = +-pi to the nearest sample.
  double max_vertex_distance = 0.0;
  bool passed = false;
};

// Odd 2 pi-periodic g(t) = sum c_k sin(k t) whose graph beta = -g(alpha)
// threads the tube U* around the arc S.
struct PerturbationFn {
  ClassFunction g;
  double sup_norm = 0.0;          // max over the certification samples
  double derivative_bound = 0.0;  // sum k |c_k|
  std::optional<Tube> target;
  GraphCertification certification;

  int degree() const { return g.degree(); }
  static PerturbationFn from_coefficients(std::vector<double> coeffs);
};

struct PerturbationOptions {
  int max_degree = 256;
  int certification_samples = 100000;
};

// Checks that the graph of -g over [-pi, pi] lies in the tube and clears
// beta = +-pi by epsilon/4, using samples plus a Lipschitz bound between them.
// The graph must also pass within epsilon of each vertex off beta = +-pi, so
// that it follows S rather than cutting its corners.
GraphCertification certify_graph(const ClassFunction& g, const Tube& tube,
                                 int samples);

// Builds the target path (S with its vertical edges replaced by ramps and the
// approach to beta = +-pi clamped), smooths it, and projects it onto sine
// series of increasing degree until one certifies. Throws Infeasible.
PerturbationFn construct_g(const Tube& tube, const PerturbationOptions& opt = {});

struct Witness {
  AnglePair raw;
  PillowcasePoint canonical;
  std::string source;  // "image" or "reducible"
  double residual = 0.0;
};

struct EmptinessResult {
  bool empty = true;
  std::optional<Witness> witness;
};

inline constexpr double kEmptinessTol = 1e-6;

// Decides whether any image sample or any reducible-line point satisfies
// beta = -g(alpha) within tol. Reducible lines are scanned with a Lipschitz
// bound and subdivided where the bound is inconclusive; an undecided interval
// is reported as non-empty. Throws ConventionMismatch if a line's twist flag
// differs from the image's.
EmptinessResult perturbed_variety_is_empty(const PillowcaseImage& img,
                                           const std::vector<FillingLine>& reducibles,
                                           const PerturbationFn& g,
                                           double tol = kEmptinessTol);

ClassFunction phi_from_g(const PerturbationFn& g);

}  // namespace psurg
