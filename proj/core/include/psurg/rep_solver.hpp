#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psurg/knot.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/su2.hpp"

namespace psurg {

struct SolverOptions {
  double tol_rep = 1e-9;      // relator residual for a converged point
  double tol_irr = 1e-6;      // commutator gap separating irreducibles
  double tol_commute = kDefaultCommuteTol;
  int restarts = 64;          // random starts in solve_at_alpha
  int image_restarts = 8;     // random starts per grid point in pillowcase_image
  int max_iterations = 200;
  unsigned workers = 0;       // 0: one per hardware thread
};

// One representation, gauge-fixed: the first non-central generator on the
// z-axis, the next non-collinear one in the xz-plane with positive x.
struct RepPoint {
  std::vector<SU2Element> assignment;
  AnglePair raw_boundary;     // (alpha, beta) of meridian and longitude
  PillowcasePoint boundary;   // canonical form of raw_boundary
  double relator_residual = 0.0;
  double commutator_gap = 0.0;
  double peripheral_gap = 0.0;  // |[rho(m), rho(lambda)]|
  bool irreducible = false;
};

struct PillowcaseImage {
  std::string knot;
  std::string knot_hash;
  std::vector<RepPoint> samples;  // sorted by (alpha, beta)
  int grid = 0;
  std::uint64_t seed = 0;
  SolverOptions options;
  // Twisted images are shifted by (0, pi).
  bool twisted = false;
  // Grid midpoints where the number of irreducible classes changes.
  std::vector<double> endpoint_alphas;
};

// Completes and measures an assignment: gauge-fixes it and fills residuals,
// gaps and boundary angles. Returns nullopt if meridian and longitude do not
// commute within tol_commute.
std::optional<RepPoint> measure_representation(const KnotPresentation& k,
                                               std::vector<SU2Element> assignment,
                                               const SolverOptions& opt = {});

// Irreducible representations with meridian angle alpha, deduplicated up to
// conjugation. An empty result means none were found by the search.
std::vector<RepPoint> solve_at_alpha(const KnotPresentation& k, double alpha,
                                     int restarts, std::uint64_t seed,
                                     const SolverOptions& opt = {});

// Newton-polishes a starting assignment at fixed meridian angle alpha.
std::optional<RepPoint> refine_at_alpha(const KnotPresentation& k, double alpha,
                                        const std::vector<SU2Element>& start,
                                        const SolverOptions& opt = {});

// Grid points alpha_i = pi (i + 1) / (grid + 1), i = 0..grid-1.
std::vector<double> alpha_grid(int grid);
// Grid size whose spacing is at most `step`.
int grid_for_spacing(double step);

PillowcaseImage pillowcase_image(const KnotPresentation& k, int grid,
                                 std::uint64_t seed, const SolverOptions& opt = {});

// Shifts beta by pi: the image in the twisted convention.
PillowcaseImage to_twisted(const PillowcaseImage& img);

FillingLine abelian_locus(const KnotPresentation& k);

// Representations on the line, polished so that both the relators and the
// line equation hold to tol_rep. Candidates are samples within `tol` of the
// line and consecutive samples on one branch that straddle it.
std::vector<RepPoint> intersect_with_line(const KnotPresentation& k,
                                          const PillowcaseImage& img,
                                          const FillingLine& line, double tol,
                                          const SolverOptions& opt = {});

// Newton polish onto {relators = 1} intersected with the line, with the meridian
// angle free.
std::optional<RepPoint> polish_on_line(const KnotPresentation& k,
                                       const std::vector<SU2Element>& start,
                                       const FillingLine& line,
                                       const SolverOptions& opt = {});

// Hausdorff distance between two sets of pillowcase points under pc_distance.
double hausdorff(const std::vector<PillowcasePoint>& a,
                 const std::vector<PillowcasePoint>& b);
std::vector<PillowcasePoint> boundary_points(const PillowcaseImage& img);

}  // namespace psurg
