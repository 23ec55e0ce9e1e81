#pragma once

#include <optional>
#include <string>

#include "psurg/perturbation.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/rep_solver.hpp"
#include "psurg/serialize.hpp"

namespace psurg {

struct FigureOptions {
  int size = 640;    // canvas width and height in pixels
  int margin = 64;
  // Extra key/value pairs written into the <metadata> block.
  Json metadata = Json::object();
};

// The arc S in the square [-pi, pi]^2: S solid, beta = +-pi dashed, axes
// ticked at multiples of pi/3, vertices labelled z1..z6. Every vertex circle
// carries its exact coordinates in data-alpha / data-beta.
std::string arc_svg(const ArcS& arc, const FigureOptions& opt = {});

// Canonical image samples over [0, pi] x [-pi, pi] with the reducible line
// dashed; optionally overlays the graph beta = -g(alpha).
std::string image_svg(const PillowcaseImage& img, const PerturbationFn* overlay = nullptr,
                      const FigureOptions& opt = {});

}  // namespace psurg
