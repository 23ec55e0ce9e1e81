#pragma once

#include "json.hpp"

#include "psurg/certify.hpp"
#include "psurg/knot.hpp"
#include "psurg/perturbation.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/rep_solver.hpp"

// JSON views of the library types. Field order is fixed (ordered_json) so that
// equal inputs give byte-identical output.
namespace psurg {

using Json = nlohmann::ordered_json;

inline constexpr int kImageSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

Json to_json(const SU2Element& u);  // [w, x, y, z]
Json to_json(const Slope& s);
Json to_json(const FillingLine& l);
Json to_json(const ArcS& arc);
Json to_json(const Tube& t);
Json to_json(const KnotPresentation& k);
Json to_json(const SolverOptions& o);
Json to_json(const RepPoint& p);
Json to_json(const PillowcaseImage& img);
Json to_json(const PerturbationFn& g);
Json to_json(const Witness& w);
Json to_json(const Certificate& c);
Json to_json(const PropositionReport& r);

// Inverse of to_json(Certificate). Throws ParseError on malformed input.
Certificate certificate_from_json(const Json& j);

}  // namespace psurg
