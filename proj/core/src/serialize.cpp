#include "psurg/serialize.hpp"

#include "psurg/errors.hpp"

namespace psurg {

namespace {

Json point(double a, double b) { return Json{{"alpha", a}, {"beta", b}}; }

Json string_list(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Verdict verdict_from(const std::string& s) {
  if (s == "Found") return Verdict::Found;
  if (s == "NotFound") return Verdict::NotFound;
  if (s == "OutOfScope") return Verdict::OutOfScope;
  throw ParseError("unknown verdict '" + s + "'");
}

FillingLine line_from(const Json& j) {
  return FillingLine(j.at("p").get<long>(), j.at("q").get<long>(), j.at("c").get<double>(),
                     j.at("twisted").get<bool>());
}

}  // namespace

Json to_json(const SU2Element& u) { return Json::array({u.w(), u.x(), u.y(), u.z()}); }

Json to_json(const Slope& s) { return Json{{"p", s.p()}, {"q", s.q()}}; }

Json to_json(const FillingLine& l) {
  return Json{{"p", l.p}, {"q", l.q}, {"c", l.c}, {"twisted", l.twisted}};
}

Json to_json(const ArcS& arc) {
  Json v = Json::array();
  for (const auto& z : arc.vertices()) v.push_back(point(z.alpha, z.beta));
  const auto contacts = points_on_beta_pi(arc);
  return Json{{"slope", to_json(arc.slope())},
              {"vertices", v},
              {"length", arc.length()},
              {"beta_pi_contacts", contacts.raw.size()}};
}

Json to_json(const Tube& t) {
  return Json{{"arc", to_json(t.arc)}, {"epsilon", t.epsilon}};
}

Json to_json(const KnotPresentation& k) {
  Json rel = Json::array();
  for (const auto& r : k.relators) rel.push_back(r.to_string());
  return Json{{"name", k.name},
              {"hash", k.hash()},
              {"generators", k.n_generators},
              {"relators", rel},
              {"meridian", k.meridian.to_string()},
              {"longitude", k.longitude.to_string()},
              {"writhe", k.writhe}};
}

Json to_json(const SolverOptions& o) {
  return Json{{"tol_rep", o.tol_rep},
              {"tol_irr", o.tol_irr},
              {"tol_commute", o.tol_commute},
              {"restarts", o.restarts},
              {"image_restarts", o.image_restarts},
              {"max_iterations", o.max_iterations}};
}

Json to_json(const RepPoint& p) {
  Json gens = Json::array();
  for (const auto& u : p.assignment) gens.push_back(to_json(u));
  return Json{{"alpha", p.boundary.alpha},
              {"beta", p.boundary.beta},
              {"raw_alpha", p.raw_boundary.alpha},
              {"raw_beta", p.raw_boundary.beta},
              {"residual", p.relator_residual},
              {"commutator_gap", p.commutator_gap},
              {"peripheral_gap", p.peripheral_gap},
              {"generators", gens}};
}

Json to_json(const PillowcaseImage& img) {
  Json samples = Json::array();
  for (const auto& s : img.samples) samples.push_back(to_json(s));
  return Json{{"version", kImageSchemaVersion},
              {"knot", Json{{"name", img.knot}, {"hash", img.knot_hash}}},
              {"grid", img.grid},
              {"seed", img.seed},
              {"twisted", img.twisted},
              {"options", to_json(img.options)},
              {"endpoint_alphas", img.endpoint_alphas},
              {"samples", samples}};
}

Json to_json(const PerturbationFn& g) {
  const auto c = g.g.coefficients();
  Json j{{"degree", g.degree()},
         {"coefficients", std::vector<double>(c.begin(), c.end())},
         {"derivative_bound", g.derivative_bound},
         {"sup_norm", g.sup_norm}};
  j["target_tube"] = g.target ? to_json(*g.target) : Json();
  j["certification"] = Json{{"samples", g.certification.samples},
                            {"margin", g.certification.margin},
                            {"min_clearance", g.certification.min_clearance},
                            {"max_tube_distance", g.certification.max_tube_distance},
                            {"max_vertex_distance", g.certification.max_vertex_distance},
                            {"passed", g.certification.passed}};
  return j;
}

Json to_json(const Witness& w) {
  return Json{{"source", w.source},
              {"raw", point(w.raw.alpha, w.raw.beta)},
              {"canonical", point(w.canonical.alpha, w.canonical.beta)},
              {"residual", w.residual}};
}

Json to_json(const Certificate& c) {
  Json j{{"version", c.version},
         {"knot", Json{{"name", c.knot_name}, {"hash", c.knot_hash}}},
         {"slope", to_json(c.slope)},
         {"twist", c.twisted},
         {"verdict", to_string(c.verdict)}};
  if (c.rep) {
    Json q = Json::array();
    for (const auto& u : c.rep->assignment) q.push_back(to_json(u));
    j["rep"] = Json{{"quaternions", q},
                    {"alpha", c.rep->raw_boundary.alpha},
                    {"beta", c.rep->raw_boundary.beta},
                    {"canonical", point(c.rep->boundary.alpha, c.rep->boundary.beta)}};
  } else {
    j["rep"] = nullptr;
  }
  j["residuals"] = Json{{"relator", c.residuals.relator},
                        {"line", c.residuals.line},
                        {"commutator", c.residuals.commutator}};
  j["meta"] = Json{{"seed", c.meta.seed},
                   {"grid", c.meta.grid},
                   {"image_restarts", c.meta.image_restarts},
                   {"tol_rep", c.meta.tol_rep},
                   {"tol_irr", c.meta.tol_irr},
                   {"image_samples", c.meta.image_samples},
                   {"solutions_on_line", c.meta.solutions_on_line}};
  j["mirrored"] = c.mirrored;
  j["line"] = to_json(c.line);
  Json lines = Json::array();
  for (const auto& l : c.candidate_lines) lines.push_back(to_json(l));
  j["candidate_lines"] = lines;
  j["notes"] = string_list(c.notes);
  return j;
}

Json to_json(const PropositionReport& r) {
  Json hyp = Json::array();
  for (const auto& c : r.hypothesis) hyp.push_back(to_json(c));
  Json j{{"version", kReportSchemaVersion},
         {"knot", Json{{"name", r.knot_name}, {"hash", r.knot_hash}}},
         {"slope", to_json(r.slope)},
         {"epsilon", r.epsilon},
         {"seed", r.seed},
         {"status", to_string(r.status)},
         {"hypothesis_holds", r.hypothesis_holds},
         {"hypothesis", hyp}};
  j["g"] = r.g ? to_json(*r.g) : Json();
  if (r.emptiness) {
    j["emptiness"] = Json{{"empty", r.emptiness->empty},
                          {"witness", r.emptiness->witness ? to_json(*r.emptiness->witness)
                                                           : Json()}};
  } else {
    j["emptiness"] = nullptr;
  }
  j["max_certified_epsilon"] = r.max_certified_epsilon ? Json(*r.max_certified_epsilon) : Json();
  j["notes"] = string_list(r.notes);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    c.version = j.at("version").get<int>();
    if (c.version != kCertificateVersion) {
      throw ParseError("unsupported certificate version " + std::to_string(c.version));
    }
    c.knot_name = j.at("knot").at("name").get<std::string>();
    c.knot_hash = j.at("knot").at("hash").get<std::string>();
    c.slope = Slope(j.at("slope").at("p").get<long>(), j.at("slope").at("q").get<long>());
    c.twisted = j.at("twist").get<bool>();
    c.verdict = verdict_from(j.at("verdict").get<std::string>());
    if (!j.at("rep").is_null()) {
      RepPoint p;
      for (const auto& q : j.at("rep").at("quaternions")) {
        if (q.size() != 4) throw ParseError("quaternion needs 4 components");
        p.assignment.emplace_back(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                                  q[3].get<double>());
      }
      p.raw_boundary = {j.at("rep").at("alpha").get<double>(),
                        j.at("rep").at("beta").get<double>()};
      p.boundary = canonicalize(p.raw_boundary);
      c.rep = std::move(p);
    }
    const auto& r = j.at("residuals");
    c.residuals = {r.at("relator").get<double>(), r.at("line").get<double>(),
                   r.at("commutator").get<double>()};
    if (c.rep) {
      c.rep->relator_residual = c.residuals.relator;
      c.rep->commutator_gap = c.residuals.commutator;
      c.rep->irreducible = c.residuals.commutator > kIrreducibleGap;
    }
    const auto& m = j.at("meta");
    c.meta.seed = m.at("seed").get<std::uint64_t>();
    c.meta.grid = m.at("grid").get<int>();
    c.meta.image_restarts = m.at("image_restarts").get<int>();
    c.meta.tol_rep = m.at("tol_rep").get<double>();
    c.meta.tol_irr = m.at("tol_irr").get<double>();
    c.meta.image_samples = m.at("image_samples").get<std::size_t>();
    c.meta.solutions_on_line = m.at("solutions_on_line").get<std::size_t>();
    c.mirrored = j.at("mirrored").get<bool>();
    c.line = line_from(j.at("line"));
    for (const auto& l : j.at("candidate_lines")) c.candidate_lines.push_back(line_from(l));
    for (const auto& n : j.at("notes")) c.notes.push_back(n.get<std::string>());
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace psurg
