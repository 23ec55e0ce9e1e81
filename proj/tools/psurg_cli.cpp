// psurg: pillowcase images, surgery certificates and perturbation curves.
//
// Exit codes: 0 found / certified, 1 negative result, 2 parse error,
// 3 internal error, 4 input outside the supported range.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "toml.hpp"

#include "psurg/certify.hpp"
#include "psurg/errors.hpp"
#include "psurg/figure.hpp"
#include "psurg/knot.hpp"
#include "psurg/perturbation.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/rep_solver.hpp"
#include "psurg/serialize.hpp"

#ifndef PSURG_VERSION
#define PSURG_VERSION "0.0.0"
#endif

namespace {

using namespace psurg;

enum Exit { kOk = 0, kNegative = 1, kParse = 2, kInternal = 3, kOutOfScope = 4 };

struct JobConfig {
  std::string command;
  std::optional<std::string> braid, pd, knot;
  std::optional<std::pair<long, long>> torus;
  std::optional<std::string> slope;
  int grid = 200;
  std::optional<double> grid_step;
  std::uint64_t seed = 1;
  double epsilon = 0.15;
  bool twisted = false;
  unsigned workers = 0;
  std::string out;
  std::string svg;
  bool check_determinism = false;
};

Json config_json(const JobConfig& c) {
  Json knot = nullptr;
  if (c.braid) knot = Json{{"braid", *c.braid}};
  if (c.pd) knot = Json{{"pd", *c.pd}};
  if (c.knot) knot = Json{{"named", *c.knot}};
  if (c.torus) knot = Json{{"torus", Json::array({c.torus->first, c.torus->second})}};
  return Json{{"command", c.command},
              {"knot", knot},
              {"slope", c.slope ? Json(*c.slope) : Json()},
              {"grid", c.grid},
              {"grid_step", c.grid_step ? Json(*c.grid_step) : Json()},
              {"seed", c.seed},
              {"epsilon", c.epsilon},
              {"twisted", c.twisted},
              {"workers", c.workers},
              {"out", c.out},
              {"svg", c.svg}};
}

// Fills fields the command line left unset from a TOML job file.
void merge_job(JobConfig& c, const std::string& path, const CLI::App& app) {
  toml::table t;
  try {
    t = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    throw ParseError("job file " + path + ": " + std::string(e.description()));
  }
  auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
  if (c.command.empty()) c.command = t["command"].value_or(std::string());
  const bool knot_given = !unset("--braid") || !unset("--pd") || !unset("--knot") ||
                          !unset("--torus");
  if (!knot_given) {
    if (auto v = t["braid"].value<std::string>()) c.braid = *v;
    if (auto v = t["pd"].value<std::string>()) c.pd = *v;
    if (auto v = t["knot"].value<std::string>()) c.knot = *v;
    if (auto* arr = t["torus"].as_array(); arr && arr->size() == 2) {
      c.torus = {(*arr)[0].value_or<long>(0), (*arr)[1].value_or<long>(0)};
    }
  }
  if (unset("--slope")) {
    if (auto v = t["slope"].value<std::string>()) c.slope = *v;
  }
  if (unset("--grid")) c.grid = static_cast<int>(t["grid"].value_or<std::int64_t>(c.grid));
  if (unset("--grid-step")) {
    if (auto v = t["grid_step"].value<double>()) c.grid_step = *v;
  }
  if (unset("--seed")) c.seed = static_cast<std::uint64_t>(t["seed"].value_or<std::int64_t>(c.seed));
  if (unset("--epsilon")) c.epsilon = t["epsilon"].value_or(c.epsilon);
  if (unset("--twisted")) c.twisted = t["twisted"].value_or(c.twisted);
  if (unset("--workers")) c.workers = static_cast<unsigned>(t["workers"].value_or<std::int64_t>(c.workers));
  if (unset("--out")) c.out = t["out"].value_or(c.out);
  if (unset("--svg")) c.svg = t["svg"].value_or(c.svg);
}

KnotPresentation resolve_knot(const JobConfig& c) {
  const int sources = !!c.braid + !!c.pd + !!c.knot + !!c.torus;
  if (sources != 1) throw ParseError("give exactly one of --braid, --pd, --torus, --knot");
  if (c.braid) return parse_braid(*c.braid);
  if (c.pd) return parse_pd(*c.pd);
  if (c.knot) return named_knot(*c.knot);
  try {
    return torus_knot_presentation(c.torus->first, c.torus->second);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

bool has_knot(const JobConfig& c) { return c.braid || c.pd || c.knot || c.torus; }

Slope resolve_slope(const JobConfig& c) {
  if (!c.slope) throw ParseError("--slope is required");
  const std::string& s = *c.slope;
  const auto bar = s.find('/');
  try {
    std::size_t used = 0;
    const long p = std::stol(s.substr(0, bar), &used);
    if (used != (bar == std::string::npos ? s.size() : bar)) throw std::invalid_argument(s);
    long q = 1;
    if (bar != std::string::npos) {
      q = std::stol(s.substr(bar + 1), &used);
      if (used != s.size() - bar - 1) throw std::invalid_argument(s);
    }
    return Slope::from_rational(p, q);
  } catch (const std::logic_error&) {
    throw ParseError("cannot read slope '" + s + "'; expected p/q");
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

SolverOptions solver_options(const JobConfig& c) {
  SolverOptions o;
  o.workers = c.workers;
  return o;
}

int grid_of(const JobConfig& c) { return c.grid_step ? grid_for_spacing(*c.grid_step) : c.grid; }

Json envelope(const JobConfig& c, const std::optional<KnotPresentation>& k) {
  Json j{{"tool", Json{{"name", "psurg"}, {"version", PSURG_VERSION}}},
         {"config", config_json(c)}};
  j["presentation"] = k ? to_json(*k) : Json();
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

void write_timing(const JobConfig& c, double seconds) {
  if (c.out.empty() || c.out == "-") return;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  write_text(c.out + ".timing.json",
             Json{{"finished", stamp}, {"wall_seconds", seconds}}.dump(2) + "\n");
}

int cmd_reps(const JobConfig& c) {
  const auto k = resolve_knot(c);
  auto compute = [&] {
    auto img = pillowcase_image(k, grid_of(c), c.seed, solver_options(c));
    return c.twisted ? to_twisted(img) : img;
  };
  const auto img = compute();
  Json j = envelope(c, k);
  j["image"] = to_json(img);
  const std::string text = j.dump(2) + "\n";
  if (c.check_determinism) {
    Json again = envelope(c, k);
    again["image"] = to_json(compute());
    if (again.dump(2) + "\n" != text) {
      std::cerr << "psurg: repeated run with the same seed gave different output\n";
      return kInternal;
    }
  }
  write_text(c.out, text);
  if (!c.svg.empty()) {
    FigureOptions fo;
    fo.metadata = envelope(c, k);
    write_text(c.svg, image_svg(img, nullptr, fo));
  }
  return kOk;
}

int cmd_certify(const JobConfig& c) {
  const auto k = resolve_knot(c);
  const Slope s = resolve_slope(c);
  if (s == Slope(1, 0)) {
    std::cerr << "psurg: slope 1/0 is the meridian filling, not a surgery\n";
    return kOutOfScope;
  }
  CertifyOptions opt;
  opt.grid = grid_of(c);
  opt.solver = solver_options(c);
  const auto cert = certify_surgery(k, s.p(), s.q(), c.seed, opt);
  Json j = envelope(c, k);
  j["certificate"] = to_json(cert);
  j["verified"] = cert.rep ? verify_certificate(cert, k) : false;
  write_text(c.out, j.dump(2) + "\n");
  return cert.verdict == Verdict::Found ? kOk : kNegative;
}

int cmd_arc(const JobConfig& c) {
  const ArcS arc(resolve_slope(c));
  Json j = envelope(c, std::nullopt);
  j["arc"] = to_json(arc);
  j["tube"] = to_json(Tube{arc, c.epsilon});
  Json contacts = Json::array();
  for (const auto& p : points_on_beta_pi(arc).orbits) {
    contacts.push_back(Json{{"alpha", p.alpha}, {"beta", p.beta}});
  }
  j["beta_pi_orbits"] = contacts;
  Json red = Json::array();
  for (const auto& p : reducible_points_for_slope(arc.slope())) {
    red.push_back(Json{{"alpha", p.alpha}, {"beta", p.beta}});
  }
  j["reducible_points"] = red;
  write_text(c.out, j.dump(2) + "\n");
  return kOk;
}

int cmd_perturb(const JobConfig& c) {
  const auto k = resolve_knot(c);
  const Slope s = resolve_slope(c);
  PropositionOptions opt;
  opt.certify.grid = grid_of(c);
  opt.certify.solver = solver_options(c);
  const auto rep = proposition_pipeline(k, s, c.epsilon, c.seed, opt);
  Json j = envelope(c, k);
  j["report"] = to_json(rep);
  write_text(c.out, j.dump(2) + "\n");
  if (!c.svg.empty()) {
    auto img = to_twisted(pillowcase_image(k, opt.certify.grid, c.seed, opt.certify.solver));
    FigureOptions fo;
    fo.metadata = envelope(c, k);
    write_text(c.svg, image_svg(img, rep.g ? &*rep.g : nullptr, fo));
  }
  return rep.status == PropositionStatus::Empty ? kOk : kNegative;
}

int cmd_figure(const JobConfig& c) {
  FigureOptions fo;
  const std::string target = c.svg.empty() ? c.out : c.svg;
  if (has_knot(c)) {
    const auto k = resolve_knot(c);
    fo.metadata = envelope(c, k);
    auto img = pillowcase_image(k, grid_of(c), c.seed, solver_options(c));
    write_text(target, image_svg(c.twisted ? to_twisted(img) : img, nullptr, fo));
    return kOk;
  }
  const ArcS arc(resolve_slope(c));
  fo.metadata = envelope(c, std::nullopt);
  write_text(target, arc_svg(arc, fo));
  return kOk;
}

int run(const JobConfig& c) {
  if (c.command == "reps") return cmd_reps(c);
  if (c.command == "certify") return cmd_certify(c);
  if (c.command == "arc") return cmd_arc(c);
  if (c.command == "perturb") return cmd_perturb(c);
  if (c.command == "figure") return cmd_figure(c);
  throw ParseError("unknown command '" + c.command +
                   "'; expected reps, certify, arc, perturb or figure");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2) pillowcase images, surgery certificates and perturbation curves",
               "psurg"};
  app.set_version_flag("--version", PSURG_VERSION);
  JobConfig cfg;
  std::string job;
  std::vector<long> torus;

  app.add_option("--job", job, "TOML job file; command-line flags take precedence");
  app.add_option("--braid", cfg.braid, "braid word, e.g. \"1 1 1\" or \"s1 S2\"");
  app.add_option("--pd", cfg.pd, "planar diagram code, e.g. \"PD[(1,5,2,4),...]\"");
  app.add_option("--torus", torus, "torus knot T(p,q)")->expected(2);
  app.add_option("--knot", cfg.knot, "named knot: unknot, trefoil, figure-eight, 5_1, T(p,q)");
  app.add_option("--slope", cfg.slope, "surgery slope p/q");
  app.add_option("--grid", cfg.grid, "number of meridian angles in (0, pi)");
  app.add_option("--grid-step", cfg.grid_step, "alpha spacing; overrides --grid");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--epsilon", cfg.epsilon, "tube radius around S");
  app.add_flag("--twisted", cfg.twisted, "shift images by (0, pi)");
  app.add_option("--workers", cfg.workers, "solver threads (0: all cores)");
  app.add_option("--out", cfg.out, "output JSON (default stdout)");
  app.add_option("--svg", cfg.svg, "output SVG");
  app.add_flag("--check-determinism", cfg.check_determinism,
               "run twice and exit 3 if the outputs differ");
  app.fallthrough();
  app.require_subcommand(0, 1);
  const std::pair<const char*, const char*> commands[] = {
      {"reps", "pillowcase image of the knot's irreducible representations"},
      {"certify", "search for a representation on the surgery line"},
      {"arc", "vertices and tube of the arc S for a slope"},
      {"perturb", "construct g for a slope and test the perturbed variety"},
      {"figure", "SVG of the arc S, or of the knot's image if a knot is given"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  if (!app.get_subcommands().empty()) cfg.command = app.get_subcommands().front()->get_name();
  if (!torus.empty()) cfg.torus = std::pair{torus[0], torus[1]};

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!job.empty()) merge_job(cfg, job, app);
    if (cfg.command.empty()) throw ParseError("no command given");
    const int code = run(cfg);
    write_timing(cfg, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return code;
  } catch (const SlopeOutOfRange& e) {
    std::cerr << "psurg: " << e.what() << '\n';
    return kOutOfScope;
  } catch (const ParseError& e) {
    std::cerr << "psurg: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "psurg: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "psurg: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
