#include "psurg/figure.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace psurg {

namespace {

std::string num(double x, const char* f = "%.3f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string exact(double x) { return num(x, "%.17g"); }

const char* tick_label(int k) {
  static const char* labels[] = {"−π", "−2π/3", "−π/3", "0",
                                 "π/3",     "2π/3",       "π"};
  return labels[k + 3];
}

// Maps [a0, a1] x [-pi, pi] onto the plot area.
struct Frame {
  double a0, a1;
  int size, margin;
  double x(double a) const { return margin + (a - a0) / (a1 - a0) * (size - 2 * margin); }
  double y(double b) const { return margin + (kPi - b) / kTwoPi * (size - 2 * margin); }
};

void header(std::ostringstream& s, const FigureOptions& opt, const Json& meta) {
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\""
    << opt.size << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
  s << "<metadata><![CDATA[" << meta.dump() << "]]></metadata>\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& s, const Frame& f, int alpha_from) {
  s << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  s << "<rect x=\"" << num(f.x(f.a0)) << "\" y=\"" << num(f.y(kPi)) << "\" width=\""
    << num(f.x(f.a1) - f.x(f.a0)) << "\" height=\"" << num(f.y(-kPi) - f.y(kPi)) << "\"/>\n";
  s << "</g>\n<g class=\"ticks\" font-family=\"serif\" font-size=\"13\" fill=\"black\">\n";
  for (int k = alpha_from; k <= 3; ++k) {
    const double x = f.x(k * kPi / 3.0);
    s << "<line x1=\"" << num(x) << "\" y1=\"" << num(f.y(-kPi)) << "\" x2=\"" << num(x)
      << "\" y2=\"" << num(f.y(-kPi) + 6) << "\" stroke=\"black\"/>";
    s << "<text x=\"" << num(x) << "\" y=\"" << num(f.y(-kPi) + 22)
      << "\" text-anchor=\"middle\">" << tick_label(k) << "</text>\n";
  }
  for (int k = -3; k <= 3; ++k) {
    const double y = f.y(k * kPi / 3.0);
    s << "<line x1=\"" << num(f.x(f.a0) - 6) << "\" y1=\"" << num(y) << "\" x2=\""
      << num(f.x(f.a0)) << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>";
    s << "<text x=\"" << num(f.x(f.a0) - 10) << "\" y=\"" << num(y + 4)
      << "\" text-anchor=\"end\">" << tick_label(k) << "</text>\n";
  }
  s << "<text x=\"" << num(0.5 * (f.x(f.a0) + f.x(f.a1))) << "\" y=\""
    << num(f.y(-kPi) + 44) << "\" text-anchor=\"middle\">α</text>\n";
  s << "<text x=\"" << num(f.x(f.a0) - 48) << "\" y=\"" << num(f.y(0.0) + 4)
    << "\" text-anchor=\"middle\">β</text>\n</g>\n";
}

void dashed(std::ostringstream& s, const Frame& f, double beta, const char* cls) {
  s << "<line class=\"" << cls << "\" data-beta=\"" << exact(beta) << "\" x1=\""
    << num(f.x(f.a0)) << "\" y1=\"" << num(f.y(beta)) << "\" x2=\"" << num(f.x(f.a1))
    << "\" y2=\"" << num(f.y(beta))
    << "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"8 6\"/>\n";
}

}  // namespace

std::string arc_svg(const ArcS& arc, const FigureOptions& opt) {
  Json meta = Json{{"figure", "arc"}, {"arc", to_json(arc)}};
  for (const auto& [k, v] : opt.metadata.items()) meta[k] = v;
  const Frame f{-kPi, kPi, opt.size, opt.margin};
  std::ostringstream s;
  header(s, opt, meta);
  axes(s, f, -3);
  dashed(s, f, kPi, "reducible");
  dashed(s, f, -kPi, "reducible");

  s << "<polyline class=\"arc-S\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\" points=\"";
  const auto& pl = arc.polyline();
  for (std::size_t i = 0; i < pl.size(); ++i) {
    s << (i ? " " : "") << num(f.x(pl[i].alpha)) << ',' << num(f.y(pl[i].beta));
  }
  s << "\"/>\n";

  s << "<g class=\"vertices\" font-family=\"serif\" font-size=\"15\">\n";
  const auto& v = arc.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = f.x(v[i].alpha);
    const double y = f.y(v[i].beta);
    s << "<circle class=\"vertex\" data-label=\"z" << i + 1 << "\" data-alpha=\""
      << exact(v[i].alpha) << "\" data-beta=\"" << exact(v[i].beta) << "\" cx=\"" << num(x)
      << "\" cy=\"" << num(y) << "\" r=\"3.5\" fill=\"black\"/>";
    // Labels sit inside the square, on the side away from the nearest edge.
    const double dx = v[i].alpha < 0.0 ? 8.0 : v[i].alpha > 0.0 ? -8.0 : 8.0;
    const double dy = v[i].beta > 0.0 ? 18.0 : -8.0;
    s << "<text x=\"" << num(x + dx) << "\" y=\"" << num(y + dy) << "\" text-anchor=\""
      << (dx > 0 ? "start" : "end") << "\">z<tspan font-size=\"11\" dy=\"4\">" << i + 1
      << "</tspan></text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

std::string image_svg(const PillowcaseImage& img, const PerturbationFn* overlay,
                      const FigureOptions& opt) {
  Json meta = Json{{"figure", "image"},
                   {"knot", Json{{"name", img.knot}, {"hash", img.knot_hash}}},
                   {"grid", img.grid},
                   {"seed", img.seed},
                   {"twisted", img.twisted},
                   {"samples", img.samples.size()}};
  for (const auto& [k, v] : opt.metadata.items()) meta[k] = v;
  const Frame f{0.0, kPi, opt.size, opt.margin};
  std::ostringstream s;
  header(s, opt, meta);
  axes(s, f, 0);
  if (img.twisted) {
    dashed(s, f, kPi, "reducible");
    dashed(s, f, -kPi, "reducible");
  } else {
    dashed(s, f, 0.0, "reducible");
  }
  s << "<g class=\"samples\" fill=\"black\">\n";
  for (const auto& p : img.samples) {
    s << "<circle cx=\"" << num(f.x(p.boundary.alpha)) << "\" cy=\""
      << num(f.y(p.boundary.beta)) << "\" r=\"1.2\"/>\n";
  }
  s << "</g>\n";
  if (overlay) {
    // Break the path where the wrapped graph jumps across beta = +-pi.
    s << "<path class=\"graph\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"1.5\" d=\"";
    constexpr int kSteps = 2000;
    double prev = 0.0;
    for (int i = 0; i <= kSteps; ++i) {
      const double a = kPi * i / kSteps;
      const double b = wrap_angle(-overlay->g.g(a));
      const bool jump = i > 0 && std::abs(b - prev) > kPi;
      s << (i == 0 || jump ? "M" : "L") << num(f.x(a)) << ',' << num(f.y(b)) << ' ';
      prev = b;
    }
    s << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace psurg
