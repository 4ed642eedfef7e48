#include "hypca/render.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace hypca {

Palette Palette::standard() {
  Palette p;
  p.fill = {{"B", "#8b1a1a"},  {"B0", "#e0662f"}, {"W", "#f2e6a0"},  {"W0", "#fff8c8"},
            {"W1", "#d8b84a"}, {"H", "#2e8b57"},  {"T", "#f2e6a0"},  {"A", "#e0662f"},
            {"0", "#fff8c8"},  {"_", "#8b1a1a"},  {"1", "#b03060"},  {"y", "#6a3d9a"},
            {"x", "#c71585"}};
  return p;
}

Palette Palette::parse(std::string_view text) {
  Palette p;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw RenderError(fmt::format("palette line {}: expected state=#rrggbb", lineno));
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string state = trim(line.substr(0, eq)), color = trim(line.substr(eq + 1));
    bool ok = color.size() == 7 && color[0] == '#';
    for (std::size_t i = 1; ok && i < 7; ++i) ok = std::isxdigit(static_cast<unsigned char>(color[i]));
    if (state.empty() || !ok) throw RenderError(fmt::format("palette line {}: bad entry", lineno));
    p.fill[state] = color;
  }
  return p;
}

std::string Palette::serialize() const {
  std::string s;
  for (const auto& [k, v] : fill) s += fmt::format("{}={}\n", k, v);
  return s;
}

namespace {

std::string blank_hue(int level) {
  static const char* blues[] = {"#9ec9e8", "#7fb3d9", "#a9d3f0", "#6fa5cf", "#b8dcf5", "#88bde0"};
  return blues[level % 6];
}

struct Canvas {
  double half;
  double x(Complex z) const { return half + z.real() * half * 0.98; }
  double y(Complex z) const { return half - z.imag() * half * 0.98; }
  double len(double r) const { return r * half * 0.98; }
};

std::string pentagon_path(const std::array<Complex, 5>& v, const Canvas& cv) {
  std::string d = fmt::format("M{:.3f},{:.3f}", cv.x(v[0]), cv.y(v[0]));
  for (int k = 0; k < 5; ++k) {
    const Complex p = v[k], q = v[(k + 1) % 5];
    const Geodesic g = geodesic_through(p, q);
    if (g.is_line || g.radius > 1e4) {
      d += fmt::format(" L{:.3f},{:.3f}", cv.x(q), cv.y(q));
      continue;
    }
    // screen y is flipped, which flips the sweep direction as well
    const double cross = (p - g.center).real() * (q - g.center).imag() -
                         (p - g.center).imag() * (q - g.center).real();
    const int sweep = cross > 0 ? 0 : 1;
    d += fmt::format(" A{:.3f},{:.3f} 0 0 {} {:.3f},{:.3f}", cv.len(g.radius), cv.len(g.radius),
                     sweep, cv.x(q), cv.y(q));
  }
  return d + " Z";
}

}  // namespace

std::string render_svg(const Configuration& c, const Palette& palette, const RenderOptions& opt) {
  for (const auto& [a, s] : c.cells())
    if (!palette.fill.count(s)) throw RenderError(fmt::format("no colour for state '{}'", s));

  RegionGraph region = RegionGraph::disk(opt.radius);
  const Pentagon base = base_pentagon();
  const Canvas cv{opt.size / 2.0};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" "
      "viewBox=\"0 0 {0} {0}\">\n",
      opt.size);
  os << fmt::format("<circle cx=\"{0:.3f}\" cy=\"{0:.3f}\" r=\"{1:.3f}\" fill=\"#ffffff\" stroke=\"#000000\"/>\n",
                    cv.half, cv.len(1.0));
  os << "<g stroke=\"#203040\" stroke-width=\"0.6\">\n";
  for (const auto& r : region.cells()) {
    if (r.level > opt.radius) continue;
    const DiskIsometry g = place(r.address);
    std::array<Complex, 5> v;
    for (int k = 0; k < 5; ++k) v[k] = g.apply(base.vertices[k]);
    auto it = c.cells().find(r.address);
    const std::string fill = it == c.cells().end() ? blank_hue(r.level) : palette.fill.at(it->second);
    os << fmt::format("<path d=\"{}\" fill=\"{}\"><title>{}</title></path>\n", pentagon_path(v, cv),
                      fill, r.address.str());
  }
  os << "</g>\n";
  if (opt.labels) {
    os << "<g font-family=\"sans-serif\" text-anchor=\"middle\" fill=\"#000000\">\n";
    for (const auto& [a, s] : c.cells()) {
      if (a.level() > opt.radius) continue;
      const Complex z = place(a).apply(Complex{0.0, 0.0});
      const double fs = std::max(2.0, 14.0 * (1.0 - std::norm(z)));
      os << fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"{:.2f}\">{}</text>\n", cv.x(z),
                        cv.y(z) + fs / 3, fs, s);
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hypca
