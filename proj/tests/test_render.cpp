#include <doctest.h>

#include <regex>

#include "hypca/automata.hpp"
#include "hypca/render.hpp"

using namespace hypca;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("empty configuration draws every cell of the disk") {
  RenderOptions o;
  o.radius = 3;
  const std::string svg = render_svg(Configuration{}, Palette::standard(), o);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<path ") == RegionGraph::disk(3).size());
  CHECK(count(svg, "<text") == 0);
}

TEST_CASE("states get their palette colour") {
  const Palette p = Palette::standard();
  RenderOptions o;
  o.radius = 4;
  o.labels = true;
  const std::string svg = render_svg(fig1_configuration(), p, o);
  CHECK(svg.find("fill=\"" + p.fill.at("W0") + "\"><title>0:</title>") != std::string::npos);
  CHECK(svg.find("fill=\"" + p.fill.at("B") + "\"><title>0:1</title>") != std::string::npos);
  CHECK(count(svg, "<text") == 3);
}

TEST_CASE("rendering is deterministic and size aware") {
  RenderOptions o;
  o.radius = 3;
  const std::string a = render_svg(fig1_configuration(), Palette::standard(), o);
  CHECK(a == render_svg(fig1_configuration(), Palette::standard(), o));
  o.size = 400;
  const std::string b = render_svg(fig1_configuration(), Palette::standard(), o);
  CHECK(b.find("width=\"400\"") != std::string::npos);
  CHECK(a != b);
}

TEST_CASE("cell centres lie inside the disk") {
  for (const auto& r : RegionGraph::disk(7).cells()) CHECK(std::abs(place(r.address).apply(Complex{0.0, 0.0})) < 1.0);
}

TEST_CASE("render errors") {
  Configuration c;
  c.set(CellAddress::center(), "Q");
  CHECK_THROWS_AS(render_svg(c, Palette::standard()), RenderError);
  CHECK_THROWS_AS(Palette::parse("W #ffffff\n"), RenderError);
  CHECK_THROWS_AS(Palette::parse("W=#ffff\n"), RenderError);
  CHECK_THROWS_AS(Palette::parse("W=#gggggg\n"), RenderError);
}

TEST_CASE("palette round trip") {
  const Palette p = Palette::parse("# custom\nW = #102030\nB=#aabbcc\n\n");
  CHECK(p.fill.size() == 2);
  CHECK(p.fill.at("W") == "#102030");
  CHECK(Palette::parse(p.serialize()).fill == p.fill);
  CHECK(Palette::parse(Palette::standard().serialize()).fill == Palette::standard().fill);
}
