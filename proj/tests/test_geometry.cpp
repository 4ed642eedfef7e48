#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypca/geometry.hpp"

using namespace hypca;

namespace {
double dist(Complex a, Complex b) { return std::abs(a - b); }
}

TEST_CASE("base pentagon has right angles") {
  const Pentagon p = base_pentagon();
  for (int k = 0; k < 5; ++k) {
    const double a = interior_angle(p.vertices[(k + 4) % 5], p.vertices[k], p.vertices[(k + 1) % 5]);
    CHECK(std::abs(a - std::numbers::pi / 2) < 1e-12);
  }
}

TEST_CASE("base pentagon is 5-fold symmetric") {
  const Pentagon p = base_pentagon();
  const Complex rot = std::polar(1.0, 2 * std::numbers::pi / 5);
  for (int k = 0; k < 5; ++k) CHECK(dist(p.vertices[k] * rot, p.vertices[(k + 1) % 5]) < 1e-14);
}

TEST_CASE("closed-form vertex radius matches bisection") {
  CHECK(std::abs(base_vertex_radius() - base_vertex_radius_bisected()) < 1e-12);
}

TEST_CASE("side midpoint lies on the side geodesic") {
  const Pentagon p = base_pentagon();
  const Geodesic g = geodesic_through(p.vertices[0], p.vertices[1]);
  const Complex m{base_midpoint_radius(), 0.0};
  CHECK(std::abs(std::abs(m - g.center) - g.radius) < 1e-12);
}

TEST_CASE("disk isometries stay normalised and preserve distance") {
  const DiskIsometry f = DiskIsometry::half_turn({0.3, -0.2}) * DiskIsometry::rotation(0.7) *
                         DiskIsometry::translation({-0.1, 0.5});
  CHECK(std::abs(f.det_residual()) < 1e-12);
  const Complex a{0.1, 0.2}, b{-0.4, 0.3};
  CHECK(std::abs(hyperbolic_distance(a, b) - hyperbolic_distance(f.apply(a), f.apply(b))) < 1e-12);
  const DiskIsometry h = DiskIsometry::half_turn({0.3, -0.2});
  CHECK(dist((h * h).apply(a), a) < 1e-12);
}

TEST_CASE("place: centre is the identity, a neighbour is one step") {
  CHECK(dist(place(CellAddress::center()).apply({0.2, 0.1}), {0.2, 0.1}) < 1e-15);
  const DiskIsometry g = place(CellAddress::root(2));
  const DiskIsometry s = step_across(2);
  CHECK(dist(g.apply({0.1, 0.1}), s.apply({0.1, 0.1})) < 1e-14);
}

TEST_CASE("crossing a side and back returns onto the same tile") {
  for (int k = 0; k < 5; ++k) {
    // side 0 of the neighbour faces us, so the round trip is a rotation by k sides
    const DiskIsometry back = step_across(k) * step_across(0);
    const DiskIsometry expect = DiskIsometry::rotation(2 * std::numbers::pi * k / 5);
    for (Complex z : {Complex{0.0, 0.0}, Complex{0.3, -0.2}})
      CHECK(dist(back.apply(z), expect.apply(z)) < 1e-9);
  }
}

TEST_CASE("adjacent placed tiles share a full side") {
  const Pentagon base = base_pentagon();
  RegionGraph g = RegionGraph::disk(4);
  for (const auto& r : g.cells()) {
    if (!r.resolved()) continue;
    const DiskIsometry ga = place(r.address);
    for (int k = 0; k < 5; ++k) {
      const CellAddress& b = g.cell(r.neighbors[k]).address;
      const auto back = neighbor_addresses(b);
      int j = 0;
      while (back[j] != r.address) ++j;
      const DiskIsometry gb = place(b);
      // side k of a and side j of b are the same segment, traversed oppositely
      CHECK(dist(ga.apply(base.vertices[k]), gb.apply(base.vertices[(j + 1) % 5])) < 1e-6);
      CHECK(dist(ga.apply(base.vertices[(k + 1) % 5]), gb.apply(base.vertices[j])) < 1e-6);
    }
  }
}

TEST_CASE("oracle basics") {
  const OracleTiling o0 = geometric_oracle(0);
  CHECK(o0.tiles.size() == 1);
  CHECK(geometric_oracle(1).tiles.size() == 6);
  CHECK(geometric_oracle(2).tiles.size() == RegionGraph::disk(2).size());
  for (const auto& t : geometric_oracle(4).tiles) CHECK(std::abs(t.center) < 1.0);
}

TEST_CASE("oracle refuses to guess when rounding exceeds the tolerance") {
  CHECK_THROWS_AS(geometric_oracle(3, 1e-300), OracleError);
}
