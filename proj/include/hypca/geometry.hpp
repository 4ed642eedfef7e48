#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/pentagrid.hpp"

namespace hypca {

using Complex = std::complex<double>;

/// Orientation-preserving isometry of the Poincaré disk,
/// z -> (a z + b) / (conj(b) z + conj(a)) with |a|^2 - |b|^2 = 1.
class DiskIsometry {
 public:
  DiskIsometry() = default;
  DiskIsometry(Complex a, Complex b);

  static DiskIsometry identity() { return {}; }
  static DiskIsometry rotation(double theta);
  /// Hyperbolic translation taking 0 to p.
  static DiskIsometry translation(Complex p);
  /// Rotation by pi about p.
  static DiskIsometry half_turn(Complex p);

  Complex apply(Complex z) const;
  Complex a() const { return a_; }
  Complex b() const { return b_; }
  /// |a|^2 - |b|^2 - 1.
  double det_residual() const { return std::norm(a_) - std::norm(b_) - 1.0; }

  /// (f * g)(z) = f(g(z)).
  friend DiskIsometry operator*(const DiskIsometry& f, const DiskIsometry& g);

 private:
  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
};

double hyperbolic_distance(Complex z, Complex w);

/// Euclidean circle (or line through 0) carrying the geodesic through p, q.
struct Geodesic {
  bool is_line = false;
  Complex center;     // circle centre; for a line, a unit direction
  double radius = 0;  // circle radius
  Complex reflect(Complex z) const;
};
Geodesic geodesic_through(Complex p, Complex q);

/// Interior angle at vertex v of a geodesic polygon with neighbours u, w.
double interior_angle(Complex u, Complex v, Complex w);

struct Pentagon {
  /// Counter-clockwise; side k joins vertices k and k+1.
  std::array<Complex, 5> vertices;
};

/// Regular right-angled pentagon centred at 0, side 0 bisected by the
/// positive real axis.
Pentagon base_pentagon();
/// Euclidean distance from 0 to a vertex / to a side midpoint of the base tile.
double base_vertex_radius();
double base_midpoint_radius();
/// Same vertex radius, found by bisection on the interior angle.
double base_vertex_radius_bisected();

/// Isometry carrying the base tile onto its neighbour across side `side`.
DiskIsometry step_across(int side);

/// Isometry carrying the base tile onto the tile of `a`, with side k of the
/// base tile landing on neighbour slot k of `a`.
DiskIsometry place(const CellAddress& a);

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tiling of a disk obtained from the base pentagon by repeated reflection in
/// its sides, independent of any addressing scheme.
struct OracleTiling {
  struct Tile {
    Complex center;
    std::array<Complex, 5> vertices;  // counter-clockwise
    std::array<int, 5> neighbor{-1, -1, -1, -1, -1};  // across side k
    int level = 0;
  };
  std::vector<Tile> tiles;  // tile 0 is the base tile
};

/// Tiles at distance <= radius. Throws OracleError when two tiles are closer
/// than the matching tolerance allows without coinciding.
OracleTiling geometric_oracle(int radius, double tolerance = 1e-9);

struct IsomorphismReport {
  bool ok = false;
  std::size_t matched = 0;
  std::vector<std::string> problems;
};

/// Matches region cells of level <= radius to oracle tiles, fixing C to the
/// base tile and slot 0 of C to side 0, and checks that every side relation
/// agrees in counter-clockwise order.
IsomorphismReport check_isomorphism(RegionGraph& region, const OracleTiling& oracle, int radius);

}  // namespace hypca
