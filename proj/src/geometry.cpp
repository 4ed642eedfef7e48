#include "hypca/geometry.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <unordered_map>

#include <fmt/format.h>

namespace hypca {

namespace {
constexpr double kPi = std::numbers::pi;
}

DiskIsometry::DiskIsometry(Complex a, Complex b) : a_(a), b_(b) {
  const double d = std::norm(a_) - std::norm(b_);
  if (!(d > 0)) throw std::invalid_argument("not a disk isometry");
  const double s = 1.0 / std::sqrt(d);
  a_ *= s;
  b_ *= s;
}

DiskIsometry DiskIsometry::rotation(double theta) {
  return {std::polar(1.0, theta / 2), Complex{0.0, 0.0}};
}

DiskIsometry DiskIsometry::translation(Complex p) { return {Complex{1.0, 0.0}, p}; }

DiskIsometry DiskIsometry::half_turn(Complex p) {
  const DiskIsometry t = translation(p);
  const DiskIsometry t_inv{std::conj(t.a_), -t.b_};
  return t * rotation(kPi) * t_inv;
}

Complex DiskIsometry::apply(Complex z) const {
  return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
}

DiskIsometry operator*(const DiskIsometry& f, const DiskIsometry& g) {
  // [[a, b], [conj b, conj a]] matrices multiply in the same shape.
  const Complex a = f.a_ * g.a_ + f.b_ * std::conj(g.b_);
  const Complex b = f.a_ * g.b_ + f.b_ * std::conj(g.a_);
  return {a, b};
}

double hyperbolic_distance(Complex z, Complex w) {
  const double r = std::abs(z - w) / std::abs(Complex{1.0, 0.0} - std::conj(w) * z);
  return 2.0 * std::atanh(std::min(r, 1.0 - 1e-17));
}

Complex Geodesic::reflect(Complex z) const {
  if (is_line) return center * center * std::conj(z);
  const Complex d = z - center;
  return center + radius * radius / std::conj(d);
}

Geodesic geodesic_through(Complex p, Complex q) {
  // centre c solves 2 Re(conj(c) x) = |x|^2 + 1 for x in {p, q}
  const double det = p.real() * q.imag() - p.imag() * q.real();
  Geodesic g;
  if (std::abs(det) < 1e-14 * (std::abs(p) + std::abs(q) + 1e-300)) {
    g.is_line = true;
    const Complex d = std::abs(p) > std::abs(q) ? p : q;
    g.center = d / std::abs(d);
    return g;
  }
  const double rp = (std::norm(p) + 1.0) / 2.0;
  const double rq = (std::norm(q) + 1.0) / 2.0;
  const double cx = (rp * q.imag() - rq * p.imag()) / det;
  const double cy = (p.real() * rq - q.real() * rp) / det;
  g.center = {cx, cy};
  g.radius = std::sqrt(std::norm(g.center) - 1.0);
  return g;
}

namespace {

// unit tangent at p of the geodesic from p towards q
Complex tangent_towards(Complex p, Complex q) {
  const Geodesic g = geodesic_through(p, q);
  Complex t;
  if (g.is_line) {
    t = q - p;
  } else {
    const Complex r = p - g.center;
    t = Complex{-r.imag(), r.real()};
    if (std::real(std::conj(t) * (q - p)) < 0) t = -t;
  }
  return t / std::abs(t);
}

}  // namespace

double interior_angle(Complex u, Complex v, Complex w) {
  const Complex a = tangent_towards(v, u);
  const Complex b = tangent_towards(v, w);
  return std::abs(std::arg(b / a));
}

double base_vertex_radius() {
  const double cosh_r = 1.0 / std::tan(kPi / 5) / std::tan(kPi / 4);
  return std::tanh(std::acosh(cosh_r) / 2);
}

double base_midpoint_radius() {
  const double cosh_rho = std::cos(kPi / 4) / std::sin(kPi / 5);
  return std::tanh(std::acosh(cosh_rho) / 2);
}

namespace {

Pentagon pentagon_with_radius(double r) {
  Pentagon p;
  for (int k = 0; k < 5; ++k) p.vertices[k] = std::polar(r, 2 * kPi * (k - 0.5) / 5);
  return p;
}

}  // namespace

double base_vertex_radius_bisected() {
  double lo = 1e-6, hi = 1.0 - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    const Pentagon p = pentagon_with_radius(mid);
    const double ang = interior_angle(p.vertices[4], p.vertices[0], p.vertices[1]);
    (ang > kPi / 2 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

Pentagon base_pentagon() { return pentagon_with_radius(base_vertex_radius()); }

DiskIsometry step_across(int side) {
  return DiskIsometry::rotation(2 * kPi * side / 5) *
         DiskIsometry::half_turn(Complex{base_midpoint_radius(), 0.0});
}

DiskIsometry place(const CellAddress& a) {
  if (a.is_center()) return DiskIsometry::identity();
  // the tile of a child is reached from its parent through `child_side`;
  // slot 0 of the child then faces the parent.
  std::vector<int> sides;
  CellAddress cur = a;
  while (!cur.is_center()) {
    const CellAddress par = cur.parent();
    const int idx = cur.path().empty() ? cur.sector() : cur.path().back();
    sides.push_back(child_side(par, idx));
    cur = par;
  }
  DiskIsometry g;
  for (auto it = sides.rbegin(); it != sides.rend(); ++it) g = g * step_across(*it);
  return g;
}

namespace {

struct CellKey {
  long long x, y;
  bool operator==(const CellKey&) const = default;
};
struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    return std::hash<long long>()(k.x * 73856093LL ^ k.y * 19349663LL);
  }
};

class SpatialIndex {
 public:
  explicit SpatialIndex(double cell) : cell_(cell) {}

  CellKey key(Complex z) const {
    return {static_cast<long long>(std::floor(z.real() / cell_)),
            static_cast<long long>(std::floor(z.imag() / cell_))};
  }
  void insert(Complex z, int id) { buckets_[key(z)].push_back(id); }

  template <class F>
  void near(Complex z, F&& f) const {
    const CellKey k = key(z);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = buckets_.find({k.x + dx, k.y + dy});
        if (it == buckets_.end()) continue;
        for (int id : it->second) f(id);
      }
  }

 private:
  double cell_;
  std::unordered_map<CellKey, std::vector<int>, CellKeyHash> buckets_;
};

// z -> M z or z -> M conj(z), M acting as a fractional linear map.
struct Mirror {
  std::array<Complex, 4> m{Complex{1.0, 0.0}, {}, {}, Complex{1.0, 0.0}};
  bool flip = false;

  Complex apply(Complex z) const {
    if (flip) z = std::conj(z);
    return (m[0] * z + m[1]) / (m[2] * z + m[3]);
  }
};

Mirror compose(const Mirror& f, const Mirror& g) {
  std::array<Complex, 4> b = g.m;
  if (f.flip)
    for (auto& x : b) x = std::conj(x);
  const auto& a = f.m;
  Mirror h;
  h.m = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
         a[2] * b[1] + a[3] * b[3]};
  h.flip = f.flip != g.flip;
  double big = 0;
  for (const auto& x : h.m) big = std::max(big, std::abs(x));
  for (auto& x : h.m) x /= big;
  return h;
}

// reflection across side s of the base pentagon
Mirror side_mirror(int s) {
  const double m = base_midpoint_radius();
  Mirror t, t_inv, flip, rot, rot_inv;
  t.m = {Complex{1.0, 0.0}, Complex{m, 0.0}, Complex{m, 0.0}, Complex{1.0, 0.0}};
  t_inv.m = {Complex{1.0, 0.0}, Complex{-m, 0.0}, Complex{-m, 0.0}, Complex{1.0, 0.0}};
  flip.m = {Complex{-1.0, 0.0}, {}, {}, Complex{1.0, 0.0}};
  flip.flip = true;
  rot.m[0] = std::polar(1.0, 2 * kPi * s / 5);
  rot_inv.m[0] = std::polar(1.0, -2 * kPi * s / 5);
  return compose(rot, compose(t, compose(flip, compose(t_inv, rot_inv))));
}

}  // namespace

OracleTiling geometric_oracle(int radius, double tolerance) {
  OracleTiling out;
  const Pentagon base = base_pentagon();
  out.tiles.push_back({Complex{0.0, 0.0}, base.vertices, {-1, -1, -1, -1, -1}, 0});
  // Tile centres are at least 2*rho apart; anything between the matching
  // tolerance and this floor means the arithmetic can no longer tell tiles apart.
  const double ambiguous = 0.25;
  SpatialIndex index(1e-3);
  index.insert(out.tiles[0].center, 0);
  // every tile is the image of the base tile: vertex j is map(base vertex perm[j])
  std::array<Mirror, 5> mirrors;
  for (int s = 0; s < 5; ++s) mirrors[s] = side_mirror(s);
  std::vector<Mirror> maps{Mirror{}};
  std::vector<std::array<int, 5>> perms{{0, 1, 2, 3, 4}};

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    for (int k = 0; k < 5; ++k) {
      if (out.tiles[id].neighbor[k] != -1) continue;
      const auto& t = out.tiles[id];
      const Complex p = t.vertices[k], q = t.vertices[(k + 1) % 5];
      const std::array<int, 5> perm = perms[id];
      const int s = (perm[k] + 1) % 5 == perm[(k + 1) % 5] ? perm[k] : perm[(k + 1) % 5];
      const Mirror across = compose(maps[id], mirrors[s]);
      const Complex c = across.apply(Complex{0.0, 0.0});

      int found = -1;
      index.near(c, [&](int other) {
        const double d = hyperbolic_distance(c, out.tiles[other].center);
        if (d < tolerance) {
          found = other;
        } else if (d < ambiguous) {
          throw OracleError(fmt::format(
              "tiles {} and {} are {:.3g} apart: radius {} is numerically unstable", id, other, d,
              radius));
        }
      });
      if (found == -1) {
        if (t.level + 1 > radius) continue;
        OracleTiling::Tile nt;
        nt.center = c;
        nt.level = t.level + 1;
        // reflection reverses orientation: old side k becomes new side 0
        std::array<int, 5> np;
        for (int j = 0; j < 5; ++j) np[j] = perm[((k + 1) - j + 10) % 5];
        for (int j = 0; j < 5; ++j) nt.vertices[j] = across.apply(base.vertices[np[j]]);
        maps.push_back(across);
        perms.push_back(np);
        found = static_cast<int>(out.tiles.size());
        out.tiles.push_back(nt);
        index.insert(c, found);
        queue.push_back(found);
      }
      // find the side of `found` shared with `id`
      auto& f = out.tiles[found];
      int back = -1;
      for (int j = 0; j < 5; ++j) {
        const Complex a = f.vertices[j], b = f.vertices[(j + 1) % 5];
        if (hyperbolic_distance(a, q) < 1e-6 && hyperbolic_distance(b, p) < 1e-6) back = j;
      }
      if (back == -1)
        throw OracleError(fmt::format("tiles {} and {} share no side", id, found));
      out.tiles[id].neighbor[k] = found;
      f.neighbor[back] = id;
    }
  }
  return out;
}

IsomorphismReport check_isomorphism(RegionGraph& region, const OracleTiling& oracle, int radius) {
  IsomorphismReport rep;
  region.grow(radius + 1);
  std::unordered_map<CellAddress, std::pair<int, int>> match;  // tile, side offset
  std::vector<int> tile_owner(oracle.tiles.size(), -1);
  auto problem = [&](std::string s) {
    if (rep.problems.size() < 20) rep.problems.push_back(std::move(s));
  };

  std::deque<CellAddress> queue{CellAddress::center()};
  match[CellAddress::center()] = {0, 0};
  tile_owner[0] = 0;
  while (!queue.empty()) {
    const CellAddress a = queue.front();
    queue.pop_front();
    const auto [tile, off] = match.at(a);
    const auto nb = neighbor_addresses(a);
    for (int k = 0; k < 5; ++k) {
      const CellAddress& b = nb[k];
      if (b.level() > radius) continue;
      const int side = (off + k) % 5;
      const int t2 = oracle.tiles[tile].neighbor[side];
      if (t2 < 0) {
        problem(fmt::format("{} slot {}: no tile across side {}", a.str(), k, side));
        continue;
      }
      const auto back_nb = neighbor_addresses(b);
      int j = -1;
      for (int s = 0; s < 5; ++s)
        if (back_nb[s] == a) j = s;
      int f = -1;
      for (int s = 0; s < 5; ++s)
        if (oracle.tiles[t2].neighbor[s] == tile) f = s;
      if (j < 0 || f < 0) {
        problem(fmt::format("{} and {} are not mutual neighbours", a.str(), b.str()));
        continue;
      }
      const int off2 = ((f - j) % 5 + 5) % 5;
      auto it = match.find(b);
      if (it == match.end()) {
        if (tile_owner[t2] != -1) {
          problem(fmt::format("tile {} claimed twice (by {})", t2, b.str()));
          continue;
        }
        tile_owner[t2] = 1;
        match[b] = {t2, off2};
        queue.push_back(b);
      } else if (it->second != std::pair{t2, off2}) {
        problem(fmt::format("{} reached inconsistently", b.str()));
      }
    }
  }
  std::size_t cells = 0;
  for (const auto& r : region.cells())
    if (r.level <= radius) ++cells;
  std::size_t tiles = 0;
  for (const auto& t : oracle.tiles)
    if (t.level <= radius) ++tiles;
  rep.matched = match.size();
  if (match.size() != cells) problem(fmt::format("matched {} of {} cells", match.size(), cells));
  if (tiles != cells) problem(fmt::format("{} tiles vs {} cells", tiles, cells));
  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace hypca
