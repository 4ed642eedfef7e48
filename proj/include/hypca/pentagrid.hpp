#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypca {

/// Raised for child indices outside a node's arity and malformed address text.
class AddressError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A frontier cell was asked for a neighbour table it does not have yet.
class NeedsGrowth : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeColor : std::uint8_t { White, Black };

inline constexpr int kSectors = 5;
inline constexpr int kSides = 5;

/// Fibonacci-tree coordinate of a pentagon of the tiling {5,4}.
///
/// The central cell is its own kind. Every other cell lies in one of the five
/// sectors around it and is reached from the sector root by a path of child
/// indices: a white node has children {0: black, 1: white, 2: white}, a black
/// node has {0: black, 1: white}. Sector roots are white. Every path that
/// respects the arities is canonical, so distinct addresses denote distinct
/// pentagons.
class CellAddress {
 public:
  CellAddress() = default;  // the central cell

  static CellAddress center() { return {}; }
  static CellAddress root(int sector);

  bool is_center() const { return sector_ < 0; }
  int sector() const { return sector_; }
  const std::vector<std::uint8_t>& path() const { return path_; }

  /// Graph distance from the central cell.
  int level() const { return is_center() ? 0 : 1 + static_cast<int>(path_.size()); }
  NodeColor color() const;
  int arity() const { return color() == NodeColor::White ? 3 : 2; }

  CellAddress parent() const;
  CellAddress child(int index) const;

  /// `C` for the centre, `s:p1.p2...` otherwise (`s:` for a sector root).
  std::string str() const;
  static CellAddress parse(std::string_view text);

  friend auto operator<=>(const CellAddress&, const CellAddress&) = default;
  friend bool operator==(const CellAddress&, const CellAddress&) = default;

 private:
  friend CellAddress normalize(int sector, std::vector<int> raw_path);

  std::int8_t sector_ = -1;
  std::vector<std::uint8_t> path_;
};

/// Builds a canonical tree address. Sector numbers are taken modulo 5; each
/// child index must be valid for the colour of the node it descends from.
CellAddress normalize(int sector, std::vector<int> raw_path);

/// Next / previous cell on the same level, turning counter-clockwise around
/// the centre. Wraps across sector boundaries.
CellAddress level_successor(const CellAddress& a);
CellAddress level_predecessor(const CellAddress& a);

/// The five neighbours of `a` in counter-clockwise side order. Slot 0 is the
/// parent (for the centre: the sector-0 root).
std::array<CellAddress, kSides> neighbor_addresses(const CellAddress& a);

/// Side of `parent` through which its `index`-th child is seen.
int child_side(const CellAddress& parent, int index);

}  // namespace hypca

template <>
struct std::hash<hypca::CellAddress> {
  std::size_t operator()(const hypca::CellAddress& a) const noexcept;
};

namespace hypca {

using CellId = std::int32_t;
inline constexpr CellId kUnresolved = -1;

struct CellRecord {
  CellAddress address;
  std::array<CellId, kSides> neighbors{kUnresolved, kUnresolved, kUnresolved, kUnresolved,
                                       kUnresolved};
  int level = 0;
  NodeColor color = NodeColor::White;

  bool resolved() const { return neighbors[0] != kUnresolved; }
};

/// A finite patch of the pentagrid with dense cell ids.
///
/// Cells are added either as a full disk (`grow`) or one at a time around the
/// cells a simulation touches (`resolve`). Resolving a cell fills its
/// neighbour slots; already linked slots never change.
class RegionGraph {
 public:
  RegionGraph();

  static RegionGraph disk(int radius);

  /// Adds every cell at distance <= new_radius; cells strictly inside are
  /// resolved.
  void grow(int new_radius);

  int radius() const { return radius_; }
  std::size_t size() const { return cells_.size(); }

  CellId find(const CellAddress& a) const;
  bool contains(const CellAddress& a) const { return find(a) != kUnresolved; }

  /// Adds `a` (unresolved) if absent.
  CellId ensure(const CellAddress& a);
  /// Adds `a` and its five neighbours and links them.
  CellId resolve(const CellAddress& a);
  CellId resolve(CellId id);

  const CellRecord& cell(CellId id) const { return cells_.at(static_cast<std::size_t>(id)); }
  const std::vector<CellRecord>& cells() const { return cells_; }

  /// Neighbour addresses of a resolved cell; throws NeedsGrowth otherwise.
  std::array<CellAddress, kSides> neighbors(const CellAddress& a) const;

  /// One line per cell: `address  level  color  n1 n2 n3 n4 n5`.
  std::string dump() const;

 private:
  std::vector<CellRecord> cells_;
  std::unordered_map<CellAddress, CellId> index_;
  int radius_ = 0;
};

}  // namespace hypca
