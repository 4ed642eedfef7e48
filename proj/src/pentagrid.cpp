#include "hypca/pentagrid.hpp"

#include <charconv>
#include <deque>
#include <sstream>

#include <fmt/format.h>

namespace hypca {

CellAddress CellAddress::root(int sector) { return normalize(sector, {}); }

NodeColor CellAddress::color() const {
  if (path_.empty() || path_.back() != 0) return NodeColor::White;
  return NodeColor::Black;
}

CellAddress CellAddress::parent() const {
  if (is_center()) throw AddressError("the central cell has no parent");
  CellAddress p = *this;
  if (p.path_.empty()) return center();
  p.path_.pop_back();
  return p;
}

CellAddress CellAddress::child(int index) const {
  if (is_center()) {
    if (index < 0 || index >= kSectors) throw AddressError(fmt::format("no child {} of C", index));
    return root(index);
  }
  if (index < 0 || index >= arity())
    throw AddressError(fmt::format("child index {} out of range for {}", index, str()));
  CellAddress c = *this;
  c.path_.push_back(static_cast<std::uint8_t>(index));
  return c;
}

std::string CellAddress::str() const {
  if (is_center()) return "C";
  std::string s = fmt::format("{}:", static_cast<int>(sector_));
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i) s += '.';
    s += static_cast<char>('0' + path_[i]);
  }
  return s;
}

CellAddress CellAddress::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text == "C") return center();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw AddressError(fmt::format("malformed address '{}'", text));
  int sector = 0;
  auto head = text.substr(0, colon);
  auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), sector);
  if (ec != std::errc{} || p != head.data() + head.size() || sector < 0 || sector >= kSectors)
    throw AddressError(fmt::format("bad sector in '{}'", text));
  std::vector<int> path;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto dot = rest.find('.');
    auto tok = rest.substr(0, dot);
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '2')
      throw AddressError(fmt::format("bad path component in '{}'", text));
    path.push_back(tok[0] - '0');
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
    if (rest.empty()) throw AddressError(fmt::format("trailing '.' in '{}'", text));
  }
  return normalize(sector, std::move(path));
}

CellAddress normalize(int sector, std::vector<int> raw_path) {
  CellAddress a;
  a.sector_ = static_cast<std::int8_t>(((sector % kSectors) + kSectors) % kSectors);
  a.path_.reserve(raw_path.size());
  for (int idx : raw_path) {
    if (idx < 0 || idx >= a.arity())
      throw AddressError(fmt::format("child index {} out of range below {}", idx, a.str()));
    a.path_.push_back(static_cast<std::uint8_t>(idx));
  }
  return a;
}

CellAddress level_successor(const CellAddress& a) {
  if (a.is_center()) throw AddressError("C has no level successor");
  if (a.path().empty()) return CellAddress::root(a.sector() + 1);
  const CellAddress par = a.parent();
  const int last = a.path().back();
  if (last + 1 < par.arity()) return par.child(last + 1);
  return level_successor(par).child(0);
}

CellAddress level_predecessor(const CellAddress& a) {
  if (a.is_center()) throw AddressError("C has no level predecessor");
  if (a.path().empty()) return CellAddress::root(a.sector() + kSectors - 1);
  const CellAddress par = a.parent();
  const int last = a.path().back();
  if (last > 0) return par.child(last - 1);
  const CellAddress pp = level_predecessor(par);
  return pp.child(pp.arity() - 1);
}

std::array<CellAddress, kSides> neighbor_addresses(const CellAddress& a) {
  if (a.is_center()) {
    return {CellAddress::root(0), CellAddress::root(1), CellAddress::root(2), CellAddress::root(3),
            CellAddress::root(4)};
  }
  const CellAddress next = level_successor(a).child(0);
  if (a.color() == NodeColor::White) return {a.parent(), a.child(0), a.child(1), a.child(2), next};
  return {a.parent(), level_predecessor(a.parent()), a.child(0), a.child(1), next};
}

int child_side(const CellAddress& parent, int index) {
  if (parent.is_center()) return index;
  return parent.color() == NodeColor::White ? index + 1 : index + 2;
}

}  // namespace hypca

std::size_t std::hash<hypca::CellAddress>::operator()(const hypca::CellAddress& a) const noexcept {
  std::size_t h = static_cast<std::size_t>(a.sector() + 2) * 0x9E3779B97F4A7C15ull;
  for (auto c : a.path()) h = (h ^ (c + 1)) * 0x100000001B3ull;
  return h ^ (a.path().size() << 1);
}

namespace hypca {

RegionGraph::RegionGraph() { ensure(CellAddress::center()); }

RegionGraph RegionGraph::disk(int radius) {
  RegionGraph g;
  g.grow(radius);
  return g;
}

CellId RegionGraph::find(const CellAddress& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? kUnresolved : it->second;
}

CellId RegionGraph::ensure(const CellAddress& a) {
  auto [it, inserted] = index_.try_emplace(a, static_cast<CellId>(cells_.size()));
  if (inserted) {
    CellRecord r;
    r.address = a;
    r.level = a.level();
    r.color = a.color();
    cells_.push_back(std::move(r));
  }
  return it->second;
}

CellId RegionGraph::resolve(const CellAddress& a) { return resolve(ensure(a)); }

CellId RegionGraph::resolve(CellId id) {
  if (cells_[static_cast<std::size_t>(id)].resolved()) return id;
  const auto nb = neighbor_addresses(cells_[static_cast<std::size_t>(id)].address);
  std::array<CellId, kSides> ids{};
  for (int k = 0; k < kSides; ++k) ids[k] = ensure(nb[k]);
  cells_[static_cast<std::size_t>(id)].neighbors = ids;
  return id;
}

void RegionGraph::grow(int new_radius) {
  if (new_radius <= radius_) return;
  std::deque<CellId> queue{0};
  std::vector<char> seen(cells_.size(), 0);
  seen[0] = 1;
  while (!queue.empty()) {
    const CellId id = queue.front();
    queue.pop_front();
    if (cells_[static_cast<std::size_t>(id)].level >= new_radius) continue;
    resolve(id);
    seen.resize(cells_.size(), 0);
    for (CellId n : cells_[static_cast<std::size_t>(id)].neighbors) {
      if (!seen[static_cast<std::size_t>(n)] && cells_[static_cast<std::size_t>(n)].level >
                                                   cells_[static_cast<std::size_t>(id)].level) {
        seen[static_cast<std::size_t>(n)] = 1;
        queue.push_back(n);
      }
    }
  }
  radius_ = std::max(radius_, new_radius);
}

std::array<CellAddress, kSides> RegionGraph::neighbors(const CellAddress& a) const {
  const CellId id = find(a);
  if (id == kUnresolved) throw NeedsGrowth(fmt::format("{} is not in the region", a.str()));
  const CellRecord& r = cell(id);
  if (!r.resolved()) throw NeedsGrowth(fmt::format("{} is on the frontier", a.str()));
  std::array<CellAddress, kSides> out;
  for (int k = 0; k < kSides; ++k) out[k] = cell(r.neighbors[k]).address;
  return out;
}

std::string RegionGraph::dump() const {
  std::ostringstream os;
  for (const auto& r : cells_) {
    os << fmt::format("{:<14} {:>3} {}", r.address.str(), r.level,
                      r.color == NodeColor::White ? 'W' : 'B');
    for (CellId n : r.neighbors) os << ' ' << (n == kUnresolved ? std::string("?") : cell(n).address.str());
    os << '\n';
  }
  return os.str();
}

}  // namespace hypca
