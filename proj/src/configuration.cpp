#include "hypca/configuration.hpp"

#include <sstream>

#include <fmt/format.h>

#include "hypca/rules.hpp"

namespace hypca {

const std::string& Configuration::at(const CellAddress& a) const {
  auto it = cells_.find(a);
  return it == cells_.end() ? blank_ : it->second;
}

void Configuration::set(const CellAddress& a, std::string_view state) {
  if (state == blank_) cells_.erase(a);
  else cells_.insert_or_assign(a, std::string(state));
}

Configuration parse_configuration(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  std::vector<std::pair<CellAddress, std::string>> entries;
  std::string blank = "N";
  while (std::getline(is, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.resize(c);
    std::istringstream ls(line);
    std::string a, s, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> s) || (ls >> extra))
      throw ParseError(lineno, "expected `address state`");
    if (a == "@blank") {
      blank = s;
      continue;
    }
    try {
      entries.emplace_back(CellAddress::parse(a), s);
    } catch (const AddressError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  Configuration c(blank);
  for (auto& [a, s] : entries) c.set(a, s);
  return c;
}

std::string serialize(const Configuration& c) {
  std::ostringstream os;
  os << "@blank " << c.blank() << '\n';
  for (const auto& [a, s] : c.cells()) os << fmt::format("{:<16} {}\n", a.str(), s);
  return os.str();
}

}  // namespace hypca
