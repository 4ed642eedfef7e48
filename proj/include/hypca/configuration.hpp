#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hypca/pentagrid.hpp"

namespace hypca {

/// Finite support of a pentagrid configuration: every cell not listed holds
/// the blank state.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::string blank) : blank_(std::move(blank)) {}

  const std::string& blank() const { return blank_; }
  const std::map<CellAddress, std::string>& cells() const { return cells_; }
  std::size_t support_size() const { return cells_.size(); }

  const std::string& at(const CellAddress& a) const;
  /// Writing the blank state removes the cell from the support.
  void set(const CellAddress& a, std::string_view state);

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.blank_ == b.blank_ && a.cells_ == b.cells_;
  }

 private:
  std::string blank_ = "N";
  std::map<CellAddress, std::string> cells_;
};

/// `address state` per line, `#` comments, optional `@blank s` header.
Configuration parse_configuration(std::string_view text);
std::string serialize(const Configuration& c);

}  // namespace hypca
