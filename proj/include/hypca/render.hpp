#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypca/configuration.hpp"
#include "hypca/geometry.hpp"
#include "hypca/pentagrid.hpp"

namespace hypca {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fill colour per state; blank cells are drawn in level-dependent blues.
struct Palette {
  std::map<std::string, std::string> fill;  // state -> #rrggbb

  /// Dark red track, light yellow seed and support, plus defaults for the
  /// rest.
  static Palette standard();
  /// `state=#rrggbb` per line, `#` at line start is a comment.
  static Palette parse(std::string_view text);
  std::string serialize() const;
};

struct RenderOptions {
  int size = 800;       // canvas edge in pixels
  int radius = 6;       // cells up to this level are drawn
  bool labels = false;  // print the state inside non-blank cells
};

/// Standalone SVG 1.1 document; sides are drawn as arcs orthogonal to the
/// boundary circle.
std::string render_svg(const Configuration& c, const Palette& palette, const RenderOptions& opt = {});

}  // namespace hypca
