#ifndef TRACKZERO_CLI_SVG_HPP
#define TRACKZERO_CLI_SVG_HPP

#include "trackzero/isolate/isolate.hpp"

#include <string>

namespace tz {

struct SvgOptions {
  int size = 600;   // pixels per side of the drawing area
  int glyphs = 24;  // direction glyphs per axis
};

// Static SVG 1.1 phase portrait: unit direction glyphs of f, zero-block cells,
// their collars, and the isolating boundary loops.
std::string render_svg(const VectorField& f, const IsolationResult& iso, const SvgOptions& opts = {});

}  // namespace tz

#endif
