#pragma once

#include <cstddef>
#include <string>

#include "markov/gmtree.hpp"
#include "markov/rational.hpp"

namespace markov {

struct SvgOptions {
  ExtRational t;
  GMParams params;
  bool shifted = false;
  bool signs = false;  // sign copies instead of edge letters
};

struct SvgDocument {
  std::string text;
  std::size_t annotations = 0;
};

/// Visual stand-in for ε when drawing the shifted segment, in grid cells.
inline constexpr double kVisualEpsilon = 0.18;

/// Standalone SVG 1.1 figure: modified-lattice grid, the segment, and one
/// <text class="annotation"> per edge letter (or per sign copy).
SvgDocument render_svg(const SvgOptions& opts);

}  // namespace markov
