#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permtab/tableau.hpp"

namespace permtab {

// Monospaced rendering: boxes drawn with +, -, |, dots as '*', border labels
// along the northeast boundary (vertical labels to the right of their row,
// horizontal labels under their column). With a trace, the zig-zag path of
// that label is overlaid using '-', '|' and '+' at turns, and a summary line
// "pi(i) = j" is appended. Output is deterministic and ends with a newline.
std::string render_ascii(const PermutationTableau& t, std::optional<int> trace = std::nullopt);

// Standalone SVG document with 36-unit boxes, filled circles for dots,
// boundary labels, and one polyline with an arrowhead per traced path.
// Byte-identical output for identical input.
std::string render_svg(const PermutationTableau& t, const std::vector<int>& traces = {});

}  // namespace permtab
