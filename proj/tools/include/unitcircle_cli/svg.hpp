#pragma once

#include <string>

#include "unitcircle/regions.hpp"

namespace unitcircle::cli {

struct SvgStyle {
  int width = 720;
  int height = 720;
  int margin = 64;
  double frame = 1.1;  ///< axis range as a multiple of the bound box
};

/// Plot of an s = 2 dataset: shaded inside cells, dashed bound box and l1
/// ball, solid boundary curves. Throws IndexOutOfRange for other s.
std::string region_to_svg(const RegionDataset& d, const std::string& tool_version, const SvgStyle& style = {});

}  // namespace unitcircle::cli
