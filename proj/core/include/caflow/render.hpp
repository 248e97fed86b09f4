#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "caflow/types.hpp"

namespace caflow {

// Rendering parameters. Without an explicit saturation the count at which
// the blue ramp saturates is the frame's maximum (at least 1), so sparse
// frames stay visible. Row 1 is always the bottom pixel row.
struct ImageSpec {
    std::optional<Count> saturation;
};

// Binary portable pixmap (P6, maxval 255), one pixel per cell. Obstacles
// are black, empty cells white, occupied cells (v,v,255) with v falling
// linearly to 0 as the count reaches saturation.
std::vector<std::uint8_t> density_image(const GridState& frame, const ObstacleMask& mask,
                                        const ImageSpec& spec);

// n lines of m comma-separated counts, row 1 first; obstacle cells as -1.
std::string heightfield_csv(const GridState& frame, const ObstacleMask& mask);

// One character per cell: '.' empty, '#' obstacle, '1'..'9', '+' above 9.
// Row 1 is printed last (bottom), matching the image orientation.
std::string ascii_preview(const GridState& frame, const ObstacleMask& mask);

}  // namespace caflow
