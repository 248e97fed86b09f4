#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "caflow/engine.hpp"
#include "caflow/types.hpp"

namespace caflow {

// Syntax-level failure in a config or history text; line is 1-based,
// 0 when no single line is responsible.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);

    int line() const { return line_; }

private:
    int line_;
};

// Parses the INI-style run description:
//
//   [grid]      rows, cols, steps, d, seed        (all required)
//   [inflow]    pattern = single|alternate|all|list
//               column   (single), columns = j1,j2,...  (list),
//               offset   (alternate start column, default 1)
//   [obstacle]  rect = r1 c1 r2 c2                 (zero or more)
//
// '#' starts a comment, blank lines are skipped, unknown keys and sections
// are rejected. The result is validated; throws ParseError or
// ValidationError.
SimConfig parse_config(std::string_view text);

// History file: header "rows cols frames", then each frame preceded by one
// blank line, rows lines of cols space-separated integers, row 1 first.
// Obstacle cells carry -1; counts are >= 0. UTF-8, LF endings, bit-exact.
std::string write_frames(std::span<const GridState> frames, const ObstacleMask& mask);
std::string write_history(const History& history);

// Frames plus the obstacle layout recovered from the -1 sentinels. The
// run's config is not part of the format.
struct LoadedHistory {
    int rows = 0;
    int cols = 0;
    std::vector<GridState> frames;
    ObstacleMask mask;
};

LoadedHistory read_history(std::string_view text);

// Parses rows x cols integers separated by commas and/or whitespace into a
// frame; -1 marks an obstacle cell. Accepts both the history frame layout
// and the heightfield CSV.
struct ParsedFrame {
    GridState grid;
    ObstacleMask mask;
};

ParsedFrame parse_frame(std::string_view text, int rows, int cols);

}  // namespace caflow
