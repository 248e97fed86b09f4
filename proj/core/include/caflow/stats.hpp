#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "caflow/engine.hpp"

namespace caflow {

struct RunStats {
    Count max_mol = 0;  // maximum cell occupancy over all frames
    std::int64_t total_injected = 0;
    std::int64_t total_exited = 0;
    // Mean occupancy of each row of the final frame, averaged over the
    // row's non-obstacle cells; index 0 is row 1.
    std::vector<double> final_row_mean;
};

RunStats compute_stats(const History& history);

// Least-squares fit of y = slope * ln(x) + intercept.
struct LogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares of y against ln x. Requires at least two points,
// strictly positive abscissae and at least two distinct x values.
LogFit log_fit(std::span<const std::pair<double, double>> points);

struct SweepRow {
    int capacity = 0;
    double mean_max_mol = 0.0;
};

// Runs the engine for every (capacity, seed) pair, taking base as the
// template config, and averages max_mol across seeds. d_values must be
// nonempty and strictly increasing.
std::vector<SweepRow> sweep_capacity(const SimConfig& base, const std::vector<int>& d_values,
                                     const std::vector<std::uint64_t>& seeds);

// CSV with header "d,mean_max_mol", one row per capacity, LF endings.
std::string sweep_table_csv(std::span<const SweepRow> table);

}  // namespace caflow
