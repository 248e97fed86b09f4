#pragma once

// Shared helpers for the unit and acceptance suites: draw recording,
// random valid configs, and the canonical experiment recipes.

#include <random>
#include <vector>

#include "caflow/engine.hpp"
#include "caflow/types.hpp"
#include "caflow/validate.hpp"

namespace testsupport {

// Passes draws through and keeps the values, so a seeded run can be
// replayed as a script.
class RecordingSource final : public caflow::OffsetSource {
public:
    explicit RecordingSource(caflow::OffsetSource& inner) : inner_(inner) {}

    int next(const caflow::OffsetSet& feasible) override {
        const int r = inner_.next(feasible);
        script_.push_back(r);
        return r;
    }

    const std::vector<int>& script() const { return script_; }

private:
    caflow::OffsetSource& inner_;
    std::vector<int> script_;
};

// Single inlet in the right lower cell, wall across the plume.
inline caflow::SimConfig single_inlet_20x20() {
    caflow::SimConfig config;
    config.rows = 20;
    config.cols = 20;
    config.steps = 200;
    config.capacity = 3;
    config.seed = 7;
    config.inflow = caflow::InflowPattern::single(20);
    config.obstacles = {{10, 13, 10, 20}};
    return config;
}

// Full-side inflow against a centered wall; the capacity-sweep base.
inline caflow::SimConfig sweep_base_50x50() {
    caflow::SimConfig config;
    config.rows = 50;
    config.cols = 50;
    config.steps = 200;
    config.capacity = 3;
    config.seed = 1;
    config.inflow = caflow::InflowPattern::full(50);
    config.obstacles = {{25, 13, 25, 38}};
    return config;
}

// Desk-scale throughput configuration.
inline caflow::SimConfig full_inlet_200x200() {
    caflow::SimConfig config;
    config.rows = 200;
    config.cols = 200;
    config.steps = 200;
    config.capacity = 3;
    config.seed = 1;
    config.inflow = caflow::InflowPattern::full(200);
    config.obstacles = {{100, 51, 100, 150}};
    return config;
}

// Valid random config with obstacles kept off row 1, so they can never
// cover an inflow cell.
inline caflow::SimConfig random_config_sized(std::mt19937_64& rng, int rows, int cols,
                                             int steps) {
    caflow::SimConfig config;
    config.rows = rows;
    config.cols = cols;
    config.steps = steps;
    config.capacity = std::uniform_int_distribution<int>(1, 4)(rng);
    config.seed = rng();

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int j = 1; j <= cols; ++j)
        if (coin(rng) < 0.3) config.inflow.columns.push_back(j);
    if (config.inflow.columns.empty())
        config.inflow.columns.push_back(std::uniform_int_distribution<int>(1, cols)(rng));

    if (rows >= 3) {
        const int rect_count = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int k = 0; k < rect_count; ++k) {
            caflow::Rect rect;
            rect.r1 = std::uniform_int_distribution<int>(2, rows)(rng);
            rect.r2 = std::min(rows, rect.r1 + std::uniform_int_distribution<int>(0, 2)(rng));
            rect.c1 = std::uniform_int_distribution<int>(1, cols)(rng);
            rect.c2 = std::min(cols, rect.c1 + std::uniform_int_distribution<int>(0, 4)(rng));
            config.obstacles.push_back(rect);
        }
    }

    caflow::validate_or_throw(config);
    return config;
}

inline caflow::SimConfig random_config(std::mt19937_64& rng, int max_rows, int max_cols,
                                       int steps) {
    const int rows = std::uniform_int_distribution<int>(3, max_rows)(rng);
    const int cols = std::uniform_int_distribution<int>(3, max_cols)(rng);
    return random_config_sized(rng, rows, cols, steps);
}

}  // namespace testsupport
