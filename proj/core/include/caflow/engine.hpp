#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "caflow/offsets.hpp"
#include "caflow/types.hpp"

namespace caflow {

// Per-step accounting. Every molecule present before the sweep is placed
// exactly once, so advanced + carried equals the pre-step total.
struct StepLedger {
    std::int64_t injected = 0;             // added by inflow after the sweep
    std::int64_t exited = 0;               // advanced past the last row
    std::int64_t advanced = 0;             // row i -> row i+1 placements (exits included)
    std::int64_t carried = 0;              // lateral stays via capacity/obstacle blocking
    std::int64_t blocked_by_capacity = 0;  // destination already at capacity
    std::int64_t blocked_by_obstacle = 0;  // destination is an obstacle cell

    bool operator==(const StepLedger&) const = default;
};

// Optional per-placement instrumentation hook; all callbacks default to
// no-ops. dest_count_before is the destination's in-construction count at
// the instant of the advancement, which the capacity rule keeps below d.
class StepObserver {
public:
    virtual ~StepObserver() = default;

    virtual void on_step_begin(int /*step_index*/) {}
    virtual void on_advance(int /*dest_row*/, int /*dest_col*/, Count /*dest_count_before*/) {}
    virtual void on_exit(int /*from_row*/, int /*from_col*/) {}
    virtual void on_carry(int /*row*/, int /*dest_col*/, bool /*obstacle_blocked*/) {}
};

struct StepResult {
    GridState grid;
    StepLedger ledger;
};

// Full run record: frame 0 is the initial empty grid, frame k the state
// after step k; ledgers[k-1] accounts for step k.
struct History {
    SimConfig config;
    std::vector<GridState> frames;
    std::vector<StepLedger> ledgers;
};

// Largest row index holding any molecule, or nothing for an empty grid.
std::optional<int> front_row(const GridState& grid);

// One synchronous time step: sweeps rows from the material front down to
// row 1, double-buffering each destination row through a temporary array
// and collecting lateral stays in a carry array, then injects the inflow.
StepResult step(const GridState& old, const ObstacleMask& mask, const SimConfig& config,
                OffsetSource& source, StepObserver* observer = nullptr);

// Applies step() config.steps times starting from an empty grid.
History run(const SimConfig& config, OffsetSource& source, StepObserver* observer = nullptr);

// Same, with the offset source seeded from config.seed.
History run(const SimConfig& config);

}  // namespace caflow
