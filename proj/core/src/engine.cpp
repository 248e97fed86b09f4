#include "caflow/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "caflow/validate.hpp"

namespace caflow {

std::optional<int> front_row(const GridState& grid) {
    for (int i = grid.rows(); i >= 1; --i)
        for (int j = 1; j <= grid.cols(); ++j)
            if (grid.at(i, j) > 0) return i;
    return std::nullopt;
}

namespace {

void check_consistent(const GridState& old, const ObstacleMask& mask, const SimConfig& config) {
    if (old.rows() != config.rows || old.cols() != config.cols ||
        mask.rows() != config.rows || mask.cols() != config.cols)
        throw std::logic_error("grid, mask and config dimensions disagree");
    for (int i = 1; i <= old.rows(); ++i)
        for (int j = 1; j <= old.cols(); ++j)
            if (mask.blocked(i, j) && old.at(i, j) != 0)
                throw std::logic_error("molecules present on an obstacle cell");
}

}  // namespace

StepResult step(const GridState& old, const ObstacleMask& mask, const SimConfig& config,
                OffsetSource& source, StepObserver* observer) {
    check_consistent(old, mask, config);

    const int n = old.rows();
    const int m = old.cols();
    GridState next(n, m);
    StepLedger ledger;

    if (auto front = front_row(old)) {
        // ta holds the in-construction new contents of row i+1 (a virtual
        // exit row while i == n); ya collects the molecules staying in
        // row i. Columns are 1-based, slot 0 unused.
        std::vector<Count> ta(static_cast<std::size_t>(m) + 1, 0);
        std::vector<Count> ya(static_cast<std::size_t>(m) + 1, 0);

        auto stay = [&](int i, int j, int r, bool obstacle_blocked) {
            int dest = j + r;
            if (mask.blocked(i, dest)) dest = j;  // lateral target blocked: keep the column
            ++ya[static_cast<std::size_t>(dest)];
            ++ledger.carried;
            if (obstacle_blocked)
                ++ledger.blocked_by_obstacle;
            else
                ++ledger.blocked_by_capacity;
            if (observer) observer->on_carry(i, dest, obstacle_blocked);
        };

        for (int i = *front; i >= 1; --i) {
            std::fill(ya.begin(), ya.end(), 0);
            for (int j = 1; j <= m; ++j) {
                const Count occupants = old.at(i, j);
                if (occupants == 0) continue;
                const OffsetSet feasible = feasible_offsets(j, m);
                for (Count t = 0; t < occupants; ++t) {
                    const int r = draw_offset(source, feasible);
                    if (i == n) {
                        ++ledger.exited;
                        ++ledger.advanced;
                        if (observer) observer->on_exit(i, j);
                    } else if (mask.blocked(i + 1, j + r)) {
                        stay(i, j, r, true);
                    } else if (ta[static_cast<std::size_t>(j + r)] >= config.capacity) {
                        stay(i, j, r, false);
                    } else {
                        if (observer)
                            observer->on_advance(i + 1, j + r, ta[static_cast<std::size_t>(j + r)]);
                        ++ta[static_cast<std::size_t>(j + r)];
                        ++ledger.advanced;
                    }
                }
            }
            if (i < n)
                for (int j = 1; j <= m; ++j) next.at(i + 1, j) = ta[static_cast<std::size_t>(j)];
            ta.swap(ya);  // the stays of row i seed the new row i for the sweep of row i-1
        }
        for (int j = 1; j <= m; ++j) next.at(1, j) = ta[static_cast<std::size_t>(j)];
    }

    for (int j : config.inflow.columns) {
        ++next.at(1, j);
        ++ledger.injected;
    }

    return {std::move(next), ledger};
}

History run(const SimConfig& config, OffsetSource& source, StepObserver* observer) {
    validate_or_throw(config);
    const ObstacleMask mask = make_mask(config);

    History history;
    history.config = config;
    history.frames.reserve(static_cast<std::size_t>(config.steps) + 1);
    history.frames.emplace_back(config.rows, config.cols);
    history.ledgers.reserve(static_cast<std::size_t>(config.steps));

    for (int k = 1; k <= config.steps; ++k) {
        if (observer) observer->on_step_begin(k);
        StepResult result = step(history.frames.back(), mask, config, source, observer);
        history.frames.push_back(std::move(result.grid));
        history.ledgers.push_back(result.ledger);
    }
    return history;
}

History run(const SimConfig& config) {
    SeededOffsetSource source(config.seed);
    return run(config, source);
}

}  // namespace caflow
