#pragma once

#include <cstdint>
#include <vector>

namespace caflow {

// Per-cell molecule count. Aggregates (totals, ledger sums) use 64 bits.
using Count = std::int32_t;

// Inclusive cell rectangle, 1-based like all grid coordinates in this
// project: rows run 1..n from the inflow side, columns 1..m.
struct Rect {
    int r1 = 0;
    int c1 = 0;
    int r2 = 0;
    int c2 = 0;

    bool operator==(const Rect&) const = default;
};

// Occupancy lattice. counts(i,j) is the number of molecules stacked on
// cell (i,j); obstacle cells always hold 0 internally (the -1 sentinel
// exists only in serialized form).
class GridState {
public:
    GridState() = default;
    GridState(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Count at(int i, int j) const { return counts_[index(i, j)]; }
    Count& at(int i, int j) { return counts_[index(i, j)]; }

    std::int64_t total() const;

    bool operator==(const GridState&) const = default;

private:
    std::size_t index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Count> counts_;
};

// Static obstacle layout; immutable for the duration of a run.
class ObstacleMask {
public:
    ObstacleMask() = default;
    ObstacleMask(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool blocked(int i, int j) const { return blocked_[index(i, j)] != 0; }
    void block(int i, int j) { blocked_[index(i, j)] = 1; }
    void block(const Rect& rect);

    bool operator==(const ObstacleMask&) const = default;

private:
    std::size_t index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> blocked_;
};

// Columns of row 1 that receive one molecule per step.
struct InflowPattern {
    std::vector<int> columns;

    static InflowPattern single(int column);
    // Every second column starting at `first` (1 = odd columns), up to `cols`.
    static InflowPattern alternating(int first, int cols);
    static InflowPattern full(int cols);

    bool operator==(const InflowPattern&) const = default;
};

struct SimConfig {
    int rows = 0;
    int cols = 0;
    int steps = 0;
    int capacity = 0;  // max destination occupancy that still admits advancement
    std::uint64_t seed = 0;
    InflowPattern inflow;
    std::vector<Rect> obstacles;

    bool operator==(const SimConfig&) const = default;
};

ObstacleMask make_mask(const SimConfig& config);

}  // namespace caflow
