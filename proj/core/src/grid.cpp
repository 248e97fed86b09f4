#include "caflow/types.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace caflow {

GridState::GridState(int rows, int cols)
    : rows_(rows), cols_(cols),
      counts_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be >= 1");
}

std::size_t GridState::index(int i, int j) const {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
}

std::int64_t GridState::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

ObstacleMask::ObstacleMask(int rows, int cols)
    : rows_(rows), cols_(cols),
      blocked_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("mask dimensions must be >= 1");
}

std::size_t ObstacleMask::index(int i, int j) const {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
}

void ObstacleMask::block(const Rect& rect) {
    for (int i = rect.r1; i <= rect.r2; ++i)
        for (int j = rect.c1; j <= rect.c2; ++j) block(i, j);
}

InflowPattern InflowPattern::single(int column) { return {{column}}; }

InflowPattern InflowPattern::alternating(int first, int cols) {
    InflowPattern p;
    for (int j = first; j <= cols; j += 2) p.columns.push_back(j);
    return p;
}

InflowPattern InflowPattern::full(int cols) {
    InflowPattern p;
    p.columns.resize(static_cast<std::size_t>(cols));
    std::iota(p.columns.begin(), p.columns.end(), 1);
    return p;
}

ObstacleMask make_mask(const SimConfig& config) {
    ObstacleMask mask(config.rows, config.cols);
    for (const Rect& rect : config.obstacles) mask.block(rect);
    return mask;
}

}  // namespace caflow
