#include "caflow/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "caflow/validate.hpp"

namespace caflow {

RunStats compute_stats(const History& history) {
    RunStats stats;
    for (const GridState& frame : history.frames)
        for (int i = 1; i <= frame.rows(); ++i)
            for (int j = 1; j <= frame.cols(); ++j)
                stats.max_mol = std::max(stats.max_mol, frame.at(i, j));

    for (const StepLedger& ledger : history.ledgers) {
        stats.total_injected += ledger.injected;
        stats.total_exited += ledger.exited;
    }

    if (!history.frames.empty()) {
        const GridState& last = history.frames.back();
        const ObstacleMask mask = make_mask(history.config);
        stats.final_row_mean.reserve(static_cast<std::size_t>(last.rows()));
        for (int i = 1; i <= last.rows(); ++i) {
            std::int64_t row_total = 0;
            int open_cells = 0;
            for (int j = 1; j <= last.cols(); ++j) {
                row_total += last.at(i, j);
                if (!mask.blocked(i, j)) ++open_cells;
            }
            stats.final_row_mean.push_back(
                open_cells > 0 ? static_cast<double>(row_total) / open_cells : 0.0);
        }
    }
    return stats;
}

LogFit log_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("log fit needs at least 2 points");
    for (const auto& [x, y] : points)
        if (!(x > 0.0)) throw std::invalid_argument("log fit needs strictly positive x");
    const double first = points.front().first;
    bool distinct = false;
    for (const auto& [x, y] : points)
        if (x != first) distinct = true;
    if (!distinct) throw std::invalid_argument("degenerate abscissae");

    const double count = static_cast<double>(points.size());
    double mean_lx = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_lx += std::log(x);
        mean_y += y;
    }
    mean_lx /= count;
    mean_y /= count;

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = std::log(x) - mean_lx;
        sxx += dx * dx;
        sxy += dx * (y - mean_y);
    }

    LogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_lx;

    double ss_res = 0.0, ss_tot = 0.0;
    for (const auto& [x, y] : points) {
        const double e = y - (fit.slope * std::log(x) + fit.intercept);
        ss_res += e * e;
        const double dy = y - mean_y;
        ss_tot += dy * dy;
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

std::vector<SweepRow> sweep_capacity(const SimConfig& base, const std::vector<int>& d_values,
                                     const std::vector<std::uint64_t>& seeds) {
    if (d_values.empty()) throw std::invalid_argument("d_values must be nonempty");
    for (std::size_t k = 1; k < d_values.size(); ++k)
        if (d_values[k] <= d_values[k - 1])
            throw std::invalid_argument("d_values must be strictly increasing");
    if (seeds.empty()) throw std::invalid_argument("seeds must be nonempty");

    std::vector<SweepRow> table;
    table.reserve(d_values.size());
    for (int d : d_values) {
        std::int64_t sum = 0;
        for (std::uint64_t seed : seeds) {
            SimConfig config = base;
            config.capacity = d;
            config.seed = seed;
            sum += compute_stats(run(config)).max_mol;
        }
        table.push_back({d, static_cast<double>(sum) / static_cast<double>(seeds.size())});
    }
    return table;
}

std::string sweep_table_csv(std::span<const SweepRow> table) {
    std::ostringstream out;
    out << "d,mean_max_mol\n";
    for (const SweepRow& row : table) out << row.capacity << ',' << row.mean_max_mol << '\n';
    return out.str();
}

}  // namespace caflow
