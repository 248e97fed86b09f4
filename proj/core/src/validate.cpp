#include "caflow/validate.hpp"

#include <algorithm>
#include <sstream>

namespace caflow {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) out << "; ";
        out << parts[k];
    }
    return out.str();
}

}  // namespace

std::vector<std::string> validate(const SimConfig& config) {
    std::vector<std::string> errors;
    auto fail = [&errors](std::string msg) { errors.push_back(std::move(msg)); };

    if (config.rows < 1) fail("rows must be >= 1");
    if (config.cols < 1) fail("cols must be >= 1");
    if (config.steps < 0) fail("steps must be >= 0");
    if (config.capacity < 1) fail("d must be >= 1");

    const bool dims_ok = config.rows >= 1 && config.cols >= 1;

    if (config.inflow.columns.empty()) fail("inflow pattern must name at least one column");
    for (int j : config.inflow.columns) {
        if (dims_ok && (j < 1 || j > config.cols))
            fail("inflow column " + std::to_string(j) + " outside [1, " +
                 std::to_string(config.cols) + "]");
    }
    for (std::size_t k = 1; k < config.inflow.columns.size(); ++k) {
        if (config.inflow.columns[k] <= config.inflow.columns[k - 1]) {
            fail("inflow columns must be strictly increasing");
            break;
        }
    }

    for (const Rect& r : config.obstacles) {
        std::ostringstream name;
        name << "obstacle rect (" << r.r1 << "," << r.c1 << "," << r.r2 << "," << r.c2 << ")";
        if (r.r1 > r.r2 || r.c1 > r.c2) {
            fail(name.str() + " has inverted corners");
            continue;
        }
        if (dims_ok &&
            (r.r1 < 1 || r.c1 < 1 || r.r2 > config.rows || r.c2 > config.cols)) {
            fail(name.str() + " lies outside the grid");
            continue;
        }
        if (r.r1 == 1) {
            for (int j : config.inflow.columns) {
                if (j >= r.c1 && j <= r.c2) {
                    fail(name.str() + " covers inflow cell (1," + std::to_string(j) + ")");
                    break;
                }
            }
        }
    }

    return errors;
}

ValidationError::ValidationError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

void validate_or_throw(const SimConfig& config) {
    auto errors = validate(config);
    if (!errors.empty()) throw ValidationError(std::move(errors));
}

}  // namespace caflow
