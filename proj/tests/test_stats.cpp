#include <cmath>
#include <random>
#include <vector>

#include "caflow/stats.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace caflow;

namespace {

// Normal-equations route, deliberately different from the library's
// centered two-pass formulation.
LogFit cramer_oracle(const std::vector<std::pair<double, double>>& points) {
    long double s1 = static_cast<long double>(points.size());
    long double sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        const long double lx = std::log(static_cast<long double>(x));
        sx += lx;
        sxx += lx * lx;
        sy += y;
        sxy += lx * static_cast<long double>(y);
    }
    const long double det = s1 * sxx - sx * sx;
    LogFit fit;
    fit.slope = static_cast<double>((s1 * sxy - sx * sy) / det);
    fit.intercept = static_cast<double>((sxx * sy - sx * sxy) / det);

    long double ss_res = 0, ss_tot = 0;
    const long double mean_y = sy / s1;
    for (const auto& [x, y] : points) {
        const long double e =
            y - (fit.slope * std::log(static_cast<long double>(x)) + fit.intercept);
        ss_res += e * e;
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    fit.r_squared = static_cast<double>(ss_tot == 0 ? 1 : 1 - ss_res / ss_tot);
    return fit;
}

Count brute_force_max(const History& history) {
    Count best = 0;
    for (const GridState& frame : history.frames)
        for (int i = 1; i <= frame.rows(); ++i)
            for (int j = 1; j <= frame.cols(); ++j)
                if (frame.at(i, j) > best) best = frame.at(i, j);
    return best;
}

}  // namespace

TEST_CASE("compute_stats on empty frames") {
    SimConfig config = testsupport::single_inlet_20x20();
    config.steps = 0;
    const RunStats stats = compute_stats(run(config));
    CHECK(stats.max_mol == 0);
    CHECK(stats.total_injected == 0);
    CHECK(stats.total_exited == 0);
    REQUIRE(stats.final_row_mean.size() == 20);
    for (double mean : stats.final_row_mean) CHECK(mean == 0.0);
}

TEST_CASE("compute_stats sums the ledgers") {
    SimConfig config;
    config.rows = 5;
    config.cols = 1;
    config.steps = 3;
    config.capacity = 10;
    config.seed = 3;
    config.inflow = InflowPattern::single(1);
    const RunStats stats = compute_stats(run(config));
    CHECK(stats.total_injected == 3);
    CHECK(stats.total_exited == 0);
    CHECK(stats.max_mol == 1);
}

TEST_CASE("compute_stats takes the maximum over a hand-built history") {
    SimConfig config;
    config.rows = 2;
    config.cols = 2;
    config.steps = 0;
    config.capacity = 1;
    config.inflow = InflowPattern::single(1);

    History history;
    history.config = config;
    GridState frame(2, 2);
    frame.at(2, 1) = 7;
    history.frames.push_back(frame);

    const RunStats stats = compute_stats(history);
    CHECK(stats.max_mol == 7);
    CHECK(stats.final_row_mean[1] == doctest::Approx(3.5));
}

TEST_CASE("max_mol matches a brute-force scan on random runs") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 8; ++trial) {
        const SimConfig config = testsupport::random_config(rng, 12, 12, 25);
        const History history = run(config);
        CHECK(compute_stats(history).max_mol == brute_force_max(history));
    }
}

TEST_CASE("log_fit recovers an exact logarithmic law") {
    const std::vector<std::pair<double, double>> points = {
        {1.0, 1.0}, {std::exp(1.0), 3.0}, {std::exp(2.0), 5.0}};
    const LogFit fit = log_fit(points);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("log_fit rejects degenerate inputs") {
    CHECK_THROWS_AS(log_fit(std::vector<std::pair<double, double>>{{1.0, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        log_fit(std::vector<std::pair<double, double>>{{2.0, 1.0}, {2.0, 5.0}}),
        "degenerate abscissae", std::invalid_argument);
    CHECK_THROWS_AS(log_fit(std::vector<std::pair<double, double>>{{0.0, 1.0}, {2.0, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(log_fit(std::vector<std::pair<double, double>>{{-1.0, 1.0}, {2.0, 2.0}}),
                    std::invalid_argument);
}

TEST_CASE("log_fit agrees with a normal-equations oracle on noisy data") {
    std::mt19937_64 rng(31337);
    std::normal_distribution<double> noise(0.0, 0.25);
    std::vector<std::pair<double, double>> points;
    for (int k = 1; k <= 20; ++k) {
        const double x = k;
        points.emplace_back(x, 1.7 * std::log(x) - 0.4 + noise(rng));
    }
    const LogFit fit = log_fit(points);
    const LogFit expected = cramer_oracle(points);
    CHECK(fit.slope == doctest::Approx(expected.slope).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(expected.intercept).epsilon(1e-9));
    CHECK(fit.r_squared == doctest::Approx(expected.r_squared).epsilon(1e-9));
}

TEST_CASE("log_fit scales linearly with y") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> noise(0.0, 0.5);
    std::vector<std::pair<double, double>> points, scaled;
    const double factor = 3.75;
    for (int k = 1; k <= 15; ++k) {
        const double y = 2.0 * std::log(k) + 1.0 + noise(rng);
        points.emplace_back(k, y);
        scaled.emplace_back(k, factor * y);
    }
    const LogFit base = log_fit(points);
    const LogFit big = log_fit(scaled);
    CHECK(big.slope == doctest::Approx(factor * base.slope).epsilon(1e-12));
    CHECK(big.intercept == doctest::Approx(factor * base.intercept).epsilon(1e-12));
    CHECK(big.r_squared == doctest::Approx(base.r_squared).epsilon(1e-12));
}

TEST_CASE("a single sweep cell equals a direct run") {
    SimConfig base = testsupport::sweep_base_50x50();
    base.rows = 20;
    base.cols = 20;
    base.steps = 40;
    base.inflow = InflowPattern::full(20);
    base.obstacles = {{10, 5, 10, 15}};

    const auto table = sweep_capacity(base, {3}, {99});
    REQUIRE(table.size() == 1);
    CHECK(table[0].capacity == 3);

    SimConfig direct = base;
    direct.capacity = 3;
    direct.seed = 99;
    CHECK(table[0].mean_max_mol ==
          doctest::Approx(static_cast<double>(compute_stats(run(direct)).max_mol)));
}

TEST_CASE("a huge capacity never blocks a single-file column") {
    SimConfig config;
    config.rows = 5;
    config.cols = 3;
    config.steps = 4;
    config.capacity = 1000;  // above anything 4 injections can reach
    config.seed = 1;
    config.inflow = InflowPattern::single(2);

    ScriptedOffsetSource source({0, 0, 0, 0, 0, 0});  // one draw per move
    const History history = run(config, source);
    CHECK(compute_stats(history).max_mol == 1);
    std::int64_t blocked = 0;
    for (const auto& ledger : history.ledgers)
        blocked += ledger.blocked_by_capacity + ledger.blocked_by_obstacle;
    CHECK(blocked == 0);

    const auto table = sweep_capacity(config, {1000}, {config.seed});
    CHECK(table[0].mean_max_mol ==
          doctest::Approx(static_cast<double>(compute_stats(run(config)).max_mol)));
}

TEST_CASE("mean max_mol rises log-like with d under a concentrated inlet") {
    SimConfig base;
    base.rows = 50;
    base.cols = 50;
    base.steps = 200;
    base.capacity = 3;
    base.seed = 1;
    base.inflow = InflowPattern::single(25);
    base.obstacles = {{20, 10, 20, 40}};

    const auto table = sweep_capacity(base, {1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5});
    REQUIRE(table.size() == 8);

    // Spearman rank correlation; capacities are distinct, means may tie.
    std::vector<double> means;
    for (const auto& row : table) means.push_back(row.mean_max_mol);
    std::vector<double> rank(means.size());
    for (std::size_t a = 0; a < means.size(); ++a) {
        double r = 1.0;
        double ties = 0.0;
        for (std::size_t b = 0; b < means.size(); ++b) {
            if (means[b] < means[a]) r += 1.0;
            if (b != a && means[b] == means[a]) ties += 0.5;
        }
        rank[a] = r + ties;
    }
    const double n = static_cast<double>(means.size());
    double num = 0, den_x = 0, den_y = 0;
    for (std::size_t a = 0; a < means.size(); ++a) {
        const double dx = static_cast<double>(a + 1) - (n + 1) / 2.0;
        const double dy = rank[a] - (n + 1) / 2.0;
        num += dx * dy;
        den_x += dx * dx;
        den_y += dy * dy;
    }
    const double rho = num / std::sqrt(den_x * den_y);
    CHECK(rho >= 0.9);

    std::vector<std::pair<double, double>> points;
    for (const auto& row : table)
        points.emplace_back(static_cast<double>(row.capacity), row.mean_max_mol);
    CHECK(log_fit(points).r_squared >= 0.8);
}

TEST_CASE("sweep_capacity validates its inputs") {
    const SimConfig base = testsupport::sweep_base_50x50();
    CHECK_THROWS_AS(sweep_capacity(base, {}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_capacity(base, {3, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_capacity(base, {2, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_capacity(base, {1, 2}, {}), std::invalid_argument);
}

TEST_CASE("sweep table CSV format is fixed") {
    const std::vector<SweepRow> table = {{1, 3.2}, {2, 13.0}, {4, 21.25}};
    CHECK(sweep_table_csv(table) == "d,mean_max_mol\n1,3.2\n2,13\n4,21.25\n");
}
