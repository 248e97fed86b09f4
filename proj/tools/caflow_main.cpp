// Command-line front end: deterministic runs, re-rendering of stored
// histories, log fitting, capacity sweeps and a throughput benchmark.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "caflow/engine.hpp"
#include "caflow/io.hpp"
#include "caflow/render.hpp"
#include "caflow/stats.hpp"
#include "caflow/validate.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_file(const fs::path& path, const std::string& text) {
    write_file(path, text.data(), text.size());
}

std::string frame_image_name(int step) {
    char name[32];
    std::snprintf(name, sizeof(name), "step_%06d.ppm", step);
    return name;
}

caflow::SimConfig load_config(const std::string& path) {
    return caflow::parse_config(read_file(path));
}

int cmd_run(const std::string& config_path, const std::string& out_dir, int image_every,
            const std::optional<std::uint64_t>& seed_override) {
    caflow::SimConfig config = load_config(config_path);
    if (seed_override) config.seed = *seed_override;

    const caflow::History history = caflow::run(config);
    const caflow::ObstacleMask mask = caflow::make_mask(config);
    const caflow::RunStats stats = caflow::compute_stats(history);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    write_file(dir / "history.txt", caflow::write_history(history));

    const caflow::GridState& final_frame = history.frames.back();
    const auto pixmap = caflow::density_image(final_frame, mask, {});
    write_file(dir / "final.ppm", pixmap.data(), pixmap.size());
    write_file(dir / "final.csv", caflow::heightfield_csv(final_frame, mask));

    std::ostringstream summary;
    summary << "max_mol = " << stats.max_mol << '\n'
            << "injected = " << stats.total_injected << '\n'
            << "exited = " << stats.total_exited << '\n'
            << "steps = " << config.steps << '\n';
    write_file(dir / "stats.txt", summary.str());

    if (image_every > 0) {
        for (int k = image_every; k <= config.steps; k += image_every) {
            const auto image = caflow::density_image(
                history.frames[static_cast<std::size_t>(k)], mask, {});
            write_file(dir / frame_image_name(k), image.data(), image.size());
        }
    }
    return 0;
}

int cmd_render(const std::string& history_path, int frame, const std::string& out_path,
               const std::optional<caflow::Count>& saturation) {
    const caflow::LoadedHistory loaded = caflow::read_history(read_file(history_path));
    if (frame < 0 || frame >= static_cast<int>(loaded.frames.size()))
        throw std::runtime_error("frame index " + std::to_string(frame) +
                                 " out of range (history has " +
                                 std::to_string(loaded.frames.size()) + " frames)");
    caflow::ImageSpec spec;
    spec.saturation = saturation;
    const auto image = caflow::density_image(loaded.frames[static_cast<std::size_t>(frame)],
                                             loaded.mask, spec);
    write_file(out_path, image.data(), image.size());
    return 0;
}

int cmd_fit(const std::string& points_path) {
    const std::string text = read_file(points_path);
    std::vector<std::pair<double, double>> points;

    std::istringstream lines(text);
    std::string line;
    bool first = true;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        double x = 0.0, y = 0.0;
        char comma = 0;
        std::istringstream fields(line);
        if (fields >> x >> comma >> y && comma == ',') {
            points.emplace_back(x, y);
        } else if (first) {
            // header line
        } else {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'x,y'");
        }
        first = false;
    }

    const caflow::LogFit fit = caflow::log_fit(points);
    std::printf("a=%.6f b=%.6f r2=%.6f\n", fit.slope, fit.intercept, fit.r_squared);
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::vector<int>& d_values,
              const std::vector<std::uint64_t>& seeds, const std::string& out_path) {
    const caflow::SimConfig base = load_config(config_path);
    const auto table = caflow::sweep_capacity(base, d_values, seeds);
    write_file(out_path, caflow::sweep_table_csv(table));
    return 0;
}

int cmd_bench(const std::string& config_path, int repeat) {
    const caflow::SimConfig config = load_config(config_path);
    std::printf("grid %dx%d, steps %d, inflow %zu columns\n", config.rows, config.cols,
                config.steps, config.inflow.columns.size());

    std::vector<double> cell_rates, move_rates;
    for (int sample = 1; sample <= repeat; ++sample) {
        const auto start = std::chrono::steady_clock::now();
        const caflow::History history = caflow::run(config);
        const auto stop = std::chrono::steady_clock::now();
        const double elapsed =
            std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);

        std::int64_t moves = 0;
        for (const caflow::StepLedger& ledger : history.ledgers)
            moves += ledger.advanced + ledger.carried;
        const double cells = static_cast<double>(config.rows) * config.cols * config.steps;

        cell_rates.push_back(cells / elapsed);
        move_rates.push_back(static_cast<double>(moves) / elapsed);
        std::printf("sample %d: %.4g cell-steps/s, %.4g molecule-moves/s\n", sample,
                    cell_rates.back(), move_rates.back());
    }

    auto median = [](std::vector<double> values) {
        std::sort(values.begin(), values.end());
        const std::size_t mid = values.size() / 2;
        return values.size() % 2 == 1 ? values[mid]
                                      : 0.5 * (values[mid - 1] + values[mid]);
    };
    std::printf("median: %.4g cell-steps/s, %.4g molecule-moves/s\n", median(cell_rates),
                median(move_rates));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cellular-automaton lattice flow simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, history_path, out_path, points_path;
    int image_every = 0;
    int frame = 0;
    int repeat = 3;
    std::optional<std::uint64_t> seed_override;
    std::optional<caflow::Count> saturation;
    std::vector<int> d_values;
    std::vector<std::uint64_t> seeds;

    CLI::App* run = app.add_subcommand("run", "Run a simulation and write its outputs");
    run->add_option("--config", config_path, "Config file")->required();
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_option("--image-every", image_every, "Also write a pixmap every K steps")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", seed_override, "Override the config seed");

    CLI::App* render = app.add_subcommand("render", "Render one frame of a stored history");
    render->add_option("--history", history_path, "History file")->required();
    render->add_option("--frame", frame, "Frame index, 0 = initial grid")
        ->required()
        ->check(CLI::NonNegativeNumber);
    render->add_option("--out", out_path, "Output pixmap path")->required();
    render->add_option("--saturation", saturation, "Count at which the blue ramp saturates")
        ->check(CLI::PositiveNumber);

    CLI::App* fit = app.add_subcommand("fit", "Fit y = a*ln(x) + b to CSV points");
    fit->add_option("--points", points_path, "CSV file of x,y points")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "Mean max_mol for a list of capacities");
    sweep->add_option("--config", config_path, "Base config file")->required();
    sweep->add_option("--d-list", d_values, "Capacities, e.g. 1,2,3")
        ->required()
        ->delimiter(',');
    sweep->add_option("--seeds", seeds, "Seeds averaged per capacity")
        ->required()
        ->delimiter(',');
    sweep->add_option("--out", out_path, "Output CSV path")->required();

    CLI::App* bench = app.add_subcommand("bench", "Measure simulation throughput");
    bench->add_option("--config", config_path, "Config file")->required();
    bench->add_option("--repeat", repeat, "Number of timed samples")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir, image_every, seed_override);
        if (render->parsed()) return cmd_render(history_path, frame, out_path, saturation);
        if (fit->parsed()) return cmd_fit(points_path);
        if (sweep->parsed()) return cmd_sweep(config_path, d_values, seeds, out_path);
        if (bench->parsed()) return cmd_bench(config_path, repeat);
    } catch (const caflow::ValidationError& e) {
        std::cerr << "invalid config:\n";
        for (const std::string& message : e.errors()) std::cerr << "  " << message << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
