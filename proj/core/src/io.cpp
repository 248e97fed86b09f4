#include "caflow/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "caflow/validate.hpp"

namespace caflow {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<std::int64_t> parse_i64(std::string_view token) {
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || token.empty()) return std::nullopt;
    return value;
}

std::optional<std::uint64_t> parse_u64(std::string_view token) {
    std::uint64_t value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || token.empty()) return std::nullopt;
    return value;
}

// Yields lines without their trailing '\n', tracking 1-based line numbers.
class LineCursor {
public:
    explicit LineCursor(std::string_view text) : text_(text) {}

    std::optional<std::string_view> next() {
        if (pos_ >= text_.size()) return std::nullopt;
        ++line_;
        const std::size_t nl = text_.find('\n', pos_);
        std::string_view content;
        if (nl == std::string_view::npos) {
            content = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            content = text_.substr(pos_, nl - pos_);
            pos_ = nl + 1;
        }
        return content;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    int line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

// Integers separated by single spaces, no leading or trailing blanks.
std::vector<std::int64_t> split_strict_ints(std::string_view line, int line_no) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next_space = line.find(' ', pos);
        const std::string_view token = next_space == std::string_view::npos
                                           ? line.substr(pos)
                                           : line.substr(pos, next_space - pos);
        const auto value = parse_i64(token);
        if (!value) throw ParseError(line_no, "non-integer token '" + std::string(token) + "'");
        values.push_back(*value);
        if (next_space == std::string_view::npos) break;
        pos = next_space + 1;
    }
    return values;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

// ---------------------------------------------------------------- config

namespace {

struct KeyValue {
    std::string value;
    int line = 0;
};

struct Section {
    int line = 0;  // line of the [header]
    std::map<std::string, KeyValue> keys;
};

int require_int(const Section& section, const std::string& key, const char* section_name) {
    auto it = section.keys.find(key);
    if (it == section.keys.end())
        throw ParseError(section.line,
                         "missing key '" + key + "' in [" + section_name + "]");
    const auto value = parse_i64(it->second.value);
    if (!value || *value < std::numeric_limits<int>::min() ||
        *value > std::numeric_limits<int>::max())
        throw ParseError(it->second.line, "invalid integer for key '" + key + "'");
    return static_cast<int>(*value);
}

void forbid(const Section& section, const std::string& key, const std::string& reason) {
    auto it = section.keys.find(key);
    if (it != section.keys.end()) throw ParseError(it->second.line, reason);
}

}  // namespace

SimConfig parse_config(std::string_view text) {
    const std::map<std::string, std::vector<std::string>> known_keys = {
        {"grid", {"rows", "cols", "steps", "d", "seed"}},
        {"inflow", {"pattern", "column", "columns", "offset"}},
        {"obstacle", {"rect"}},
    };

    std::map<std::string, Section> sections;
    std::vector<std::pair<Rect, int>> rects;  // value + line
    std::string current;

    LineCursor cursor(text);
    while (auto raw = cursor.next()) {
        std::string_view content = *raw;
        const std::size_t hash = content.find('#');
        if (hash != std::string_view::npos) content = content.substr(0, hash);
        content = trim(content);
        if (content.empty()) continue;
        const int line_no = cursor.line();

        if (content.front() == '[') {
            if (content.back() != ']')
                throw ParseError(line_no, "unterminated section header");
            const std::string name(trim(content.substr(1, content.size() - 2)));
            if (!known_keys.count(name))
                throw ParseError(line_no, "unknown section [" + name + "]");
            if (sections.count(name))
                throw ParseError(line_no, "duplicate section [" + name + "]");
            sections[name].line = line_no;
            current = name;
            continue;
        }

        const std::size_t eq = content.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected 'key = value'");
        const std::string key(trim(content.substr(0, eq)));
        const std::string value(trim(content.substr(eq + 1)));
        if (key.empty()) throw ParseError(line_no, "empty key");
        if (current.empty())
            throw ParseError(line_no, "key '" + key + "' outside any section");

        const auto& allowed = known_keys.at(current);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError(line_no, "unknown key '" + key + "' in [" + current + "]");

        if (current == "obstacle" && key == "rect") {
            std::istringstream in(value);
            Rect rect;
            std::string extra;
            if (!(in >> rect.r1 >> rect.c1 >> rect.r2 >> rect.c2) || (in >> extra))
                throw ParseError(line_no, "rect needs exactly four integers 'r1 c1 r2 c2'");
            rects.emplace_back(rect, line_no);
            continue;
        }

        Section& section = sections[current];
        if (section.keys.count(key))
            throw ParseError(line_no, "duplicate key '" + key + "' in [" + current + "]");
        section.keys[key] = {value, line_no};
    }

    if (!sections.count("grid")) throw ParseError(0, "missing [grid] section");
    if (!sections.count("inflow")) throw ParseError(0, "missing [inflow] section");
    const Section& grid = sections.at("grid");
    const Section& inflow = sections.at("inflow");

    SimConfig config;
    config.rows = require_int(grid, "rows", "grid");
    config.cols = require_int(grid, "cols", "grid");
    config.steps = require_int(grid, "steps", "grid");
    config.capacity = require_int(grid, "d", "grid");
    {
        auto it = grid.keys.find("seed");
        if (it == grid.keys.end())
            throw ParseError(grid.line, "missing key 'seed' in [grid]");
        const auto seed = parse_u64(it->second.value);
        if (!seed) throw ParseError(it->second.line, "invalid integer for key 'seed'");
        config.seed = *seed;
    }

    auto pattern_it = inflow.keys.find("pattern");
    if (pattern_it == inflow.keys.end())
        throw ParseError(inflow.line, "missing key 'pattern' in [inflow]");
    const std::string& pattern = pattern_it->second.value;

    if (pattern == "single") {
        forbid(inflow, "columns", "'columns' is only valid with pattern = list");
        forbid(inflow, "offset", "'offset' is only valid with pattern = alternate");
        config.inflow = InflowPattern::single(require_int(inflow, "column", "inflow"));
    } else if (pattern == "alternate") {
        forbid(inflow, "column", "'column' is only valid with pattern = single");
        forbid(inflow, "columns", "'columns' is only valid with pattern = list");
        int first = 1;
        if (auto it = inflow.keys.find("offset"); it != inflow.keys.end()) {
            first = require_int(inflow, "offset", "inflow");
            if (first < 1) throw ParseError(it->second.line, "offset must be >= 1");
        }
        config.inflow = InflowPattern::alternating(first, config.cols);
    } else if (pattern == "all") {
        forbid(inflow, "column", "'column' is only valid with pattern = single");
        forbid(inflow, "columns", "'columns' is only valid with pattern = list");
        forbid(inflow, "offset", "'offset' is only valid with pattern = alternate");
        config.inflow = InflowPattern::full(config.cols);
    } else if (pattern == "list") {
        forbid(inflow, "column", "'column' is only valid with pattern = single");
        forbid(inflow, "offset", "'offset' is only valid with pattern = alternate");
        auto it = inflow.keys.find("columns");
        if (it == inflow.keys.end())
            throw ParseError(inflow.line, "missing key 'columns' in [inflow]");
        std::string_view rest = it->second.value;
        while (true) {
            const std::size_t comma = rest.find(',');
            const std::string_view token =
                trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
            const auto value = parse_i64(token);
            if (!value || *value < std::numeric_limits<int>::min() ||
                *value > std::numeric_limits<int>::max())
                throw ParseError(it->second.line,
                                 "invalid column '" + std::string(token) + "'");
            config.inflow.columns.push_back(static_cast<int>(*value));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    } else {
        throw ParseError(pattern_it->second.line,
                         "unknown pattern '" + pattern +
                             "' (expected single, alternate, all or list)");
    }

    for (const auto& [rect, line] : rects) config.obstacles.push_back(rect);

    validate_or_throw(config);
    return config;
}

// --------------------------------------------------------------- history

std::string write_frames(std::span<const GridState> frames, const ObstacleMask& mask) {
    if (frames.empty()) throw std::logic_error("history must contain at least one frame");
    std::ostringstream out;
    out << mask.rows() << ' ' << mask.cols() << ' ' << frames.size() << '\n';
    for (const GridState& frame : frames) {
        if (frame.rows() != mask.rows() || frame.cols() != mask.cols())
            throw std::logic_error("frame and mask dimensions disagree");
        out << '\n';
        for (int i = 1; i <= frame.rows(); ++i) {
            for (int j = 1; j <= frame.cols(); ++j) {
                if (j > 1) out << ' ';
                if (mask.blocked(i, j)) {
                    if (frame.at(i, j) != 0)
                        throw std::logic_error("molecules present on an obstacle cell");
                    out << -1;
                } else {
                    out << frame.at(i, j);
                }
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string write_history(const History& history) {
    return write_frames(history.frames, make_mask(history.config));
}

LoadedHistory read_history(std::string_view text) {
    LineCursor cursor(text);

    const auto header = cursor.next();
    if (!header) throw ParseError(1, "malformed header: empty input");
    std::vector<std::int64_t> dims;
    try {
        dims = split_strict_ints(trim(*header), cursor.line());
    } catch (const ParseError&) {
        throw ParseError(cursor.line(), "malformed header");
    }
    if (dims.size() != 3 || dims[0] < 1 || dims[1] < 1 || dims[2] < 1)
        throw ParseError(cursor.line(), "malformed header: expected 'rows cols frames'");
    if (dims[0] > 1000000 || dims[1] > 1000000 || dims[0] * dims[1] > 50000000)
        throw ParseError(cursor.line(), "grid too large");
    const int rows = static_cast<int>(dims[0]);
    const int cols = static_cast<int>(dims[1]);
    const std::int64_t frame_count = dims[2];

    LoadedHistory loaded;
    loaded.rows = rows;
    loaded.cols = cols;
    loaded.mask = ObstacleMask(rows, cols);

    for (std::int64_t f = 0; f < frame_count; ++f) {
        const auto blank = cursor.next();
        if (!blank)
            throw ParseError(cursor.line(), "frame count mismatch: header declares " +
                                                std::to_string(frame_count) + " frames, found " +
                                                std::to_string(f));
        if (!trim(*blank).empty())
            throw ParseError(cursor.line(), "expected blank line before frame");

        GridState frame(rows, cols);
        for (int i = 1; i <= rows; ++i) {
            const auto line = cursor.next();
            if (!line)
                throw ParseError(cursor.line(), "short frame: frame " + std::to_string(f) +
                                                    " ends after " + std::to_string(i - 1) +
                                                    " of " + std::to_string(rows) + " rows");
            const auto values = split_strict_ints(*line, cursor.line());
            if (static_cast<int>(values.size()) != cols)
                throw ParseError(cursor.line(),
                                 "frame row has " + std::to_string(values.size()) +
                                     " values, expected " + std::to_string(cols));
            for (int j = 1; j <= cols; ++j) {
                const std::int64_t v = values[static_cast<std::size_t>(j - 1)];
                if (v < -1) throw ParseError(cursor.line(), "count < -1");
                if (v > std::numeric_limits<Count>::max())
                    throw ParseError(cursor.line(), "count out of range");
                if (v == -1) {
                    if (f == 0)
                        loaded.mask.block(i, j);
                    else if (!loaded.mask.blocked(i, j))
                        throw ParseError(cursor.line(), "obstacle cells differ between frames");
                } else {
                    if (f > 0 && loaded.mask.blocked(i, j))
                        throw ParseError(cursor.line(), "obstacle cells differ between frames");
                    frame.at(i, j) = static_cast<Count>(v);
                }
            }
        }
        loaded.frames.push_back(std::move(frame));
    }

    if (!cursor.at_end()) throw ParseError(cursor.line() + 1, "unexpected trailing data");
    return loaded;
}

ParsedFrame parse_frame(std::string_view text, int rows, int cols) {
    if (rows < 1 || cols < 1) throw ParseError(0, "frame dimensions must be >= 1");
    ParsedFrame parsed{GridState(rows, cols), ObstacleMask(rows, cols)};

    const auto is_separator = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };

    std::size_t pos = 0;
    std::int64_t seen = 0;
    const std::int64_t wanted = static_cast<std::int64_t>(rows) * cols;
    while (pos < text.size()) {
        while (pos < text.size() && is_separator(text[pos])) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_separator(text[end])) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        pos = end;

        const auto value = parse_i64(token);
        if (!value) throw ParseError(0, "non-integer token '" + std::string(token) + "'");
        if (*value < -1) throw ParseError(0, "count < -1");
        if (*value > std::numeric_limits<Count>::max())
            throw ParseError(0, "count out of range");
        if (seen >= wanted) throw ParseError(0, "too many values for frame");

        const int i = static_cast<int>(seen / cols) + 1;
        const int j = static_cast<int>(seen % cols) + 1;
        if (*value == -1)
            parsed.mask.block(i, j);
        else
            parsed.grid.at(i, j) = static_cast<Count>(*value);
        ++seen;
    }
    if (seen != wanted)
        throw ParseError(0, "short frame: " + std::to_string(seen) + " of " +
                                std::to_string(wanted) + " values");
    return parsed;
}

}  // namespace caflow
