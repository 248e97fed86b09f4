#include "caflow/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace caflow {

namespace {

void check_same_shape(const GridState& frame, const ObstacleMask& mask) {
    if (frame.rows() != mask.rows() || frame.cols() != mask.cols())
        throw std::logic_error("frame and mask dimensions disagree");
}

}  // namespace

std::vector<std::uint8_t> density_image(const GridState& frame, const ObstacleMask& mask,
                                        const ImageSpec& spec) {
    check_same_shape(frame, mask);
    if (spec.saturation && *spec.saturation < 1)
        throw std::invalid_argument("saturation must be >= 1");

    Count sat;
    if (spec.saturation) {
        sat = *spec.saturation;
    } else {
        sat = 1;
        for (int i = 1; i <= frame.rows(); ++i)
            for (int j = 1; j <= frame.cols(); ++j) sat = std::max(sat, frame.at(i, j));
    }

    char header[32];
    const int header_len =
        std::snprintf(header, sizeof(header), "P6\n%d %d\n255\n", frame.cols(), frame.rows());

    std::vector<std::uint8_t> bytes;
    bytes.reserve(static_cast<std::size_t>(header_len) +
                  3u * static_cast<std::size_t>(frame.rows()) *
                      static_cast<std::size_t>(frame.cols()));
    bytes.insert(bytes.end(), header, header + header_len);

    // Row 1 is the inflow side and sits at the bottom of the image.
    for (int i = frame.rows(); i >= 1; --i) {
        for (int j = 1; j <= frame.cols(); ++j) {
            if (mask.blocked(i, j)) {
                bytes.insert(bytes.end(), {0, 0, 0});
                continue;
            }
            const Count c = frame.at(i, j);
            if (c == 0) {
                bytes.insert(bytes.end(), {255, 255, 255});
                continue;
            }
            const long clipped = std::min<long>(c, sat);
            const auto v = static_cast<std::uint8_t>(
                255 - std::lround(255.0 * static_cast<double>(clipped) / sat));
            bytes.insert(bytes.end(), {v, v, 255});
        }
    }
    return bytes;
}

std::string heightfield_csv(const GridState& frame, const ObstacleMask& mask) {
    check_same_shape(frame, mask);
    std::ostringstream out;
    for (int i = 1; i <= frame.rows(); ++i) {
        for (int j = 1; j <= frame.cols(); ++j) {
            if (j > 1) out << ',';
            if (mask.blocked(i, j))
                out << -1;
            else
                out << frame.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string ascii_preview(const GridState& frame, const ObstacleMask& mask) {
    check_same_shape(frame, mask);
    std::string out;
    for (int i = frame.rows(); i >= 1; --i) {
        for (int j = 1; j <= frame.cols(); ++j) {
            if (mask.blocked(i, j)) {
                out += '#';
            } else {
                const Count c = frame.at(i, j);
                if (c == 0)
                    out += '.';
                else if (c <= 9)
                    out += static_cast<char>('0' + c);
                else
                    out += '+';
            }
        }
        if (i > 1) out += '\n';
    }
    return out;
}

}  // namespace caflow
