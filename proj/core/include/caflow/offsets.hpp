#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace caflow {

// Ordered subset of {-1, 0, 1}.
class OffsetSet {
public:
    constexpr OffsetSet() = default;

    constexpr void add(int r) { values_[size_++] = r; }
    constexpr int size() const { return size_; }
    constexpr int operator[](int idx) const { return values_[idx]; }

    constexpr bool contains(int r) const {
        for (int k = 0; k < size_; ++k)
            if (values_[k] == r) return true;
        return false;
    }

    constexpr bool operator==(const OffsetSet& other) const {
        if (size_ != other.size_) return false;
        for (int k = 0; k < size_; ++k)
            if (values_[k] != other.values_[k]) return false;
        return true;
    }

private:
    std::array<int, 3> values_{};
    int size_ = 0;
};

// Lateral offsets that keep column j + r inside [1, m]. Boundary columns
// get a restricted choice set rather than a clamped draw, so no direction
// is ever over-weighted.
OffsetSet feasible_offsets(int j, int m);

// Deterministic stream of offset draws. Implementations must reproduce the
// same sequence for the same construction parameters and request sequence.
class OffsetSource {
public:
    virtual ~OffsetSource() = default;

    // Returns a candidate offset for the given feasible set. Membership is
    // enforced by draw_offset, not here.
    virtual int next(const OffsetSet& feasible) = 0;
};

// Seeded generator; picks uniformly among the feasible offsets.
class SeededOffsetSource final : public OffsetSource {
public:
    explicit SeededOffsetSource(std::uint64_t seed) : gen_(seed) {}

    int next(const OffsetSet& feasible) override {
        std::uniform_int_distribution<int> pick(0, feasible.size() - 1);
        return feasible[pick(gen_)];
    }

private:
    std::mt19937_64 gen_;
};

// Replays a fixed list of offsets; used to pin exact traces in tests.
class ScriptedOffsetSource final : public OffsetSource {
public:
    explicit ScriptedOffsetSource(std::vector<int> script)
        : script_(std::move(script)) {}

    int next(const OffsetSet& feasible) override;

    std::size_t consumed() const { return pos_; }

private:
    std::vector<int> script_;
    std::size_t pos_ = 0;
};

// Draws one offset from the source and checks it against the feasible set.
// Exactly one value is consumed per call, so a run can be replayed from the
// same seed or script.
int draw_offset(OffsetSource& source, const OffsetSet& feasible);

}  // namespace caflow
