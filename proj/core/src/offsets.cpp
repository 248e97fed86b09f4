#include "caflow/offsets.hpp"

#include <stdexcept>
#include <string>

namespace caflow {

OffsetSet feasible_offsets(int j, int m) {
    if (m < 1) throw std::invalid_argument("column count must be >= 1");
    if (j < 1 || j > m)
        throw std::invalid_argument("column index " + std::to_string(j) + " outside [1, " +
                                    std::to_string(m) + "]");
    OffsetSet set;
    if (j > 1) set.add(-1);
    set.add(0);
    if (j < m) set.add(1);
    return set;
}

int ScriptedOffsetSource::next(const OffsetSet&) {
    if (pos_ >= script_.size()) throw std::invalid_argument("offset script exhausted");
    return script_[pos_++];
}

int draw_offset(OffsetSource& source, const OffsetSet& feasible) {
    if (feasible.size() == 0) throw std::logic_error("empty feasible offset set");
    const int r = source.next(feasible);
    if (!feasible.contains(r))
        throw std::invalid_argument("scripted offset " + std::to_string(r) + " not feasible");
    return r;
}

}  // namespace caflow
