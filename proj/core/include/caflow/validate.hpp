#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "caflow/types.hpp"

namespace caflow {

// Checks every SimConfig invariant and reports all violations, not just
// the first. An empty result means the config is valid.
std::vector<std::string> validate(const SimConfig& config);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> errors);

    const std::vector<std::string>& errors() const { return errors_; }

private:
    std::vector<std::string> errors_;
};

// Throwing convenience wrapper around validate().
void validate_or_throw(const SimConfig& config);

}  // namespace caflow
