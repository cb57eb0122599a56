#pragma once

#include <stdexcept>
#include <string>

namespace kolmo {

// Invalid or inconsistent experiment configuration. Carries the full list of
// problems found, one per line, so a user can fix everything in one pass.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// File-format or filesystem failure (bank files, CSV output directories).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A state or weight left the representable range during a simulation.
// For the weight recursion this is a finding, not a bug: unbounded drifts
// without the shift are expected to blow up.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, long sample, long index)
        : std::runtime_error(what), sample(sample), index(index) {}
    long sample = -1;
    long index = -1;
};

class DivergenceError : public NumericalError {
public:
    DivergenceError(const std::string& what, long sample, long index, int iteration)
        : NumericalError(what, sample, index), iteration(iteration) {}
    int iteration = -1;
};

} // namespace kolmo
