#pragma once

#include <stdexcept>
#include <string>

namespace jumpcube {

// Bad argument values (nonpositive scale, probabilities out of range, ...).
class invalid_parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Game state with p_win of exactly 0 or 1; W/L are undefined there.
class degenerate_state_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Jump volatility large enough to break a closed-form denominator.
class volatility_too_large_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class singular_system_error : public std::runtime_error {
public:
    singular_system_error(const std::string& what, double condition_estimate)
        : std::runtime_error(what), condition_estimate(condition_estimate) {}
    double condition_estimate;
};

// Root bracketing failed: no sign change over the search interval.
class bracket_error : public std::runtime_error {
public:
    bracket_error(const std::string& what, double f_lo, double f_hi)
        : std::runtime_error(what), f_lo(f_lo), f_hi(f_hi) {}
    double f_lo;
    double f_hi;
};

// A filter step left no samples to aggregate.
class empty_filter_error : public std::runtime_error {
public:
    empty_filter_error(const std::string& what, std::size_t seen, std::size_t qualified)
        : std::runtime_error(what), seen(seen), qualified(qualified) {}
    std::size_t seen;
    std::size_t qualified;
};

} // namespace jumpcube
