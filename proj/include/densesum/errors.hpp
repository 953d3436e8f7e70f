#pragma once

#include <stdexcept>
#include <string>

namespace densesum {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: empty input, non-positive value, infeasible counts,
// or arithmetic that would overflow the 64-bit value domain.
struct invalid_input : error {
    using error::error;
};

// divide() applied to an element not divisible by d.
struct not_divisible : error {
    using error::error;
};

// factorize_batch() input outside [1, s].
struct out_of_range : error {
    using error::error;
};

// A stated operation precondition does not hold; the message names the
// offending inequality.
struct precondition_failed : error {
    using error::error;
};

// Constants overrides violating 16*c_alpha <= c_delta.
struct invalid_constants : error {
    using error::error;
};

// preprocess() called on a multi-set that is not c_delta-dense.
struct not_dense : error {
    using error::error;
};

// query() called with a target outside the certified window.
struct outside_window : error {
    using error::error;
};

// Operation requires a uniform multi-set.
struct not_uniform : error {
    using error::error;
};

// A condition that cannot occur when preconditions hold was observed.
struct internal_invariant_violation : error {
    using error::error;
};

// Instance file syntax error; carries a 1-based line number.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t line)
        : error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

} // namespace densesum
