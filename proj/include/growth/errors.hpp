#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace growth {

// Invalid shape construction: empty point set, disconnected points.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation applied outside its preconditions (empty line index,
// node not in shape, break of a non-bicolor edge, ...).
struct OpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant breach (e.g. two nodes mapped to the same cell).
struct ModelError : std::logic_error {
    using std::logic_error::logic_error;
};

// A constructor step failed during replay; carries the step index.
struct ReplayError : std::runtime_error {
    ReplayError(std::size_t step, const std::string& reason)
        : std::runtime_error("step " + std::to_string(step) + ": " + reason),
          step_index(step) {}
    std::size_t step_index;
};

// Malformed textual input; line/col are 1-based (0 = unknown).
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line_ = 0, int col_ = 0)
        : std::runtime_error(what), line(line_), col(col_) {}
    int line;
    int col;
};

}  // namespace growth
