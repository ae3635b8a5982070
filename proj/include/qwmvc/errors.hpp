#pragma once

#include <stdexcept>
#include <string>

namespace qwmvc {

/// Input exceeds a hard implementation limit (e.g. brute-force vertex cap).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A randomized generator exhausted its retry budget.
struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file; message carries the source name and line number.
struct parse_error : std::runtime_error {
    parse_error(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

}  // namespace qwmvc
