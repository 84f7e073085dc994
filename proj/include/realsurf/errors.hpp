#pragma once

#include <stdexcept>
#include <string>

namespace realsurf {

struct InvalidGraphError : std::runtime_error {
    explicit InvalidGraphError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidSurfaceError : std::runtime_error {
    explicit InvalidSurfaceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation requires all twists in {0, 1/2}.
struct NotRealError : std::runtime_error {
    explicit NotRealError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure of the feet-matching convention. Never a valid
// outcome on correct input; indicates a bug in the gluing bookkeeping.
struct FeetMismatchError : std::logic_error {
    explicit FeetMismatchError(const std::string& msg) : std::logic_error(msg) {}
};

struct OptimizerError : std::runtime_error {
    explicit OptimizerError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          column(col_) {}
};

}  // namespace realsurf
