#pragma once

#include <stdexcept>
#include <string>

namespace crossint {

/// Thrown when an operation is called outside its domain (bad parameters,
/// malformed families, violated hypotheses).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a requested computation is outside what can be decided
/// exactly at desk scale.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text that does not follow the family file format.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace crossint
