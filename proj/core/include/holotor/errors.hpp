#pragma once

#include <stdexcept>
#include <string>

namespace holotor {

// Violated mathematical precondition (singular meridian, inadmissible tuple,
// degenerate character, ...).  The CLI maps these to exit code 2.
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (link specs, CLI payloads).  Exit code 1 in the CLI.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Shape/size misuse of an operation.  Programming error, not a math case.
class dim_error : public std::invalid_argument {
public:
    explicit dim_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace holotor
