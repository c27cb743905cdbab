#pragma once

#include <stdexcept>
#include <string>

namespace tmk {

/// Malformed arguments: out-of-range ids, mismatched sizes, non-edges.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The request exceeds an enforced size cap of an exhaustive routine.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural precondition (e.g. a width bound) does not hold.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed file contents; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace tmk
