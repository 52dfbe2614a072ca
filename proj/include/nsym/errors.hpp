#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsym {

// Malformed or out-of-contract arguments (weight mismatch, index outside a set, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured size limit (e.g. the permutation oracle).
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, int limit)
        : std::runtime_error(what), limit_(limit) {}
    int limit() const noexcept { return limit_; }

private:
    int limit_;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Text that does not match the element/scalar grammar. `position` is a 0-based offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace nsym
