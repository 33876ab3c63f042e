#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdk {

/// Bad argument to a constructor or query (n < 2, non-prime p, empty set, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A ring order, vertex count or oracle cap was exceeded.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The ring has no nonzero zero-divisor, so there is no graph to build.
class NoGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search ran out of its node or time budget before deciding.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Ring expression syntax error; offset is the byte position in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace zdk
