#pragma once

#include <stdexcept>
#include <string>

namespace mdh {

// All recoverable errors raised by this library. Messages are meant to be
// shown to a user as-is.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure in textual input (Puiseux series, rationals, JSON payloads).
// `position` is a 0-based byte offset into the offending text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

} // namespace mdh
