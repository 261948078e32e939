#pragma once

#include <stdexcept>
#include <string>

namespace rickard {

/// Precondition violation on a public operation.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested model exceeds the configured basis bound.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An internal identity that must hold by construction did not.
/// Seeing one of these means a convention or arithmetic bug, not bad input.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The rewriting engine has no rule that brings a word to a normal form.
class UnsupportedRewrite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (words, weights, polynomials). `position` is a
/// character offset into the parsed string.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace rickard
