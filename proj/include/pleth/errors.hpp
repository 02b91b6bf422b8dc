#pragma once

#include <stdexcept>
#include <string>

namespace pleth {

// Malformed input text or files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (zero sigma, weight above
// truncation, constant term in an inner series, gluing mismatch, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A cross-check between two independent routes disagreed.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pleth
