#pragma once

#include <stdexcept>
#include <string>

namespace chordweights {

// Malformed textual input (diagram words, CLI arguments).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (marked input where unmarked is
// required, A == B, non-adjacent endpoints, degree cap exceeded, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace chordweights
