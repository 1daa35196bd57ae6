#pragma once

#include <stdexcept>
#include <string>

namespace mfw {

// Malformed input text or documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (bad crossing id, negative
// crossing where a positive one is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A statement that is a theorem about diagrams failed to hold. Always a bug.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mfw
