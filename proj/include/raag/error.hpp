#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Malformed input: bad JSON, unknown vertex names, invalid words.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-atomic graph, bad radius, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant that should always hold was observed to fail.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace raag
