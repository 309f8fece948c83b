#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

/// Malformed documents, dimension mismatches, unparsable rationals.
/// CLI maps this (and subclasses) to exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A stated precondition of an operation does not hold
/// (e.g. reducing by a vector the twist map does not fix).
class precondition_error : public input_error {
public:
  explicit precondition_error(const std::string& what) : input_error(what) {}
};

} // namespace homlie
