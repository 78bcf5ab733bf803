#pragma once

#include <stdexcept>
#include <string>

namespace liesym {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (bad documents, violated parameter
/// constraints, dimension mismatches, non-automorphisms, ...).
class invalid_input : public error {
 public:
  explicit invalid_input(const std::string& what) : error(what) {}
};

/// A request that is well-formed but outside the supported cases
/// (e.g. a quotient analysis when the index of symmetry is not 1).
class unsupported_case : public error {
 public:
  explicit unsupported_case(const std::string& what) : error(what) {}
};

/// An internal iteration cap was exceeded; indicates invalid input rather
/// than a resource limit.
class cap_exceeded : public error {
 public:
  explicit cap_exceeded(const std::string& what) : error(what) {}
};

}  // namespace liesym
