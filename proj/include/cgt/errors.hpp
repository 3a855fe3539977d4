#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

/// Malformed or contract-violating input (bad letter index, degree
/// mismatch, failed construction hypothesis, ...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource cap (rank/index/order/search budget) was exceeded.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// The operation is well-posed but not supported for this input
/// (e.g. Schreier generators of an infinite-index subgroup).
class UnsupportedError : public std::runtime_error {
public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cgt
