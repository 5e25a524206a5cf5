// Copyright 2026 The slrprune Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace slrprune {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration or malformed run description. CLI exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or truncated input data (IDX files, checkpoints).
class DataError : public Error {
 public:
  using Error::Error;
};

// Incompatible tensor shapes passed to an operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Non-finite values, infeasible iterates, or other numeric failure states.
// CLI exit code 2.
class NumericError : public Error {
 public:
  using Error::Error;
};

inline void check_shape(bool ok, const std::string& what) {
  if (!ok) throw ShapeError(what);
}

template <typename S>
inline bool is_finite(S v) {
  return std::isfinite(static_cast<double>(v));
}

}  // namespace slrprune
