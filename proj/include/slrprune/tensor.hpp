// Copyright 2026 The slrprune Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "slrprune/common.hpp"

namespace slrprune {

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& dims) {
  int64_t n = 1;
  for (int64_t d : dims) {
    if (d <= 0) throw ShapeError("tensor extents must be positive");
    n *= d;
  }
  return n;
}

inline std::string shape_str(const Shape& dims) {
  std::string s = "(";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

// Dense row-major tensor. Parameters and activations are stored as float in
// production (Tensor below); the scalar is a template parameter so tests can
// instantiate the same kernels at double precision.
template <typename S>
struct TensorT {
  Shape dims;
  std::vector<S> data;
  std::optional<std::vector<S>> grad;  // same length as data when present

  TensorT() = default;

  explicit TensorT(Shape d) : dims(std::move(d)) {
    data.assign(static_cast<size_t>(shape_numel(dims)), S(0));
  }

  TensorT(Shape d, std::vector<S> values) : dims(std::move(d)), data(std::move(values)) {
    if (static_cast<int64_t>(data.size()) != shape_numel(dims))
      throw ShapeError("tensor data length " + std::to_string(data.size()) +
                       " does not match shape " + shape_str(dims));
  }

  TensorT(Shape d, std::initializer_list<S> values)
      : TensorT(std::move(d), std::vector<S>(values)) {}

  static TensorT zeros(Shape d) { return TensorT(std::move(d)); }

  static TensorT full(Shape d, S v) {
    TensorT t(std::move(d));
    for (S& x : t.data) x = v;
    return t;
  }

  int64_t numel() const { return static_cast<int64_t>(data.size()); }
  int rank() const { return static_cast<int>(dims.size()); }

  S& operator[](int64_t i) { return data[static_cast<size_t>(i)]; }
  S operator[](int64_t i) const { return data[static_cast<size_t>(i)]; }

  void ensure_grad() {
    if (!grad) grad.emplace(data.size(), S(0));
  }

  bool same_shape(const TensorT& other) const { return dims == other.dims; }

  bool all_finite() const {
    for (S v : data)
      if (!is_finite(v)) return false;
    return true;
  }
};

using Tensor = TensorT<float>;

// Sum of squares, accumulated in double in flat index order. The fixed order
// keeps repeated runs bit-identical; the 64-bit accumulator keeps the
// stepsize norm ratios stable under cancellation.
template <typename S>
double frobenius_norm_sq(const TensorT<S>& a) {
  double acc = 0.0;
  for (S v : a.data) acc += static_cast<double>(v) * static_cast<double>(v);
  return acc;
}

// tr(A^T B) == sum_ij A_ij B_ij; same accumulation rules as above.
template <typename S>
double trace_inner(const TensorT<S>& a, const TensorT<S>& b) {
  check_shape(a.same_shape(b), "trace_inner: shape mismatch " + shape_str(a.dims) +
                                   " vs " + shape_str(b.dims));
  double acc = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i)
    acc += static_cast<double>(a.data[i]) * static_cast<double>(b.data[i]);
  return acc;
}

}  // namespace slrprune
