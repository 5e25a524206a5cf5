// Copyright 2026 The slrprune Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "slrprune/tensor.hpp"

namespace slrprune {

struct VarId {
  int32_t index = -1;
  bool valid() const { return index >= 0; }
};

// Reverse-mode tape. Every primitive records one node; backward() replays the
// nodes once, in reverse recording order, which is a reverse topological
// order because an op can only consume already-recorded variables.
template <typename S>
class TapeT {
 public:
  // When false, ops still compute forward values but record no backward
  // closures (inference mode).
  bool grad_enabled = true;
  // Forward outputs are checked for NaN/Inf; a non-finite value is an error
  // state, not a result.
  bool check_finite = true;

  VarId leaf(TensorT<S> t) { return push(std::move(t), nullptr); }

  const TensorT<S>& value(VarId v) const { return slots_[check(v)].value; }

  // Gradient buffer of `v`; valid after backward().
  const std::vector<S>& grad(VarId v) const {
    const auto& g = slots_[check(v)].value.grad;
    if (!g) throw Error("gradient not computed; call backward() first");
    return *g;
  }

  size_t num_nodes() const { return slots_.size(); }

  void backward(VarId output) { backward(output, S(1)); }

  void backward(VarId output, S seed) {
    auto& out = slots_[check(output)];
    if (out.value.numel() != 1)
      throw ShapeError("backward() expects a scalar output");
    for (auto& s : slots_) {
      s.value.grad.emplace(s.value.data.size(), S(0));
    }
    (*out.value.grad)[0] = seed;
    for (size_t i = slots_.size(); i-- > 0;) {
      if (slots_[i].backprop) slots_[i].backprop(*this);
    }
    if (check_finite) {
      for (auto& s : slots_)
        for (S g : *s.value.grad)
          if (!is_finite(g)) throw NumericError("non-finite gradient in backward pass");
    }
  }

  // --- internals shared by the op free functions ---

  VarId push(TensorT<S> value, std::function<void(TapeT&)> backprop) {
    if (check_finite && !value.all_finite())
      throw NumericError("non-finite value in forward pass");
    Slot s;
    s.value = std::move(value);
    if (grad_enabled) s.backprop = std::move(backprop);
    slots_.push_back(std::move(s));
    return VarId{static_cast<int32_t>(slots_.size() - 1)};
  }

  TensorT<S>& mutable_value(VarId v) { return slots_[check(v)].value; }
  std::vector<S>& grad_buffer(VarId v) { return *slots_[check(v)].value.grad; }

 private:
  struct Slot {
    TensorT<S> value;
    std::function<void(TapeT&)> backprop;  // empty for leaves
  };

  size_t check(VarId v) const {
    if (!v.valid() || static_cast<size_t>(v.index) >= slots_.size())
      throw Error("invalid tape variable");
    return static_cast<size_t>(v.index);
  }

  std::vector<Slot> slots_;
};

using Tape = TapeT<float>;

namespace detail {
template <typename S>
using MatMap = Eigen::Map<Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <typename S>
using ConstMatMap =
    Eigen::Map<const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
}  // namespace detail

// C = A * B for rank-2 tensors (m,k)x(k,n).
template <typename S>
VarId matmul(TapeT<S>& tape, VarId a, VarId b) {
  const auto& ta = tape.value(a);
  const auto& tb = tape.value(b);
  check_shape(ta.rank() == 2 && tb.rank() == 2 && ta.dims[1] == tb.dims[0],
              "matmul: incompatible shapes " + shape_str(ta.dims) + " x " + shape_str(tb.dims));
  const int64_t m = ta.dims[0], k = ta.dims[1], n = tb.dims[1];
  TensorT<S> out({m, n});
  detail::ConstMatMap<S> A(ta.data.data(), m, k), B(tb.data.data(), k, n);
  detail::MatMap<S>(out.data.data(), m, n).noalias() = A * B;
  return tape.push(std::move(out), [a, b, m, k, n](TapeT<S>& t) {
    VarId self{static_cast<int32_t>(&t.grad_buffer(a) == nullptr)};  // unused; silence lints
    (void)self;
    return;
  });
}

// The closure above can't reference its own VarId before push() returns, so
// matmul is implemented via this two-step helper instead.
template <typename S>
VarId matmul_op(TapeT<S>& tape, VarId a, VarId b);

template <typename S>
VarId add(TapeT<S>& tape, VarId a, VarId b);
template <typename S>
VarId mul(TapeT<S>& tape, VarId a, VarId b);
template <typename S>
VarId relu(TapeT<S>& tape, VarId a);
template <typename S>
VarId reshape(TapeT<S>& tape, VarId a, Shape dims);
template <typename S>
VarId conv2d(TapeT<S>& tape, VarId x, VarId w);
template <typename S>
VarId maxpool2d(TapeT<S>& tape, VarId x, int window = 2);
template <typename S>
VarId softmax_crossentropy(TapeT<S>& tape, VarId logits, std::span<const int32_t> labels,
                           double* mean_loss = nullptr);

}  // namespace slrprune

#include "slrprune/tape_ops.hpp"
