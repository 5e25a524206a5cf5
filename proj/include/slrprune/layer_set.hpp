// Copyright 2026 The slrprune Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slrprune/tensor.hpp"

namespace slrprune {

// Ordered map from layer name to tensor. Iteration follows insertion order,
// which fixes the reduction order of every whole-model norm.
class LayerSet {
 public:
  struct Entry {
    std::string name;
    Tensor tensor;
  };

  LayerSet() = default;

  void insert(std::string name, Tensor t) {
    if (index_.count(name)) throw Error("duplicate layer name: " + name);
    index_[name] = entries_.size();
    entries_.push_back({std::move(name), std::move(t)});
  }

  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  Tensor& at(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("no such layer: " + name);
    return entries_[it->second].tensor;
  }
  const Tensor& at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("no such layer: " + name);
    return entries_[it->second].tensor;
  }

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const Entry& entry(size_t i) const { return entries_[i]; }
  Entry& entry(size_t i) { return entries_[i]; }

  int64_t total_numel() const {
    int64_t n = 0;
    for (const auto& e : entries_) n += e.tensor.numel();
    return n;
  }

  bool all_finite() const {
    for (const auto& e : entries_)
      if (!e.tensor.all_finite()) return false;
    return true;
  }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

inline LayerSet zeros_like(const LayerSet& src) {
  LayerSet out;
  for (const auto& e : src) out.insert(e.name, Tensor::zeros(e.tensor.dims));
  return out;
}

// Squared global Frobenius distance over the layers of `a` (keyed by a's
// names); all layers are concatenated into one norm, per-layer order fixed.
inline double frobenius_distance_sq(const LayerSet& a, const LayerSet& b) {
  double acc = 0.0;
  for (const auto& e : a) {
    const Tensor& other = b.at(e.name);
    check_shape(e.tensor.same_shape(other), "frobenius_distance_sq: shape mismatch at " + e.name);
    for (size_t i = 0; i < e.tensor.data.size(); ++i) {
      const double d = static_cast<double>(e.tensor.data[i]) - static_cast<double>(other.data[i]);
      acc += d * d;
    }
  }
  return acc;
}

inline double frobenius_distance(const LayerSet& a, const LayerSet& b) {
  return std::sqrt(frobenius_distance_sq(a, b));
}

// dst_n += step * (a_n - b_n), elementwise over dst's layers.
inline void add_scaled_difference(LayerSet& dst, double step, const LayerSet& a,
                                  const LayerSet& b) {
  const float s = static_cast<float>(step);
  for (auto& e : dst) {
    const Tensor& x = a.at(e.name);
    const Tensor& y = b.at(e.name);
    for (size_t i = 0; i < e.tensor.data.size(); ++i)
      e.tensor.data[i] += s * (x.data[i] - y.data[i]);
  }
}

// Sum of tr(A_n^T B_n) over a's layers.
inline double trace_inner_sum(const LayerSet& a, const LayerSet& b) {
  double acc = 0.0;
  for (const auto& e : a) acc += trace_inner(e.tensor, b.at(e.name));
  return acc;
}

// FNV-1a over the raw bytes of every tensor, in layer order. Used by tests
// and the metrics log to witness bit-identity of states.
inline uint64_t content_hash(const LayerSet& ls) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& e : ls) {
    for (unsigned char c : e.name) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    const unsigned char* bytes = reinterpret_cast<const unsigned char*>(e.tensor.data.data());
    for (size_t i = 0; i < e.tensor.data.size() * sizeof(float); ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

}  // namespace slrprune
