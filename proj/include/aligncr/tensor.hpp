#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "aligncr/common.hpp"

namespace aligncr {

// Dense row-major tensor. Rank is dynamic; most of the code uses
// [C,H,W] activations, [OC,IC,K,K] conv weights and [N] biases.
template <typename T>
struct Tensor {
  std::vector<int> dims;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> d) : dims(std::move(d)), data(numel_of(dims), T(0)) {}
  Tensor(std::vector<int> d, T fill) : dims(std::move(d)), data(numel_of(dims), fill) {}

  static std::size_t numel_of(const std::vector<int>& d) {
    std::size_t n = 1;
    for (int x : d) n *= static_cast<std::size_t>(x);
    return n;
  }

  std::size_t numel() const { return data.size(); }
  bool empty() const { return data.empty(); }
  int dim(int i) const { return dims[static_cast<std::size_t>(i)]; }
  int rank() const { return static_cast<int>(dims.size()); }

  // [C,H,W] accessors
  int channels() const { return dims.at(0); }
  int height() const { return rank() >= 2 ? dims[1] : 1; }
  int width() const { return rank() >= 3 ? dims[2] : 1; }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  T& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * dims[1] + y) * dims[2] + x];
  }
  T at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * dims[1] + y) * dims[2] + x];
  }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }

  bool same_shape(const Tensor& o) const { return dims == o.dims; }

  bool all_finite() const {
    for (const T& v : data)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }
};

template <typename T>
bool bitwise_equal(const Tensor<T>& a, const Tensor<T>& b) {
  return a.dims == b.dims && a.data == b.data;
}

template <typename T>
double max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.data.size(); i++)
    m = std::max(m, std::abs(static_cast<double>(a.data[i]) - static_cast<double>(b.data[i])));
  return m;
}

}  // namespace aligncr
