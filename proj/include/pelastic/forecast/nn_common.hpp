// Copyright 2026 The pelastic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "pelastic/error.hpp"

namespace pelastic::forecast {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Eigen::Index;

/// Element-wise ReLU.
template <typename Derived>
auto relu(const Eigen::MatrixBase<Derived>& x) {
  return x.cwiseMax(typename Derived::Scalar(0));
}

/// 1 where x > 0, else 0. The subgradient at exactly 0 is taken as 0.
template <typename Derived>
auto relu_mask(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  return (x.array() > Scalar(0)).template cast<Scalar>().matrix();
}

/// Uniform in [-a, a] with a = sqrt(1 / fan_in).
template <typename Scalar>
MatrixX<Scalar> uniform_init(Index rows, Index cols, Index fan_in, std::mt19937_64& rng) {
  const double a = std::sqrt(1.0 / static_cast<double>(fan_in));
  std::uniform_real_distribution<double> dist(-a, a);
  MatrixX<Scalar> m(rows, cols);
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = static_cast<Scalar>(dist(rng));
  return m;
}

inline void require_shape(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kDimensionMismatch, what);
}

/// Mean squared error over every entry, and its gradient w.r.t. predictions.
template <typename Scalar>
struct MseTerms {
  Scalar loss;
  MatrixX<Scalar> d_prediction;
};

template <typename Scalar>
MseTerms<Scalar> mse(const MatrixX<Scalar>& prediction, const MatrixX<Scalar>& target) {
  const MatrixX<Scalar> residual = prediction - target;
  const Scalar n = static_cast<Scalar>(residual.size());
  return {residual.squaredNorm() / n, (Scalar(2) / n) * residual};
}

/// Loss value plus a gradient laid out like the parameter type.
template <typename Params>
struct LossGradient {
  double loss = 0.0;
  Params gradient;
};

}  // namespace pelastic::forecast
