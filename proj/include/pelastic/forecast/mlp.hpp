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

#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "pelastic/forecast/nn_common.hpp"

namespace pelastic::forecast {

enum class Activation { kIdentity, kRelu };

inline std::string_view to_string(Activation a) {
  return a == Activation::kRelu ? "relu" : "identity";
}

template <typename Scalar = double>
struct MlpLayer {
  MatrixX<Scalar> weights;  // out x in
  VectorX<Scalar> bias;     // out
  Activation activation = Activation::kRelu;
};

/// Feed-forward stack. Layer widths must chain and end in a single output.
template <typename Scalar = double>
struct MlpParams {
  std::vector<MlpLayer<Scalar>> layers;

  Index input() const { return layers.empty() ? 0 : layers.front().weights.cols(); }

  /// Widths {in, h1, ..., 1}; hidden layers ReLU, output ReLU so forecasts
  /// stay non-negative.
  static MlpParams random(const std::vector<Index>& widths, std::mt19937_64& rng) {
    require_shape(widths.size() >= 2 && widths.back() == 1, "mlp: widths must end in 1");
    MlpParams p;
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
      MlpLayer<Scalar> layer;
      layer.weights = uniform_init<Scalar>(widths[l + 1], widths[l], widths[l], rng);
      layer.bias = uniform_init<Scalar>(widths[l + 1], 1, widths[l], rng);
      layer.activation = Activation::kRelu;
      p.layers.push_back(std::move(layer));
    }
    return p;
  }

  static MlpParams zeros(const std::vector<Index>& widths) {
    require_shape(widths.size() >= 2 && widths.back() == 1, "mlp: widths must end in 1");
    MlpParams p;
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
      p.layers.push_back({MatrixX<Scalar>::Zero(widths[l + 1], widths[l]),
                          VectorX<Scalar>::Zero(widths[l + 1]), Activation::kRelu});
    }
    return p;
  }

  void validate() const {
    require_shape(!layers.empty(), "mlp: no layers");
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const auto& layer = layers[l];
      require_shape(layer.bias.size() == layer.weights.rows(), "mlp: bias width != layer width");
      if (l > 0) {
        require_shape(layer.weights.cols() == layers[l - 1].weights.rows(),
                      "mlp: layer widths do not chain");
      }
      if (!layer.weights.allFinite() || !layer.bias.allFinite()) {
        throw Error(ErrorCode::kInvalidValue, "mlp: non-finite parameter");
      }
    }
    require_shape(layers.back().weights.rows() == 1, "mlp: output width must be 1");
  }
};

template <typename Scalar>
MatrixX<Scalar> apply_activation(const MatrixX<Scalar>& z, Activation a) {
  return a == Activation::kRelu ? MatrixX<Scalar>(relu(z)) : z;
}

/// Batched forward pass; one window per column. Returns 1 x B.
template <typename Scalar>
MatrixX<Scalar> mlp_forward_batch(const MatrixX<Scalar>& inputs, const MlpParams<Scalar>& params) {
  params.validate();
  require_shape(inputs.rows() == params.input(), "mlp_forward: window length != input width");
  MatrixX<Scalar> a = inputs;
  for (const auto& layer : params.layers) {
    a = apply_activation<Scalar>((layer.weights * a).colwise() + layer.bias, layer.activation);
  }
  return a;
}

template <typename Scalar>
Scalar mlp_forward(std::span<const Scalar> window, const MlpParams<Scalar>& params) {
  Eigen::Map<const MatrixX<Scalar>> column(window.data(), static_cast<Index>(window.size()), 1);
  return mlp_forward_batch<Scalar>(column, params)(0, 0);
}

template <typename Scalar>
LossGradient<MlpParams<Scalar>> mlp_loss_gradient(const MatrixX<Scalar>& inputs,
                                                  const MatrixX<Scalar>& targets,
                                                  const MlpParams<Scalar>& params) {
  params.validate();
  require_shape(inputs.rows() == params.input(), "mlp_loss_gradient: window length != input width");
  require_shape(inputs.cols() > 0, "mlp_loss_gradient: empty batch");
  require_shape(targets.rows() == 1 && targets.cols() == inputs.cols(),
                "mlp_loss_gradient: targets must be 1 x B");

  const std::size_t n = params.layers.size();
  std::vector<MatrixX<Scalar>> acts(n + 1), pre(n);
  acts[0] = inputs;
  for (std::size_t l = 0; l < n; ++l) {
    const auto& layer = params.layers[l];
    pre[l] = (layer.weights * acts[l]).colwise() + layer.bias;
    acts[l + 1] = apply_activation<Scalar>(pre[l], layer.activation);
  }
  auto terms = mse<Scalar>(acts[n], targets);

  LossGradient<MlpParams<Scalar>> result;
  result.loss = static_cast<double>(terms.loss);
  result.gradient = params;
  MatrixX<Scalar> d_act = std::move(terms.d_prediction);
  for (std::size_t l = n; l-- > 0;) {
    const auto& layer = params.layers[l];
    MatrixX<Scalar> d_pre = layer.activation == Activation::kRelu
                                ? MatrixX<Scalar>(d_act.cwiseProduct(relu_mask(pre[l])))
                                : d_act;
    result.gradient.layers[l].weights = d_pre * acts[l].transpose();
    result.gradient.layers[l].bias = d_pre.rowwise().sum();
    if (l > 0) d_act = layer.weights.transpose() * d_pre;
  }
  return result;
}

template <typename Scalar>
double mlp_loss(const MatrixX<Scalar>& inputs, const MatrixX<Scalar>& targets,
                const MlpParams<Scalar>& params) {
  return static_cast<double>(mse<Scalar>(mlp_forward_batch(inputs, params), targets).loss);
}

template <typename Scalar>
VectorX<Scalar> flatten(const MlpParams<Scalar>& p) {
  Index total = 0;
  for (const auto& l : p.layers) total += l.weights.size() + l.bias.size();
  VectorX<Scalar> flat(total);
  Index at = 0;
  for (const auto& l : p.layers) {
    flat.segment(at, l.weights.size()) = l.weights.reshaped();
    at += l.weights.size();
    flat.segment(at, l.bias.size()) = l.bias;
    at += l.bias.size();
  }
  return flat;
}

template <typename Scalar>
MlpParams<Scalar> unflatten(const VectorX<Scalar>& flat, const MlpParams<Scalar>& like) {
  MlpParams<Scalar> p = like;
  Index at = 0;
  for (auto& l : p.layers) {
    require_shape(at + l.weights.size() + l.bias.size() <= flat.size(),
                  "mlp unflatten: vector too short");
    l.weights.reshaped() = flat.segment(at, l.weights.size());
    at += l.weights.size();
    l.bias = flat.segment(at, l.bias.size());
    at += l.bias.size();
  }
  require_shape(at == flat.size(), "mlp unflatten: vector too long");
  return p;
}

}  // namespace pelastic::forecast
