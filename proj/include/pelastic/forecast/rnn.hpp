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

#include "pelastic/forecast/nn_common.hpp"

namespace pelastic::forecast {

/// Parameters of the Elman-style recurrent forecaster:
///
///   x_t = [s_{t-1}; i_t]
///   s_t = ReLU(W_s x_t + b_s)
///   o_t = ReLU(W_o [s_t; i_t] + b_o)
///
/// The output map reads the updated state s_t, not s_{t-1}.
template <typename Scalar = double>
struct RnnParams {
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  Matrix state_weights;   // H x (H + I)
  Vector state_bias;      // H
  Matrix output_weights;  // O x (H + I)
  Vector output_bias;     // O

  Index hidden() const { return state_bias.size(); }
  Index input() const { return state_weights.cols() - hidden(); }
  Index output() const { return output_bias.size(); }

  static RnnParams zeros(Index hidden, Index input, Index output) {
    RnnParams p;
    p.state_weights = Matrix::Zero(hidden, hidden + input);
    p.state_bias = Vector::Zero(hidden);
    p.output_weights = Matrix::Zero(output, hidden + input);
    p.output_bias = Vector::Zero(output);
    return p;
  }

  static RnnParams random(Index hidden, Index input, Index output, std::mt19937_64& rng) {
    const Index fan_in = hidden + input;
    RnnParams p;
    p.state_weights = uniform_init<Scalar>(hidden, fan_in, fan_in, rng);
    p.state_bias = uniform_init<Scalar>(hidden, 1, fan_in, rng);
    p.output_weights = uniform_init<Scalar>(output, fan_in, fan_in, rng);
    p.output_bias = uniform_init<Scalar>(output, 1, fan_in, rng);
    return p;
  }

  void validate() const {
    const Index h = hidden();
    require_shape(h >= 1 && state_weights.rows() == h && state_weights.cols() > h,
                  "rnn: W_s must be H x (H+I)");
    require_shape(output() >= 1 && output_weights.rows() == output() &&
                      output_weights.cols() == state_weights.cols(),
                  "rnn: W_o must be O x (H+I)");
    if (!state_weights.allFinite() || !state_bias.allFinite() || !output_weights.allFinite() ||
        !output_bias.allFinite()) {
      throw Error(ErrorCode::kInvalidValue, "rnn: non-finite parameter");
    }
  }

  template <typename NewScalar>
  RnnParams<NewScalar> cast() const {
    return {state_weights.template cast<NewScalar>(), state_bias.template cast<NewScalar>(),
            output_weights.template cast<NewScalar>(), output_bias.template cast<NewScalar>()};
  }
};

template <typename Scalar>
struct RnnStepResult {
  VectorX<Scalar> state;
  VectorX<Scalar> output;
};

template <typename Scalar>
RnnStepResult<Scalar> rnn_step(const Eigen::Ref<const VectorX<Scalar>>& prev_state,
                               const Eigen::Ref<const VectorX<Scalar>>& input,
                               const RnnParams<Scalar>& params) {
  const Index h = params.hidden();
  require_shape(prev_state.size() == h, "rnn_step: state width != H");
  require_shape(input.size() == params.input(), "rnn_step: input width != I");
  require_shape(params.output_weights.cols() == params.state_weights.cols(),
                "rnn_step: W_o width != H+I");

  VectorX<Scalar> x(h + input.size());
  x << prev_state, input;
  RnnStepResult<Scalar> out;
  out.state = relu(params.state_weights * x + params.state_bias);
  x.head(h) = out.state;
  out.output = relu(params.output_weights * x + params.output_bias);
  return out;
}

/// Feeds the window through rnn_step from a zero state, I samples per step,
/// and returns the first component of the final output.
template <typename Scalar>
Scalar rnn_forward(std::span<const Scalar> window, const RnnParams<Scalar>& params) {
  const Index in = params.input();
  require_shape(in >= 1 && static_cast<Index>(window.size()) % in == 0 && !window.empty(),
                "rnn_forward: window length is not a positive multiple of I");
  VectorX<Scalar> state = VectorX<Scalar>::Zero(params.hidden());
  VectorX<Scalar> output;
  for (std::size_t t = 0; t < window.size(); t += static_cast<std::size_t>(in)) {
    Eigen::Map<const VectorX<Scalar>> input(window.data() + t, in);
    auto step = rnn_step<Scalar>(state, input, params);
    state = std::move(step.state);
    output = std::move(step.output);
  }
  return output(0);
}

/// Batched forward pass. `inputs` holds one window per column (T*I rows).
/// Returns O x B predictions.
template <typename Scalar>
MatrixX<Scalar> rnn_forward_batch(const MatrixX<Scalar>& inputs, const RnnParams<Scalar>& params) {
  const Index h = params.hidden();
  const Index in = params.input();
  require_shape(in >= 1 && inputs.rows() % in == 0 && inputs.rows() > 0,
                "rnn_forward_batch: window length is not a positive multiple of I");
  const Index steps = inputs.rows() / in;
  const Index batch = inputs.cols();
  MatrixX<Scalar> x(h + in, batch);
  x.topRows(h).setZero();
  for (Index t = 0; t < steps; ++t) {
    x.bottomRows(in) = inputs.middleRows(t * in, in);
    x.topRows(h) = relu((params.state_weights * x).colwise() + params.state_bias);
  }
  return relu((params.output_weights * x).colwise() + params.output_bias);
}

/// MSE loss over a batch and its exact gradient by backpropagation through
/// time.
template <typename Scalar>
LossGradient<RnnParams<Scalar>> rnn_loss_gradient(const MatrixX<Scalar>& inputs,
                                                  const MatrixX<Scalar>& targets,
                                                  const RnnParams<Scalar>& params) {
  const Index h = params.hidden();
  const Index in = params.input();
  require_shape(in >= 1 && inputs.rows() % in == 0 && inputs.rows() > 0,
                "rnn_loss_gradient: window length is not a positive multiple of I");
  require_shape(inputs.cols() > 0, "rnn_loss_gradient: empty batch");
  require_shape(targets.rows() == params.output() && targets.cols() == inputs.cols(),
                "rnn_loss_gradient: targets must be O x B");
  const Index steps = inputs.rows() / in;
  const Index batch = inputs.cols();

  // xs[t] = [s_{t-1}; i_t], pre[t] = W_s xs[t] + b_s.
  std::vector<MatrixX<Scalar>> xs(steps), pre(steps);
  MatrixX<Scalar> state = MatrixX<Scalar>::Zero(h, batch);
  for (Index t = 0; t < steps; ++t) {
    xs[t].resize(h + in, batch);
    xs[t] << state, inputs.middleRows(t * in, in);
    pre[t] = (params.state_weights * xs[t]).colwise() + params.state_bias;
    state = relu(pre[t]);
  }
  MatrixX<Scalar> last(h + in, batch);
  last << state, inputs.bottomRows(in);
  const MatrixX<Scalar> out_pre = (params.output_weights * last).colwise() + params.output_bias;
  const MatrixX<Scalar> prediction = relu(out_pre);
  auto terms = mse<Scalar>(prediction, targets);

  LossGradient<RnnParams<Scalar>> result;
  result.loss = static_cast<double>(terms.loss);
  auto& g = result.gradient;
  g = RnnParams<Scalar>::zeros(h, in, params.output());

  const MatrixX<Scalar> d_out = terms.d_prediction.cwiseProduct(relu_mask(out_pre));
  g.output_weights = d_out * last.transpose();
  g.output_bias = d_out.rowwise().sum();
  MatrixX<Scalar> d_state = (params.output_weights.transpose() * d_out).topRows(h);

  for (Index t = steps - 1; t >= 0; --t) {
    const MatrixX<Scalar> d_pre = d_state.cwiseProduct(relu_mask(pre[t]));
    g.state_weights.noalias() += d_pre * xs[t].transpose();
    g.state_bias += d_pre.rowwise().sum();
    d_state = (params.state_weights.transpose() * d_pre).topRows(h);
  }
  return result;
}

template <typename Scalar>
double rnn_loss(const MatrixX<Scalar>& inputs, const MatrixX<Scalar>& targets,
                const RnnParams<Scalar>& params) {
  return static_cast<double>(mse<Scalar>(rnn_forward_batch(inputs, params), targets).loss);
}

// Flat views used by the optimizer. Order: W_s, b_s, W_o, b_o, column-major.
template <typename Scalar>
VectorX<Scalar> flatten(const RnnParams<Scalar>& p) {
  VectorX<Scalar> flat(p.state_weights.size() + p.state_bias.size() + p.output_weights.size() +
                       p.output_bias.size());
  flat << p.state_weights.reshaped(), p.state_bias, p.output_weights.reshaped(), p.output_bias;
  return flat;
}

template <typename Scalar>
RnnParams<Scalar> unflatten(const VectorX<Scalar>& flat, const RnnParams<Scalar>& like) {
  RnnParams<Scalar> p = like;
  Index at = 0;
  auto take = [&](auto& dst) {
    require_shape(at + dst.size() <= flat.size(), "rnn unflatten: vector too short");
    dst.reshaped() = flat.segment(at, dst.size());
    at += dst.size();
  };
  take(p.state_weights);
  take(p.state_bias);
  take(p.output_weights);
  take(p.output_bias);
  require_shape(at == flat.size(), "rnn unflatten: vector too long");
  return p;
}

}  // namespace pelastic::forecast
