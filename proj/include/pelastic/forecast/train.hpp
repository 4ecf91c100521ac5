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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pelastic/forecast/dataset.hpp"
#include "pelastic/forecast/mlp.hpp"
#include "pelastic/forecast/rnn.hpp"

namespace pelastic::forecast {

struct TrainConfig {
  double learning_rate = 0.01;
  double momentum = 0.9;
  int validation_every = 50;  // K
  int patience = 5;           // consecutive non-improving checks before stopping
  int max_steps = 5000;
  int batch_size = 0;         // 0 or >= |D| means full batch
  std::uint64_t rng_seed = 1;

  void validate() const {
    if (!(learning_rate > 0.0) || !(momentum >= 0.0 && momentum < 1.0) || validation_every < 1 ||
        patience < 1 || max_steps < 0 || batch_size < 0) {
      throw Error(ErrorCode::kInvalidParams, "train config out of range");
    }
  }
};

/// Heavy-ball momentum on a flat parameter vector:
///   mu_k = beta * mu_{k-1} + grad;  theta_{k+1} = theta_k - lambda * mu_k
class MomentumOptimizer {
 public:
  MomentumOptimizer(double learning_rate, double momentum, Index size)
      : learning_rate_(learning_rate), momentum_(momentum), velocity_(Eigen::VectorXd::Zero(size)) {}

  void step(Eigen::VectorXd& theta, const Eigen::VectorXd& gradient) {
    velocity_ = momentum_ * velocity_ + gradient;
    theta -= learning_rate_ * velocity_;
  }

  const Eigen::VectorXd& velocity() const { return velocity_; }

 private:
  double learning_rate_;
  double momentum_;
  Eigen::VectorXd velocity_;
};

// Per-model hooks the generic trainer dispatches on.
inline LossGradient<RnnParams<double>> loss_gradient(const RnnParams<double>& p, const Dataset& d) {
  return rnn_loss_gradient<double>(d.inputs, d.targets, p);
}
inline double loss(const RnnParams<double>& p, const Dataset& d) {
  return rnn_loss<double>(d.inputs, d.targets, p);
}
inline LossGradient<MlpParams<double>> loss_gradient(const MlpParams<double>& p, const Dataset& d) {
  return mlp_loss_gradient<double>(d.inputs, d.targets, p);
}
inline double loss(const MlpParams<double>& p, const Dataset& d) {
  return mlp_loss<double>(d.inputs, d.targets, p);
}

struct ValidationCheck {
  int step = 0;
  double loss = 0.0;
};

struct TrainHistory {
  std::vector<double> train_loss;          // one entry per optimizer step
  std::vector<ValidationCheck> validation; // step 0, K, 2K, ...
  int best_step = 0;
  double best_validation_loss = std::numeric_limits<double>::infinity();
  int steps_run = 0;
  bool stopped_early = false;
};

template <typename Params>
struct TrainResult {
  Params best;
  TrainHistory history;
};

/// Minimizes MSE on D with momentum gradient descent, checking the loss on D'
/// every K steps (and once before the first step). Stops after `patience`
/// consecutive checks without a new minimum, or at max_steps, and returns the
/// parameters of the lowest recorded validation loss.
template <typename Params>
TrainResult<Params> train(const Params& init, const Dataset& data, const Dataset& validation,
                          const TrainConfig& cfg) {
  cfg.validate();
  if (data.empty() || validation.empty()) {
    throw Error(ErrorCode::kEmptyInput, "train and validation sets must be nonempty");
  }
  data.validate();
  validation.validate();

  TrainResult<Params> result{init, {}};
  auto& history = result.history;
  Eigen::VectorXd theta = flatten(init);
  MomentumOptimizer optimizer(cfg.learning_rate, cfg.momentum, theta.size());

  auto check = [&](int step, const Params& params) {
    const double v = loss(params, validation);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteLoss,
                  "validation loss diverged at step " + std::to_string(step) +
                      " (learning rate " + std::to_string(cfg.learning_rate) + " too large?)");
    }
    history.validation.push_back({step, v});
    if (v < history.best_validation_loss) {
      history.best_validation_loss = v;
      history.best_step = step;
      result.best = params;
      return true;
    }
    return false;
  };
  check(0, init);

  const Index n = data.size();
  const bool full_batch = cfg.batch_size == 0 || cfg.batch_size >= n;
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::mt19937_64 rng(cfg.rng_seed);
  std::size_t cursor = order.size();

  int stale_checks = 0;
  Params current = init;
  for (int step = 1; step <= cfg.max_steps; ++step) {
    LossGradient<Params> lg;
    if (full_batch) {
      lg = loss_gradient(current, data);
    } else {
      if (cursor + static_cast<std::size_t>(cfg.batch_size) > order.size()) {
        std::shuffle(order.begin(), order.end(), rng);
        cursor = 0;
      }
      const auto batch = data.select(std::span(order).subspan(cursor, cfg.batch_size));
      cursor += static_cast<std::size_t>(cfg.batch_size);
      lg = loss_gradient(current, batch);
    }
    if (!std::isfinite(lg.loss)) {
      throw Error(ErrorCode::kNonFiniteLoss,
                  "training loss diverged at step " + std::to_string(step) +
                      " (learning rate " + std::to_string(cfg.learning_rate) + " too large?)");
    }
    history.train_loss.push_back(lg.loss);
    optimizer.step(theta, flatten(lg.gradient));
    current = unflatten(theta, current);
    history.steps_run = step;

    if (step % cfg.validation_every == 0) {
      if (check(step, current)) {
        stale_checks = 0;
      } else if (++stale_checks >= cfg.patience) {
        history.stopped_early = true;
        break;
      }
    }
  }
  return result;
}

}  // namespace pelastic::forecast
