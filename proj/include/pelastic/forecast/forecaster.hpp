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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "pelastic/forecast/linear.hpp"
#include "pelastic/forecast/mlp.hpp"
#include "pelastic/forecast/rnn.hpp"
#include "pelastic/forecast/train.hpp"
#include "pelastic/metric_store.hpp"

namespace pelastic::forecast {

struct ForecastConfig {
  int window_len = 20;          // I_w samples
  int horizon_minutes = 15;
  Timestamp sample_period = 60; // seconds

  Timestamp horizon_seconds() const { return static_cast<Timestamp>(horizon_minutes) * 60; }
  /// Horizon expressed in samples; neural models are trained for this offset.
  int horizon_samples() const {
    return static_cast<int>(horizon_seconds() / sample_period);
  }

  void validate() const {
    if (window_len < 2 || horizon_minutes < 1 || sample_period <= 0) {
      throw Error(ErrorCode::kConfigError, "forecast config: need I_w >= 2, horizon >= 1, period > 0");
    }
  }
};

/// One-shot predictor of the aggregate series value `horizon` after the last
/// window sample.
class Forecaster {
 public:
  virtual ~Forecaster() = default;
  virtual std::string_view name() const = 0;
  /// `window` holds exactly I_w samples, oldest first.
  virtual double predict(const TimeSeries& window, const ForecastConfig& cfg) const = 0;
};

class LinearForecaster final : public Forecaster {
 public:
  std::string_view name() const override { return "lr"; }
  double predict(const TimeSeries& window, const ForecastConfig& cfg) const override;
};

/// Trained network plus the input scale it was trained with. Forecasts are
/// computed on scaled inputs and mapped back by 1 / input_scale.
struct NeuralModel {
  std::variant<RnnParams<double>, MlpParams<double>> params;
  double input_scale = 1.0;

  std::string_view kind() const {
    return std::holds_alternative<RnnParams<double>>(params) ? "rnn" : "mlp";
  }
  double predict_raw(std::span<const double> window) const;
};

class NeuralForecaster final : public Forecaster {
 public:
  explicit NeuralForecaster(NeuralModel model) : model_(std::move(model)) {}
  std::string_view name() const override { return model_.kind(); }
  double predict(const TimeSeries& window, const ForecastConfig& cfg) const override;
  const NeuralModel& model() const { return model_; }

 private:
  NeuralModel model_;
};

/// Runs `model` over the summed-CPU window and divides by the active count,
/// giving the predicted average CPU at now + horizon. Throws
/// kInsufficientWindow with fewer than I_w samples.
MetricPoint forecast_cluster_average(const TimeSeries& aggregate_window, std::size_t active_count,
                                     const Forecaster& model, const ForecastConfig& cfg,
                                     Timestamp now);

enum class ModelKind { kMlp, kRnn };

struct DefaultTraining {
  int max_cluster_size = 5;
  SyntheticConfig data;
  TrainConfig train;
};

/// Architecture and training setup used when a scenario does not ship a model
/// file: RNN H=32 / MLP I_w-32-32-1, inputs scaled by 1 / (100 * max size).
DefaultTraining default_training(ModelKind kind, const ForecastConfig& cfg, int max_cluster_size,
                                 std::uint64_t seed);

NeuralModel train_model(ModelKind kind, const Dataset& raw, const DefaultTraining& setup,
                        TrainHistory* history = nullptr);

/// Model file: header `rnn,H,I,O` or `mlp,<w0>-<w1>-...,<act1>-<act2>-...`,
/// a `scale,<s>` line, then one blank-line separated block per matrix or
/// vector (rows of comma-separated decimals).
void save_model(std::ostream& out, const NeuralModel& model);
NeuralModel load_model(std::istream& in);
void save_model_file(const std::string& path, const NeuralModel& model);
NeuralModel load_model_file(const std::string& path);

}  // namespace pelastic::forecast
