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

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "pelastic/harness/control_loop.hpp"
#include "pelastic/harness/report.hpp"
#include "pelastic/harness/scenario.hpp"
#include "pelastic/simcluster.hpp"

namespace pelastic::harness {

struct RunOptions {
  /// Overrides scenario.forecast.model for the neural policies.
  std::shared_ptr<const forecast::NeuralModel> model;
  /// Skip writing the artifact directory even if the scenario names one.
  bool write_artifacts = true;
};

struct RunResult {
  Policy policy = Policy::kStatic;
  Mode mode = Mode::kSim;
  Timestamp duration = 0;
  ReportWindow report_window;
  std::vector<ScalingEvent> events;
  std::vector<ResponseRecord> records;
  SimCounters counters;            // sim: injected/completed/queued; live: sent/received/failed
  std::uint64_t failed = 0;        // live only
  std::vector<ActivationTiming> timings;
  ClusterState final_cluster;
  std::optional<Timestamp> first_scale_out;          // first effective scale-out
  std::optional<Timestamp> first_scale_out_serving;  // when that instance began serving
  std::unique_ptr<MetricStore> store;
};

/// Builds the forecaster a policy needs: nullptr for static, OLS for lr,
/// and for mlp/rnn the model from options, the scenario's model file, or a
/// freshly trained default model.
std::unique_ptr<forecast::Forecaster> make_forecaster(const Scenario& scenario,
                                                      const RunOptions& options);

/// Runs the scenario end to end and, unless disabled, writes the artifact
/// directory. Sim mode is single-threaded and deterministic.
RunResult run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// Files: cpu_instances.csv, cpu_sum.csv, cpu_avg.csv, pred_avg.csv,
/// cluster_size.csv, responses.csv, events.csv, percentiles.csv, meta.csv and
/// overhead.csv. Only overhead.csv depends on wall-clock time.
void write_artifacts(const RunResult& result, const std::filesystem::path& dir);

/// Renders response-time percentiles and forecasting overheads for one or
/// more artifact directories, one column per run.
std::string render_report(const std::vector<std::filesystem::path>& dirs);

}  // namespace pelastic::harness
