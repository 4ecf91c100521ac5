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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pelastic/alarm.hpp"
#include "pelastic/forecast/forecaster.hpp"
#include "pelastic/harness/report.hpp"
#include "pelastic/metric_store.hpp"
#include "pelastic/orchestrator.hpp"

namespace pelastic::harness {

struct ScalingEvent {
  Timestamp time = 0;
  std::string alarm_id;
  ScaleAction action = ScaleAction::kScaleOut;
  ActionOutcome outcome = ActionOutcome::kRejectedBounds;
  std::vector<std::string> changed;
};

/// One pass of the elasticity loop per metric period: aggregate the active
/// instances' CPU, optionally forecast the average at the horizon, evaluate
/// the alarms and hand notifications to the orchestrator.
class ControlLoop {
 public:
  /// `forecaster` may be null (reactive policy).
  ControlLoop(MetricStore& store, ClusterState cluster, std::vector<AlarmDefinition> alarms,
              std::unique_ptr<forecast::Forecaster> forecaster, forecast::ForecastConfig config);

  /// Advances instance boot timers to `now` and lists serving instance ids.
  std::vector<std::string> active_ids(Timestamp now);

  /// Runs the period-boundary pass at `now`; returns the events it produced.
  std::vector<ScalingEvent> on_period(Timestamp now);

  const ClusterState& cluster() const { return cluster_; }
  const std::vector<ScalingEvent>& events() const { return events_; }
  const std::vector<ActivationTiming>& timings() const { return timings_; }
  const MetricStore& store() const { return store_; }

 private:
  MetricStore& store_;
  ClusterState cluster_;
  AlarmEngine alarms_;
  std::unique_ptr<forecast::Forecaster> forecaster_;
  forecast::ForecastConfig config_;
  std::vector<ScalingEvent> events_;
  std::vector<ActivationTiming> timings_;
};

inline SeriesKey cpu_key(const std::string& instance_id) {
  return SeriesKey("cpu.percent", {{"instance_id", instance_id}});
}

}  // namespace pelastic::harness
