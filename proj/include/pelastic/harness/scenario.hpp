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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pelastic/alarm.hpp"
#include "pelastic/forecast/forecaster.hpp"
#include "pelastic/harness/trace_gen.hpp"
#include "pelastic/orchestrator.hpp"
#include "pelastic/simcluster.hpp"

namespace pelastic::harness {

enum class Mode { kSim, kLive };
enum class Policy { kStatic, kLr, kMlp, kRnn };

std::string_view to_string(Mode mode);
std::string_view to_string(Policy policy);
Policy parse_policy(std::string_view name);

struct AlarmSettings {
  double scale_out_threshold = 80.0;
  double scale_in_threshold = 15.0;
  int periods = 3;
};

struct LiveSettings {
  std::string server_binary;  // empty: this executable
  std::string host = "127.0.0.1";
  int drain_timeout_ms = 5000;
};

/// Everything one experiment run needs. Loaded from a sectioned key/value
/// file; every key is listed in the README.
struct Scenario {
  Mode mode = Mode::kSim;
  Policy policy = Policy::kStatic;
  std::uint64_t seed = 1;
  std::filesystem::path trace_path;            // empty: generate from `trace`
  std::optional<TraceShape> trace_shape;
  TraceParams trace;
  std::filesystem::path output_dir;
  int duration_minutes = 0;                    // 0: whole trace
  int report_window_start = 50;                // minutes, [start, end)
  int report_window_end = 80;

  forecast::ForecastConfig forecast;
  std::filesystem::path model_path;            // empty: train the default model
  AlarmSettings alarms;
  OrchestratorConfig orchestrator;
  SimConfig sim;
  LiveSettings live;

  /// Scale-out watches the predicted average, or the actual one for static.
  std::vector<AlarmDefinition> alarm_definitions() const;
  WorkloadTrace load_trace() const;
  void validate() const;
};

/// Parses `[section]` headers and `key = value` lines; `#` starts a comment.
/// Unknown sections or keys are errors. Relative paths resolve against
/// `base_dir`.
Scenario parse_scenario(std::istream& in, const std::filesystem::path& base_dir = {});
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace pelastic::harness
