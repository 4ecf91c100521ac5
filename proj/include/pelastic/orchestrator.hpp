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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pelastic/alarm.hpp"
#include "pelastic/metric_store.hpp"

namespace pelastic {

enum class InstancePhase { kBooting, kActive, kTerminated };
std::string_view to_string(InstancePhase phase);

struct Instance {
  std::string id;
  InstancePhase phase = InstancePhase::kBooting;
  Timestamp created_at = 0;
  std::optional<Timestamp> serving_since;
  std::optional<Timestamp> terminated_at;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct OrchestratorConfig {
  int min_size = 2;
  int max_size = 5;
  int step = 1;
  Timestamp cooldown = 1200;
  Timestamp boot_delay = 360;

  void validate() const;
  friend bool operator==(const OrchestratorConfig&, const OrchestratorConfig&) = default;
};

/// The elastic group. Booting instances count toward the size bounds.
struct ClusterState {
  OrchestratorConfig config;
  std::vector<Instance> instances;  // creation order; terminated ones are kept
  std::optional<Timestamp> last_effective_action;
  int next_serial = 1;

  /// Instances that are not terminated.
  int size() const;

  friend bool operator==(const ClusterState&, const ClusterState&) = default;
};

enum class ActionOutcome { kEffective, kRejectedCooldown, kRejectedBounds };
std::string_view to_string(ActionOutcome outcome);

/// Starts with min_size instances already serving at `now`.
ClusterState make_cluster(const OrchestratorConfig& config, Timestamp now = 0);

struct ActionResult {
  ClusterState cluster;
  ActionOutcome outcome = ActionOutcome::kRejectedBounds;
  std::vector<std::string> changed;  // ids added or terminated
};

/// Applies a scale action. Cooldown is checked first, then bounds. Only
/// effective actions move last_effective_action. Scale-in removes the newest
/// booting instance if any, otherwise the most recently activated one.
ActionResult handle_notification(ClusterState cluster, ScaleAction action, Timestamp now);

/// Activates booting instances whose boot delay has elapsed.
ClusterState tick(ClusterState cluster, Timestamp now);

/// Serving instances, ordered by id.
std::vector<Instance> active_instances(const ClusterState& cluster);

/// Writes `cluster.size` (non-terminated) and `cluster.active` samples.
void emit_cluster_metrics(MetricStore& store, const ClusterState& cluster, Timestamp now);

}  // namespace pelastic
