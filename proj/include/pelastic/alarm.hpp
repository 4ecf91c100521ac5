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

#include "pelastic/metric_store.hpp"

namespace pelastic {

enum class Comparator { kGreater, kLess };
enum class ScaleAction { kScaleOut, kScaleIn };
enum class AlarmStatus { kOk, kAlarm };

std::string_view to_string(ScaleAction action);
std::string_view to_string(Comparator cmp);

struct AlarmDefinition {
  std::string id;
  SeriesKey metric;
  Comparator comparator = Comparator::kGreater;
  double threshold = 0.0;
  int required_periods = 3;
  ScaleAction action = ScaleAction::kScaleOut;

  /// Strict comparison; a sample equal to the threshold is not a violation.
  bool violated_by(double value) const {
    return comparator == Comparator::kGreater ? value > threshold : value < threshold;
  }
  void validate() const;
};

struct AlarmState {
  std::string definition_id;
  int consecutive_violations = 0;
  AlarmStatus status = AlarmStatus::kOk;
  std::optional<Timestamp> last_evaluated;
};

struct Notification {
  std::string alarm_id;
  ScaleAction action = ScaleAction::kScaleOut;
  Timestamp timestamp = 0;

  friend bool operator==(const Notification&, const Notification&) = default;
};

struct Evaluation {
  AlarmState state;
  std::optional<Notification> notification;
};

/// One consecutive-period transition. A violation bumps the counter, any
/// other sample resets it. Reaching required_periods raises ALARM, emits one
/// notification and zeroes the counter, so the next notification needs a
/// fresh run. Throws kStaleSample unless the sample is newer than the last
/// evaluated one.
Evaluation evaluate(const AlarmState& state, const AlarmDefinition& def, const MetricPoint& sample);

/// Drives a set of alarms from the metric store once per period.
class AlarmEngine {
 public:
  explicit AlarmEngine(std::vector<AlarmDefinition> definitions);

  /// Evaluates every alarm against the newest sample of its metric that has
  /// not been evaluated yet. Alarms without a new sample keep their counter.
  /// Notifications are returned ordered by alarm id.
  std::vector<Notification> evaluate_latest(const MetricStore& store);

  const std::vector<AlarmDefinition>& definitions() const { return definitions_; }
  const std::vector<AlarmState>& states() const { return states_; }
  /// Number of evaluations skipped for lack of a new sample.
  std::size_t skipped() const { return skipped_; }

 private:
  std::vector<AlarmDefinition> definitions_;
  std::vector<AlarmState> states_;
  std::size_t skipped_ = 0;
};

}  // namespace pelastic
