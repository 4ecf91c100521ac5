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
#include <span>
#include <string>
#include <vector>

#include "pelastic/simcluster.hpp"

namespace pelastic::harness {

struct ReportRow {
  std::string statistic;  // avg, p90, p95, p99, p99.5, p99.9
  double value_ms = 0.0;
};

/// Time filter on the request send time, [start, end) in seconds.
struct ReportWindow {
  double start = 0.0;
  double end = 0.0;
};

/// Mean plus nearest-rank percentiles of response_ms: the p-th percentile is
/// the ceil(p/100 * N)-th smallest value. Throws kEmptyInput when no record
/// falls in the window.
std::vector<ReportRow> percentile_report(std::span<const ResponseRecord> records,
                                         std::optional<ReportWindow> window = std::nullopt);

/// Durations of one forecaster activation.
struct ActivationTiming {
  double fetch_ms = 0.0;     // reading the input window from the store
  double forecast_ms = 0.0;  // model inference only
  double write_ms = 0.0;     // persisting the prediction

  double total_ms() const { return fetch_ms + forecast_ms + write_ms; }
};

struct OverheadReport {
  double forecasting_ms = 0.0;
  double total_ms = 0.0;
  std::size_t activations = 0;
};

/// Means over activations. Throws kEmptyInput on an empty list.
OverheadReport overhead_report(std::span<const ActivationTiming> timings);

}  // namespace pelastic::harness
