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

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "pelastic/error.hpp"

namespace pelastic {

struct MetricPoint {
  Timestamp timestamp = 0;
  double value = 0.0;

  friend bool operator==(const MetricPoint&, const MetricPoint&) = default;
};

/// Identifies one series: metric name plus ordered dimensions (e.g. instance_id).
struct SeriesKey {
  std::string metric;
  std::map<std::string, std::string> dimensions;

  SeriesKey() = default;
  SeriesKey(std::string metric_name, std::map<std::string, std::string> dims = {})
      : metric(std::move(metric_name)), dimensions(std::move(dims)) {}

  /// Canonical text form: `metric{k1=v1,k2=v2}`.
  std::string str() const;

  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

struct TimeSeries {
  SeriesKey key;
  std::vector<MetricPoint> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

/// In-memory series store. Ingest and query may be called concurrently; a
/// reader never sees a partially applied ingest.
class MetricStore {
 public:
  MetricStore() = default;
  MetricStore(const MetricStore&) = delete;
  MetricStore& operator=(const MetricStore&) = delete;

  /// Appends `point`. Throws kOutOfOrderTimestamp unless the timestamp is
  /// strictly after the last stored one, kInvalidValue for NaN/inf or a
  /// negative timestamp.
  void ingest(const SeriesKey& key, MetricPoint point);

  /// Points with t_start <= timestamp <= t_end, in order.
  TimeSeries query(const SeriesKey& key, Timestamp t_start, Timestamp t_end) const;

  /// Newest point of the series if it is later than `after`. Unknown series
  /// yield nullopt rather than an error.
  std::optional<MetricPoint> latest_after(const SeriesKey& key, Timestamp after) const;

  /// Sums the series over aligned buckets of width `step`. Bucket labels are
  /// the multiples of `step` inside [t_start, t_end]; bucket T covers
  /// (T - step, T]. Within a bucket each series contributes its latest
  /// sample; a series with no sample in the bucket contributes its most
  /// recent earlier sample, and is left out of the sum before its first
  /// sample. Buckets where no series contributes are omitted.
  TimeSeries aggregate_sum(std::span<const SeriesKey> keys, Timestamp t_start, Timestamp t_end,
                           Timestamp step) const;

  bool contains(const SeriesKey& key) const;
  std::vector<SeriesKey> keys() const;

  /// CSV dump: header `timestamp,value`, one row per point.
  void write_csv(const SeriesKey& key, std::ostream& out) const;

 private:
  const std::vector<MetricPoint>& points_locked(const SeriesKey& key) const;

  mutable std::shared_mutex mutex_;
  std::map<SeriesKey, std::vector<MetricPoint>> series_;
};

/// Renders a double the same way on every run; used by all CSV writers.
std::string format_double(double value, int precision = 6);

}  // namespace pelastic
