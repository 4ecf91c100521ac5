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
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pelastic/metric_store.hpp"
#include "pelastic/trace.hpp"

namespace pelastic {

struct SimConfig {
  double per_request_cost = 0.01;  // CPU-seconds per request
  double instance_capacity = 1.0;  // CPU-seconds per second (one vCPU)
  Timestamp metric_period = 60;
  int client_threads = 6;
  int sessions = 1000;             // per thread
  std::uint64_t rng_seed = 1;

  double service_time() const { return per_request_cost / instance_capacity; }
  void validate() const;
};

struct ResponseRecord {
  double send_ts = 0.0;        // seconds
  double completion_ts = 0.0;  // seconds
  double response_ms = 0.0;
  std::string instance_id;

  friend bool operator==(const ResponseRecord&, const ResponseRecord&) = default;
};

/// CSV `send_ts,completion_ts,response_ms,instance_id`.
void write_records_csv(std::ostream& out, std::span<const ResponseRecord> records);
std::vector<ResponseRecord> read_records_csv(std::istream& in);

struct SessionRouterState {
  std::size_t next_index = 0;
};

/// Round-robin pick for a new session. Throws kNoActiveInstance on an empty list.
std::pair<std::string, SessionRouterState> route_session(SessionRouterState router,
                                                         std::span<const std::string> active);

/// FIFO single server draining head-of-line work at `capacity`. Completion of
/// a request arriving at a is max(a, previous completion) + work / capacity,
/// so the backlog follows B' = max(0, B + arrived work - capacity * dt)
/// whenever the server stays busy through the step.
class InstanceQueue {
 public:
  struct Pending {
    double send_ts;
    double start;
    double completion;
    double work;
  };

  InstanceQueue(std::string id, double capacity, Timestamp metric_period);

  const std::string& id() const { return id_; }
  void enqueue(double send_ts, double arrival_ts, double work);

  /// Moves time forward to `t`, emitting completed requests and booking busy
  /// time into the metric period it falls in. Steps must not straddle a
  /// period boundary.
  void advance_to(double t, std::vector<ResponseRecord>& completed);

  /// Removes unfinished requests at `now`, returning (send_ts, remaining work).
  std::vector<std::pair<double, double>> evict(double now);

  /// Outstanding work in CPU-seconds at `now`.
  double backlog(double now) const;
  std::size_t queued() const { return pending_.size(); }
  /// Busy seconds booked into period `index` (covering [index*P, (index+1)*P)).
  double busy_seconds(Timestamp index) const;

 private:
  std::string id_;
  double capacity_;
  Timestamp period_;
  double clock_ = 0.0;
  double busy_until_ = 0.0;
  std::deque<Pending> pending_;
  std::vector<double> busy_by_period_;
};

/// Interval-average CPU percent of period `index`, stamped at its end.
MetricPoint sample_cpu(const InstanceQueue& instance, Timestamp index, Timestamp period);

/// Hooks the simulator calls into the control loop.
struct ControlHooks {
  /// Serving instance ids at second `now` (start of the step); sorted.
  std::function<std::vector<std::string>(Timestamp now)> active_instances;
  /// Runs at each metric-period boundary after CPU samples are ingested.
  std::function<void(Timestamp now)> on_period;
};

struct SimCounters {
  std::uint64_t injected = 0;
  std::uint64_t completed = 0;
  std::uint64_t queued = 0;
  std::uint64_t requeued = 0;
};

/// Deterministic 1-second event loop over the cluster. Each client thread
/// paces its share of the trace uniformly within every second and splits
/// its request budget into `sessions` contiguous sessions, each routed
/// round-robin when it opens.
class ClusterSimulator {
 public:
  ClusterSimulator(WorkloadTrace trace, SimConfig config, MetricStore& store);

  /// Simulates [now, now + 1).
  void step(ControlHooks& hooks);

  Timestamp now() const { return now_; }
  const SimCounters& counters() const { return counters_; }
  const std::vector<ResponseRecord>& records() const { return records_; }
  std::vector<ResponseRecord> take_records() { return std::move(records_); }
  const std::vector<std::pair<std::string, MetricPoint>>& cpu_samples() const { return cpu_samples_; }
  const InstanceQueue* instance(const std::string& id) const;

 private:
  struct ClientThread {
    double cumulative = 0.0;  // expected requests issued so far
    std::uint64_t issued = 0;
    std::uint64_t budget = 0;
    std::int64_t session = -1;
    std::string target;
  };

  void reconcile(const std::vector<std::string>& active);
  InstanceQueue& route_one(const std::vector<std::string>& active);

  WorkloadTrace trace_;
  SimConfig config_;
  MetricStore& store_;
  Timestamp now_ = 0;
  SessionRouterState router_;
  std::vector<ClientThread> threads_;
  std::vector<InstanceQueue> queues_;  // serving instances, sorted by id
  std::vector<ResponseRecord> records_;
  std::vector<std::pair<std::string, MetricPoint>> cpu_samples_;
  SimCounters counters_;
};

struct SimResult {
  std::vector<ResponseRecord> records;
  std::vector<std::pair<std::string, MetricPoint>> cpu_samples;
  SimCounters counters;
};

/// Runs the loop for `duration` seconds. Throws kConfigError if the trace is
/// shorter than `duration` or the duration is not a whole number of periods.
SimResult simulate(const WorkloadTrace& trace, ControlHooks hooks, const SimConfig& config,
                   Timestamp duration, MetricStore& store);

}  // namespace pelastic
