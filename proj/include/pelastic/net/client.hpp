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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "pelastic/net/server.hpp"
#include "pelastic/simcluster.hpp"
#include "pelastic/trace.hpp"

namespace pelastic::net {

/// Balancer target list shared by client threads; the live control loop
/// swaps it as instances come and go. Each new session takes the next
/// target round-robin.
class TargetSet {
 public:
  TargetSet() = default;
  explicit TargetSet(std::vector<Endpoint> targets) : targets_(std::move(targets)) {}

  void set(std::vector<Endpoint> targets);
  std::vector<Endpoint> snapshot() const;
  /// Round-robin pick; nullopt when empty.
  std::optional<Endpoint> next();

 private:
  mutable std::mutex mutex_;
  std::vector<Endpoint> targets_;
  std::size_t next_index_ = 0;
};

struct ClientConfig {
  int threads = 6;
  int sessions = 1000;         // per thread
  WorkloadTrace trace;         // per-thread rates
  std::size_t payload_bytes = 0;
  std::chrono::milliseconds drain_timeout{5000};
  int connect_attempts = 3;
};

struct ClientReport {
  std::vector<ResponseRecord> records;  // send/completion in seconds since client start
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t failed = 0;             // send failures and replies lost at drain
  std::uint64_t sessions_opened = 0;
};

/// Open-loop paced client. Each thread issues its trace's rate uniformly
/// within every second, at the scheduled instant regardless of outstanding
/// replies; its request budget is cut into `sessions` contiguous chunks, each
/// over a fresh connection.
ClientReport run_client(const ClientConfig& config, TargetSet& targets);

}  // namespace pelastic::net
