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
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace pelastic::net {

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;

  std::string str() const { return host + ":" + std::to_string(port); }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Burns CPU with a fixed arithmetic kernel whose speed is measured once
/// against the monotonic clock.
class CpuBurner {
 public:
  CpuBurner();
  explicit CpuBurner(double iterations_per_second) : rate_(iterations_per_second) {}

  void burn(double seconds) const;
  double iterations_per_second() const { return rate_; }

 private:
  double rate_;
};

struct ServerConfig {
  Endpoint listen;          // port 0 picks an ephemeral port
  double per_request_cost = 0.01;
};

/// Accept loop driven by run(); every connection gets its own handler
/// thread. For each request frame it burns
/// per_request_cost CPU-seconds and replies with the echoed timestamp.
class TcpServer {
 public:
  /// Binds and listens. Throws pelastic::Error(kIo) with the errno text.
  explicit TcpServer(ServerConfig config);
  ~TcpServer();
  TcpServer(const TcpServer&) = delete;
  TcpServer& operator=(const TcpServer&) = delete;

  std::uint16_t port() const { return port_; }
  /// Blocks until stop() is called.
  void run();
  void stop() { stopping_ = true; }
  std::uint64_t requests_served() const { return served_.load(); }

 private:
  void handle(int fd);

  ServerConfig config_;
  CpuBurner burner_;
  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  std::atomic<bool> stopping_{false};
  std::atomic<std::uint64_t> served_{0};
  std::mutex handlers_mutex_;
  std::vector<int> connections_;
  std::atomic<int> live_handlers_{0};
};

}  // namespace pelastic::net
