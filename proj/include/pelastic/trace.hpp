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

#include <iosfwd>
#include <string>
#include <vector>

#include "pelastic/error.hpp"

namespace pelastic {

/// Request rates (req/s per client thread), each held for `segment_seconds`.
struct WorkloadTrace {
  std::vector<double> rates;
  Timestamp segment_seconds = 60;

  Timestamp duration() const { return segment_seconds * static_cast<Timestamp>(rates.size()); }
  /// Rate in force at second `t`; 0 past the end.
  double rate_at(Timestamp t) const {
    if (t < 0 || t >= duration()) return 0.0;
    return rates[static_cast<std::size_t>(t / segment_seconds)];
  }
  void validate() const;
};

/// One decimal rate per line; blank lines and `#` comments ignored.
WorkloadTrace read_trace(std::istream& in);
WorkloadTrace read_trace_file(const std::string& path);
void write_trace(std::ostream& out, const WorkloadTrace& trace);
void write_trace_file(const std::string& path, const WorkloadTrace& trace);

}  // namespace pelastic
