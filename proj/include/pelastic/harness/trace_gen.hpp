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

#include <string>
#include <string_view>

#include "pelastic/trace.hpp"

namespace pelastic::harness {

enum class TraceShape { kRamp, kStep, kSinMix };

TraceShape parse_trace_shape(std::string_view name);

/// Shape parameters, rates in req/s per client thread, times in minutes.
struct TraceParams {
  double base = 10.0;
  double peak = 100.0;
  int t0 = 50;             // ramp start / step time
  int t1 = 80;             // ramp end
  double exponent = 2.0;   // ramp curvature; > 1 bends upward
  double amplitude = 0.0;  // sin-mix
  double period = 30.0;
  double amplitude2 = 0.0;
  double period2 = 7.0;
  int duration = 90;
};

/// ramp: base before t0, base + (peak - base) * ((k - t0) / (t1 - t0))^exponent
/// on [t0, t1), peak from t1 on. step: base before t0, peak after.
/// sin-mix: base plus two sinusoids, clipped at 0. Throws kInvalidParams.
WorkloadTrace gen_trace(TraceShape shape, const TraceParams& params);

}  // namespace pelastic::harness
