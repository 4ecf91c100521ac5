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

#include <span>

#include <Eigen/Dense>

#include "pelastic/metric_store.hpp"

namespace pelastic::forecast {

/// Ordinary least-squares line over (time, value) pairs.
struct LinearModel {
  double slope = 0.0;  // per unit of the time axis used in the fit
  double intercept = 0.0;
};

/// Least-squares fit. Throws kDegenerateWindow with fewer than two points or
/// when every timestamp is equal.
LinearModel fit_linear(const Eigen::Ref<const Eigen::VectorXd>& t,
                       const Eigen::Ref<const Eigen::VectorXd>& y);
LinearModel fit_linear(std::span<const MetricPoint> window);

inline double predict_linear(const LinearModel& model, double t_future) {
  return model.slope * t_future + model.intercept;
}

}  // namespace pelastic::forecast
