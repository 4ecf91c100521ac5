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
#include <iosfwd>
#include <span>

#include <Eigen/Dense>

#include "pelastic/error.hpp"

namespace pelastic::forecast {

/// Input/target pairs, one example per column of `inputs`.
struct Dataset {
  Eigen::MatrixXd inputs;   // window_len x N
  Eigen::MatrixXd targets;  // 1 x N

  Eigen::Index size() const { return inputs.cols(); }
  Eigen::Index window_len() const { return inputs.rows(); }
  bool empty() const { return inputs.cols() == 0; }

  Dataset select(std::span<const Eigen::Index> columns) const;
  void validate() const;
};

/// Train set D and held-out validation set D'.
struct DatasetSplit {
  Dataset train;
  Dataset validation;
};

/// Seeded shuffle, then the first `train_fraction` of the examples go to D.
DatasetSplit split_dataset(const Dataset& data, double train_fraction, std::uint64_t seed);

/// Sliding windows over a series: input series[k .. k+window_len), target
/// series[k + window_len - 1 + horizon].
Dataset windows_from_series(std::span<const double> series, Eigen::Index window_len,
                            Eigen::Index horizon);

/// Multiplies every input and target by `factor`.
Dataset scale_dataset(Dataset data, double factor);

struct SyntheticConfig {
  Eigen::Index window_len = 20;
  Eigen::Index horizon = 15;  // samples
  Eigen::Index examples = 3000;
  double max_value = 500.0;   // summed CPU percent ceiling (100 x max cluster size)
  double max_noise = 3.0;     // std-dev upper bound, same unit as the values
  std::uint64_t seed = 7;
};

/// Windows cut from random traces in summed-CPU-percent units: plateaus,
/// ramps with random curvature, and sinusoid mixes, all with noise and
/// clipped to [0, max_value].
Dataset synthetic_dataset(const SyntheticConfig& cfg);

/// CSV: one example per row, `x0,...,x{n-1},target`.
void write_dataset_csv(std::ostream& out, const Dataset& data);
Dataset read_dataset_csv(std::istream& in);

}  // namespace pelastic::forecast
