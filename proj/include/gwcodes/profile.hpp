// Copyright 2026 The gwcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace gw {

enum class Metric { hamming, gabidulin, delsarte };

std::string to_string(Metric m);

/// Generalized weights (w_1, ..., w_t); values[r - 1] holds w_r.
struct WeightProfile {
  Metric metric = Metric::hamming;
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  int weight(std::size_t r) const { return values.at(r - 1); }

  friend bool operator==(const WeightProfile& a, const WeightProfile& b) {
    return a.metric == b.metric && a.values == b.values;
  }
};

std::ostream& operator<<(std::ostream& os, const WeightProfile& p);

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace gw
