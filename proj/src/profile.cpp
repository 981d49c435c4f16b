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

#include "gwcodes/profile.hpp"

namespace gw {

std::string to_string(Metric m) {
  switch (m) {
    case Metric::hamming: return "hamming";
    case Metric::gabidulin: return "gabidulin";
    case Metric::delsarte: return "delsarte";
  }
  return "unknown";
}

std::ostream& operator<<(std::ostream& os, const WeightProfile& p) {
  os << to_string(p.metric) << '(';
  for (std::size_t i = 0; i < p.values.size(); ++i) os << (i ? "," : "") << p.values[i];
  return os << ')';
}

}  // namespace gw
