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

#include "gwcodes/kernels.hpp"

#include <atomic>

namespace gw::kernels {

namespace {
std::atomic<int> g_cap{0};
}

void set_max_threads(int n) {
  g_cap = n < 0 ? 0 : n;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() {
#ifdef _OPENMP
  const int omp = omp_get_max_threads();
  const int cap = g_cap.load();
  return cap > 0 ? std::min(cap, omp) : omp;
#else
  return 1;
#endif
}

}  // namespace gw::kernels
