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

#include <random>
#include <vector>

#include "gwcodes/linalg.hpp"

namespace gw::testing {

inline Matrix random_matrix(const FieldPtr& k, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, k->size() - 1);
  std::vector<Elem> data(rows * cols);
  for (auto& x : data) x = pick(rng);
  return Matrix(k, rows, cols, std::move(data));
}

inline Matrix random_invertible(const FieldPtr& k, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(k, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

/// Uniform-ish random subspace of exact dimension d.
inline Subspace random_subspace(const FieldPtr& k, std::size_t n, std::size_t d, std::mt19937_64& rng) {
  while (true) {
    Subspace s = rowspace(random_matrix(k, d, n, rng));
    if (s.dim() == d) return s;
  }
}

/// All vectors of K^n, first coordinate least significant.
inline std::vector<std::vector<Elem>> all_vectors(const FieldPtr& k, std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == k->size()) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline Elem dot(const GaloisField& k, std::span<const Elem> a, std::span<const Elem> b) {
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = k.add(s, k.mul(a[i], b[i]));
  return s;
}

}  // namespace gw::testing
