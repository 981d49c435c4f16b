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

#include "gwcodes/hamming.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>

#include "gwcodes/kernels.hpp"

namespace gw {

namespace {

void require_nonzero(const LinearCode& c) {
  if (c.dim() == 0) throw std::invalid_argument("operation requires a non-zero code");
}

// Number of columns of `m` that are nonzero.
std::size_t nonzero_columns(const Matrix& m) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) {
        ++count;
        break;
      }
  }
  return count;
}

Matrix select_columns(const Matrix& m, const std::vector<bool>& keep) {
  const auto cols = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true));
  Matrix out(m.field(), m.rows(), cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (keep[j]) out(i, c++) = m(i, j);
  }
  return out;
}

}  // namespace

std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

std::vector<std::size_t> support(const Subspace& d) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d.ambient(); ++j)
    for (std::size_t i = 0; i < d.dim(); ++i)
      if (d.basis()(i, j) != 0) {
        out.push_back(j);
        break;
      }
  return out;
}

std::size_t min_weight(const LinearCode& c, const Guards& guards) {
  require_nonzero(c);
  std::size_t best = c.length();
  c.space().for_each_vector(
      [&](std::span<const Elem> v) {
        const std::size_t w = weight(v);
        if (w > 0) best = std::min(best, w);
        return best > 1;
      },
      guards);
  return best;
}

std::size_t max_weight_scan(const LinearCode& c, const Guards& guards) {
  std::size_t best = 0;
  const std::size_t cap = support(c.space()).size();
  c.space().for_each_vector(
      [&](std::span<const Elem> v) {
        best = std::max(best, weight(v));
        return best < cap;
      },
      guards);
  return best;
}

std::optional<std::size_t> max_weight_by_columns(const LinearCode& c) {
  const Matrix& g = c.space().basis();
  const GaloisField& k = *c.field();
  std::set<std::vector<Elem>> directions;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    std::vector<Elem> col(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) col[i] = g(i, j);
    auto lead = std::find_if(col.begin(), col.end(), [](Elem x) { return x != 0; });
    if (lead == col.end()) continue;
    const Elem s = k.inv(*lead);
    for (Elem& x : col) x = k.mul(x, s);
    directions.insert(std::move(col));
  }
  if (directions.size() > k.size()) return std::nullopt;
  return nonzero_columns(g);
}

std::size_t max_weight(const LinearCode& c, const Guards& guards) {
  if (c.space().cardinality() <= guards.max_codewords) return max_weight_scan(c, guards);
  if (auto w = max_weight_by_columns(c)) return *w;
  throw GuardExceeded("max-codewords", c.space().cardinality(), guards.max_codewords);
}

WeightProfile generalized_hamming_weights(const LinearCode& c, const Guards& guards) {
  require_nonzero(c);
  const std::size_t t = c.dim();
  const Matrix& g = c.space().basis();
  WeightProfile profile{Metric::hamming, {}};
  for (std::size_t r = 1; r <= t; ++r) {
    SubspaceEnumerator subcodes(c.field(), t, r, guards);
    const auto best = kernels::min(
        subcodes.count(),
        [&](std::uint64_t i) {
          return static_cast<std::int64_t>(nonzero_columns(subcodes.at(i).basis() * g));
        },
        static_cast<std::int64_t>(c.length()));
    profile.values.push_back(static_cast<int>(best));
  }
  return profile;
}

bool is_optimal_linear_anticode(const LinearCode& c, const Guards& guards) {
  return max_weight(c, guards) == c.dim();
}

LinearCode free_code(FieldPtr field, std::size_t n, const std::vector<std::size_t>& coords) {
  std::set<std::size_t> s(coords.begin(), coords.end());
  Matrix g(field, 0, n);
  std::vector<Elem> row(n);
  for (std::size_t j : s) {
    if (j >= n) throw std::invalid_argument("free-code coordinate out of range");
    std::fill(row.begin(), row.end(), 0);
    row[j] = 1;
    g.append_row(row);
  }
  return LinearCode::from_generators(g);
}

std::optional<std::vector<std::size_t>> classify_optimal_anticode(const LinearCode& c, const Guards& guards) {
  if (!is_optimal_linear_anticode(c, guards)) throw std::invalid_argument("code is not an optimal linear anticode");
  auto s = support(c.space());
  if (s.size() == c.dim()) return s;
  return std::nullopt;
}

std::vector<LinearCode> exhaustive_linear_anticodes(FieldPtr field, std::size_t n, const Guards& guards) {
  if (n > guards.max_anticode_length) throw GuardExceeded("max-anticode-length", n, guards.max_anticode_length);
  std::vector<LinearCode> out;
  for (std::size_t d = 0; d <= n; ++d) {
    SubspaceEnumerator spaces(field, n, d, guards);
    const auto hits = kernels::filter(spaces.count(), [&](std::uint64_t i) {
      LinearCode a(spaces.at(i));
      return max_weight_scan(a, guards) == d;
    });
    for (auto i : hits) out.emplace_back(spaces.at(i));
  }
  return out;
}

WeightProfile ghw_via_anticodes(const LinearCode& c, const Guards& guards) {
  require_nonzero(c);
  const std::size_t n = c.length(), t = c.dim();
  const Matrix& g = c.space().basis();
  if (n >= 63) throw GuardExceeded("free-code-subsets", n, 62);
  guards.check_subspaces(std::uint64_t{1} << n);

  // best[r] = smallest anticode dimension reaching intersection r
  std::vector<int> best(t + 1, std::numeric_limits<int>::max());
  std::vector<bool> outside(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t j = 0; j < n; ++j) outside[j] = !((mask >> j) & 1);
    const auto size = static_cast<int>(std::popcount(mask));
    // dim(C ∩ F_S) = t - rank(G restricted to the complement of S)
    const std::size_t inter = t - rank(select_columns(g, outside));
    for (std::size_t r = 1; r <= inter; ++r) best[r] = std::min(best[r], size);
  }
  if (c.field()->size() == 2) {
    for (const auto& a : exhaustive_linear_anticodes(c.field(), n, guards)) {
      const std::size_t inter = intersection_dim(a.space(), c.space());
      for (std::size_t r = 1; r <= inter; ++r) best[r] = std::min(best[r], static_cast<int>(a.dim()));
    }
  }
  return {Metric::hamming, std::vector<int>(best.begin() + 1, best.end())};
}

LinearCode hamming_dual(const LinearCode& c) { return LinearCode(dual_subspace(c.space())); }

}  // namespace gw
