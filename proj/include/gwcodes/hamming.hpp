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
#include <optional>
#include <span>
#include <vector>

#include "gwcodes/errors.hpp"
#include "gwcodes/linalg.hpp"
#include "gwcodes/profile.hpp"

namespace gw {

/// A linear code of length n over F_q (Hamming metric).
class LinearCode {
 public:
  explicit LinearCode(Subspace space) : space_(std::move(space)) {}
  static LinearCode from_generators(const Matrix& generators) { return LinearCode(rowspace(generators)); }

  const Subspace& space() const noexcept { return space_; }
  const FieldPtr& field() const noexcept { return space_.field(); }
  std::size_t length() const noexcept { return space_.ambient(); }
  std::size_t dim() const noexcept { return space_.dim(); }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.space_ == b.space_; }

 private:
  Subspace space_;
};

std::size_t weight(std::span<const Elem> v);

/// Coordinates (0-based, ascending) where some vector of D is nonzero.
std::vector<std::size_t> support(const Subspace& d);

/// Throws std::invalid_argument on the zero code.
std::size_t min_weight(const LinearCode& c, const Guards& guards = {});

/// Exhaustive codeword scan.
std::size_t max_weight_scan(const LinearCode& c, const Guards& guards = {});
/// |support| when the basis has at most q pairwise non-proportional nonzero
/// columns (then no union of the coordinate hyperplanes covers the code);
/// nullopt otherwise.
std::optional<std::size_t> max_weight_by_columns(const LinearCode& c);
/// Scan when q^dim fits the codeword guard, else the column test; throws
/// GuardExceeded when neither applies.
std::size_t max_weight(const LinearCode& c, const Guards& guards = {});

/// d_r(C) = min |support(D)| over r-dimensional subcodes D, by enumerating
/// the r-dimensional subspaces of the coordinate space of C.
WeightProfile generalized_hamming_weights(const LinearCode& c, const Guards& guards = {});

bool is_optimal_linear_anticode(const LinearCode& c, const Guards& guards = {});

/// The code of all vectors supported on `coords` (0-based).
LinearCode free_code(FieldPtr field, std::size_t n, const std::vector<std::size_t>& coords);

/// Support S with C equal to free_code(n, S), or nullopt for a non-free
/// optimal anticode (possible only for q = 2). Throws std::invalid_argument
/// if C is not an optimal linear anticode.
std::optional<std::vector<std::size_t>> classify_optimal_anticode(const LinearCode& c, const Guards& guards = {});

/// Every optimal linear anticode in F_q^n, by exhaustive subspace filtering.
/// Limited to n <= guards.max_anticode_length.
std::vector<LinearCode> exhaustive_linear_anticodes(FieldPtr field, std::size_t n, const Guards& guards = {});

/// r-th entry: min dim(A) over optimal anticodes A with dim(A ∩ C) >= r.
/// Free codes are always searched; for q = 2 the non-free anticodes from
/// exhaustive_linear_anticodes are included as well.
WeightProfile ghw_via_anticodes(const LinearCode& c, const Guards& guards = {});

LinearCode hamming_dual(const LinearCode& c);

}  // namespace gw
