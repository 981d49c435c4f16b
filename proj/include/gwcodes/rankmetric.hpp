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
#include <span>
#include <vector>

#include "gwcodes/errors.hpp"
#include "gwcodes/field.hpp"
#include "gwcodes/linalg.hpp"
#include "gwcodes/profile.hpp"

namespace gw {

/// An F_{q^m}-linear code in F_{q^m}^k, 1 <= k <= m, under the rank metric.
class GabidulinCode {
 public:
  /// Throws InputError when k > m or the space is not over the top field.
  GabidulinCode(FieldTower tower, Subspace space);
  static GabidulinCode from_generators(FieldTower tower, const Matrix& generators);

  const FieldTower& tower() const noexcept { return tower_; }
  const Subspace& space() const noexcept { return space_; }
  std::size_t k() const noexcept { return space_.ambient(); }
  std::size_t m() const noexcept { return tower_.m(); }
  std::size_t dim() const noexcept { return space_.dim(); }

  friend bool operator==(const GabidulinCode& a, const GabidulinCode& b) {
    return a.tower_ == b.tower_ && a.space_ == b.space_;
  }

 private:
  FieldTower tower_;
  Subspace space_;
};

/// k x m matrix over F_q whose row i holds the coordinates of v_i in the
/// polynomial basis 1, y, ..., y^{m-1} of F_{q^m} over F_q.
Matrix coordinate_matrix(const FieldTower& tower, std::span<const Elem> v);

/// dim over F_q of the span of the entries of v.
std::size_t rank_of_vector(const FieldTower& tower, std::span<const Elem> v);

std::vector<Elem> frobenius_vector(const FieldTower& tower, std::span<const Elem> v);

/// True iff the canonical basis of V has all entries in F_q.
bool is_frobenius_closed(const FieldTower& tower, const Subspace& v);
/// True iff the Frobenius image of every basis vector lies in V.
bool is_frobenius_closed_direct(const FieldTower& tower, const Subspace& v);

/// The canonical basis of a Frobenius-closed V, as a matrix over F_q.
/// Throws std::invalid_argument if V is not Frobenius-closed.
Matrix fq_basis(const FieldTower& tower, const Subspace& v);

/// The F_{q^m}-span of an F_q-subspace of F_q^k.
Subspace lift(const FieldTower& tower, const Subspace& base_space);

/// Frobenius-closed subspaces of F_{q^m}^k of a fixed dimension d, indexed
/// through the bijection with the d-dimensional subspaces of F_q^k.
class FrobeniusClosedEnumerator {
 public:
  FrobeniusClosedEnumerator(const FieldTower& tower, std::size_t k, std::size_t d, const Guards& guards = {});
  std::uint64_t count() const noexcept { return base_.count(); }
  Subspace at(std::uint64_t i) const { return lift(tower_, base_.at(i)); }

 private:
  FieldTower tower_;
  SubspaceEnumerator base_;
};

std::vector<Subspace> enumerate_frobenius_closed(const FieldTower& tower, std::size_t k, std::size_t d,
                                                 const Guards& guards = {});

/// Exhaustive codeword scans; max_rank of the zero space is 0, min_rank
/// requires a nonzero space.
std::size_t max_rank(const FieldTower& tower, const Subspace& v, const Guards& guards = {});
std::size_t min_rank(const FieldTower& tower, const Subspace& v, const Guards& guards = {});

/// dim(V) == maxrk(V), by exhaustive scan.
bool is_optimal_gabidulin_anticode(const FieldTower& tower, const Subspace& v, const Guards& guards = {});

/// Every optimal Gabidulin anticode of F_{q^m}^k of dimension d, found by
/// filtering all d-dimensional subspaces with the maxrk scan.
std::vector<Subspace> exhaustive_gabidulin_anticodes(const FieldTower& tower, std::size_t k, std::size_t d,
                                                     const Guards& guards = {});

/// m_r(C): minimum over Frobenius-closed V with dim(V ∩ C) >= r of dim V.
WeightProfile generalized_rank_weights(const GabidulinCode& c, const Guards& guards = {});
/// Same quantity minimized over optimal Gabidulin anticodes found by
/// exhaustive filtering instead of over Frobenius-closed spaces.
WeightProfile generalized_rank_weights_via_anticodes(const GabidulinCode& c, const Guards& guards = {});
/// m'_r(C): minimum maxrk over r-dimensional subcodes.
WeightProfile oggier_sboui_rank_weights(const GabidulinCode& c, const Guards& guards = {});

/// (Δ_0, ..., Δ_k) with Δ_μ = max dim(V ∩ C) over Frobenius-closed V of dimension μ.
std::vector<int> security_profile(const GabidulinCode& c, const Guards& guards = {});
/// Ascending μ in [1, k] with Δ_μ > Δ_{μ-1}.
std::vector<int> worst_case_drops(const GabidulinCode& c, const Guards& guards = {});

}  // namespace gw
