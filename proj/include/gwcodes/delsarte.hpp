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
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gwcodes/errors.hpp"
#include "gwcodes/linalg.hpp"
#include "gwcodes/profile.hpp"
#include "gwcodes/rankmetric.hpp"

namespace gw {

/// An F_q-linear space of k x m matrices (1 <= k <= m), stored flattened
/// row-major as a subspace of F_q^{km}.
class DelsarteCode {
 public:
  /// Throws InputError when k > m, k == 0, or the ambient size is not k*m.
  DelsarteCode(std::size_t k, std::size_t m, Subspace space);
  static DelsarteCode from_matrices(FieldPtr field, std::size_t k, std::size_t m, const std::vector<Matrix>& gens);

  const FieldPtr& field() const noexcept { return space_.field(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const Subspace& space() const noexcept { return space_; }
  /// The i-th canonical basis element as a k x m matrix.
  Matrix generator(std::size_t i) const;
  std::vector<Matrix> generators() const;

  friend bool operator==(const DelsarteCode& a, const DelsarteCode& b) {
    return a.k_ == b.k_ && a.m_ == b.m_ && a.space_ == b.space_;
  }

 private:
  std::size_t k_, m_;
  Subspace space_;
};

/// Rank of a flattened k x m matrix.
std::size_t matrix_rank(const GaloisField& field, std::span<const Elem> flat, std::size_t k, std::size_t m);

std::size_t min_rank(const DelsarteCode& c, const Guards& guards = {});
std::size_t max_rank(const DelsarteCode& c, const Guards& guards = {});

/// {1, y, ..., y^{m-1}} as elements of F_{q^m}.
std::vector<Elem> polynomial_basis(const FieldTower& tower);
/// m x m matrix over F_q whose row j holds the polynomial-basis coordinates
/// of basis[j]. Throws std::invalid_argument if `basis` is not a basis of
/// F_{q^m} over F_q.
Matrix basis_matrix(const FieldTower& tower, std::span<const Elem> basis);
/// The matrix B with g_j = sum_s B_{js} f_s.
Matrix change_of_basis(const FieldTower& tower, std::span<const Elem> g, std::span<const Elem> f);

/// M_G(v): the k x m matrix over F_q with v_i = sum_j M_{ij} g_j.
Matrix associated_matrix(const FieldTower& tower, std::span<const Elem> v, std::span<const Elem> basis);
/// The Delsarte code {M_G(c) : c in C}.
DelsarteCode associate(const GabidulinCode& c, std::span<const Elem> basis);

/// dim(C) == m (k - minrk(C) + 1); throws on the zero code.
bool is_optimal_delsarte_code(const DelsarteCode& c, const Guards& guards = {});
/// dim(C) == m maxrk(C).
bool is_optimal_delsarte_anticode(const DelsarteCode& c, const Guards& guards = {});

/// Matrices whose last k - R rows vanish.
DelsarteCode standard_anticode(FieldPtr field, std::size_t k, std::size_t m, std::size_t r);

/// An optimal anticode described by a support subspace.
///
/// column_support: {N : colsp(N) ⊆ U} with U ⊆ F_q^k.
/// row_support:    {N : rowsp(N) ⊆ U} with U ⊆ F_q^m; only used when k == m.
struct AnticodeDescriptor {
  enum class Kind { column_support, row_support };
  Kind kind;
  std::size_t k, m;
  Subspace support;

  std::size_t rank() const noexcept { return support.dim(); }
};

/// Every optimal anticode of maximum rank R, each exactly once: column
/// supports over all R-dimensional U ⊆ F_q^k and, when k == m, the row
/// supports whose materialized space is not already a column support.
std::vector<AnticodeDescriptor> enumerate_optimal_anticodes(FieldPtr field, std::size_t k, std::size_t m,
                                                            std::size_t r, const Guards& guards = {});

DelsarteCode anticode_space(const AnticodeDescriptor& d);

/// All optimal anticodes of a shape, preprocessed for fast intersection with
/// codes: dim(A ∩ C) = dim C - rank of the parity checks of A applied to C.
class AnticodeCatalog {
 public:
  AnticodeCatalog(FieldPtr field, std::size_t k, std::size_t m, const Guards& guards = {});

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t m() const noexcept { return m_; }
  const std::vector<AnticodeDescriptor>& anticodes(std::size_t r) const { return by_rank_.at(r); }
  std::size_t size() const noexcept;

  /// dim(A ∩ C) for one catalogued anticode.
  std::size_t intersection_dim(std::size_t r, std::size_t index, const DelsarteCode& c) const;
  /// best[R] = max dim(A ∩ C) over anticodes of maximum rank R, R = 0..k.
  std::vector<std::size_t> max_intersections(const DelsarteCode& c) const;
  /// a_r(C) = min { R : best[R] >= r }.
  WeightProfile weights(const DelsarteCode& c) const;

 private:
  struct Check {
    AnticodeDescriptor::Kind kind;
    Matrix parity;  // rows span the orthogonal complement of the support
  };
  FieldPtr field_;
  std::size_t k_, m_;
  std::vector<std::vector<AnticodeDescriptor>> by_rank_;
  std::vector<std::vector<Check>> checks_;
};

WeightProfile delsarte_generalized_weights(const DelsarteCode& c, const Guards& guards = {});
/// a'_r(C): minimum maxrk over r-dimensional subcodes.
WeightProfile oggier_sboui_delsarte_weights(const DelsarteCode& c, const Guards& guards = {});

/// Tr(M N^t).
Elem trace_product(const Matrix& m, const Matrix& n);
/// Orthogonal complement under the trace product.
DelsarteCode delsarte_dual(const DelsarteCode& c);
/// {N^t : N in C}; requires k == m.
DelsarteCode transpose_code(const DelsarteCode& c);
/// {A N B : N in C} for invertible A (k x k) and B (m x m).
DelsarteCode transform_code(const Matrix& a, const DelsarteCode& c, const Matrix& b);

struct WeightSets {
  std::set<int> w;      // { a_{s+im} : 1 <= s+im <= t }
  std::set<int> w_bar;  // { k+1-a_{s+im} : same range }
};

WeightSets weight_sets(std::span<const int> profile, int k, int m, int t, int s);

/// The first violated clause of the Delsarte weight bounds (monotonicity,
/// strict growth over m steps, upper and lower bounds), or nullopt.
std::optional<std::string> delsarte_profile_violation(std::span<const int> profile, int k, int m);

/// Weights of the dual code from the weights of the code, by filling each
/// residue class p mod m of dual indices with [k] minus W̄_{p+t}.
/// Throws std::invalid_argument for t outside [1, km-1] or an inconsistent profile.
WeightProfile dual_weights_from_weights(std::span<const int> profile, int k, int m, int t);

struct FinerReport {
  bool passed = true;
  std::vector<std::string> violations;
  WeightProfile rank_weights;
  WeightProfile delsarte_weights;
};

/// Checks m_r(C) = a_{rm-ε}(C_G(C)) for all r and 0 <= ε < m, and
/// C_G(C A^t) = A C_G(C) for `samples` random invertible A.
FinerReport finer_check(const GabidulinCode& c, std::span<const Elem> basis, std::uint64_t seed = 1,
                        int samples = 3, const Guards& guards = {});

}  // namespace gw
