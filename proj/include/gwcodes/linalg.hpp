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
#include <functional>
#include <span>
#include <vector>

#include "gwcodes/errors.hpp"
#include "gwcodes/field.hpp"

namespace gw {

/// Dense row-major matrix over a GaloisField.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  void append_row(std::span<const Elem> row);
  std::vector<std::vector<Elem>> to_rows() const;
  /// Reinterprets the row-major data with a new shape of the same size.
  Matrix reshaped(std::size_t rows, std::size_t cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Gauss-Jordan elimination on a raw row-major buffer. Leaves the buffer in
/// reduced row echelon form (zero rows last) and returns the rank. Pivot
/// columns are written to `pivots` when it is non-null.
std::size_t rref_in_place(const GaloisField& k, Elem* data, std::size_t rows, std::size_t cols,
                          std::vector<std::size_t>* pivots = nullptr);

struct Echelon {
  Matrix reduced;                    // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;   // one pivot column per nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Matrix transpose(const Matrix& m);
/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Subspace of K^n held as its canonical basis: the nonzero rows of the RREF.
/// Two subspaces are equal exactly when these matrices agree entrywise.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of K^n.
  Subspace(FieldPtr field, std::size_t ambient);

  static Subspace full(FieldPtr field, std::size_t ambient);
  /// Caller guarantees `basis` is already in RREF with no zero rows.
  static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots);

  const FieldPtr& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return basis_.rows() == 0; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis (read at the pivot columns);
  /// meaningful only if contains(v).
  std::vector<Elem> coordinates(std::span<const Elem> v) const;
  /// The vector sum_i coords[i] * basis row i.
  std::vector<Elem> combine(std::span<const Elem> coords) const;

  /// Number of vectors, q^dim, saturating.
  std::uint64_t cardinality() const noexcept;
  /// Visits all q^dim vectors (including zero) in coordinate order. The
  /// callback may return false to stop early.
  void for_each_vector(const std::function<bool(std::span<const Elem>)>& visit, const Guards& guards = {}) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept;
};

Subspace rowspace(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, std::span<const Elem> v);
/// dim(U ∩ V) via the modular law, without materializing the intersection.
std::size_t intersection_dim(const Subspace& u, const Subspace& v);

/// {x : A x^T = 0}.
Subspace null_space(const Matrix& a);

/// Orthogonal complement under the standard dot product.
Subspace dual_subspace(const Subspace& u);
/// Orthogonal complement under <x, y> = x G y^T for an invertible Gram matrix G.
Subspace dual_subspace(const Subspace& u, const Matrix& gram);

/// {c B} with every vector of U read as an (n / B.rows()) x B.rows() matrix
/// (a row vector when n == B.rows()). B must be invertible.
Subspace right_mul_code(const Subspace& u, const Matrix& b);
/// {A M} with every vector of U read as an A.cols() x (n / A.cols()) matrix.
/// A must be invertible.
Subspace left_mul_code(const Matrix& a, const Subspace& u);

/// Number of d-dimensional subspaces of F_q^n; UINT64_MAX on overflow.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q);

/// Random-access enumeration of the d-dimensional subspaces of K^n.
///
/// Order: pivot-column sets in lexicographic order, then the free RREF entries
/// read row-major as base-|K| digits, first entry most significant. at(i) is
/// a pure function of i, so index ranges can be consumed concurrently.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(FieldPtr field, std::size_t n, std::size_t d, const Guards& guards = {});

  std::uint64_t count() const noexcept { return total_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return d_; }
  const FieldPtr& field() const noexcept { return field_; }
  Subspace at(std::uint64_t index) const;

  template <class F>
  void for_each(F&& visit) const {
    for (std::uint64_t i = 0; i < total_; ++i) visit(at(i));
  }

 private:
  struct PivotBlock {
    std::vector<std::size_t> pivots;
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;  // (row, col), row-major
    std::uint64_t offset;
    std::uint64_t count;
  };
  FieldPtr field_;
  std::size_t n_, d_;
  std::vector<PivotBlock> blocks_;
  std::uint64_t total_ = 0;
};

std::vector<Subspace> enumerate_subspaces(FieldPtr field, std::size_t n, std::size_t d, const Guards& guards = {});

}  // namespace gw
