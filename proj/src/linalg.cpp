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

#include "gwcodes/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gw {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data does not match its shape");
  for (Elem x : data_)
    if (!field_->contains(x)) throw std::invalid_argument("matrix entry outside the field");
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Elem> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("appended row has the wrong length");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

Matrix Matrix::reshaped(std::size_t rows, std::size_t cols) const {
  if (rows * cols != data_.size()) throw std::invalid_argument("reshape changes the number of entries");
  return Matrix(field_, rows, cols, data_);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  if (!same_field(a.field_, b.field_)) throw std::invalid_argument("matrix product field mismatch");
  const GaloisField& k = *a.field_;
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = k.add(c(i, j), k.mul(x, b(l, j)));
    }
  return c;
}

std::size_t rref_in_place(const GaloisField& k, Elem* data, std::size_t rows, std::size_t cols,
                          std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && data[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    Elem* pr = data + r * cols;
    if (p != r) std::swap_ranges(pr, pr + cols, data + p * cols);
    if (pr[c] != 1) {
      const Elem s = k.inv(pr[c]);
      for (std::size_t j = c; j < cols; ++j) pr[j] = k.mul(pr[j], s);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* ri = data + i * cols;
      const Elem f = ri[c];
      if (f == 0) continue;
      const Elem nf = k.neg(f);
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j] != 0) ri[j] = k.add(ri[j], k.mul(nf, pr[j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

Echelon rref(Matrix m) {
  Echelon out;
  if (!m.empty()) {
    std::vector<Elem> data = m.data();
    rref_in_place(*m.field(), data.data(), m.rows(), m.cols(), &out.pivots);
    out.reduced = Matrix(m.field(), m.rows(), m.cols(), std::move(data));
  } else {
    out.reduced = std::move(m);
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  std::vector<Elem> data = m.data();
  return rref_in_place(*m.field(), data.data(), m.rows(), m.cols());
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Elem> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = m(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  std::vector<std::size_t> pivots;
  rref_in_place(*m.field(), aug.data(), n, 2 * n, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::invalid_argument("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i * 2 * n + n + j];
  return inv;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Subspace::Subspace(FieldPtr field, std::size_t ambient) : basis_(std::move(field), 0, ambient) {}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return from_rref(Matrix::identity(std::move(field), ambient), std::move(pivots));
}

Subspace Subspace::from_rref(Matrix basis, std::vector<std::size_t> pivots) {
  Subspace s;
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw std::invalid_argument("vector length does not match the ambient space");
  const GaloisField& k = *field();
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c == 0) continue;
    const Elem nc = k.neg(c);
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < w.size(); ++j)
      if (row[j] != 0) w[j] = k.add(w[j], k.mul(nc, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<Elem> Subspace::coordinates(std::span<const Elem> v) const {
  std::vector<Elem> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<Elem> Subspace::combine(std::span<const Elem> coords) const {
  const GaloisField& k = *field();
  std::vector<Elem> v(ambient(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i] == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = k.add(v[j], k.mul(coords[i], row[j]));
  }
  return v;
}

std::uint64_t Subspace::cardinality() const noexcept { return checked_pow(field()->size(), dim()); }

void Subspace::for_each_vector(const std::function<bool(std::span<const Elem>)>& visit,
                               const Guards& guards) const {
  guards.check_codewords(cardinality());
  const Elem q = field()->size();
  std::vector<Elem> coords(dim(), 0);
  while (true) {
    if (!visit(combine(coords))) return;
    std::size_t i = 0;
    while (i < coords.size() && ++coords[i] == q) coords[i++] = 0;
    if (i == coords.size()) return;
  }
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis_.data() < b.basis_.data();
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.ambient() * 131 + s.dim());
  for (Elem x : s.basis().data()) h = h * 1000003u ^ x;
  return h;
}

Subspace rowspace(const Matrix& m) {
  if (m.empty()) return Subspace(m.field(), m.cols());
  std::vector<Elem> data = m.data();
  std::vector<std::size_t> pivots;
  const std::size_t r = rref_in_place(*m.field(), data.data(), m.rows(), m.cols(), &pivots);
  data.resize(r * m.cols());
  return Subspace::from_rref(Matrix(m.field(), r, m.cols(), std::move(data)), std::move(pivots));
}

namespace {

void check_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  if (!same_field(u.field(), v.field())) throw std::invalid_argument("field mismatch");
}

}  // namespace

Subspace sum(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  Matrix stacked = u.basis();
  for (std::size_t i = 0; i < v.dim(); ++i) stacked.append_row(v.basis().row(i));
  return rowspace(stacked);
}

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  if (u.is_zero() || v.is_zero()) return 0;
  const std::size_t n = u.ambient();
  std::vector<Elem> data;
  data.reserve((u.dim() + v.dim()) * n);
  data.insert(data.end(), u.basis().data().begin(), u.basis().data().end());
  data.insert(data.end(), v.basis().data().begin(), v.basis().data().end());
  const std::size_t r = rref_in_place(*u.field(), data.data(), u.dim() + v.dim(), n);
  return u.dim() + v.dim() - r;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  const std::size_t n = u.ambient();
  if (u.is_zero() || v.is_zero()) return Subspace(u.field(), n);
  // Zassenhaus: rows (u | u) and (v | 0); rows with zero left half span U ∩ V.
  const std::size_t rows = u.dim() + v.dim();
  std::vector<Elem> data(rows * 2 * n, 0);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) data[i * 2 * n + j] = data[i * 2 * n + n + j] = u.basis()(i, j);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) data[(u.dim() + i) * 2 * n + j] = v.basis()(i, j);
  std::vector<std::size_t> pivots;
  rref_in_place(*u.field(), data.data(), rows, 2 * n, &pivots);
  Matrix result(u.field(), 0, n);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] >= n) result.append_row(std::span<const Elem>(data.data() + i * 2 * n + n, n));
  return rowspace(result);
}

bool contains(const Subspace& u, std::span<const Elem> v) { return u.contains(v); }

Subspace null_space(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.empty()) return Subspace::full(a.field(), n);
  const GaloisField& k = *a.field();
  Echelon e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix basis(a.field(), 0, n);
  std::vector<Elem> x(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(x.begin(), x.end(), 0);
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = k.neg(e.reduced(i, f));
    basis.append_row(x);
  }
  return rowspace(basis);
}

Subspace dual_subspace(const Subspace& u) { return null_space(u.basis()); }

Subspace dual_subspace(const Subspace& u, const Matrix& gram) {
  if (gram.rows() != u.ambient() || gram.cols() != u.ambient())
    throw std::invalid_argument("Gram matrix shape does not match the ambient space");
  if (!is_invertible(gram)) throw std::invalid_argument("bilinear form is degenerate");
  if (u.is_zero()) return Subspace::full(u.field(), u.ambient());
  return null_space(u.basis() * gram);
}

Subspace right_mul_code(const Subspace& u, const Matrix& b) {
  if (b.rows() != b.cols() || b.rows() == 0 || u.ambient() % b.rows() != 0)
    throw std::invalid_argument("right multiplier has an incompatible shape");
  if (!is_invertible(b)) throw std::invalid_argument("right multiplier is singular");
  const std::size_t cols = b.rows(), rows = u.ambient() / cols;
  Matrix out(u.field(), 0, u.ambient());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Matrix m(u.field(), rows, cols, std::vector<Elem>(u.basis().row(i).begin(), u.basis().row(i).end()));
    out.append_row((m * b).data());
  }
  return rowspace(out);
}

Subspace left_mul_code(const Matrix& a, const Subspace& u) {
  if (a.rows() != a.cols() || a.rows() == 0 || u.ambient() % a.cols() != 0)
    throw std::invalid_argument("left multiplier has an incompatible shape");
  if (!is_invertible(a)) throw std::invalid_argument("left multiplier is singular");
  const std::size_t rows = a.cols(), cols = u.ambient() / rows;
  Matrix out(u.field(), 0, u.ambient());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Matrix m(u.field(), rows, cols, std::vector<Elem>(u.basis().row(i).begin(), u.basis().row(i).end()));
    out.append_row((a * m).data());
  }
  return rowspace(out);
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint64_t q) {
  if (d > n) return 0;
  // Pascal-type recurrence [n, d] = [n-1, d-1] + q^d [n-1, d], saturating.
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    return (a != 0 && b > UINT64_MAX / a) ? UINT64_MAX : a * b;
  };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = std::min(i, d); j >= 1; --j) row[j] = sat_add(row[j - 1], sat_mul(checked_pow(q, j), row[j]));
  return row[d];
}

SubspaceEnumerator::SubspaceEnumerator(FieldPtr field, std::size_t n, std::size_t d, const Guards& guards)
    : field_(std::move(field)), n_(n), d_(d) {
  if (d > n) throw std::invalid_argument("subspace dimension exceeds the ambient dimension");
  const std::uint64_t q = field_->size();
  guards.check_ambient(checked_pow(q, n));
  guards.check_subspaces(gaussian_binomial(n, d, q));

  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    PivotBlock block;
    block.pivots = pivots;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) block.free_cells.emplace_back(r, c);
    block.offset = total_;
    block.count = checked_pow(q, block.free_cells.size());
    total_ += block.count;
    blocks_.push_back(std::move(block));
    // next combination in lexicographic order
    std::size_t i = d;
    while (i > 0 && pivots[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw std::out_of_range("subspace index out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const PivotBlock& b) { return i < b.offset; });
  const PivotBlock& block = *std::prev(it);
  std::uint64_t local = index - block.offset;
  const Elem q = field_->size();
  std::vector<Elem> data(d_ * n_, 0);
  for (std::size_t r = 0; r < d_; ++r) data[r * n_ + block.pivots[r]] = 1;
  for (std::size_t i = block.free_cells.size(); i-- > 0;) {
    const auto [r, c] = block.free_cells[i];
    data[r * n_ + c] = static_cast<Elem>(local % q);
    local /= q;
  }
  return Subspace::from_rref(Matrix(field_, d_, n_, std::move(data)), block.pivots);
}

std::vector<Subspace> enumerate_subspaces(FieldPtr field, std::size_t n, std::size_t d, const Guards& guards) {
  SubspaceEnumerator e(std::move(field), n, d, guards);
  std::vector<Subspace> out;
  out.reserve(e.count());
  e.for_each([&](Subspace s) { out.push_back(std::move(s)); });
  return out;
}

}  // namespace gw
