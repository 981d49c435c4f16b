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

#include "gwcodes/delsarte.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "gwcodes/kernels.hpp"

namespace gw {

namespace {

void require_nonzero(const DelsarteCode& c) {
  if (c.dim() == 0) throw std::invalid_argument("operation requires a non-zero code");
}

// Scans all codewords; stops once the largest rank seen exceeds `stop_above`.
std::size_t scan_max_rank(const DelsarteCode& c, std::size_t stop_above, const Guards& guards) {
  std::size_t best = 0;
  c.space().for_each_vector(
      [&](std::span<const Elem> x) {
        best = std::max(best, matrix_rank(*c.field(), x, c.k(), c.m()));
        return best <= stop_above;
      },
      guards);
  return best;
}

Subspace materialize(const FieldPtr& field, AnticodeDescriptor::Kind kind, std::size_t k, std::size_t m,
                     const Subspace& support) {
  Matrix gens(field, 0, k * m);
  std::vector<Elem> flat(k * m);
  for (std::size_t i = 0; i < support.dim(); ++i) {
    auto u = support.basis().row(i);
    if (kind == AnticodeDescriptor::Kind::column_support) {
      for (std::size_t j = 0; j < m; ++j) {
        std::fill(flat.begin(), flat.end(), 0);
        for (std::size_t a = 0; a < k; ++a) flat[a * m + j] = u[a];
        gens.append_row(flat);
      }
    } else {
      for (std::size_t a = 0; a < k; ++a) {
        std::fill(flat.begin(), flat.end(), 0);
        for (std::size_t j = 0; j < m; ++j) flat[a * m + j] = u[j];
        gens.append_row(flat);
      }
    }
  }
  return rowspace(gens);
}

std::vector<int> weights_from_best(const std::vector<std::size_t>& best, std::size_t t) {
  std::vector<int> out;
  for (std::size_t r = 1; r <= t; ++r) {
    std::size_t level = 0;
    while (best[level] < r) ++level;
    out.push_back(static_cast<int>(level));
  }
  return out;
}

Matrix lift_matrix(const FieldTower& tower, const Matrix& a) {
  return Matrix(tower.top(), a.rows(), a.cols(), a.data());
}

}  // namespace

DelsarteCode::DelsarteCode(std::size_t k, std::size_t m, Subspace space) : k_(k), m_(m), space_(std::move(space)) {
  if (k_ == 0) throw InputError("Delsarte codes need k >= 1");
  if (k_ > m_)
    throw InputError("k <= m required (k = " + std::to_string(k_) + ", m = " + std::to_string(m_) + ")");
  if (space_.ambient() != k_ * m_) throw InputError("Delsarte code ambient size is not k*m");
}

DelsarteCode DelsarteCode::from_matrices(FieldPtr field, std::size_t k, std::size_t m,
                                         const std::vector<Matrix>& gens) {
  Matrix stacked(field, 0, k * m);
  for (const auto& g : gens) {
    if (g.rows() != k || g.cols() != m) throw InputError("generator matrix has the wrong shape");
    if (!same_field(g.field(), field)) throw std::invalid_argument("generator matrix field mismatch");
    stacked.append_row(g.data());
  }
  return DelsarteCode(k, m, rowspace(stacked));
}

Matrix DelsarteCode::generator(std::size_t i) const {
  auto row = space_.basis().row(i);
  return Matrix(field(), k_, m_, std::vector<Elem>(row.begin(), row.end()));
}

std::vector<Matrix> DelsarteCode::generators() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(generator(i));
  return out;
}

std::size_t matrix_rank(const GaloisField& field, std::span<const Elem> flat, std::size_t k, std::size_t m) {
  thread_local std::vector<Elem> buffer;
  buffer.assign(flat.begin(), flat.end());
  return rref_in_place(field, buffer.data(), k, m);
}

std::size_t min_rank(const DelsarteCode& c, const Guards& guards) {
  require_nonzero(c);
  std::size_t best = c.k();
  c.space().for_each_vector(
      [&](std::span<const Elem> x) {
        const std::size_t r = matrix_rank(*c.field(), x, c.k(), c.m());
        if (r > 0) best = std::min(best, r);
        return best > 1;
      },
      guards);
  return best;
}

std::size_t max_rank(const DelsarteCode& c, const Guards& guards) { return scan_max_rank(c, c.k() - 1, guards); }

std::vector<Elem> polynomial_basis(const FieldTower& tower) {
  std::vector<Elem> out;
  Elem y = 1;
  for (std::uint32_t j = 0; j < tower.m(); ++j) {
    out.push_back(y);
    y *= tower.q();
  }
  return out;
}

Matrix basis_matrix(const FieldTower& tower, std::span<const Elem> basis) {
  if (basis.size() != tower.m()) throw std::invalid_argument("a basis of F_{q^m} over F_q needs m elements");
  for (Elem b : basis)
    if (!tower.top()->contains(b)) throw std::invalid_argument("basis element outside F_{q^m}");
  Matrix gamma = coordinate_matrix(tower, basis);
  if (!is_invertible(gamma)) throw std::invalid_argument("elements do not form a basis of F_{q^m} over F_q");
  return gamma;
}

Matrix change_of_basis(const FieldTower& tower, std::span<const Elem> g, std::span<const Elem> f) {
  return basis_matrix(tower, g) * inverse(basis_matrix(tower, f));
}

Matrix associated_matrix(const FieldTower& tower, std::span<const Elem> v, std::span<const Elem> basis) {
  return coordinate_matrix(tower, v) * inverse(basis_matrix(tower, basis));
}

DelsarteCode associate(const GabidulinCode& c, std::span<const Elem> basis) {
  const FieldTower& tower = c.tower();
  const Matrix to_basis = inverse(basis_matrix(tower, basis));
  const auto scalars = polynomial_basis(tower);
  const GaloisField& top = *tower.top();
  Matrix gens(tower.base(), 0, c.k() * c.m());
  std::vector<Elem> v(c.k());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    auto row = c.space().basis().row(i);
    for (Elem s : scalars) {
      for (std::size_t a = 0; a < c.k(); ++a) v[a] = top.mul(s, row[a]);
      gens.append_row((coordinate_matrix(tower, v) * to_basis).data());
    }
  }
  return DelsarteCode(c.k(), c.m(), rowspace(gens));
}

bool is_optimal_delsarte_code(const DelsarteCode& c, const Guards& guards) {
  require_nonzero(c);
  return c.dim() == c.m() * (c.k() - min_rank(c, guards) + 1);
}

bool is_optimal_delsarte_anticode(const DelsarteCode& c, const Guards& guards) {
  if (c.dim() % c.m() != 0) return false;
  return scan_max_rank(c, c.dim() / c.m(), guards) * c.m() == c.dim();
}

DelsarteCode standard_anticode(FieldPtr field, std::size_t k, std::size_t m, std::size_t r) {
  if (r > k) throw std::invalid_argument("anticode rank exceeds k");
  Matrix e(field, r, k);
  for (std::size_t i = 0; i < r; ++i) e(i, i) = 1;
  return anticode_space({AnticodeDescriptor::Kind::column_support, k, m, rowspace(e)});
}

std::vector<AnticodeDescriptor> enumerate_optimal_anticodes(FieldPtr field, std::size_t k, std::size_t m,
                                                            std::size_t r, const Guards& guards) {
  if (k == 0 || k > m) throw InputError("k <= m required");
  if (r > k) throw std::invalid_argument("anticode rank exceeds k");
  std::vector<AnticodeDescriptor> out;
  for (auto& u : enumerate_subspaces(field, k, r, guards))
    out.push_back({AnticodeDescriptor::Kind::column_support, k, m, std::move(u)});
  if (k != m) return out;

  std::unordered_set<Subspace, SubspaceHash> seen;
  for (const auto& d : out) seen.insert(materialize(field, d.kind, k, m, d.support));
  for (auto& w : enumerate_subspaces(field, m, r, guards)) {
    if (seen.contains(materialize(field, AnticodeDescriptor::Kind::row_support, k, m, w))) continue;
    out.push_back({AnticodeDescriptor::Kind::row_support, k, m, std::move(w)});
  }
  return out;
}

DelsarteCode anticode_space(const AnticodeDescriptor& d) {
  const std::size_t expected = d.kind == AnticodeDescriptor::Kind::column_support ? d.k : d.m;
  if (d.support.ambient() != expected) throw std::invalid_argument("anticode support has the wrong ambient size");
  if (d.kind == AnticodeDescriptor::Kind::row_support && d.k != d.m)
    throw std::invalid_argument("row-support anticodes require k == m");
  return DelsarteCode(d.k, d.m, materialize(d.support.field(), d.kind, d.k, d.m, d.support));
}

AnticodeCatalog::AnticodeCatalog(FieldPtr field, std::size_t k, std::size_t m, const Guards& guards)
    : field_(std::move(field)), k_(k), m_(m) {
  for (std::size_t r = 0; r <= k; ++r) {
    by_rank_.push_back(enumerate_optimal_anticodes(field_, k, m, r, guards));
    std::vector<Check> checks;
    for (const auto& d : by_rank_.back()) checks.push_back({d.kind, dual_subspace(d.support).basis()});
    checks_.push_back(std::move(checks));
  }
}

std::size_t AnticodeCatalog::size() const noexcept {
  std::size_t n = 0;
  for (const auto& v : by_rank_) n += v.size();
  return n;
}

std::size_t AnticodeCatalog::intersection_dim(std::size_t r, std::size_t index, const DelsarteCode& c) const {
  if (c.k() != k_ || c.m() != m_) throw std::invalid_argument("code shape does not match the catalog");
  const Check& check = checks_.at(r).at(index);
  const std::size_t t = c.dim(), hr = check.parity.rows();
  if (hr == 0 || t == 0) return t;
  const GaloisField& f = *field_;
  const bool column = check.kind == AnticodeDescriptor::Kind::column_support;
  const std::size_t width = column ? hr * m_ : k_ * hr;
  thread_local std::vector<Elem> buffer;
  buffer.assign(t * width, 0);
  const Matrix& h = check.parity;
  for (std::size_t i = 0; i < t; ++i) {
    const Elem* mat = c.space().basis().row(i).data();
    Elem* out = buffer.data() + i * width;
    if (column) {
      // H M, shape hr x m
      for (std::size_t a = 0; a < hr; ++a)
        for (std::size_t b = 0; b < k_; ++b) {
          const Elem x = h(a, b);
          if (x == 0) continue;
          for (std::size_t j = 0; j < m_; ++j) out[a * m_ + j] = f.add(out[a * m_ + j], f.mul(x, mat[b * m_ + j]));
        }
    } else {
      // M H^t, shape k x hr
      for (std::size_t a = 0; a < k_; ++a)
        for (std::size_t b = 0; b < hr; ++b) {
          Elem s = 0;
          for (std::size_t j = 0; j < m_; ++j) s = f.add(s, f.mul(mat[a * m_ + j], h(b, j)));
          out[a * hr + b] = s;
        }
    }
  }
  return t - rref_in_place(f, buffer.data(), t, width);
}

std::vector<std::size_t> AnticodeCatalog::max_intersections(const DelsarteCode& c) const {
  const std::size_t t = c.dim();
  std::vector<std::size_t> best(k_ + 1, 0);
  for (std::size_t r = 1; r <= k_; ++r) {
    if (best[r - 1] == t) {
      best[r] = t;
      continue;
    }
    std::size_t b = 0;
    for (std::size_t i = 0; i < checks_[r].size() && b < t; ++i) b = std::max(b, intersection_dim(r, i, c));
    best[r] = b;
  }
  return best;
}

WeightProfile AnticodeCatalog::weights(const DelsarteCode& c) const {
  require_nonzero(c);
  return {Metric::delsarte, weights_from_best(max_intersections(c), c.dim())};
}

WeightProfile delsarte_generalized_weights(const DelsarteCode& c, const Guards& guards) {
  require_nonzero(c);
  return AnticodeCatalog(c.field(), c.k(), c.m(), guards).weights(c);
}

WeightProfile oggier_sboui_delsarte_weights(const DelsarteCode& c, const Guards& guards) {
  require_nonzero(c);
  const Matrix& g = c.space().basis();
  WeightProfile profile{Metric::delsarte, {}};
  for (std::size_t r = 1; r <= c.dim(); ++r) {
    SubspaceEnumerator subcodes(c.field(), c.dim(), r, guards);
    profile.values.push_back(static_cast<int>(kernels::min(
        subcodes.count(),
        [&](std::uint64_t i) {
          const DelsarteCode d(c.k(), c.m(), rowspace(subcodes.at(i).basis() * g));
          return static_cast<std::int64_t>(scan_max_rank(d, c.k() - 1, guards));
        },
        static_cast<std::int64_t>(c.k()))));
  }
  return profile;
}

Elem trace_product(const Matrix& m, const Matrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) throw std::invalid_argument("trace product shape mismatch");
  const Matrix prod = m * transpose(n);
  Elem tr = 0;
  for (std::size_t i = 0; i < prod.rows(); ++i) tr = m.field()->add(tr, prod(i, i));
  return tr;
}

DelsarteCode delsarte_dual(const DelsarteCode& c) {
  // Tr(M N^t) is the standard dot product of the row-major flattenings
  return DelsarteCode(c.k(), c.m(), dual_subspace(c.space()));
}

DelsarteCode transpose_code(const DelsarteCode& c) {
  if (c.k() != c.m()) throw std::invalid_argument("transpose_code requires k == m");
  Matrix gens(c.field(), 0, c.k() * c.m());
  for (std::size_t i = 0; i < c.dim(); ++i) gens.append_row(transpose(c.generator(i)).data());
  return DelsarteCode(c.k(), c.m(), rowspace(gens));
}

DelsarteCode transform_code(const Matrix& a, const DelsarteCode& c, const Matrix& b) {
  if (a.rows() != c.k() || b.rows() != c.m()) throw std::invalid_argument("transform shape mismatch");
  return DelsarteCode(c.k(), c.m(), left_mul_code(a, right_mul_code(c.space(), b)));
}

WeightSets weight_sets(std::span<const int> profile, int k, int m, int t, int s) {
  if (static_cast<int>(profile.size()) != t) throw std::invalid_argument("profile length differs from t");
  if (m <= 0) throw std::invalid_argument("m must be positive");
  WeightSets out;
  for (int j = 1; j <= t; ++j) {
    if (((j - s) % m + m) % m != 0) continue;
    out.w.insert(profile[j - 1]);
    out.w_bar.insert(k + 1 - profile[j - 1]);
  }
  return out;
}

std::optional<std::string> delsarte_profile_violation(std::span<const int> profile, int k, int m) {
  const int t = static_cast<int>(profile.size());
  auto a = [&](int r) { return profile[r - 1]; };
  std::ostringstream why;
  if (t < 1 || t > k * m) {
    why << "length " << t << " outside [1, km]";
    return why.str();
  }
  if (a(t) > k) return "a_t exceeds k";
  for (int r = 1; r < t; ++r)
    if (a(r) > a(r + 1)) {
      why << "not monotone at r = " << r;
      return why.str();
    }
  for (int r = 1; r + m <= t; ++r)
    if (a(r) >= a(r + m)) {
      why << "a_" << r << " >= a_" << r + m;
      return why.str();
    }
  for (int r = 1; r <= t; ++r) {
    if (a(r) > k - (t - r) / m) {
      why << "a_" << r << " above k - floor((t-r)/m)";
      return why.str();
    }
    if (a(r) < ceil_div(r, m)) {
      why << "a_" << r << " below ceil(r/m)";
      return why.str();
    }
  }
  return std::nullopt;
}

namespace {

std::vector<int> reconstruct_dual(std::span<const int> profile, int k, int m, int t) {
  const int dual_t = k * m - t;
  std::vector<int> dual(dual_t, 0);
  for (int p = 1; p <= m; ++p) {
    const auto bar = weight_sets(profile, k, m, t, p + t).w_bar;
    std::vector<int> values;
    for (int x = 1; x <= k; ++x)
      if (!bar.contains(x)) values.push_back(x);
    std::vector<int> slots;
    for (int r = p; r <= dual_t; r += m) slots.push_back(r);
    if (values.size() != slots.size()) throw std::invalid_argument("profile is inconsistent with a dual code");
    for (std::size_t i = 0; i < slots.size(); ++i) dual[slots[i] - 1] = values[i];
  }
  return dual;
}

}  // namespace

WeightProfile dual_weights_from_weights(std::span<const int> profile, int k, int m, int t) {
  if (k < 1 || k > m) throw std::invalid_argument("k <= m required");
  if (t < 1 || t > k * m - 1) throw std::invalid_argument("t must lie in [1, km - 1]");
  if (static_cast<int>(profile.size()) != t) throw std::invalid_argument("profile length differs from t");
  if (auto why = delsarte_profile_violation(profile, k, m)) throw std::invalid_argument("invalid profile: " + *why);
  auto dual = reconstruct_dual(profile, k, m, t);
  if (auto why = delsarte_profile_violation(dual, k, m))
    throw std::invalid_argument("profile is inconsistent with a dual code: " + *why);
  if (reconstruct_dual(dual, k, m, k * m - t) != std::vector<int>(profile.begin(), profile.end()))
    throw std::invalid_argument("profile is inconsistent with a dual code: reconstruction is not an involution");
  return {Metric::delsarte, std::move(dual)};
}

FinerReport finer_check(const GabidulinCode& c, std::span<const Elem> basis, std::uint64_t seed, int samples,
                        const Guards& guards) {
  FinerReport report;
  const DelsarteCode assoc = associate(c, basis);
  report.rank_weights = generalized_rank_weights(c, guards);
  report.delsarte_weights = delsarte_generalized_weights(assoc, guards);
  const int m = static_cast<int>(c.m());
  for (int r = 1; r <= static_cast<int>(c.dim()); ++r)
    for (int eps = 0; eps < m; ++eps) {
      const int idx = r * m - eps;
      if (report.delsarte_weights.weight(idx) != report.rank_weights.weight(r)) {
        std::ostringstream why;
        why << "m_" << r << " = " << report.rank_weights.weight(r) << " but a_" << idx << " = "
            << report.delsarte_weights.weight(idx);
        report.violations.push_back(why.str());
      }
    }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, c.tower().q() - 1);
  const FieldPtr& fq = c.tower().base();
  for (int s = 0; s < samples; ++s) {
    Matrix a(fq, c.k(), c.k());
    do {
      for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < c.k(); ++j) a(i, j) = pick(rng);
    } while (!is_invertible(a));
    const GabidulinCode moved(c.tower(), right_mul_code(c.space(), lift_matrix(c.tower(), transpose(a))));
    if (!(associate(moved, basis).space() == left_mul_code(a, assoc.space())))
      report.violations.push_back("associate(C A^t) differs from A associate(C)");
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace gw
