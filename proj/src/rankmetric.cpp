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

#include "gwcodes/rankmetric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gwcodes/kernels.hpp"

namespace gw {

namespace {

void require_top(const FieldTower& tower, const Subspace& v) {
  if (!same_field(v.field(), tower.top())) throw std::invalid_argument("space is not over F_{q^m}");
}

// Coordinates of x over F_q in the polynomial basis.
void top_coords(const FieldTower& tower, Elem x, Elem* out) {
  const Elem q = tower.q();
  for (std::uint32_t j = 0; j < tower.m(); ++j) {
    out[j] = x % q;
    x /= q;
  }
}

// Scans V until some vector has rank above `bound`; returns the largest rank seen.
std::size_t scan_max_rank(const FieldTower& tower, const Subspace& v, std::size_t bound, const Guards& guards) {
  std::size_t best = 0;
  v.for_each_vector(
      [&](std::span<const Elem> x) {
        best = std::max(best, rank_of_vector(tower, x));
        return best <= bound;
      },
      guards);
  return best;
}

std::vector<int> weights_from_best(const std::vector<std::size_t>& best, std::size_t t) {
  std::vector<int> out;
  for (std::size_t r = 1; r <= t; ++r) {
    std::size_t mu = 0;
    while (best[mu] < r) ++mu;
    out.push_back(static_cast<int>(mu));
  }
  return out;
}

void require_nonzero(const GabidulinCode& c) {
  if (c.dim() == 0) throw std::invalid_argument("operation requires a non-zero code");
}

}  // namespace

GabidulinCode::GabidulinCode(FieldTower tower, Subspace space) : tower_(std::move(tower)), space_(std::move(space)) {
  require_top(tower_, space_);
  if (space_.ambient() == 0) throw InputError("Gabidulin code length must be >= 1");
  if (space_.ambient() > tower_.m())
    throw InputError("k <= m required (k = " + std::to_string(space_.ambient()) +
                     ", m = " + std::to_string(tower_.m()) + ")");
}

GabidulinCode GabidulinCode::from_generators(FieldTower tower, const Matrix& generators) {
  Subspace s = rowspace(generators);
  return GabidulinCode(std::move(tower), std::move(s));
}

Matrix coordinate_matrix(const FieldTower& tower, std::span<const Elem> v) {
  Matrix out(tower.base(), v.size(), tower.m());
  for (std::size_t i = 0; i < v.size(); ++i) top_coords(tower, v[i], &out(i, 0));
  return out;
}

std::size_t rank_of_vector(const FieldTower& tower, std::span<const Elem> v) {
  thread_local std::vector<Elem> buffer;
  const std::size_t m = tower.m();
  buffer.resize(v.size() * m);
  for (std::size_t i = 0; i < v.size(); ++i) top_coords(tower, v[i], buffer.data() + i * m);
  return rref_in_place(*tower.base(), buffer.data(), v.size(), m);
}

std::vector<Elem> frobenius_vector(const FieldTower& tower, std::span<const Elem> v) {
  std::vector<Elem> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](Elem x) { return tower.frobenius(x); });
  return out;
}

bool is_frobenius_closed(const FieldTower& tower, const Subspace& v) {
  require_top(tower, v);
  const auto& data = v.basis().data();
  return std::all_of(data.begin(), data.end(), [&](Elem x) { return tower.in_base(x); });
}

bool is_frobenius_closed_direct(const FieldTower& tower, const Subspace& v) {
  require_top(tower, v);
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v.contains(frobenius_vector(tower, v.basis().row(i)))) return false;
  return true;
}

Matrix fq_basis(const FieldTower& tower, const Subspace& v) {
  if (!is_frobenius_closed(tower, v)) throw std::invalid_argument("space is not Frobenius-closed");
  return Matrix(tower.base(), v.dim(), v.ambient(), v.basis().data());
}

Subspace lift(const FieldTower& tower, const Subspace& base_space) {
  if (!same_field(base_space.field(), tower.base())) throw std::invalid_argument("lift expects a space over F_q");
  // an RREF matrix over F_q is also in RREF over F_{q^m}
  return Subspace::from_rref(Matrix(tower.top(), base_space.dim(), base_space.ambient(), base_space.basis().data()),
                             base_space.pivots());
}

FrobeniusClosedEnumerator::FrobeniusClosedEnumerator(const FieldTower& tower, std::size_t k, std::size_t d,
                                                     const Guards& guards)
    : tower_(tower), base_(tower.base(), k, d, guards) {}

std::vector<Subspace> enumerate_frobenius_closed(const FieldTower& tower, std::size_t k, std::size_t d,
                                                 const Guards& guards) {
  FrobeniusClosedEnumerator e(tower, k, d, guards);
  std::vector<Subspace> out;
  out.reserve(e.count());
  for (std::uint64_t i = 0; i < e.count(); ++i) out.push_back(e.at(i));
  return out;
}

std::size_t max_rank(const FieldTower& tower, const Subspace& v, const Guards& guards) {
  require_top(tower, v);
  if (v.is_zero()) return 0;
  return scan_max_rank(tower, v, std::min<std::size_t>(v.ambient(), tower.m()) - 1, guards);
}

std::size_t min_rank(const FieldTower& tower, const Subspace& v, const Guards& guards) {
  require_top(tower, v);
  if (v.is_zero()) throw std::invalid_argument("min rank of the zero space");
  std::size_t best = v.ambient();
  v.for_each_vector(
      [&](std::span<const Elem> x) {
        const std::size_t r = rank_of_vector(tower, x);
        if (r > 0) best = std::min(best, r);
        return best > 1;
      },
      guards);
  return best;
}

bool is_optimal_gabidulin_anticode(const FieldTower& tower, const Subspace& v, const Guards& guards) {
  require_top(tower, v);
  return scan_max_rank(tower, v, v.dim(), guards) == v.dim();
}

std::vector<Subspace> exhaustive_gabidulin_anticodes(const FieldTower& tower, std::size_t k, std::size_t d,
                                                     const Guards& guards) {
  SubspaceEnumerator spaces(tower.top(), k, d, guards);
  const auto hits = kernels::filter(spaces.count(), [&](std::uint64_t i) {
    return scan_max_rank(tower, spaces.at(i), d, guards) == d;
  });
  std::vector<Subspace> out;
  out.reserve(hits.size());
  for (auto i : hits) out.push_back(spaces.at(i));
  return out;
}

std::vector<int> security_profile(const GabidulinCode& c, const Guards& guards) {
  std::vector<int> delta;
  for (std::size_t mu = 0; mu <= c.k(); ++mu) {
    FrobeniusClosedEnumerator spaces(c.tower(), c.k(), mu, guards);
    delta.push_back(static_cast<int>(kernels::max(
        spaces.count(),
        [&](std::uint64_t i) { return static_cast<std::int64_t>(intersection_dim(spaces.at(i), c.space())); }, 0)));
  }
  return delta;
}

std::vector<int> worst_case_drops(const GabidulinCode& c, const Guards& guards) {
  const auto delta = security_profile(c, guards);
  std::vector<int> drops;
  for (std::size_t mu = 1; mu < delta.size(); ++mu)
    if (delta[mu] > delta[mu - 1]) drops.push_back(static_cast<int>(mu));
  return drops;
}

WeightProfile generalized_rank_weights(const GabidulinCode& c, const Guards& guards) {
  require_nonzero(c);
  const auto delta = security_profile(c, guards);
  std::vector<std::size_t> best(delta.begin(), delta.end());
  return {Metric::gabidulin, weights_from_best(best, c.dim())};
}

WeightProfile generalized_rank_weights_via_anticodes(const GabidulinCode& c, const Guards& guards) {
  require_nonzero(c);
  std::vector<std::size_t> best;
  for (std::size_t d = 0; d <= c.k(); ++d) {
    std::size_t b = 0;
    for (const auto& a : exhaustive_gabidulin_anticodes(c.tower(), c.k(), d, guards))
      b = std::max(b, intersection_dim(a, c.space()));
    best.push_back(b);
  }
  return {Metric::gabidulin, weights_from_best(best, c.dim())};
}

WeightProfile oggier_sboui_rank_weights(const GabidulinCode& c, const Guards& guards) {
  require_nonzero(c);
  const Matrix& g = c.space().basis();
  WeightProfile profile{Metric::gabidulin, {}};
  for (std::size_t r = 1; r <= c.dim(); ++r) {
    SubspaceEnumerator subcodes(c.tower().top(), c.dim(), r, guards);
    profile.values.push_back(static_cast<int>(kernels::min(
        subcodes.count(),
        [&](std::uint64_t i) {
          const Subspace d = rowspace(subcodes.at(i).basis() * g);
          return static_cast<std::int64_t>(max_rank(c.tower(), d, guards));
        },
        static_cast<std::int64_t>(c.k()))));
  }
  return profile;
}

}  // namespace gw
