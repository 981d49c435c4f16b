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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gwcodes/linalg.hpp"
#include "test_util.hpp"

using gw::Elem;
using gw::Matrix;
using gw::Subspace;
using namespace gw::testing;

namespace {

// Product formula for the Gaussian binomial, independent of the recurrence
// used by the library.
std::uint64_t gaussian_product(std::size_t n, std::size_t d, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    num *= gw::checked_pow(q, n - i) - 1;
    den *= gw::checked_pow(q, i + 1) - 1;
  }
  return num / den;
}

bool is_rref(const Matrix& m, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (i > 0 && pivots[i] <= pivots[i - 1]) return false;
    for (std::size_t j = 0; j < pivots[i]; ++j)
      if (m(i, j) != 0) return false;
    if (m(i, pivots[i]) != 1) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != i && m(r, pivots[i]) != 0) return false;
  }
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rref of the F_16 example has entries in F_2") {
  const auto t = gw::make_field(2, 1, 4);
  const auto& k = *t.top();
  auto xi = [&](int e) { return k.pow(2, e); };
  const Matrix m = Matrix::from_rows(t.top(), {{xi(1), xi(2), xi(5), xi(1)}, {xi(2), xi(4), xi(10), xi(2)}});
  const auto e = gw::rref(m);
  CHECK(e.reduced == Matrix::from_rows(t.top(), {{1, 0, 1, 1}, {0, 1, 1, 0}}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(gw::rank(m) == 2);
  CHECK(gw::rank(e.reduced) == 2);
}

TEST_CASE("rref basics") {
  const auto k = gw::make_field(3, 1, 1).base();
  const Matrix id = Matrix::identity(k, 4);
  CHECK(gw::rref(id).reduced == id);
  CHECK(gw::rank(Matrix(k, 3, 5)) == 0);
  const Matrix twins = Matrix::from_rows(k, {{1, 2, 0}, {1, 2, 0}, {0, 1, 1}});
  const auto e = gw::rref(twins);
  CHECK(e.pivots.size() == 2);
  CHECK(gw::rowspace(twins).dim() == 2);
}

TEST_CASE("rref is idempotent, unique and rank is transpose invariant") {
  std::mt19937_64 rng(7);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto k = gw::make_field(p, e, 1).base();
    for (int trial = 0; trial < 40; ++trial) {
      const Matrix m = random_matrix(k, 4, 4 + trial % 3, rng);
      const auto e1 = gw::rref(m);
      CHECK(is_rref(e1.reduced, e1.pivots));
      CHECK(gw::rref(e1.reduced).reduced == e1.reduced);
      CHECK(gw::rank(m) == gw::rank(gw::transpose(m)));
      // another basis of the same row space: left-multiply by an invertible matrix
      const Matrix mixed = random_invertible(k, 4, rng) * m;
      CHECK(gw::rowspace(mixed) == gw::rowspace(m));
    }
  }
}

TEST_CASE("intersection matches brute-force common vectors") {
  std::mt19937_64 rng(11);
  const auto k = gw::make_field(3, 1, 1).base();
  const auto vectors = all_vectors(k, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const Subspace u = random_subspace(k, 4, 3, rng);
    const Subspace v = random_subspace(k, 4, 2, rng);
    const Subspace w = gw::intersect(u, v);
    std::size_t common = 0;
    for (const auto& x : vectors) {
      const bool in_both = u.contains(x) && v.contains(x);
      common += in_both;
      CHECK(in_both == w.contains(x));
    }
    CHECK(common == w.cardinality());
    CHECK(gw::intersection_dim(u, v) == w.dim());
  }
  const Subspace u = random_subspace(k, 4, 2, rng);
  CHECK(gw::intersect(u, u) == u);
  CHECK(gw::intersect(u, Subspace::full(k, 4)) == u);
  CHECK(gw::sum(u, Subspace(k, 4)) == u);
  CHECK_THROWS_AS(gw::intersect(u, Subspace(k, 5)), std::invalid_argument);
}

TEST_CASE("modular law on every pair of subspaces for n <= 4, q <= 3") {
  for (auto [q, n] : {std::pair{2u, 4u}, {3u, 3u}, {3u, 4u}}) {
    const auto k = gw::make_field(q, 1, 1).base();
    std::vector<Subspace> all;
    for (std::size_t d = 0; d <= n; ++d)
      for (auto& s : gw::enumerate_subspaces(k, n, d)) all.push_back(std::move(s));
    bool ok = true;
    for (const auto& u : all)
      for (const auto& v : all) {
        const auto cap = gw::intersect(u, v), cup = gw::sum(u, v);
        ok &= cap.dim() + cup.dim() == u.dim() + v.dim();
        ok &= u.contains(cap) && v.contains(cap) && cup.contains(u) && cup.contains(v);
      }
    CHECK(ok);
  }
}

TEST_CASE("enumerate_subspaces yields each subspace once in canonical order") {
  const auto f2 = gw::make_field(2, 1, 1).base();
  CHECK(gw::enumerate_subspaces(f2, 2, 1).size() == 3);
  CHECK(gw::enumerate_subspaces(f2, 3, 2).size() == 7);
  const auto zero = gw::enumerate_subspaces(f2, 5, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().is_zero());

  for (std::uint32_t q : {2u, 3u}) {
    const auto k = gw::make_field(q, 1, 1).base();
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t d = 0; d <= n; ++d) {
        if (q == 3 && n == 6 && (d == 3)) continue;  // 33880 subspaces; counted below
        gw::SubspaceEnumerator e(k, n, d);
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(e.count() == gaussian_product(n, d, q));
        CHECK(gw::gaussian_binomial(n, d, q) == gaussian_product(n, d, q));
        std::set<Subspace> seen;
        std::vector<std::size_t> prev_pivots;
        bool ok = true;
        e.for_each([&](const Subspace& s) {
          ok &= s.dim() == d && s.ambient() == n;
          ok &= is_rref(s.basis(), s.pivots());
          ok &= gw::rowspace(s.basis()) == s;
          ok &= prev_pivots <= s.pivots();
          prev_pivots = s.pivots();
          seen.insert(s);
        });
        CHECK(ok);
        CHECK(seen.size() == e.count());
      }
  }
  CHECK(gw::SubspaceEnumerator(gw::make_field(3, 1, 1).base(), 6, 3).count() == 33880);
  // order within a pivot block: first free entry most significant
  const auto lines = gw::enumerate_subspaces(f2, 2, 1);
  CHECK(lines[0].basis() == Matrix::from_rows(f2, {{1, 0}}));
  CHECK(lines[1].basis() == Matrix::from_rows(f2, {{1, 1}}));
  CHECK(lines[2].basis() == Matrix::from_rows(f2, {{0, 1}}));
}

TEST_CASE("enumeration guards") {
  const auto f2 = gw::make_field(2, 1, 1).base();
  gw::Guards tight;
  tight.max_subspaces = 10;
  CHECK_THROWS_AS(gw::SubspaceEnumerator(f2, 5, 2, tight), gw::GuardExceeded);
  tight = {};
  tight.max_ambient_vectors = 16;
  CHECK_THROWS_AS(gw::SubspaceEnumerator(f2, 5, 1, tight), gw::GuardExceeded);
  CHECK_NOTHROW(gw::SubspaceEnumerator(f2, 4, 1, tight));
}

TEST_CASE("dual subspaces") {
  const auto f2 = gw::make_field(2, 1, 1).base();
  CHECK(gw::dual_subspace(Subspace::full(f2, 3)).is_zero());
  CHECK(gw::dual_subspace(Subspace(f2, 3)) == Subspace::full(f2, 3));

  // brute force: every v with <v, (1,0,1)> = 0
  const auto u = gw::rowspace(Matrix::from_rows(f2, {{1, 0, 1}}));
  Matrix orth(f2, 0, 3);
  for (const auto& v : all_vectors(f2, 3))
    if (dot(*f2, v, std::vector<Elem>{1, 0, 1}) == 0) orth.append_row(v);
  CHECK(gw::dual_subspace(u) == gw::rowspace(orth));
  CHECK(gw::dual_subspace(u) == gw::rowspace(Matrix::from_rows(f2, {{1, 0, 1}, {0, 1, 0}})));

  std::mt19937_64 rng(5);
  const auto f3 = gw::make_field(3, 1, 1).base();
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_subspace(f3, 5, trial % 6, rng);
    const auto b = random_subspace(f3, 5, (trial * 7) % 6, rng);
    const auto da = gw::dual_subspace(a);
    CHECK(da.dim() == 5 - a.dim());
    CHECK(gw::dual_subspace(da) == a);
    CHECK(gw::dual_subspace(gw::intersect(a, b)) == gw::sum(da, gw::dual_subspace(b)));
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < da.dim(); ++j) CHECK(dot(*f3, a.basis().row(i), da.basis().row(j)) == 0);
  }
}

TEST_CASE("dual under a Gram matrix") {
  std::mt19937_64 rng(9);
  const auto f3 = gw::make_field(3, 1, 1).base();
  const Matrix gram = random_invertible(f3, 4, rng);
  const auto u = random_subspace(f3, 4, 2, rng);
  const auto d = gw::dual_subspace(u, gram);
  CHECK(d.dim() == 2);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      const Matrix x = Matrix(f3, 1, 4, {u.basis().row(i).begin(), u.basis().row(i).end()});
      const Matrix y = Matrix(f3, 4, 1, {d.basis().row(j).begin(), d.basis().row(j).end()});
      CHECK((x * gram * y)(0, 0) == 0);
    }
  CHECK(gw::dual_subspace(u, Matrix::identity(f3, 4)) == gw::dual_subspace(u));
  CHECK_THROWS_AS(gw::dual_subspace(u, Matrix(f3, 4, 4)), std::invalid_argument);
}

TEST_CASE("left and right multiplication of codes") {
  std::mt19937_64 rng(3);
  const auto f2 = gw::make_field(2, 1, 1).base();
  const auto u = random_subspace(f2, 6, 3, rng);
  CHECK(gw::right_mul_code(u, Matrix::identity(f2, 6)) == u);
  CHECK(gw::left_mul_code(Matrix::identity(f2, 2), u) == u);
  CHECK(gw::right_mul_code(u, Matrix::identity(f2, 3)) == u);

  // permuting coordinates of a free code permutes its support
  const auto free = gw::rowspace(Matrix::from_rows(f2, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  Matrix perm(f2, 4, 4);
  perm(0, 1) = perm(1, 2) = perm(2, 3) = perm(3, 0) = 1;  // e_i P = e_{i+1}
  const auto moved = gw::right_mul_code(free, perm);
  CHECK(moved == gw::rowspace(Matrix::from_rows(f2, {{0, 1, 0, 0}, {0, 0, 0, 1}})));

  // dimension is preserved
  const Matrix a = random_invertible(f2, 2, rng), b = random_invertible(f2, 3, rng);
  CHECK(gw::right_mul_code(gw::left_mul_code(a, u), b).dim() == u.dim());
  CHECK_THROWS_AS(gw::right_mul_code(u, Matrix(f2, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(gw::left_mul_code(Matrix(f2, 2, 2), u), std::invalid_argument);
  CHECK_THROWS_AS(gw::left_mul_code(Matrix::identity(f2, 4), u), std::invalid_argument);
}

TEST_CASE("inverse and vector enumeration") {
  std::mt19937_64 rng(1);
  const auto f5 = gw::make_field(5, 1, 1).base();
  const Matrix a = random_invertible(f5, 4, rng);
  CHECK(a * gw::inverse(a) == Matrix::identity(f5, 4));
  CHECK_THROWS_AS(gw::inverse(Matrix(f5, 2, 2)), std::invalid_argument);

  const auto s = random_subspace(f5, 4, 2, rng);
  std::set<std::vector<Elem>> seen;
  s.for_each_vector([&](std::span<const Elem> v) {
    CHECK(s.contains(v));
    seen.emplace(v.begin(), v.end());
    return true;
  });
  CHECK(seen.size() == 25);
  gw::Guards tight;
  tight.max_codewords = 10;
  CHECK_THROWS_AS(s.for_each_vector([](auto) { return true; }, tight), gw::GuardExceeded);
}
