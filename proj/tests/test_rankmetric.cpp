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
#include "gwcodes/rankmetric.hpp"
#include "test_util.hpp"

using gw::Elem;
using gw::GabidulinCode;
using gw::Matrix;
using gw::Subspace;
using namespace gw::testing;

namespace {

struct Xi {
  gw::FieldTower t = gw::make_field(2, 1, 4);
  Elem operator()(int e) const { return t.top()->pow(2, e); }
};

Subspace xi_example(const Xi& xi) {
  return gw::rowspace(Matrix::from_rows(xi.t.top(), {{xi(1), xi(2), xi(5), xi(1)}, {xi(2), xi(4), xi(10), xi(2)}}));
}

// Brute force: counts vectors of C inside V to get dim(V ∩ C).
std::size_t counted_intersection(const Subspace& v, const Subspace& c) {
  std::uint64_t count = 0;
  c.for_each_vector([&](std::span<const Elem> x) {
    count += v.contains(x);
    return true;
  });
  std::size_t d = 0;
  for (std::uint64_t n = 1; n < count; n *= v.field()->size()) ++d;
  return d;
}

void check_rank_bounds(const GabidulinCode& c, const gw::WeightProfile& w) {
  const int k = static_cast<int>(c.k()), t = static_cast<int>(c.dim());
  REQUIRE(w.size() == c.dim());
  CHECK(w.weight(1) == static_cast<int>(gw::min_rank(c.tower(), c.space())));
  CHECK(w.weight(t) <= k);
  for (int r = 1; r < t; ++r) CHECK(w.weight(r) < w.weight(r + 1));
  for (int r = 1; r <= t; ++r) CHECK(w.weight(r) <= k - t + r);
}

GabidulinCode random_gabidulin(const gw::FieldTower& t, std::size_t k, std::size_t d, std::mt19937_64& rng) {
  return GabidulinCode(t, random_subspace(t.top(), k, d, rng));
}

}  // namespace

TEST_CASE("rank of a vector") {
  const Xi xi;
  CHECK(gw::rank_of_vector(xi.t, std::vector<Elem>{1, xi(1), xi(2)}) == 3);
  CHECK(gw::rank_of_vector(xi.t, std::vector<Elem>{1, 0, 1}) == 1);
  CHECK(gw::rank_of_vector(xi.t, std::vector<Elem>{0, 0, 0}) == 0);
  CHECK(gw::rank_of_vector(xi.t, std::vector<Elem>{xi(3), xi(3), xi(7)}) == 2);
  const Matrix coords = gw::coordinate_matrix(xi.t, std::vector<Elem>{1, xi(1)});
  CHECK(coords == Matrix::from_rows(xi.t.base(), {{1, 0, 0, 0}, {0, 1, 0, 0}}));
}

TEST_CASE("Frobenius closure of the F_16 example") {
  const Xi xi;
  const Subspace v = xi_example(xi);
  CHECK(gw::is_frobenius_closed(xi.t, v));
  CHECK(gw::is_frobenius_closed_direct(xi.t, v));
  CHECK(gw::fq_basis(xi.t, v) == Matrix::from_rows(xi.t.base(), {{1, 0, 1, 1}, {0, 1, 1, 0}}));
  CHECK(gw::is_optimal_gabidulin_anticode(xi.t, v));
  CHECK(gw::max_rank(xi.t, v) == 2);

  const Subspace line = gw::rowspace(Matrix::from_rows(xi.t.top(), {{1, xi(1)}}));
  CHECK_FALSE(gw::is_frobenius_closed(xi.t, line));
  CHECK_FALSE(gw::is_frobenius_closed_direct(xi.t, line));
  CHECK_FALSE(line.contains(gw::frobenius_vector(xi.t, std::vector<Elem>{1, xi(1)})));
  CHECK_FALSE(gw::is_optimal_gabidulin_anticode(xi.t, line));
  CHECK(gw::max_rank(xi.t, line) == 2);
  CHECK_THROWS_AS(gw::fq_basis(xi.t, line), std::invalid_argument);

  CHECK(gw::is_frobenius_closed(xi.t, Subspace::full(xi.t.top(), 3)));
  CHECK(gw::is_optimal_gabidulin_anticode(xi.t, Subspace(xi.t.top(), 3)));
  CHECK(gw::fq_basis(xi.t, Subspace(xi.t.top(), 3)).rows() == 0);
}

TEST_CASE("lift and restrict round trip") {
  std::mt19937_64 rng(2);
  const auto t = gw::make_field(2, 1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace u = random_subspace(t.base(), 3, trial % 4, rng);
    const Subspace v = gw::lift(t, u);
    CHECK(gw::is_frobenius_closed(t, v));
    CHECK(gw::fq_basis(t, v) == u.basis());
    CHECK(gw::rowspace(Matrix(t.top(), u.dim(), 3, u.basis().data())) == v);
  }
}

TEST_CASE("Frobenius-closed spaces are counted by Gaussian binomials") {
  const auto f4 = gw::make_field(2, 1, 2);
  CHECK(gw::enumerate_frobenius_closed(f4, 2, 1).size() == 3);
  const auto f8 = gw::make_field(2, 1, 3);
  const auto closed = gw::enumerate_frobenius_closed(f8, 3, 2);
  CHECK(closed.size() == 7);
  // exhaustive filter over all 1- and 2-dimensional subspaces of F_8^3
  for (std::size_t d : {1u, 2u}) {
    std::set<Subspace> filtered;
    gw::SubspaceEnumerator(f8.top(), 3, d).for_each([&](const Subspace& s) {
      CHECK(gw::is_frobenius_closed(f8, s) == gw::is_frobenius_closed_direct(f8, s));
      if (gw::is_frobenius_closed_direct(f8, s)) filtered.insert(s);
    });
    const auto listed = gw::enumerate_frobenius_closed(f8, 3, d);
    CHECK(filtered == std::set<Subspace>(listed.begin(), listed.end()));
  }
  const auto top = gw::enumerate_frobenius_closed(f8, 3, 3);
  REQUIRE(top.size() == 1);
  CHECK(top.front() == Subspace::full(f8.top(), 3));
}

TEST_CASE("Frobenius-closed spaces are exactly the optimal Gabidulin anticodes") {
  struct Case {
    std::uint32_t p, k, m;
  };
  for (auto [q, k, m] : {Case{2, 2, 2}, Case{2, 2, 3}, Case{3, 2, 2}, Case{2, 3, 3}}) {
    const auto t = gw::make_field(q, 1, m);
    std::size_t total = 0;
    for (std::size_t d = 0; d <= k; ++d)
      gw::SubspaceEnumerator(t.top(), k, d).for_each([&](const Subspace& s) {
        ++total;
        const bool closed = gw::is_frobenius_closed(t, s);
        CHECK(closed == gw::is_frobenius_closed_direct(t, s));
        CHECK(closed == (gw::max_rank(t, s) == s.dim()));
        CHECK(closed == gw::is_optimal_gabidulin_anticode(t, s));
      });
    CHECK(total > 0);
  }
}

TEST_CASE("generalized rank weights") {
  const auto f4 = gw::make_field(2, 1, 2);
  const GabidulinCode e1 = GabidulinCode::from_generators(f4, Matrix::from_rows(f4.top(), {{1, 0}}));
  CHECK(gw::generalized_rank_weights(e1).values == std::vector<int>{1});
  CHECK(gw::oggier_sboui_rank_weights(e1).values == std::vector<int>{1});

  const GabidulinCode full4(f4, Subspace::full(f4.top(), 2));
  CHECK(gw::generalized_rank_weights(full4).values == std::vector<int>{1, 2});
  CHECK(gw::oggier_sboui_rank_weights(full4).values == std::vector<int>{1, 2});

  const auto f8 = gw::make_field(2, 1, 3);
  const GabidulinCode full8(f8, Subspace::full(f8.top(), 3));
  CHECK(gw::generalized_rank_weights(full8).values == std::vector<int>{1, 2, 3});

  std::mt19937_64 rng(17);
  std::vector<Subspace> lambda;
  for (std::size_t d = 0; d <= 3; ++d)
    for (auto& s : gw::enumerate_frobenius_closed(f8, 3, d)) lambda.push_back(s);
  CHECK(lambda.size() == 1 + 7 + 7 + 1);
  for (int trial = 0; trial < 15; ++trial) {
    const auto c = random_gabidulin(f8, 3, 2, rng);
    const auto w = gw::generalized_rank_weights(c);
    std::vector<int> brute;
    for (std::size_t r = 1; r <= 2; ++r) {
      std::size_t best = 99;
      for (const auto& v : lambda)
        if (counted_intersection(v, c.space()) >= r) best = std::min(best, v.dim());
      brute.push_back(static_cast<int>(best));
    }
    CHECK(w.values == brute);
    CHECK(gw::generalized_rank_weights_via_anticodes(c) == w);
    check_rank_bounds(c, w);
    const auto os = gw::oggier_sboui_rank_weights(c);
    CHECK(os.weight(1) == w.weight(1));
    for (std::size_t r = 1; r <= os.size(); ++r) CHECK(os.weight(r) <= w.weight(r));
  }
  CHECK_THROWS_AS(gw::generalized_rank_weights(GabidulinCode(f8, Subspace(f8.top(), 3))), std::invalid_argument);
}

TEST_CASE("security profile drops are the generalized rank weights") {
  std::mt19937_64 rng(23);
  for (auto [k, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const auto t = gw::make_field(2, 1, m);
    for (int trial = 0; trial < 8; ++trial) {
      const auto c = random_gabidulin(t, k, 1 + trial % k, rng);
      const auto delta = gw::security_profile(c);
      REQUIRE(delta.size() == k + 1);
      CHECK(delta.front() == 0);
      CHECK(delta.back() == static_cast<int>(c.dim()));
      CHECK(std::is_sorted(delta.begin(), delta.end()));
      CHECK(gw::worst_case_drops(c) == gw::generalized_rank_weights(c).values);
    }
  }
}

TEST_CASE("Gabidulin codes require k <= m") {
  const auto t = gw::make_field(2, 1, 2);
  CHECK_THROWS_AS(GabidulinCode(t, Subspace::full(t.top(), 3)), gw::InputError);
  CHECK_THROWS_WITH(GabidulinCode(t, Subspace::full(t.top(), 3)), doctest::Contains("k <= m"));
  CHECK_THROWS_AS(GabidulinCode(t, Subspace::full(t.base(), 2)), std::invalid_argument);
}
