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
#include "gwcodes/hamming.hpp"
#include "test_util.hpp"

using gw::Elem;
using gw::LinearCode;
using gw::Matrix;
using namespace gw::testing;

namespace {

// Asserts all four clauses of the generalized Hamming weight theorem.
void check_hamming_bounds(const LinearCode& c, const gw::WeightProfile& d) {
  const int n = static_cast<int>(c.length()), t = static_cast<int>(c.dim());
  REQUIRE(d.size() == c.dim());
  CHECK(d.weight(1) == static_cast<int>(gw::min_weight(c)));
  CHECK(d.weight(t) <= n);
  for (int r = 1; r < t; ++r) CHECK(d.weight(r) < d.weight(r + 1));
  for (int r = 1; r <= t; ++r) CHECK(d.weight(r) <= n - t + r);
}

LinearCode q2_example() {
  const auto f2 = gw::make_field(2, 1, 1).base();
  return LinearCode::from_generators(Matrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}));
}

}  // namespace

TEST_CASE("weights and supports") {
  const auto c = q2_example();
  CHECK(gw::support(c.space()) == std::vector<std::size_t>{0, 1, 2});
  CHECK(gw::weight(std::vector<Elem>{0, 0, 0}) == 0);
  CHECK(gw::weight(std::vector<Elem>{0, 2, 1}) == 2);
  CHECK(gw::max_weight(c) == 2);
  CHECK(gw::min_weight(c) == 2);
  // three pairwise distinct columns > q = 2: the column shortcut must abstain
  CHECK_FALSE(gw::max_weight_by_columns(c).has_value());
  CHECK_THROWS_AS(gw::min_weight(LinearCode(gw::Subspace(c.field(), 3))), std::invalid_argument);
}

TEST_CASE("max weight: column test agrees with the scan where both run") {
  std::mt19937_64 rng(21);
  int compared = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto k = gw::make_field(q, 1, 1).base();
    for (int trial = 0; trial < 60; ++trial) {
      const LinearCode c(random_subspace(k, 2 + trial % 5, 1 + trial % 2, rng));
      if (auto w = gw::max_weight_by_columns(c)) {
        CHECK(*w == gw::max_weight_scan(c));
        ++compared;
      }
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("generalized Hamming weights of the q = 2 example") {
  const auto c = q2_example();
  const auto d = gw::generalized_hamming_weights(c);
  CHECK(d.values == std::vector<int>{2, 3});
  check_hamming_bounds(c, d);
}

TEST_CASE("generalized Hamming weights of the full space") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto k = gw::make_field(q, 1, 1).base();
    const LinearCode full(gw::Subspace::full(k, 5));
    CHECK(gw::generalized_hamming_weights(full).values == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(gw::ghw_via_anticodes(full).values == std::vector<int>{1, 2, 3, 4, 5});
  }
}

TEST_CASE("generalized Hamming weights of random [6,3] ternary codes") {
  std::mt19937_64 rng(33);
  const auto f3 = gw::make_field(3, 1, 1).base();
  for (int trial = 0; trial < 20; ++trial) {
    const LinearCode c(random_subspace(f3, 6, 3, rng));
    const auto d = gw::generalized_hamming_weights(c);
    check_hamming_bounds(c, d);
    for (int r = 1; r <= 3; ++r) CHECK(d.weight(r) <= 3 + r);
  }
  CHECK_THROWS_AS(gw::generalized_hamming_weights(LinearCode(gw::Subspace(f3, 4))), std::invalid_argument);
}

TEST_CASE("optimal linear anticodes and their classification") {
  const auto f2 = gw::make_field(2, 1, 1).base();
  const auto fc = gw::free_code(f2, 3, {0, 2});
  CHECK(fc.dim() == 2);
  CHECK(gw::max_weight(fc) == 2);
  CHECK(gw::is_optimal_linear_anticode(fc));

  const auto c = q2_example();
  CHECK(gw::is_optimal_linear_anticode(c));
  CHECK_FALSE(gw::classify_optimal_anticode(c).has_value());

  const LinearCode zero(gw::Subspace(f2, 3));
  CHECK(gw::is_optimal_linear_anticode(zero));

  const auto f3 = gw::make_field(3, 1, 1).base();
  CHECK(gw::classify_optimal_anticode(gw::free_code(f3, 4, {1, 2})) == std::vector<std::size_t>{1, 2});
  const auto not_anticode = LinearCode::from_generators(Matrix::from_rows(f3, {{1, 1, 0, 0}}));
  CHECK_THROWS_AS(gw::classify_optimal_anticode(not_anticode), std::invalid_argument);
}

TEST_CASE("for q >= 3 the optimal anticodes are exactly the free codes") {
  for (auto [q, n] : {std::pair{3u, 3u}, {3u, 4u}, {3u, 5u}, {4u, 3u}}) {
    const auto k = q == 4 ? gw::make_field(2, 2, 1).base() : gw::make_field(q, 1, 1).base();
    std::set<gw::Subspace> anticodes, free_codes;
    for (const auto& a : gw::exhaustive_linear_anticodes(k, n)) {
      anticodes.insert(a.space());
      const auto s = gw::classify_optimal_anticode(a);
      REQUIRE(s.has_value());
      CHECK(gw::free_code(k, n, *s) == a);
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1) s.push_back(j);
      free_codes.insert(gw::free_code(k, n, s).space());
    }
    CAPTURE(q);
    CAPTURE(n);
    CHECK(anticodes == free_codes);
  }
  // q = 2 has strictly more anticodes than free codes
  const auto f2 = gw::make_field(2, 1, 1).base();
  CHECK(gw::exhaustive_linear_anticodes(f2, 3).size() > 8);
  gw::Guards tight;
  tight.max_anticode_length = 2;
  CHECK_THROWS_AS(gw::exhaustive_linear_anticodes(f2, 3, tight), gw::GuardExceeded);
}

TEST_CASE("anticode characterization of generalized Hamming weights") {
  const auto c = q2_example();
  const auto via = gw::ghw_via_anticodes(c);
  CHECK(via.values == std::vector<int>{2, 2});
  CHECK(via.weight(2) != gw::generalized_hamming_weights(c).weight(2));

  const auto f3 = gw::make_field(3, 1, 1).base();
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t t = 1; t <= n; ++t)
      gw::SubspaceEnumerator(f3, n, t).for_each([&](const gw::Subspace& s) {
        const LinearCode code(s);
        CHECK(gw::ghw_via_anticodes(code) == gw::generalized_hamming_weights(code));
      });

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearCode code(random_subspace(f3, 5, 2, rng));
    CHECK(gw::ghw_via_anticodes(code) == gw::generalized_hamming_weights(code));
  }
}

TEST_CASE("Hamming duality") {
  const auto f3 = gw::make_field(3, 1, 1).base();
  CHECK(gw::hamming_dual(LinearCode(gw::Subspace::full(f3, 4))).dim() == 0);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const std::size_t t = 1 + trial % (n - 1);
    const LinearCode c(random_subspace(f3, n, t, rng));
    const auto dual = gw::hamming_dual(c);
    CHECK(c.dim() + dual.dim() == n);
    // Wei: {d_r(C^⊥)} and {n + 1 - d_r(C)} partition [n]
    std::set<int> all;
    for (int w : gw::generalized_hamming_weights(c).values) all.insert(static_cast<int>(n) + 1 - w);
    for (int w : gw::generalized_hamming_weights(dual).values) CHECK(all.insert(w).second);
    CHECK(all.size() == n);
    CHECK(*all.begin() == 1);
    CHECK(*all.rbegin() == static_cast<int>(n));
  }
}
