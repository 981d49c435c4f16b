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

#include <random>

#include "doctest.h"
#include "gwcodes/kernels.hpp"
#include "gwcodes/oracle.hpp"
#include "test_util.hpp"

using gw::DelsarteCode;
using gw::Elem;
using gw::FieldPtr;
using gw::Matrix;
using gw::Subspace;
using namespace gw::testing;
namespace oracle = gw::oracle;

namespace {

FieldPtr f2() { return gw::GaloisField::prime(2); }
FieldPtr f3() { return gw::GaloisField::prime(3); }

DelsarteCode q5_example() {
  const auto f5 = gw::GaloisField::prime(5);
  Matrix a(f5, 3, 3), b(f5, 3, 3);
  a(0, 0) = 1;
  b(1, 1) = 3;
  return DelsarteCode::from_matrices(f5, 3, 3, {a, b});
}

const std::vector<std::vector<int>> kMonotoneRows = {{1, 1, 1, 2, 2, 3}, {1, 1, 2, 2, 2, 3}, {1, 1, 1, 2, 3, 3},
                                               {1, 1, 2, 2, 3, 3}, {1, 2, 2, 2, 3, 3}, {1, 1, 2, 3, 2, 3}};

}  // namespace

TEST_CASE("brute-force Delsarte weights of the q = 5 example") {
  CHECK(oracle::dgw_bruteforce(q5_example()).values == std::vector<int>{1, 2});
  CHECK_FALSE(oracle::anticode_filter_feasible(q5_example().field(), 3, 3));
}

TEST_CASE("single generator codes") {
  std::mt19937_64 rng(2);
  for (int s = 0; s < 10; ++s) {
    const gw::LinearCode h(random_subspace(f3(), 5, 1, rng));
    CHECK(oracle::ghw_bruteforce(h).values ==
          std::vector<int>{static_cast<int>(gw::weight(h.space().basis().row(0)))});
    const auto t = gw::make_field(2, 1, 3);
    const gw::GabidulinCode g(t, random_subspace(t.top(), 3, 1, rng));
    CHECK(oracle::grw_bruteforce(g).values ==
          std::vector<int>{static_cast<int>(gw::rank_of_vector(t, g.space().basis().row(0)))});
    const DelsarteCode d(2, 3, random_subspace(f2(), 6, 1, rng));
    CHECK(oracle::dgw_bruteforce(d).values ==
          std::vector<int>{static_cast<int>(gw::matrix_rank(*f2(), d.space().basis().row(0), 2, 3))});
  }
}

TEST_CASE("oracles agree with the fast paths") {
  std::mt19937_64 rng(8);
  for (const auto& f : {f2(), f3()})
    for (int s = 0; s < 15; ++s) {
      const std::size_t n = 2 + s % 5, t = 1 + s % n;
      const gw::LinearCode c(random_subspace(f, n, t, rng));
      CHECK(oracle::ghw_bruteforce(c).values == gw::generalized_hamming_weights(c).values);
    }
  for (const auto& t : {gw::make_field(2, 1, 2), gw::make_field(2, 1, 3), gw::make_field(3, 1, 2)})
    for (std::size_t k = 1; k <= t.m(); ++k)
      for (std::size_t d = 1; d <= k; ++d) {
        const gw::GabidulinCode c(t, random_subspace(t.top(), k, d, rng));
        CHECK(oracle::grw_bruteforce(c).values == gw::generalized_rank_weights(c).values);
      }
  const std::vector<std::tuple<FieldPtr, std::size_t, std::size_t>> shapes = {
      {f2(), 2, 2}, {f2(), 2, 3}, {f3(), 2, 2}, {f2(), 3, 3}};
  for (const auto& [f, k, m] : shapes) {
    const gw::AnticodeCatalog catalog(f, k, m);
    for (std::size_t t = 1; t < k * m; ++t) {
      const DelsarteCode c(k, m, random_subspace(f, k * m, t, rng));
      CHECK(oracle::dgw_bruteforce(c).values == catalog.weights(c).values);
    }
  }
}

TEST_CASE("certified Delsarte weights are exact or refuse") {
  gw::Guards tight;
  tight.max_ambient_vectors = 32;
  std::mt19937_64 rng(4);
  const gw::AnticodeCatalog catalog(f2(), 2, 3);
  int certified = 0;
  for (int s = 0; s < 40; ++s) {
    const DelsarteCode c(2, 3, random_subspace(f2(), 6, 1 + s % 5, rng));
    std::vector<int> got;
    try {
      got = oracle::dgw_bruteforce(c, tight).values;
    } catch (const gw::GuardExceeded& e) {
      CHECK(e.guard() == "anticode-filter");
      continue;
    }
    CHECK(got == catalog.weights(c).values);
    ++certified;
  }
  CHECK(certified > 0);

  // a'_2 = 1 < a_2 = 2 here, so the bounds cannot meet
  Matrix a(f2(), 2, 3), b(f2(), 2, 3), c(f2(), 2, 3);
  a(0, 0) = 1;
  b(0, 1) = b(1, 2) = 1;
  c(1, 0) = 1;
  const auto code = DelsarteCode::from_matrices(f2(), 2, 3, {a, b, c});
  CHECK_THROWS_AS(oracle::dgw_bruteforce(code, tight), gw::GuardExceeded);
  CHECK(oracle::dgw_bruteforce(code).weight(2) == 2);
}

TEST_CASE("anticode classification checks") {
  const std::vector<std::size_t> square{1, 6, 1}, wide{1, 3, 1};
  for (std::size_t r = 0; r <= 2; ++r) {
    const auto a = oracle::verify_paz(f2(), 2, 2, r);
    CHECK(a.passed);
    CHECK(a.filtered == square[r]);
    CHECK(a.enumerated == square[r]);
    const auto b = oracle::verify_paz(f2(), 2, 3, r);
    CHECK(b.passed);
    CHECK(b.filtered == wide[r]);
  }
  CHECK(oracle::verify_paz(f2(), 3, 3, 3).filtered == 1);
  CHECK(oracle::verify_paz(f2(), 3, 3, 1).passed);
  CHECK(oracle::verify_casino(gw::make_field(2, 1, 2), 2).passed());
  CHECK(oracle::verify_casino(gw::make_field(2, 1, 3), 2).passed());
  CHECK(oracle::verify_casino(gw::make_field(3, 1, 2), 2).passed());
  CHECK(oracle::verify_dan(f2(), 2, 3).passed());
}

TEST_CASE("named suites") {
  for (const auto& name : oracle::suite_names()) {
    oracle::SuiteParams params;
    params.samples = 4;
    const auto report = oracle::run_suite(name, params);
    CHECK_MESSAGE(report.passed(), name);
    CHECK(report.checks > 0);
    CHECK(report.suite == name);
  }
  CHECK_THROWS_AS(oracle::run_suite("nope", {}), gw::InputError);

  oracle::SuiteParams params;
  params.samples = 6;
  params.seed = 99;
  const auto a = oracle::run_suite("propr", params), b = oracle::run_suite("propr", params);
  CHECK(a.checks == b.checks);
  CHECK(a.counts == b.counts);
}

TEST_CASE("reports record violations") {
  oracle::Report r("x");
  r.check(true, [] { return std::string("unused"); });
  for (int i = 0; i < 30; ++i) r.check(false, [i] { return std::to_string(i); });
  CHECK(r.checks == 31);
  CHECK(r.failures == 30);
  CHECK(r.violations.size() == 20);
  CHECK_FALSE(r.passed());
}

TEST_CASE("profile search") {
  const auto result = oracle::search_profiles(f2(), 3, 3, 6, kMonotoneRows);
  CHECK(result.exhaustive);
  CHECK(result.total == 788035);
  CHECK(result.unfindable == std::vector<std::vector<int>>{kMonotoneRows.back()});
  CHECK(result.found.size() == 5);
  CHECK(result.missing().empty());
  for (const auto& [profile, witness] : result.found) {
    CHECK(witness.profile == profile);
    CHECK(oracle::dgw_bruteforce(DelsarteCode(3, 3, witness.code)).values == profile);
    CHECK(gw::SubspaceEnumerator(f2(), 9, 6).at(witness.index) == witness.code);
  }

  const auto wrong = oracle::search_profiles(f2(), 2, 2, 2, {{1}, {3, 3}, {1, 1}});
  CHECK(wrong.unfindable.size() == 2);
  CHECK(wrong.found.size() == 1);
  CHECK_THROWS_AS(oracle::search_profiles(f2(), 2, 2, 5, {}), gw::InputError);
}

TEST_CASE("sampled profile search is deterministic") {
  oracle::SearchOptions options;
  options.guards.max_subspaces = 3000;
  options.seed = 7;
  options.chunk = 256;
  const auto a = oracle::search_profiles(f2(), 3, 3, 6, kMonotoneRows, options);
  CHECK_FALSE(a.exhaustive);
  options.chunk = 1000;
  gw::kernels::set_max_threads(1);
  const auto b = oracle::search_profiles(f2(), 3, 3, 6, kMonotoneRows, options);
  gw::kernels::set_max_threads(0);
  REQUIRE(a.found.size() == b.found.size());
  for (const auto& [profile, witness] : a.found) {
    CHECK(b.found.at(profile).index == witness.index);
    CHECK(b.found.at(profile).code == witness.code);
    CHECK(oracle::dgw_bruteforce(DelsarteCode(3, 3, witness.code)).values == profile);
  }
  CHECK(a.found.size() >= 4);
}

TEST_CASE("search respects the time budget") {
  oracle::SearchOptions options;
  options.guards.budget_secs = 0;
  const auto r = oracle::search_profiles(f2(), 3, 3, 6, kMonotoneRows, options);
  CHECK(r.budget_exhausted);
  CHECK(r.examined == 0);
  CHECK(r.missing().size() == 5);
}
