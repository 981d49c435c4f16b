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

// Brute-force ground truth. Everything here applies the definitions
// literally: subspaces are enumerated, intersections are measured by counting
// codewords, and anticodes are found by filtering every subspace of the
// ambient space. Only field and linalg primitives are shared with the fast
// paths, which the verification suites then compare against.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwcodes/delsarte.hpp"
#include "gwcodes/errors.hpp"
#include "gwcodes/hamming.hpp"
#include "gwcodes/linalg.hpp"
#include "gwcodes/profile.hpp"
#include "gwcodes/rankmetric.hpp"

namespace gw::oracle {

/// d_r = min |supp(D)| over r-dimensional subcodes D, supports read off every codeword.
WeightProfile ghw_bruteforce(const LinearCode& c, const Guards& guards = {});
/// m_r = min dim V over subspaces V spanned by F_q-vectors with dim(V ∩ C) >= r.
WeightProfile grw_bruteforce(const GabidulinCode& c, const Guards& guards = {});
/// a_r from the filtered anticode list below. When that filter exceeds the
/// guards, a_r is certified instead: the least maxrk over r-dim subcodes is a
/// lower bound, and a support space around a subcode, verified by scanning to
/// be an optimal anticode, is an upper bound. Throws GuardExceeded if the
/// bounds do not meet.
WeightProfile dgw_bruteforce(const DelsarteCode& c, const Guards& guards = {});

/// Whether the exhaustive anticode filter for Mat(k x m, F_q) fits the guards.
bool anticode_filter_feasible(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards = {});

/// Every subspace A of Mat(k x m, F_q) with dim A = m maxrk(A), found by
/// scanning all subspaces of dimension divisible by m. Cached per shape.
const std::vector<Subspace>& filtered_anticodes(const FieldPtr& field, std::size_t k, std::size_t m,
                                                const Guards& guards = {});

/// Largest rank of a flattened k x m matrix in `s`; stops early once it exceeds `stop_above`.
std::size_t scan_max_rank(const Subspace& s, std::size_t k, std::size_t m, std::size_t stop_above,
                          const Guards& guards = {});

/// Outcome of a verification suite. Violations beyond the first few are
/// counted but not stored.
struct Report {
  explicit Report(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::uint64_t> counts;

  bool passed() const noexcept { return failures == 0; }
  void check(bool ok, const std::function<std::string()>& describe);
  void merge(const Report& other);
};

struct PazResult {
  bool passed = false;
  std::size_t filtered = 0;
  std::size_t enumerated = 0;
};

/// Filtered maxrk-R anticodes equal the materialized enumeration, as sets.
PazResult verify_paz(const FieldPtr& field, std::size_t k, std::size_t m, std::size_t r, const Guards& guards = {});
/// verify_paz for every R.
Report verify_paz_all(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards = {});
/// For every subspace V of F_{q^m}^k: Frobenius-closed iff dim V = maxrk V.
Report verify_casino(const FieldTower& tower, std::size_t k, const Guards& guards = {});
/// The filtered anticode list is closed under the trace dual.
Report verify_dan(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards = {});

/// Hamming bounds, two weight paths and the oracle on random codes of length <= max_n.
Report propr_hamming(const FieldPtr& field, std::size_t max_n, int samples, std::uint64_t seed,
                     const Guards& guards = {});
/// Rank bounds, anticode path, security drops and the oracle on random codes with k <= m <= max_m.
Report propr_gabidulin(std::uint32_t p, std::uint32_t e, std::size_t max_m, int samples, std::uint64_t seed,
                       const Guards& guards = {});
/// Delsarte bounds, dual separation, anticode duality, transpose and
/// transform invariance, and the oracle on random codes in Mat(k x m, F_q).
Report propr_delsarte(const FieldPtr& field, std::size_t k, std::size_t m, int samples, std::uint64_t seed,
                      const Guards& guards = {});
/// Rank weights versus Delsarte weights of associated codes under two bases.
Report verify_finer(std::uint32_t p, std::uint32_t e, std::size_t max_m, int samples, std::uint64_t seed,
                    const Guards& guards = {});
/// Dual weights reconstructed from weights versus computed on the dual.
Report verify_duality(const FieldPtr& field, std::size_t k, std::size_t m, int samples, std::uint64_t seed,
                      const Guards& guards = {});
/// {d_r(C^⊥)} = [n] minus {n+1-d_r(C)}, both sides by brute force.
Report verify_wei(const FieldPtr& field, std::size_t max_n, int samples, std::uint64_t seed,
                  const Guards& guards = {});

/// Parameters for a named suite; unset values fall back to the suite's default shapes.
struct SuiteParams {
  std::optional<std::uint32_t> p, e;
  std::optional<std::size_t> k, m;
  std::optional<int> samples;
  std::uint64_t seed = 1;
  Guards guards;
};

const std::vector<std::string>& suite_names();
/// Runs casino, dan, paz, propr, finer, duality or wei. Throws InputError for unknown names.
Report run_suite(const std::string& name, const SuiteParams& params);

struct Witness {
  std::vector<int> profile;
  std::uint64_t index = 0;  // enumeration index, or sample number when sampling
  Subspace code;
};

struct SearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t chunk = 4096;
  bool stop_when_found = true;
  Guards guards;
};

struct SearchResult {
  std::vector<std::vector<int>> targets;
  std::map<std::vector<int>, Witness> found;
  std::vector<std::vector<int>> unfindable;  // rejected by the weight bounds without search
  std::map<std::vector<int>, std::uint64_t> histogram;
  bool exhaustive = false;
  bool budget_exhausted = false;
  std::uint64_t total = 0;  // codes in the enumeration; 0 when sampling
  std::uint64_t examined = 0;
  double elapsed_secs = 0;

  std::vector<std::vector<int>> missing() const;
};

/// Looks for t-dimensional codes in Mat(k x m, F_q) realizing each target
/// profile. Enumerates every code when the count fits max_subspaces, otherwise
/// samples seeded random codes. Witnesses are the first match in stream order.
SearchResult search_profiles(const FieldPtr& field, std::size_t k, std::size_t m, std::size_t t,
                             const std::vector<std::vector<int>>& targets, const SearchOptions& options = {});

}  // namespace gw::oracle
