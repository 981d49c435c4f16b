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
#include <stdexcept>
#include <string>

namespace gw {

/// Malformed or inconsistent user input (documents, shapes, parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or scan would exceed a configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::string guard, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error("guard '" + guard + "' exceeded: requested " + std::to_string(requested) +
                           ", limit " + std::to_string(limit)),
        guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// Size limits for exhaustive work. Every exhaustive routine takes one of these;
/// the defaults are sized so the acceptance suite runs on a single desktop core.
struct Guards {
  std::uint64_t max_ambient_vectors = std::uint64_t{1} << 24;  // q^n for enumerated ambient spaces
  std::uint64_t max_subspaces = std::uint64_t{1} << 24;        // subspaces per enumeration
  std::uint64_t max_codewords = std::uint64_t{1} << 22;        // codewords per exhaustive scan
  double budget_secs = 600.0;                                  // wall-clock budget for searches
  std::size_t max_anticode_length = 6;                         // exhaustive Hamming anticode enumeration

  void check_subspaces(std::uint64_t n) const {
    if (n > max_subspaces) throw GuardExceeded("max-subspaces", n, max_subspaces);
  }
  void check_codewords(std::uint64_t n) const {
    if (n > max_codewords) throw GuardExceeded("max-codewords", n, max_codewords);
  }
  void check_ambient(std::uint64_t n) const {
    if (n > max_ambient_vectors) throw GuardExceeded("max-ambient-vectors", n, max_ambient_vectors);
  }
};

/// Saturating integer power; returns UINT64_MAX on overflow.
constexpr std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

}  // namespace gw
