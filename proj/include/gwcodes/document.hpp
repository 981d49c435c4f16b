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

// JSON code documents and profile output.
//
// Code documents:
//   hamming:   {"p","e","n","metric":"hamming","generators":[[x,...],...]}
//   gabidulin: {"p","e","m","k","metric":"gabidulin","generators":[[x,...],...]}
//   delsarte:  {"p","e","k","m","metric":"delsarte","generators":[[[row],...],...]}
// with optional "f", "g" (polynomial coefficients, low degree first) and
// "label". An element is either its integer code or its coefficient array
// over the next field down (nested for F_{q^m} over F_q over F_p).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwcodes/delsarte.hpp"
#include "gwcodes/field.hpp"
#include "gwcodes/hamming.hpp"
#include "gwcodes/linalg.hpp"
#include "gwcodes/profile.hpp"
#include "gwcodes/rankmetric.hpp"
#include "json.hpp"

namespace gw {

enum class Format { json, csv, table };

/// Throws InputError for anything but "json", "csv" or "table".
Format parse_format(std::string_view name);

struct CodeDocument {
  FieldTower tower;  // m == 1 except for Gabidulin codes
  Metric metric = Metric::hamming;
  std::size_t length = 0;   // n, or k for the rank metrics
  std::size_t columns = 0;  // m for Delsarte codes, otherwise 0
  Subspace space;
  std::string label;

  LinearCode hamming() const;
  GabidulinCode gabidulin() const;
  DelsarteCode delsarte() const;

  friend bool operator==(const CodeDocument& a, const CodeDocument& b) {
    return a.tower == b.tower && a.metric == b.metric && a.length == b.length && a.columns == b.columns &&
           a.space == b.space && a.label == b.label;
  }
};

/// Throws InputError with line or field context on any malformed input,
/// including k > m for the rank metrics.
CodeDocument parse_code(std::string_view text);
CodeDocument read_code_file(const std::string& path);

CodeDocument make_document(const LinearCode& c, std::string label = {});
CodeDocument make_document(const GabidulinCode& c, std::string label = {});
CodeDocument make_document(const DelsarteCode& c, std::string label = {});

/// Canonical serialization: RREF generators, integer element codes, explicit f and g.
std::string emit_code(const CodeDocument& doc);

/// A bare array [w_1, ...] or an object with a "profile" array.
std::vector<int> parse_profile(std::string_view text);
/// A bare array of F_{q^m} elements or an object with a "basis" array.
std::vector<Elem> parse_basis(std::string_view text, const FieldTower& tower);
/// Target profiles: an array of arrays, or an object with a "targets" array.
std::vector<std::vector<int>> parse_targets(std::string_view text);

std::string emit_profile(const WeightProfile& profile, Format format);

std::string read_text_file(const std::string& path);

/// Indented JSON with arrays of scalars kept on one line.
std::string pretty_json(const nlohmann::json& value);

}  // namespace gw
