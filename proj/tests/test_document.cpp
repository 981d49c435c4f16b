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
#include <string>

#include "doctest.h"
#include "gwcodes/document.hpp"
#include "test_util.hpp"

using gw::CodeDocument;
using gw::Elem;
using gw::InputError;
using gw::Matrix;
using gw::Metric;
using namespace gw::testing;

namespace {

std::string error_of(std::string_view text) {
  try {
    gw::parse_code(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

constexpr const char* kQ5 = R"({
  "p": 5, "k": 3, "m": 3, "metric": "delsarte",
  "generators": [
    [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
    [[0, 0, 0], [0, 3, 0], [0, 0, 0]]
  ]
})";

}  // namespace

TEST_CASE("the q = 5 document parses to a two-dimensional code") {
  const CodeDocument doc = gw::parse_code(kQ5);
  CHECK(doc.metric == Metric::delsarte);
  const auto c = doc.delsarte();
  CHECK(c.dim() == 2);
  CHECK(c.k() == 3);
  CHECK(c.m() == 3);
  CHECK(c.field()->size() == 5);
  CHECK(c.generator(1)(1, 1) == 1);
  CHECK_FALSE(c.space().contains(std::vector<Elem>{1, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("canonical documents round trip") {
  std::mt19937_64 rng(5);
  const auto f3 = gw::GaloisField::prime(3);
  for (int trial = 0; trial < 10; ++trial) {
    const gw::LinearCode h(random_subspace(f3, 5, 1 + trial % 4, rng));
    const CodeDocument hd = gw::make_document(h, "h");
    CHECK(gw::parse_code(gw::emit_code(hd)) == hd);

    const gw::DelsarteCode d(2, 3, random_subspace(f3, 6, trial % 6, rng));
    const CodeDocument dd = gw::make_document(d);
    CHECK(gw::parse_code(gw::emit_code(dd)) == dd);
    CHECK(gw::parse_code(gw::emit_code(dd)).delsarte() == d);
  }
  const auto tower = gw::make_field(2, 2, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const gw::GabidulinCode g(tower, random_subspace(tower.top(), 3, 1 + trial % 3, rng));
    const CodeDocument gd = gw::make_document(g, "gab");
    CHECK(gw::parse_code(gw::emit_code(gd)) == gd);
  }
}

TEST_CASE("elements may be written as coefficient arrays") {
  const auto a = gw::parse_code(R"({"p":2,"m":4,"k":2,"metric":"gabidulin","generators":[[[0,1],[1,1]]]})");
  const auto b = gw::parse_code(R"({"p":2,"m":4,"k":2,"metric":"gabidulin","generators":[[2,3]]})");
  CHECK(a == b);
  const auto c = gw::parse_code(R"({"p":2,"e":2,"m":2,"k":2,"metric":"rank","generators":[[1,[[0,1],1]]]})");
  CHECK(c.space.basis()(0, 1) == 2 + 1 * 4);
}

TEST_CASE("an empty generator list is the zero code") {
  const auto doc = gw::parse_code(R"({"p":2,"k":2,"m":3,"metric":"delsarte","generators":[]})");
  CHECK(doc.space.dim() == 0);
  CHECK(doc.delsarte().dim() == 0);
}

TEST_CASE("rank-metric documents require k <= m") {
  const auto msg = error_of(R"({"p":2,"k":4,"m":3,"metric":"delsarte","generators":[]})");
  CHECK(msg.find("k <= m required") != std::string::npos);
  CHECK(msg.find("k = 4, m = 3") != std::string::npos);
  CHECK(error_of(R"({"p":2,"k":4,"m":3,"metric":"gabidulin","generators":[]})").find("k <= m required") !=
        std::string::npos);
  CHECK(error_of(R"({"p":2,"n":4,"metric":"hamming","generators":[]})").empty());
}

TEST_CASE("errors name the offending line or field") {
  CHECK(error_of("{\n  \"p\": 2,\n  \"n\": 3\n  \"metric\": \"hamming\"\n}").find("line 4") != std::string::npos);
  CHECK(error_of(R"({"p":5,"k":2,"m":2,"metric":"delsarte","generators":[[[0,0],[0,7]]]})")
            .find("generators[0][1][1]: element 7 outside F_5") != std::string::npos);
  CHECK(error_of(R"({"p":2,"n":3,"metric":"hamming","generators":[[1,0]]})").find("generators[0]") !=
        std::string::npos);
  CHECK(error_of(R"({"p":4,"n":3,"metric":"hamming","generators":[]})").find("field") != std::string::npos);
  CHECK(error_of(R"({"p":2,"n":3,"metric":"lee","generators":[]})").find("metric") != std::string::npos);
  CHECK(error_of(R"({"n":3,"metric":"hamming","generators":[]})").find("\"p\"") != std::string::npos);
  CHECK(error_of("[1,2]").find("JSON object") != std::string::npos);
}

TEST_CASE("profile output formats") {
  const gw::WeightProfile p{Metric::delsarte, {1, 2}};
  CHECK(gw::emit_profile(p, gw::Format::json) == "{\"metric\":\"delsarte\",\"profile\":[1,2]}\n");
  CHECK(gw::emit_profile(p, gw::Format::csv) == "r,a_r\n1,1\n2,2\n");
  const auto table = gw::emit_profile(p, gw::Format::table);
  CHECK(table.find("a_r") != std::string::npos);
  CHECK(gw::parse_format("csv") == gw::Format::csv);
  CHECK_THROWS_AS(gw::parse_format("xml"), InputError);
}

TEST_CASE("profiles, bases and targets accept bare arrays or objects") {
  CHECK(gw::parse_profile("[1,2,3]") == std::vector<int>{1, 2, 3});
  CHECK(gw::parse_profile(R"({"profile":[2]})") == std::vector<int>{2});
  CHECK_THROWS_AS(gw::parse_profile(R"({"profile":[1.5]})"), InputError);
  CHECK(gw::parse_targets(R"({"targets":[[1],[1,2]]})").size() == 2);
  const auto tower = gw::make_field(2, 1, 3);
  CHECK(gw::parse_basis("[1,2,4]", tower) == std::vector<Elem>{1, 2, 4});
  CHECK(gw::parse_basis(R"({"basis":[[1],[0,1],[0,0,1]]})", tower) == std::vector<Elem>{1, 2, 4});
  CHECK_THROWS_AS(gw::parse_basis("[9]", tower), InputError);
}

TEST_CASE("compact JSON keeps scalar arrays on one line") {
  const nlohmann::json v = {{"a", {1, 2}}, {"b", {{1, 2}, {3}}}};
  CHECK(gw::pretty_json(v) == "{\n  \"a\": [1,2],\n  \"b\": [\n    [1,2],\n    [3]\n  ]\n}\n");
  CHECK(nlohmann::json::parse(gw::pretty_json(v)) == v);
}
