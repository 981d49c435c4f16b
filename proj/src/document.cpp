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

#include "gwcodes/document.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gwcodes/errors.hpp"
#include "json.hpp"

namespace gw {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where.empty() ? what : where + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    fail("line " + std::to_string(line), std::string("malformed JSON (") + e.what() + ")");
  }
}

std::uint32_t get_uint(const json& doc, const std::string& key, std::optional<std::uint32_t> fallback = {}) {
  if (!doc.contains(key)) {
    if (fallback) return *fallback;
    fail("", "missing field \"" + key + "\"");
  }
  const json& v = doc.at(key);
  if (!v.is_number_unsigned()) fail("\"" + key + "\"", "expected a non-negative integer");
  const auto x = v.get<std::uint64_t>();
  if (x > UINT32_MAX) fail("\"" + key + "\"", "value too large");
  return static_cast<std::uint32_t>(x);
}

std::optional<std::vector<Elem>> get_poly(const json& doc, const std::string& key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  const json& v = doc.at(key);
  if (!v.is_array()) fail("\"" + key + "\"", "expected a coefficient array");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned()) fail("\"" + key + "\"[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(v[i].get<Elem>());
  }
  return out;
}

// An element of `field`: integer code or coefficient array over field.base().
Elem parse_element(const json& v, const GaloisField& field, const std::string& where) {
  if (v.is_number_unsigned()) {
    const auto x = v.get<std::uint64_t>();
    if (x >= field.size())
      fail(where, "element " + std::to_string(x) + " outside F_" + std::to_string(field.size()));
    return static_cast<Elem>(x);
  }
  if (v.is_array()) {
    if (field.is_prime()) fail(where, "coefficient array given for a prime field element");
    if (v.size() > field.degree())
      fail(where, "coefficient array longer than the extension degree " + std::to_string(field.degree()));
    std::vector<Elem> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i)
      coeffs.push_back(parse_element(v[i], *field.base(), where + "[" + std::to_string(i) + "]"));
    coeffs.resize(field.degree(), 0);
    return field.from_coefficients(coeffs);
  }
  fail(where, "expected an integer or a coefficient array");
}

Metric parse_metric(const json& doc) {
  if (!doc.contains("metric") || !doc.at("metric").is_string()) fail("", "missing string field \"metric\"");
  const auto name = doc.at("metric").get<std::string>();
  if (name == "hamming") return Metric::hamming;
  if (name == "gabidulin" || name == "rank") return Metric::gabidulin;
  if (name == "delsarte") return Metric::delsarte;
  fail("\"metric\"", "unknown metric '" + name + "'");
}

void require_k_le_m(std::size_t k, std::size_t m) {
  if (k > m) fail("", "k <= m required (k = " + std::to_string(k) + ", m = " + std::to_string(m) + ")");
}

FieldTower build_tower(std::uint32_t p, std::uint32_t e, std::uint32_t m, std::optional<std::vector<Elem>> f,
                       std::optional<std::vector<Elem>> g) {
  try {
    return make_field(p, e, m, std::move(f), std::move(g));
  } catch (const std::invalid_argument& err) {
    fail("field", err.what());
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw InputError("unknown format '" + std::string(name) + "' (expected json, csv or table)");
}

LinearCode CodeDocument::hamming() const {
  if (metric != Metric::hamming) throw InputError("expected a hamming code document");
  return LinearCode(space);
}

GabidulinCode CodeDocument::gabidulin() const {
  if (metric != Metric::gabidulin) throw InputError("expected a gabidulin code document");
  return GabidulinCode(tower, space);
}

DelsarteCode CodeDocument::delsarte() const {
  if (metric != Metric::delsarte) throw InputError("expected a delsarte code document");
  return DelsarteCode(length, columns, space);
}

CodeDocument parse_code(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("", "a code document must be a JSON object");
  CodeDocument out;
  out.metric = parse_metric(doc);
  const std::uint32_t p = get_uint(doc, "p"), e = get_uint(doc, "e", 1);
  const auto f = get_poly(doc, "f"), g = get_poly(doc, "g");
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) fail("\"label\"", "expected a string");
    out.label = doc.at("label").get<std::string>();
  }

  std::size_t width = 0;  // entries per generator
  switch (out.metric) {
    case Metric::hamming:
      out.tower = build_tower(p, e, 1, f, std::nullopt);
      out.length = get_uint(doc, "n");
      width = out.length;
      break;
    case Metric::gabidulin: {
      const std::uint32_t m = get_uint(doc, "m");
      out.length = get_uint(doc, "k");
      require_k_le_m(out.length, m);
      out.tower = build_tower(p, e, m, f, g);
      width = out.length;
      break;
    }
    case Metric::delsarte:
      out.length = get_uint(doc, "k");
      out.columns = get_uint(doc, "m");
      if (out.length == 0) fail("\"k\"", "must be positive");
      require_k_le_m(out.length, out.columns);
      out.tower = build_tower(p, e, 1, f, std::nullopt);
      width = out.length * out.columns;
      break;
  }
  const FieldPtr& field = out.metric == Metric::gabidulin ? out.tower.top() : out.tower.base();

  if (!doc.contains("generators") || !doc.at("generators").is_array()) fail("", "missing array field \"generators\"");
  const json& gens = doc.at("generators");
  Matrix rows(field, 0, width);
  std::vector<Elem> row(width);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const json& gen = gens[i];
    if (out.metric == Metric::delsarte) {
      if (!gen.is_array() || gen.size() != out.length)
        fail(where, "expected a " + std::to_string(out.length) + " x " + std::to_string(out.columns) + " matrix");
      for (std::size_t a = 0; a < out.length; ++a) {
        const std::string rw = where + "[" + std::to_string(a) + "]";
        if (!gen[a].is_array() || gen[a].size() != out.columns)
          fail(rw, "expected a row of " + std::to_string(out.columns) + " entries");
        for (std::size_t j = 0; j < out.columns; ++j)
          row[a * out.columns + j] = parse_element(gen[a][j], *field, rw + "[" + std::to_string(j) + "]");
      }
    } else {
      if (!gen.is_array() || gen.size() != width)
        fail(where, "expected a vector of length " + std::to_string(width));
      for (std::size_t j = 0; j < width; ++j)
        row[j] = parse_element(gen[j], *field, where + "[" + std::to_string(j) + "]");
    }
    rows.append_row(row);
  }
  out.space = rowspace(rows);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CodeDocument read_code_file(const std::string& path) {
  try {
    return parse_code(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

CodeDocument make_document(const LinearCode& c, std::string label) {
  CodeDocument d;
  const FieldPtr& f = c.field();
  const std::uint32_t p = f->characteristic();
  d.tower = make_field(p, f->is_prime() ? 1 : f->degree(), 1,
                       f->is_prime() ? std::nullopt : std::optional(f->modulus()), std::nullopt);
  d.metric = Metric::hamming;
  d.length = c.length();
  d.space = rowspace(Matrix(d.tower.base(), c.dim(), c.length(), c.space().basis().data()));
  d.label = std::move(label);
  return d;
}

CodeDocument make_document(const GabidulinCode& c, std::string label) {
  CodeDocument d;
  d.tower = c.tower();
  d.metric = Metric::gabidulin;
  d.length = c.k();
  d.space = c.space();
  d.label = std::move(label);
  return d;
}

CodeDocument make_document(const DelsarteCode& c, std::string label) {
  CodeDocument d;
  const FieldPtr& f = c.field();
  d.tower = make_field(f->characteristic(), f->is_prime() ? 1 : f->degree(), 1,
                       f->is_prime() ? std::nullopt : std::optional(f->modulus()), std::nullopt);
  d.metric = Metric::delsarte;
  d.length = c.k();
  d.columns = c.m();
  d.space = rowspace(Matrix(d.tower.base(), c.dim(), c.k() * c.m(), c.space().basis().data()));
  d.label = std::move(label);
  return d;
}

namespace {

void write_pretty(std::ostream& os, const json& v, int depth) {
  const auto pad = [&](int d) { os << '\n' << std::string(2 * d, ' '); };
  if (v.is_array() && !v.empty()) {
    if (std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) {
      os << v.dump();
      return;
    }
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      pad(depth + 1);
      write_pretty(os, v[i], depth + 1);
      if (i + 1 < v.size()) os << ',';
    }
    pad(depth);
    os << ']';
  } else if (v.is_object() && !v.empty()) {
    os << '{';
    std::size_t i = 0;
    for (const auto& [key, x] : v.items()) {
      pad(depth + 1);
      os << json(key).dump() << ": ";
      write_pretty(os, x, depth + 1);
      if (++i < v.size()) os << ',';
    }
    pad(depth);
    os << '}';
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string pretty_json(const json& value) {
  std::ostringstream os;
  write_pretty(os, value, 0);
  os << '\n';
  return os.str();
}

std::string emit_code(const CodeDocument& doc) {
  json out;
  out["p"] = doc.tower.p();
  out["e"] = doc.tower.e();
  if (!doc.tower.f().empty()) out["f"] = doc.tower.f();
  out["metric"] = doc.metric == Metric::gabidulin ? "gabidulin" : to_string(doc.metric);
  switch (doc.metric) {
    case Metric::hamming:
      out["n"] = doc.length;
      break;
    case Metric::gabidulin:
      out["m"] = doc.tower.m();
      out["k"] = doc.length;
      if (!doc.tower.g().empty()) out["g"] = doc.tower.g();
      break;
    case Metric::delsarte:
      out["k"] = doc.length;
      out["m"] = doc.columns;
      break;
  }
  json gens = json::array();
  const Matrix& b = doc.space.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const auto row = b.row(i);
    if (doc.metric == Metric::delsarte) {
      json mat = json::array();
      for (std::size_t a = 0; a < doc.length; ++a)
        mat.push_back(std::vector<Elem>(row.begin() + a * doc.columns, row.begin() + (a + 1) * doc.columns));
      gens.push_back(std::move(mat));
    } else {
      gens.push_back(std::vector<Elem>(row.begin(), row.end()));
    }
  }
  out["generators"] = std::move(gens);
  if (!doc.label.empty()) out["label"] = doc.label;
  return pretty_json(out);
}

std::vector<int> parse_profile(std::string_view text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("profile")) doc = doc.at("profile");
  if (!doc.is_array()) fail("profile", "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number_integer()) fail("profile[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(doc[i].get<int>());
  }
  return out;
}

std::vector<Elem> parse_basis(std::string_view text, const FieldTower& tower) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("basis")) doc = doc.at("basis");
  if (!doc.is_array()) fail("basis", "expected an array of field elements");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < doc.size(); ++i)
    out.push_back(parse_element(doc[i], *tower.top(), "basis[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<int>> parse_targets(std::string_view text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("targets")) doc = doc.at("targets");
  if (!doc.is_array()) fail("targets", "expected an array of profiles");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "targets[" + std::to_string(i) + "]";
    if (!doc[i].is_array()) fail(where, "expected an array of integers");
    std::vector<int> t;
    for (const auto& x : doc[i]) {
      if (!x.is_number_integer()) fail(where, "expected an array of integers");
      t.push_back(x.get<int>());
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string emit_profile(const WeightProfile& profile, Format format) {
  const std::string symbol = profile.metric == Metric::hamming ? "d_r" : profile.metric == Metric::gabidulin ? "m_r" : "a_r";
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << json{{"metric", to_string(profile.metric)}, {"profile", profile.values}}.dump() << '\n';
      break;
    case Format::csv:
      os << "r," << symbol << '\n';
      for (std::size_t r = 1; r <= profile.size(); ++r) os << r << ',' << profile.weight(r) << '\n';
      break;
    case Format::table:
      os << std::setw(4) << "r" << std::setw(6) << symbol << '\n';
      for (std::size_t r = 1; r <= profile.size(); ++r)
        os << std::setw(4) << r << std::setw(6) << profile.weight(r) << '\n';
      break;
  }
  return os.str();
}

}  // namespace gw
