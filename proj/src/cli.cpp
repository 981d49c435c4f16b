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

#include "gwcodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gwcodes/delsarte.hpp"
#include "gwcodes/document.hpp"
#include "gwcodes/errors.hpp"
#include "gwcodes/kernels.hpp"
#include "gwcodes/oracle.hpp"
#include "json.hpp"

namespace gw::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string format = "table";
  std::uint64_t seed = 1;
  int threads = 0;
  std::uint64_t guard_subspaces = Guards{}.max_subspaces;
  std::uint64_t guard_codewords = Guards{}.max_codewords;
  double budget_secs = Guards{}.budget_secs;

  Guards guards() const {
    Guards g;
    g.max_subspaces = guard_subspaces;
    g.max_codewords = guard_codewords;
    g.budget_secs = budget_secs;
    return g;
  }
};

// Renders a result: JSON as-is, CSV as key,value rows, tables via `text`.
void print(std::ostream& out, Format format, const json& result, const std::function<void(std::ostream&)>& text) {
  switch (format) {
    case Format::json:
      out << pretty_json(result);
      break;
    case Format::csv:
      out << "key,value\n";
      for (const auto& [key, value] : result.items())
        out << key << ',' << (value.is_string() ? value.get<std::string>() : "\"" + value.dump() + "\"") << '\n';
      break;
    case Format::table:
      text(out);
      break;
  }
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<Elem>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

json report_json(const oracle::Report& r) {
  return {{"suite", r.suite},         {"passed", r.passed()},   {"checks", r.checks},
          {"failures", r.failures},   {"violations", r.violations}, {"counts", r.counts}};
}

json delsarte_generators(const Subspace& s, std::size_t k, std::size_t m) {
  json gens = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto row = s.basis().row(i);
    json mat = json::array();
    for (std::size_t a = 0; a < k; ++a) mat.push_back(std::vector<Elem>(row.begin() + a * m, row.begin() + (a + 1) * m));
    gens.push_back(std::move(mat));
  }
  return gens;
}

FieldPtr base_field(std::uint32_t p, std::uint32_t e) { return make_field(p, e, 1).base(); }

}  // namespace

std::pair<std::uint32_t, std::uint32_t> parse_prime_power(const std::string& text) {
  auto number = [&](const std::string& s) -> std::uint32_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 9)
      throw InputError("invalid field size '" + text + "' (expected q or p^e)");
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    const std::uint32_t p = number(text.substr(0, caret)), e = number(text.substr(caret + 1));
    if (!is_prime_number(p) || e == 0) throw InputError("invalid field size '" + text + "': p must be prime, e >= 1");
    return {p, e};
  }
  std::uint32_t q = number(text);
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t e = 0;
    while (q % p == 0) q /= p, ++e;
    if (q != 1) break;
    return {p, e};
  }
  throw InputError("field size '" + text + "' is not a prime power");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized weights of Hamming, Gabidulin and Delsarte codes", "gwcodes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  Globals g;
  app.add_option("--format", g.format, "Output format: json, csv or table")
      ->envname("GWCODES_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", g.seed, "Seed for sampling suites and searches")->envname("GWCODES_SEED");
  app.add_option("--threads", g.threads, "Cap on worker threads (0 = OpenMP default)")->envname("GWCODES_THREADS");
  app.add_option("--guard-subspaces", g.guard_subspaces, "Maximum subspaces per enumeration")
      ->envname("GWCODES_GUARD_SUBSPACES");
  app.add_option("--guard-codewords", g.guard_codewords, "Maximum codewords per exhaustive scan")
      ->envname("GWCODES_GUARD_CODEWORDS");
  app.add_option("--budget-secs", g.budget_secs, "Wall-clock budget for searches")->envname("GWCODES_BUDGET_SECS");

  std::string code_path, space_path, profile_path, basis_path, targets_path, out_path, witnesses_path, suite, q_text;
  std::optional<std::size_t> k_opt, m_opt, t_opt;
  std::optional<int> samples;
  std::optional<std::size_t> require;
  bool via_anticodes = false, oggier_sboui = false, use_oracle = false;

  auto code_option = [&](CLI::App* sub) {
    sub->add_option("--code", code_path, "Code document (JSON)")->required()->envname("GWCODES_CODE");
  };
  auto shape_options = [&](CLI::App* sub) {
    sub->add_option("--k", k_opt, "Rows k")->envname("GWCODES_K");
    sub->add_option("--m", m_opt, "Columns m")->envname("GWCODES_M");
  };
  auto q_option = [&](CLI::App* sub) {
    sub->add_option("--q", q_text, "Field size as q or p^e")->envname("GWCODES_Q");
  };

  auto* weights = app.add_subcommand("weights", "Generalized weights of a code");
  weights->require_subcommand(1);
  auto* w_hamming = weights->add_subcommand("hamming", "Generalized Hamming weights");
  auto* w_rank = weights->add_subcommand("rank", "Generalized rank weights of a Gabidulin code");
  auto* w_delsarte = weights->add_subcommand("delsarte", "Delsarte generalized weights of a matrix code");
  for (auto* sub : {w_hamming, w_rank, w_delsarte}) {
    code_option(sub);
    sub->add_flag("--oracle", use_oracle, "Use the brute-force oracle instead of the fast path");
  }
  w_hamming->add_flag("--via-anticodes", via_anticodes, "Minimize over optimal anticodes");
  w_rank->add_flag("--via-anticodes", via_anticodes, "Minimize over optimal anticodes");
  w_rank->add_flag("--oggier-sboui", oggier_sboui, "Oggier-Sboui weights (min maxrk of subcodes)");
  w_delsarte->add_flag("--oggier-sboui", oggier_sboui, "Oggier-Sboui weights (min maxrk of subcodes)");

  auto* dual_weights = app.add_subcommand("dual-weights", "Delsarte weights of the dual from the weights of a code");
  dual_weights->add_option("--profile", profile_path, "Profile JSON")->required()->envname("GWCODES_PROFILE");
  shape_options(dual_weights);
  dual_weights->add_option("--t", t_opt, "Dimension of the code (defaults to the profile length)")
      ->envname("GWCODES_T");

  auto* security = app.add_subcommand("security-profile", "Security profile and worst-case drops of a Gabidulin code");
  code_option(security);

  auto* frobenius = app.add_subcommand("check-frobenius", "Frobenius closure of a subspace of F_{q^m}^k");
  frobenius->add_option("--space", space_path, "Gabidulin code document")->required()->envname("GWCODES_SPACE");

  auto* assoc = app.add_subcommand("associate", "Delsarte code associated with a Gabidulin code");
  code_option(assoc);
  assoc->add_option("--basis", basis_path, "Basis of F_{q^m} over F_q (JSON); default 1, y, ..., y^{m-1}")
      ->envname("GWCODES_BASIS");

  auto* dual = app.add_subcommand("dual", "Dual code (trace product for Delsarte codes)");
  code_option(dual);

  auto* verify = app.add_subcommand("verify", "Run a brute-force verification suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->envname("GWCODES_SUITE")
      ->check(CLI::IsMember(oracle::suite_names()));
  q_option(verify);
  shape_options(verify);
  verify->add_option("--samples", samples, "Random samples per part")->envname("GWCODES_SAMPLES");

  auto* search = app.add_subcommand("search-profiles", "Search codes realizing target Delsarte profiles");
  q_option(search);
  shape_options(search);
  search->add_option("--t", t_opt, "Code dimension")->required()->envname("GWCODES_T");
  search->add_option("--targets", targets_path, "Target profiles (JSON)")->required()->envname("GWCODES_TARGETS");
  search->add_option("--out", out_path, "Write witnesses to this file")->envname("GWCODES_OUT");
  search->add_option("--require", require, "Pass when at least this many targets are found (default: all)")
      ->envname("GWCODES_REQUIRE");

  auto* recheck = app.add_subcommand("verify-witnesses", "Re-verify a witness file written by search-profiles");
  recheck->add_option("--witnesses", witnesses_path, "Witness file")->required()->envname("GWCODES_WITNESSES");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    const Format format = parse_format(g.format);
    const Guards guards = g.guards();
    kernels::set_max_threads(g.threads);

    if (weights->parsed()) {
      const CodeDocument doc = read_code_file(code_path);
      WeightProfile profile;
      if (w_hamming->parsed()) {
        const LinearCode c = doc.hamming();
        profile = use_oracle       ? oracle::ghw_bruteforce(c, guards)
                  : via_anticodes ? ghw_via_anticodes(c, guards)
                                  : generalized_hamming_weights(c, guards);
      } else if (w_rank->parsed()) {
        const GabidulinCode c = doc.gabidulin();
        profile = use_oracle       ? oracle::grw_bruteforce(c, guards)
                  : oggier_sboui  ? oggier_sboui_rank_weights(c, guards)
                  : via_anticodes ? generalized_rank_weights_via_anticodes(c, guards)
                                  : generalized_rank_weights(c, guards);
      } else {
        const DelsarteCode c = doc.delsarte();
        profile = use_oracle      ? oracle::dgw_bruteforce(c, guards)
                  : oggier_sboui ? oggier_sboui_delsarte_weights(c, guards)
                                 : delsarte_generalized_weights(c, guards);
      }
      out << emit_profile(profile, format);
      return kPass;
    }

    if (dual_weights->parsed()) {
      const auto profile = parse_profile(read_text_file(profile_path));
      if (!k_opt || !m_opt) throw InputError("dual-weights needs --k and --m");
      const int t = static_cast<int>(t_opt.value_or(profile.size()));
      WeightProfile result;
      try {
        result = dual_weights_from_weights(profile, static_cast<int>(*k_opt), static_cast<int>(*m_opt), t);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      out << emit_profile(result, format);
      return kPass;
    }

    if (security->parsed()) {
      const GabidulinCode c = read_code_file(code_path).gabidulin();
      const auto delta = security_profile(c, guards);
      const auto drops = worst_case_drops(c, guards);
      const auto w = generalized_rank_weights(c, guards);
      const bool agree = std::set<int>(drops.begin(), drops.end()) == std::set<int>(w.values.begin(), w.values.end());
      const json result{{"delta", delta}, {"drops", drops}, {"rank_weights", w.values}, {"drops_match_weights", agree}};
      print(out, format, result, [&](std::ostream& os) {
        os << std::setw(4) << "mu" << std::setw(8) << "Delta" << '\n';
        for (std::size_t mu = 0; mu < delta.size(); ++mu) os << std::setw(4) << mu << std::setw(8) << delta[mu] << '\n';
        os << "drops " << join(drops) << "  rank weights " << join(w.values) << "  " << (agree ? "agree" : "DIFFER")
           << '\n';
      });
      return agree ? kPass : kCheckFailed;
    }

    if (frobenius->parsed()) {
      const CodeDocument doc = read_code_file(space_path);
      const GabidulinCode c = doc.gabidulin();
      const bool closed = is_frobenius_closed(c.tower(), c.space());
      const std::size_t maxrk = max_rank(c.tower(), c.space(), guards);
      const bool anticode = maxrk == c.dim();
      const json result{{"rref", matrix_json(c.space().basis())},
                        {"dim", c.dim()},
                        {"maxrk", maxrk},
                        {"frobenius_closed", closed},
                        {"optimal_anticode", anticode}};
      print(out, format, result, [&](std::ostream& os) {
        os << "RREF basis:\n";
        for (std::size_t i = 0; i < c.dim(); ++i) {
          os << "  [";
          for (std::size_t j = 0; j < c.k(); ++j) os << (j ? " " : "") << c.space().basis()(i, j);
          os << "]\n";
        }
        os << "dim " << c.dim() << ", maxrk " << maxrk << '\n'
           << "Frobenius-closed: " << (closed ? "yes" : "no") << '\n'
           << "optimal anticode: " << (anticode ? "yes" : "no") << '\n';
      });
      return closed && closed == anticode ? kPass : kCheckFailed;
    }

    if (assoc->parsed()) {
      const CodeDocument doc = read_code_file(code_path);
      const GabidulinCode c = doc.gabidulin();
      std::vector<Elem> basis = polynomial_basis(c.tower());
      if (!basis_path.empty()) basis = parse_basis(read_text_file(basis_path), c.tower());
      DelsarteCode result = [&] {
        try {
          return associate(c, basis);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }();
      out << emit_code(make_document(result, doc.label));
      return kPass;
    }

    if (dual->parsed()) {
      const CodeDocument doc = read_code_file(code_path);
      CodeDocument result = doc;
      result.space = dual_subspace(doc.space);
      out << emit_code(result);
      return kPass;
    }

    if (verify->parsed()) {
      oracle::SuiteParams params;
      if (!q_text.empty()) std::tie(params.p, params.e) = parse_prime_power(q_text);
      params.k = k_opt;
      params.m = m_opt;
      params.samples = samples;
      params.seed = g.seed;
      params.guards = guards;
      const auto report = oracle::run_suite(suite, params);
      print(out, format, report_json(report), [&](std::ostream& os) {
        os << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks
           << " checks, " << report.failures << " failures)\n";
        for (const auto& [key, n] : report.counts) os << "  " << key << ": " << n << '\n';
        for (const auto& v : report.violations) os << "  violation: " << v << '\n';
      });
      return report.passed() ? kPass : kCheckFailed;
    }

    if (search->parsed()) {
      std::uint32_t p = 2, e = 1;
      if (!q_text.empty()) std::tie(p, e) = parse_prime_power(q_text);
      const std::size_t k = k_opt.value_or(3), m = m_opt.value_or(3);
      if (k == 0 || k > m) throw InputError("k <= m required (k = " + std::to_string(k) + ", m = " + std::to_string(m) + ")");
      const FieldPtr field = base_field(p, e);
      const auto targets = parse_targets(read_text_file(targets_path));
      oracle::SearchOptions options;
      options.seed = g.seed;
      options.guards = guards;
      const auto result = oracle::search_profiles(field, k, m, *t_opt, targets, options);

      json found = json::array();
      for (const auto& [profile, w] : result.found)
        found.push_back({{"profile", profile}, {"index", w.index}, {"generators", delsarte_generators(w.code, k, m)}});
      const json summary{{"exhaustive", result.exhaustive},
                         {"total", result.total},
                         {"examined", result.examined},
                         {"elapsed_secs", result.elapsed_secs},
                         {"budget_exhausted", result.budget_exhausted},
                         {"found", found},
                         {"missing", result.missing()},
                         {"unfindable", result.unfindable}};
      if (!out_path.empty()) {
        json file{{"p", p}, {"e", e}, {"k", k}, {"m", m}, {"t", *t_opt}, {"seed", g.seed}};
        json list = json::array();
        for (const auto& [profile, w] : result.found) {
          const CodeDocument doc = make_document(DelsarteCode(k, m, w.code), "witness " + join(profile));
          list.push_back({{"profile", profile}, {"index", w.index}, {"code", json::parse(emit_code(doc))}});
        }
        file["witnesses"] = std::move(list);
        std::ofstream os(out_path);
        if (!os) throw InputError("cannot write '" + out_path + "'");
        os << pretty_json(file);
      }
      print(out, format, summary, [&](std::ostream& os) {
        os << (result.exhaustive ? "exhaustive" : "sampled") << " search: " << result.examined << " codes examined";
        if (result.exhaustive) os << " of " << result.total;
        os << " in " << std::fixed << std::setprecision(2) << result.elapsed_secs << " s"
           << (result.budget_exhausted ? " (budget exhausted)" : "") << '\n';
        for (const auto& [profile, w] : result.found) os << "  found   " << join(profile) << " at #" << w.index << '\n';
        for (const auto& t : result.missing()) os << "  missing " << join(t) << '\n';
        for (const auto& t : result.unfindable) os << "  invalid " << join(t) << " (violates the weight bounds)\n";
      });
      const std::size_t needed = require.value_or(targets.size() - result.unfindable.size());
      return result.found.size() >= needed ? kPass : kCheckFailed;
    }

    if (recheck->parsed()) {
      const json file = json::parse(read_text_file(witnesses_path));
      bool ok = true;
      json rows = json::array();
      for (const auto& w : file.at("witnesses")) {
        const auto profile = w.at("profile").get<std::vector<int>>();
        const DelsarteCode c = parse_code(w.at("code").dump()).delsarte();
        const auto fast = delsarte_generalized_weights(c, guards).values;
        const auto brute = oracle::dgw_bruteforce(c, guards).values;
        const bool good = fast == profile && brute == profile;
        ok = ok && good;
        rows.push_back({{"profile", profile}, {"fast", fast}, {"oracle", brute}, {"verified", good}});
      }
      print(out, format, json{{"witnesses", rows}, {"passed", ok}}, [&](std::ostream& os) {
        for (const auto& r : rows)
          os << join(r.at("profile").get<std::vector<int>>()) << ": " << (r.at("verified").get<bool>() ? "verified" : "MISMATCH")
             << '\n';
      });
      return ok ? kPass : kCheckFailed;
    }
  } catch (const GuardExceeded& e) {
    err << "gwcodes: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const InputError& e) {
    err << "gwcodes: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "gwcodes: malformed input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "gwcodes: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "gwcodes: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace gw::cli
