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

#include "gwcodes/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "gwcodes/kernels.hpp"

namespace gw::oracle {

namespace {

constexpr std::size_t kStoredViolations = 20;

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Number of field elements per dimension step: |V| = base^dim.
std::size_t dim_from_count(std::uint64_t count, std::uint64_t base) {
  std::size_t d = 0;
  for (std::uint64_t n = 1; n < count; n *= base) ++d;
  return d;
}

// |V ∩ C| by scanning C.
std::uint64_t common_vectors(const Subspace& v, const Subspace& c, const Guards& guards) {
  std::uint64_t count = 0;
  c.for_each_vector(
      [&](std::span<const Elem> x) {
        count += v.contains(x);
        return true;
      },
      guards);
  return count;
}

std::size_t flat_rank(const GaloisField& f, std::span<const Elem> x, std::size_t k, std::size_t m) {
  thread_local std::vector<Elem> buffer;
  buffer.assign(x.begin(), x.end());
  return rref_in_place(f, buffer.data(), k, m);
}

// Rank of v in F_{q^m}^k: rank of its k x m matrix of base-q digits.
std::size_t vector_rank(const FieldTower& tower, std::span<const Elem> v) {
  const std::size_t k = v.size(), m = tower.m();
  std::vector<Elem> digits(k * m);
  for (std::size_t i = 0; i < k; ++i) {
    Elem x = v[i];
    for (std::size_t j = 0; j < m; ++j, x /= tower.q()) digits[i * m + j] = x % tower.q();
  }
  return rref_in_place(*tower.base(), digits.data(), k, m);
}

std::size_t vector_max_rank(const FieldTower& tower, const Subspace& v, const Guards& guards) {
  std::size_t best = 0;
  v.for_each_vector(
      [&](std::span<const Elem> x) {
        best = std::max(best, vector_rank(tower, x));
        return true;
      },
      guards);
  return best;
}

std::size_t vector_min_rank(const FieldTower& tower, const Subspace& v, const Guards& guards) {
  std::size_t best = SIZE_MAX;
  v.for_each_vector(
      [&](std::span<const Elem> x) {
        const std::size_t r = vector_rank(tower, x);
        if (r > 0) best = std::min(best, r);
        return true;
      },
      guards);
  return best;
}

std::size_t delsarte_min_rank(const Subspace& c, std::size_t k, std::size_t m, const Guards& guards) {
  std::size_t best = SIZE_MAX;
  c.for_each_vector(
      [&](std::span<const Elem> x) {
        const std::size_t r = flat_rank(*c.field(), x, k, m);
        if (r > 0) best = std::min(best, r);
        return true;
      },
      guards);
  return best;
}

Subspace random_subspace(const FieldPtr& f, std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, f->size() - 1);
  while (true) {
    std::vector<Elem> data(d * n);
    for (auto& x : data) x = pick(rng);
    Subspace s = rowspace(Matrix(f, d, n, std::move(data)));
    if (s.dim() == d) return s;
  }
}

Matrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, f->size() - 1);
  while (true) {
    std::vector<Elem> data(n * n);
    for (auto& x : data) x = pick(rng);
    Matrix a(f, n, n, std::move(data));
    if (is_invertible(a)) return a;
  }
}

std::size_t pick_in(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<int> as_vector(const std::set<int>& s) { return {s.begin(), s.end()}; }

struct AnticodeCache {
  struct Entry {
    FieldPtr field;
    std::size_t k, m;
    std::vector<Subspace> anticodes;
  };
  std::mutex mutex;
  std::vector<Entry> entries;
};

AnticodeCache& anticode_cache() {
  static AnticodeCache cache;
  return cache;
}

// Catalogs are pure functions of the shape; the suites reuse them.
const AnticodeCatalog& catalog_for(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<AnticodeCatalog>> catalogs;
  std::lock_guard lock(mutex);
  for (const auto& c : catalogs)
    if (c->k() == k && c->m() == m && *c->field() == *field) return *c;
  catalogs.push_back(std::make_unique<AnticodeCatalog>(field, k, m, guards));
  return *catalogs.back();
}

}  // namespace

std::size_t scan_max_rank(const Subspace& s, std::size_t k, std::size_t m, std::size_t stop_above,
                          const Guards& guards) {
  std::size_t best = 0;
  s.for_each_vector(
      [&](std::span<const Elem> x) {
        best = std::max(best, flat_rank(*s.field(), x, k, m));
        return best <= stop_above;
      },
      guards);
  return best;
}

WeightProfile ghw_bruteforce(const LinearCode& c, const Guards& guards) {
  if (c.dim() == 0) throw std::invalid_argument("generalized weights of the zero code");
  const Matrix& g = c.space().basis();
  WeightProfile out{Metric::hamming, {}};
  for (std::size_t r = 1; r <= c.dim(); ++r) {
    const SubspaceEnumerator subcodes(c.field(), c.dim(), r, guards);
    out.values.push_back(static_cast<int>(kernels::min(
        subcodes.count(),
        [&](std::uint64_t i) {
          const Subspace d = rowspace(subcodes.at(i).basis() * g);
          std::vector<bool> used(c.length(), false);
          d.for_each_vector(
              [&](std::span<const Elem> x) {
                for (std::size_t j = 0; j < x.size(); ++j) used[j] = used[j] || x[j] != 0;
                return true;
              },
              guards);
          return static_cast<std::int64_t>(std::count(used.begin(), used.end(), true));
        },
        static_cast<std::int64_t>(c.length()))));
  }
  return out;
}

WeightProfile grw_bruteforce(const GabidulinCode& c, const Guards& guards) {
  if (c.dim() == 0) throw std::invalid_argument("generalized weights of the zero code");
  const FieldTower& tower = c.tower();
  const std::size_t k = c.k();
  std::vector<std::size_t> best(k + 1, 0);
  for (std::size_t d = 0; d <= k; ++d) {
    const SubspaceEnumerator base(tower.base(), k, d, guards);
    best[d] = static_cast<std::size_t>(kernels::max(
        base.count(),
        [&](std::uint64_t i) {
          // F_q codes are valid F_{q^m} codes: the span over the top field
          const Subspace u = base.at(i);
          const Matrix& b = u.basis();
          const Subspace v = rowspace(Matrix(tower.top(), b.rows(), b.cols(), b.data()));
          return static_cast<std::int64_t>(
              dim_from_count(common_vectors(v, c.space(), guards), tower.top()->size()));
        },
        0));
  }
  WeightProfile out{Metric::gabidulin, {}};
  for (std::size_t r = 1; r <= c.dim(); ++r) {
    std::size_t d = 0;
    while (best[d] < r) ++d;
    out.values.push_back(static_cast<int>(d));
  }
  return out;
}

const std::vector<Subspace>& filtered_anticodes(const FieldPtr& field, std::size_t k, std::size_t m,
                                                const Guards& guards) {
  auto& cache = anticode_cache();
  {
    std::lock_guard lock(cache.mutex);
    for (const auto& e : cache.entries)
      if (e.k == k && e.m == m && *e.field == *field) return e.anticodes;
  }
  guards.check_ambient(checked_pow(field->size(), k * m));
  std::vector<Subspace> found;
  for (std::size_t r = 0; r <= k; ++r) {
    const SubspaceEnumerator all(field, k * m, r * m, guards);
    const auto hits = kernels::filter(all.count(),
                                      [&](std::uint64_t i) { return scan_max_rank(all.at(i), k, m, r, guards) == r; });
    for (auto i : hits) found.push_back(all.at(i));
  }
  std::lock_guard lock(cache.mutex);
  for (const auto& e : cache.entries)
    if (e.k == k && e.m == m && *e.field == *field) return e.anticodes;
  cache.entries.push_back({field, k, m, std::move(found)});
  return cache.entries.back().anticodes;
}

namespace {

// Subspaces scanned by the exhaustive anticode filter (saturating).
std::uint64_t anticode_filter_size(const FieldPtr& field, std::size_t k, std::size_t m) {
  std::uint64_t total = 0;
  for (std::size_t r = 0; r <= k; ++r) {
    const std::uint64_t n = gaussian_binomial(k * m, r * m, field->size());
    total = n > UINT64_MAX - total ? UINT64_MAX : total + n;
  }
  return total;
}

[[noreturn]] void refuse_filter(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards) {
  const std::uint64_t ambient = checked_pow(field->size(), k * m);
  if (ambient > guards.max_ambient_vectors)
    throw GuardExceeded("anticode-filter", ambient, guards.max_ambient_vectors);
  throw GuardExceeded("anticode-filter", anticode_filter_size(field, k, m), guards.max_subspaces);
}

}  // namespace

bool anticode_filter_feasible(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards) {
  return checked_pow(field->size(), k * m) <= guards.max_ambient_vectors &&
         anticode_filter_size(field, k, m) <= guards.max_subspaces;
}

namespace {

// {N : colsp(N) ⊆ span} (or rowsp when `rows`) for the span of the given vectors.
Subspace support_space(const Subspace& d, std::size_t k, std::size_t m, bool rows, std::size_t* support_dim) {
  const FieldPtr& f = d.field();
  Matrix spans(f, 0, rows ? m : k);
  for (std::size_t i = 0; i < d.dim(); ++i) {
    const Matrix n(f, k, m, std::vector<Elem>(d.basis().row(i).begin(), d.basis().row(i).end()));
    const Matrix lines = rows ? n : transpose(n);
    for (std::size_t a = 0; a < lines.rows(); ++a) spans.append_row(lines.row(a));
  }
  const Subspace u = rowspace(spans);
  *support_dim = u.dim();
  Matrix gens(f, 0, k * m);
  std::vector<Elem> flat(k * m);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const auto v = u.basis().row(i);
    for (std::size_t s = 0; s < (rows ? k : m); ++s) {
      std::fill(flat.begin(), flat.end(), 0);
      for (std::size_t x = 0; x < v.size(); ++x) flat[rows ? s * m + x : x * m + s] = v[x];
      gens.append_row(flat);
    }
  }
  return rowspace(gens);
}

// Smallest R for which a support space around D is a verified optimal
// anticode of maxrk R; k + 1 when none verifies.
std::size_t witness_rank(const Subspace& d, std::size_t k, std::size_t m, const Guards& guards) {
  std::size_t best = k + 1;
  for (bool rows : {false, true}) {
    if (rows && k != m) break;
    std::size_t r = 0;
    const Subspace a = support_space(d, k, m, rows, &r);
    if (r >= best || !a.contains(d) || a.dim() != m * r) continue;
    if (scan_max_rank(a, k, m, r, guards) == r) best = r;
  }
  return best;
}

WeightProfile dgw_certified(const DelsarteCode& c, const Guards& guards) {
  const std::size_t k = c.k(), m = c.m();
  const Matrix& g = c.space().basis();
  WeightProfile out{Metric::delsarte, {}};
  for (std::size_t r = 1; r <= c.dim(); ++r) {
    const SubspaceEnumerator subcodes(c.field(), c.dim(), r, guards);
    std::size_t lower = k + 1, upper = k + 1;
    for (std::uint64_t i = 0; i < subcodes.count(); ++i) {
      const Subspace d = rowspace(subcodes.at(i).basis() * g);
      lower = std::min(lower, scan_max_rank(d, k, m, k, guards));
      upper = std::min(upper, witness_rank(d, k, m, guards));
    }
    if (lower != upper) refuse_filter(c.field(), k, m, guards);
    out.values.push_back(static_cast<int>(lower));
  }
  return out;
}

}  // namespace

WeightProfile dgw_bruteforce(const DelsarteCode& c, const Guards& guards) {
  if (c.dim() == 0) throw std::invalid_argument("generalized weights of the zero code");
  if (!anticode_filter_feasible(c.field(), c.k(), c.m(), guards)) return dgw_certified(c, guards);
  const auto& anticodes = filtered_anticodes(c.field(), c.k(), c.m(), guards);
  std::vector<std::size_t> best(c.k() + 1, 0);
  for (const auto& a : anticodes) {
    const std::size_t r = a.dim() / c.m();
    best[r] = std::max(best[r], dim_from_count(common_vectors(a, c.space(), guards), c.field()->size()));
  }
  WeightProfile out{Metric::delsarte, {}};
  for (std::size_t r = 1; r <= c.dim(); ++r) {
    std::size_t d = 0;
    while (best[d] < r) ++d;
    out.values.push_back(static_cast<int>(d));
  }
  return out;
}

void Report::check(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  ++failures;
  if (violations.size() < kStoredViolations) violations.push_back(describe());
}

void Report::merge(const Report& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& v : other.violations)
    if (violations.size() < kStoredViolations) violations.push_back(v);
  for (const auto& [key, n] : other.counts) counts[key] += n;
}

PazResult verify_paz(const FieldPtr& field, std::size_t k, std::size_t m, std::size_t r, const Guards& guards) {
  std::set<Subspace> filtered;
  for (const auto& a : filtered_anticodes(field, k, m, guards))
    if (a.dim() == r * m) filtered.insert(a);
  std::set<Subspace> enumerated;
  std::size_t produced = 0;
  for (const auto& d : enumerate_optimal_anticodes(field, k, m, r, guards)) {
    enumerated.insert(anticode_space(d).space());
    ++produced;
  }
  return {filtered == enumerated && produced == enumerated.size(), filtered.size(), produced};
}

Report verify_paz_all(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards) {
  Report report{"paz"};
  for (std::size_t r = 0; r <= k; ++r) {
    const auto res = verify_paz(field, k, m, r, guards);
    std::ostringstream key;
    key << "q=" << field->size() << " k=" << k << " m=" << m << " R=" << r;
    report.counts[key.str() + " filtered"] = res.filtered;
    report.counts[key.str() + " enumerated"] = res.enumerated;
    report.check(res.passed, [&] {
      return key.str() + ": filtered " + std::to_string(res.filtered) + " anticodes, enumerated " +
             std::to_string(res.enumerated);
    });
  }
  return report;
}

Report verify_casino(const FieldTower& tower, std::size_t k, const Guards& guards) {
  Report report{"casino"};
  std::uint64_t closed = 0, total = 0;
  for (std::size_t d = 0; d <= k; ++d) {
    const SubspaceEnumerator all(tower.top(), k, d, guards);
    const auto bad = kernels::filter(all.count(), [&](std::uint64_t i) {
      const Subspace v = all.at(i);
      return is_frobenius_closed(tower, v) != (vector_max_rank(tower, v, guards) == v.dim());
    });
    closed += kernels::filter(all.count(), [&](std::uint64_t i) { return is_frobenius_closed(tower, all.at(i)); })
                  .size();
    total += all.count();
    report.checks += all.count();
    report.failures += bad.size();
    for (auto i : bad)
      if (report.violations.size() < kStoredViolations)
        report.violations.push_back("dim " + std::to_string(d) + " subspace #" + std::to_string(i) +
                                    ": Frobenius-closed and dim = maxrk disagree");
  }
  std::ostringstream key;
  key << "q=" << tower.q() << " k=" << k << " m=" << tower.m();
  report.counts[key.str() + " subspaces"] = total;
  report.counts[key.str() + " frobenius-closed"] = closed;
  return report;
}

Report verify_dan(const FieldPtr& field, std::size_t k, std::size_t m, const Guards& guards) {
  Report report{"dan"};
  const auto& list = filtered_anticodes(field, k, m, guards);
  const std::set<Subspace> anticodes(list.begin(), list.end());
  for (const auto& a : list)
    report.check(anticodes.contains(dual_subspace(a)), [&] {
      return "dual of a dimension " + std::to_string(a.dim()) + " anticode is not an optimal anticode";
    });
  std::ostringstream key;
  key << "q=" << field->size() << " k=" << k << " m=" << m << " anticodes";
  report.counts[key.str()] = list.size();
  return report;
}

Report propr_hamming(const FieldPtr& field, std::size_t max_n, int samples, std::uint64_t seed,
                     const Guards& guards) {
  Report report{"propr-hamming"};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const std::size_t n = pick_in(rng, 1, max_n), t = pick_in(rng, 1, n);
    const LinearCode c(random_subspace(field, n, t, rng));
    const auto w = generalized_hamming_weights(c, guards);
    const std::string tag = "[" + std::to_string(n) + "," + std::to_string(t) + "] code " + show(w.values);
    const int ni = static_cast<int>(n), ti = static_cast<int>(t);
    report.check(w.weight(1) == static_cast<int>(min_weight(c, guards)), [&] { return tag + ": d_1 != minwt"; });
    report.check(w.weight(t) <= ni, [&] { return tag + ": d_t > n"; });
    for (int r = 1; r < ti; ++r) report.check(w.weight(r) < w.weight(r + 1), [&] { return tag + ": not increasing"; });
    for (int r = 1; r <= ti; ++r)
      report.check(w.weight(r) <= ni - ti + r, [&] { return tag + ": d_r > n-t+r at r=" + std::to_string(r); });
    report.check(ghw_via_anticodes(c, guards).values == w.values, [&] { return tag + ": anticode path differs"; });
    report.check(ghw_bruteforce(c, guards).values == w.values, [&] { return tag + ": oracle differs"; });
  }
  report.counts["hamming codes"] = static_cast<std::uint64_t>(samples);
  return report;
}

Report propr_gabidulin(std::uint32_t p, std::uint32_t e, std::size_t max_m, int samples, std::uint64_t seed,
                       const Guards& guards) {
  Report report{"propr-gabidulin"};
  std::mt19937_64 rng(seed);
  std::vector<FieldTower> towers;
  for (std::size_t m = 1; m <= max_m; ++m) towers.push_back(make_field(p, e, static_cast<std::uint32_t>(m)));
  for (int s = 0; s < samples; ++s) {
    const FieldTower& tower = towers[pick_in(rng, 0, towers.size() - 1)];
    const std::size_t k = pick_in(rng, 1, tower.m()), t = pick_in(rng, 1, k);
    const GabidulinCode c(tower, random_subspace(tower.top(), k, t, rng));
    const auto w = generalized_rank_weights(c, guards);
    const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(tower.m()) + " t=" +
                            std::to_string(t) + " code " + show(w.values);
    const int ki = static_cast<int>(k), ti = static_cast<int>(t);
    report.check(w.weight(1) == static_cast<int>(vector_min_rank(tower, c.space(), guards)),
                 [&] { return tag + ": m_1 != minrk"; });
    report.check(w.weight(t) <= ki, [&] { return tag + ": m_t > k"; });
    for (int r = 1; r < ti; ++r) report.check(w.weight(r) < w.weight(r + 1), [&] { return tag + ": not increasing"; });
    for (int r = 1; r <= ti; ++r)
      report.check(w.weight(r) <= ki - ti + r, [&] { return tag + ": m_r > k-t+r at r=" + std::to_string(r); });
    report.check(generalized_rank_weights_via_anticodes(c, guards).values == w.values,
                 [&] { return tag + ": anticode path differs"; });
    const auto drops = worst_case_drops(c, guards);
    const std::set<int> weights(w.values.begin(), w.values.end());
    report.check(std::set<int>(drops.begin(), drops.end()) == weights,
                 [&] { return tag + ": security drops " + show(drops) + " differ from the weights"; });
    report.check(grw_bruteforce(c, guards).values == w.values, [&] { return tag + ": oracle differs"; });
  }
  report.counts["gabidulin codes"] = static_cast<std::uint64_t>(samples);
  return report;
}

Report propr_delsarte(const FieldPtr& field, std::size_t k, std::size_t m, int samples, std::uint64_t seed,
                      const Guards& guards) {
  Report report{"propr-delsarte"};
  std::mt19937_64 rng(seed);
  const AnticodeCatalog& catalog = catalog_for(field, k, m, guards);
  const int ki = static_cast<int>(k), mi = static_cast<int>(m);
  for (int s = 0; s < samples; ++s) {
    const std::size_t t = pick_in(rng, 1, k * m - 1);
    const DelsarteCode c(k, m, random_subspace(field, k * m, t, rng));
    const auto w = catalog.weights(c);
    const int ti = static_cast<int>(t);
    std::ostringstream tagger;
    tagger << "Mat(" << k << "x" << m << ",F_" << field->size() << ") t=" << t << " code " << show(w.values);
    const std::string tag = tagger.str();

    report.check(w.weight(1) == static_cast<int>(delsarte_min_rank(c.space(), k, m, guards)),
                 [&] { return tag + ": a_1 != minrk"; });
    const auto why = delsarte_profile_violation(w.values, ki, mi);
    report.check(!why, [&] { return tag + ": " + why.value_or(""); });

    const auto dual = catalog.weights(delsarte_dual(c));
    for (int p = 1; p <= mi; ++p)
      for (int i = 0; p + i * mi <= ki * mi - ti; ++i)
        for (int idx = p + ti; idx >= 1; idx -= mi)
          if (idx <= ti)
            report.check(dual.weight(p + i * mi) != ki + 1 - w.weight(idx),
                         [&] { return tag + ": dual weight collides with a reflected weight"; });

    report.check(is_optimal_delsarte_anticode(c, guards) == is_optimal_delsarte_anticode(delsarte_dual(c), guards),
                 [&] { return tag + ": anticode property not preserved by duality"; });
    if (k == m)
      report.check(catalog.weights(transpose_code(c)).values == w.values,
                   [&] { return tag + ": transpose changes the weights"; });
    const auto moved = transform_code(random_invertible(field, k, rng), c, random_invertible(field, m, rng));
    report.check(catalog.weights(moved).values == w.values, [&] { return tag + ": A C B changes the weights"; });
    report.check(dgw_bruteforce(c, guards).values == w.values, [&] { return tag + ": oracle differs"; });
  }
  std::ostringstream key;
  key << "delsarte codes Mat(" << k << "x" << m << ",F_" << field->size() << ")";
  report.counts[key.str()] = static_cast<std::uint64_t>(samples);
  return report;
}

Report verify_finer(std::uint32_t p, std::uint32_t e, std::size_t max_m, int samples, std::uint64_t seed,
                    const Guards& guards) {
  Report report{"finer"};
  std::mt19937_64 rng(seed);
  std::vector<FieldTower> towers;
  for (std::size_t m = 1; m <= max_m; ++m) towers.push_back(make_field(p, e, static_cast<std::uint32_t>(m)));
  for (int s = 0; s < samples; ++s) {
    const FieldTower& tower = towers[pick_in(rng, 0, towers.size() - 1)];
    const std::size_t k = pick_in(rng, 1, tower.m()), t = pick_in(rng, 1, k);
    const GabidulinCode c(tower, random_subspace(tower.top(), k, t, rng));
    const auto g = polynomial_basis(tower);
    std::vector<Elem> f(tower.m());
    do {
      for (auto& x : f) x = static_cast<Elem>(pick_in(rng, 0, tower.top()->size() - 1));
    } while ((tower.m() > 1 && f == g) || !is_invertible(coordinate_matrix(tower, f)) ||
             (tower.m() == 1 && tower.top()->size() > 2 && f == g));
    const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(tower.m()) + " t=" + std::to_string(t);

    const auto by_g = finer_check(c, g, rng(), 2, guards);
    const auto by_f = finer_check(c, f, rng(), 2, guards);
    for (const auto* r : {&by_g, &by_f}) {
      report.check(r->passed, [&] { return tag + ": " + r->violations.front(); });
    }
    report.check(by_g.delsarte_weights.values == by_f.delsarte_weights.values,
                 [&] { return tag + ": Delsarte weights depend on the basis"; });
    const auto assoc_g = associate(c, g), assoc_f = associate(c, f);
    report.check(assoc_f.space() == right_mul_code(assoc_g.space(), change_of_basis(tower, g, f)),
                 [&] { return tag + ": basis change is not right multiplication"; });
    report.check(dgw_bruteforce(assoc_g, guards).values == by_g.delsarte_weights.values,
                 [&] { return tag + ": oracle differs"; });
  }
  report.counts["gabidulin codes"] = static_cast<std::uint64_t>(samples);
  return report;
}

Report verify_duality(const FieldPtr& field, std::size_t k, std::size_t m, int samples, std::uint64_t seed,
                      const Guards& guards) {
  Report report{"duality"};
  std::mt19937_64 rng(seed);
  const AnticodeCatalog& catalog = catalog_for(field, k, m, guards);
  for (int s = 0; s < samples; ++s) {
    const std::size_t t = pick_in(rng, 1, k * m - 1);
    const DelsarteCode c(k, m, random_subspace(field, k * m, t, rng));
    const DelsarteCode d = delsarte_dual(c);
    const auto w = catalog.weights(c), wd = catalog.weights(d);
    const std::string tag = "t=" + std::to_string(t) + " code " + show(w.values);
    report.check(d.dim() == k * m - t, [&] { return tag + ": dual has the wrong dimension"; });
    report.check(delsarte_dual(d) == c, [&] { return tag + ": double dual differs"; });
    for (const auto& x : c.generators())
      for (const auto& y : d.generators())
        report.check(trace_product(x, y) == 0, [&] { return tag + ": dual is not trace-orthogonal"; });
    std::vector<int> predicted;
    try {
      predicted = dual_weights_from_weights(w.values, static_cast<int>(k), static_cast<int>(m),
                                            static_cast<int>(t))
                      .values;
    } catch (const std::invalid_argument& err) {
      report.check(false, [&] { return tag + ": reconstruction rejected the profile: " + err.what(); });
      continue;
    }
    report.check(predicted == wd.values,
                 [&] { return tag + ": reconstructed " + show(predicted) + ", computed " + show(wd.values); });
  }
  report.counts["delsarte codes"] = static_cast<std::uint64_t>(samples);
  return report;
}

Report verify_wei(const FieldPtr& field, std::size_t max_n, int samples, std::uint64_t seed, const Guards& guards) {
  Report report{"wei"};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const std::size_t n = pick_in(rng, 2, std::max<std::size_t>(2, max_n)), t = pick_in(rng, 1, n - 1);
    const LinearCode c(random_subspace(field, n, t, rng));
    const LinearCode d(dual_subspace(c.space()));
    const auto w = ghw_bruteforce(c, guards), wd = ghw_bruteforce(d, guards);
    std::set<int> expected;
    for (int x = 1; x <= static_cast<int>(n); ++x) expected.insert(x);
    for (int v : w.values) expected.erase(static_cast<int>(n) + 1 - v);
    const std::set<int> got(wd.values.begin(), wd.values.end());
    report.check(got == expected && wd.size() == got.size(), [&] {
      return "[" + std::to_string(n) + "," + std::to_string(t) + "] code " + show(w.values) + ": dual weights " +
             show(wd.values) + ", expected " + show(as_vector(expected));
    });
  }
  report.counts["hamming codes"] = static_cast<std::uint64_t>(samples);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"casino", "dan", "paz", "propr", "finer", "duality", "wei"};
  return names;
}

Report run_suite(const std::string& name, const SuiteParams& params) {
  const std::uint32_t p = params.p.value_or(2), e = params.e.value_or(1);
  const bool custom = params.p || params.k || params.m;
  auto base = [](std::uint32_t bp, std::uint32_t be) { return make_field(bp, be, 1).base(); };
  auto samples = [&](int fallback) { return params.samples.value_or(fallback); };
  const Guards& g = params.guards;
  Report report{name};

  if (name == "casino") {
    if (custom) {
      report.merge(verify_casino(make_field(p, e, static_cast<std::uint32_t>(params.m.value_or(2))),
                                 params.k.value_or(2), g));
    } else {
      report.merge(verify_casino(make_field(2, 1, 2), 2, g));
      report.merge(verify_casino(make_field(2, 1, 3), 2, g));
      report.merge(verify_casino(make_field(3, 1, 2), 2, g));
    }
  } else if (name == "dan" || name == "paz") {
    auto one = [&](const FieldPtr& f, std::size_t k, std::size_t m) {
      report.merge(name == "dan" ? verify_dan(f, k, m, g) : verify_paz_all(f, k, m, g));
    };
    if (custom) {
      one(base(p, e), params.k.value_or(2), params.m.value_or(2));
    } else {
      one(base(2, 1), 2, 2);
      one(base(2, 1), 2, 3);
      one(base(3, 1), 2, 2);
      one(base(2, 1), 3, 3);
    }
  } else if (name == "propr") {
    if (custom) {
      report.merge(propr_delsarte(base(p, e), params.k.value_or(2), params.m.value_or(3), samples(50), params.seed, g));
    } else {
      report.merge(propr_hamming(base(3, 1), 6, samples(100), params.seed, g));
      report.merge(propr_gabidulin(2, 1, 3, samples(50), params.seed + 1, g));
      report.merge(propr_delsarte(base(2, 1), 3, 3, samples(50), params.seed + 2, g));
      report.merge(propr_delsarte(base(3, 1), 2, 3, samples(50), params.seed + 3, g));
    }
  } else if (name == "finer") {
    report.merge(verify_finer(p, e, params.m.value_or(3), samples(25), params.seed, g));
  } else if (name == "duality") {
    report.merge(verify_duality(base(p, e), params.k.value_or(3), params.m.value_or(3), samples(40), params.seed, g));
  } else if (name == "wei") {
    report.merge(verify_wei(base(params.p.value_or(3), e), params.k.value_or(6), samples(50), params.seed, g));
  } else {
    throw InputError("unknown suite '" + name + "'");
  }
  report.suite = name;
  return report;
}

std::vector<std::vector<int>> SearchResult::missing() const {
  std::vector<std::vector<int>> out;
  for (const auto& t : targets)
    if (!found.contains(t) && std::find(unfindable.begin(), unfindable.end(), t) == unfindable.end())
      out.push_back(t);
  return out;
}

SearchResult search_profiles(const FieldPtr& field, std::size_t k, std::size_t m, std::size_t t,
                             const std::vector<std::vector<int>>& targets, const SearchOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

  if (t == 0 || t > k * m) throw InputError("search dimension t must lie in [1, km]");
  SearchResult result;
  result.targets = targets;
  std::set<std::vector<int>> pending;
  for (const auto& target : targets) {
    if (target.size() != t || delsarte_profile_violation(target, static_cast<int>(k), static_cast<int>(m)))
      result.unfindable.push_back(target);
    else
      pending.insert(target);
  }

  const Guards& guards = options.guards;
  const AnticodeCatalog& catalog = catalog_for(field, k, m, guards);
  const std::uint64_t total = gaussian_binomial(k * m, t, field->size());
  result.exhaustive = total <= guards.max_subspaces;
  result.total = result.exhaustive ? total : 0;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk);

  auto record = [&](std::uint64_t index, const Subspace& code, std::vector<int> profile) {
    ++result.histogram[profile];
    if (pending.erase(profile)) result.found[profile] = Witness{profile, index, code};
  };
  auto keep_going = [&] {
    if (options.stop_when_found && pending.empty()) return false;
    if (elapsed() >= guards.budget_secs) {
      result.budget_exhausted = true;
      return false;
    }
    return true;
  };

  if (result.exhaustive) {
    const SubspaceEnumerator codes(field, k * m, t, guards);
    for (std::uint64_t begin = 0; begin < total && keep_going(); begin += chunk) {
      const std::uint64_t n = std::min(chunk, total - begin);
      const auto profiles = kernels::map<std::vector<int>>(
          n, [&](std::uint64_t i) { return catalog.weights(DelsarteCode(k, m, codes.at(begin + i))).values; });
      for (std::uint64_t i = 0; i < n; ++i) {
        if (pending.contains(profiles[i])) record(begin + i, codes.at(begin + i), profiles[i]);
        else ++result.histogram[profiles[i]];
      }
      result.examined += n;
    }
  } else {
    // Sample i is drawn from its own seeded stream, so results do not depend
    // on chunking or thread count; repeated codes are skipped.
    std::unordered_set<Subspace, SubspaceHash> seen;
    std::uint64_t next = 0;
    while (next < guards.max_subspaces && keep_going()) {
      std::vector<std::pair<std::uint64_t, Subspace>> batch;
      for (; batch.size() < chunk && next < guards.max_subspaces; ++next) {
        std::seed_seq seq{options.seed, next};
        std::mt19937_64 rng(seq);
        Subspace code = random_subspace(field, k * m, t, rng);
        if (seen.insert(code).second) batch.emplace_back(next, std::move(code));
      }
      const auto profiles = kernels::map<std::vector<int>>(
          batch.size(), [&](std::uint64_t i) { return catalog.weights(DelsarteCode(k, m, batch[i].second)).values; });
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (pending.contains(profiles[i])) record(batch[i].first, batch[i].second, profiles[i]);
        else ++result.histogram[profiles[i]];
      }
      result.examined += batch.size();
    }
  }
  result.elapsed_secs = elapsed();
  return result;
}

}  // namespace gw::oracle
