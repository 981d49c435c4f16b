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

#include "gwcodes/field.hpp"

#include <stdexcept>
#include <string>

#include "gwcodes/errors.hpp"

namespace gw {

namespace {

constexpr std::uint32_t kMaxTabledSize = 1024;

using Poly = std::vector<Elem>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over k; b must be nonzero.
Poly poly_rem(const GaloisField& k, Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Elem lead_inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = k.sub(a[shift + j], k.mul(c, b[j]));
    trim(a);
  }
  return a;
}

}  // namespace

FieldPtr GaloisField::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  std::shared_ptr<GaloisField> f(new GaloisField());
  f->p_ = p;
  f->size_ = p;
  f->degree_ = 1;
  f->build_tables();
  return f;
}

FieldPtr GaloisField::extension(FieldPtr base, std::vector<Elem> modulus) {
  if (!base) throw std::invalid_argument("extension of a null field");
  trim(modulus);
  if (modulus.size() < 2) throw std::invalid_argument("extension modulus must have degree >= 1");
  for (Elem c : modulus)
    if (!base->contains(c)) throw std::invalid_argument("modulus coefficient outside the base field");
  if (modulus.back() != 1) {
    const Elem lead_inv = base->inv(modulus.back());
    for (Elem& c : modulus) c = base->mul(c, lead_inv);
  }
  if (!is_irreducible(*base, modulus)) throw std::invalid_argument("extension modulus is not irreducible");
  const std::uint32_t degree = static_cast<std::uint32_t>(modulus.size() - 1);
  const std::uint64_t size = checked_pow(base->size(), degree);
  if (size > (std::uint64_t{1} << 31)) throw std::invalid_argument("field too large");

  std::shared_ptr<GaloisField> f(new GaloisField());
  f->p_ = base->characteristic();
  f->size_ = static_cast<std::uint32_t>(size);
  f->degree_ = degree;
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

void GaloisField::build_tables() {
  if (size_ > kMaxTabledSize) return;
  const std::size_t n = size_;
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  for (Elem a = 0; a < size_; ++a) {
    neg_[a] = static_cast<std::uint16_t>(neg_slow(a));
    for (Elem b = 0; b < size_; ++b) {
      add_[idx(a, b)] = static_cast<std::uint16_t>(add_slow(a, b));
      mul_[idx(a, b)] = static_cast<std::uint16_t>(mul_slow(a, b));
    }
  }
  for (Elem a = 1; a < size_; ++a)
    for (Elem b = 1; b < size_; ++b)
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
  tabled_ = true;
}

Elem GaloisField::add_slow(Elem a, Elem b) const noexcept {
  if (is_prime()) return (a + b) % p_;
  const Elem bs = base_->size();
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    out += base_->add(a % bs, b % bs) * scale;
    a /= bs;
    b /= bs;
    scale *= bs;
  }
  return out;
}

Elem GaloisField::neg_slow(Elem a) const noexcept {
  if (is_prime()) return (p_ - a % p_) % p_;
  const Elem bs = base_->size();
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    out += base_->neg(a % bs) * scale;
    a /= bs;
    scale *= bs;
  }
  return out;
}

Elem GaloisField::mul_slow(Elem a, Elem b) const noexcept {
  if (is_prime()) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  const GaloisField& k = *base_;
  const std::uint32_t d = degree_;
  Poly x = coefficients(a), y = coefficients(b);
  Poly prod(2 * d - 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) prod[i + j] = k.add(prod[i + j], k.mul(x[i], y[j]));
  }
  // modulus is monic
  for (std::size_t i = prod.size(); i-- > d;) {
    const Elem c = prod[i];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j <= d; ++j) prod[i - d + j] = k.sub(prod[i - d + j], k.mul(c, modulus_[j]));
  }
  prod.resize(d);
  return from_coefficients(prod);
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (tabled_) return inv_[a];
  return pow(a, size_ - 2);
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<Elem> GaloisField::coefficients(Elem a) const {
  if (is_prime()) return {a};
  const Elem bs = base_->size();
  std::vector<Elem> out(degree_);
  for (auto& c : out) {
    c = a % bs;
    a /= bs;
  }
  return out;
}

Elem GaloisField::from_coefficients(std::span<const Elem> coeffs) const {
  if (is_prime()) {
    if (coeffs.size() != 1 || coeffs[0] >= p_) throw std::invalid_argument("bad prime-field coefficient");
    return coeffs[0];
  }
  if (coeffs.size() != degree_) throw std::invalid_argument("coefficient tuple has the wrong length");
  const Elem bs = base_->size();
  Elem out = 0, scale = 1;
  for (Elem c : coeffs) {
    if (c >= bs) throw std::invalid_argument("coefficient outside the base field");
    out += c * scale;
    scale *= bs;
  }
  return out;
}

bool operator==(const GaloisField& a, const GaloisField& b) {
  if (&a == &b) return true;
  if (a.p_ != b.p_ || a.size_ != b.size_ || a.modulus_ != b.modulus_) return false;
  if (a.is_prime() || b.is_prime()) return a.is_prime() && b.is_prime();
  return *a.base_ == *b.base_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool is_prime_number(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const GaloisField& k, std::span<const Elem> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // every monic divisor candidate of degree 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = checked_pow(k.size(), d);
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<Elem>(c % k.size());
        c /= k.size();
      }
      if (poly_rem(k, f, divisor).empty()) return false;
    }
  }
  return true;
}

std::vector<Elem> smallest_irreducible(const GaloisField& k, std::uint32_t degree) {
  if (degree == 0) throw std::invalid_argument("irreducible polynomial of degree 0");
  const std::uint64_t count = checked_pow(k.size(), degree);
  Poly poly(degree + 1, 0);
  poly[degree] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < degree; ++i) {
      poly[i] = static_cast<Elem>(c % k.size());
      c /= k.size();
    }
    if (is_irreducible(k, poly)) return poly;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldTower make_field(std::uint32_t p, std::uint32_t e, std::uint32_t m, std::optional<std::vector<Elem>> f,
                      std::optional<std::vector<Elem>> g) {
  if (!is_prime_number(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (e == 0 || m == 0) throw std::invalid_argument("extension degrees must be >= 1");

  FieldTower t;
  t.p_ = p;
  t.e_ = e;
  t.m_ = m;
  t.prime_ = GaloisField::prime(p);

  auto pick = [](const FieldPtr& k, std::uint32_t degree, std::optional<std::vector<Elem>>& given,
                 const char* name) -> std::vector<Elem> {
    if (degree == 1) {
      if (given && !given->empty() && given->size() != 2)
        throw std::invalid_argument(std::string(name) + " must have degree 1 or be omitted");
      return {};
    }
    if (!given || given->empty()) return smallest_irreducible(*k, degree);
    std::vector<Elem> poly = *given;
    trim(poly);
    if (poly.size() != degree + 1)
      throw std::invalid_argument(std::string(name) + " must have degree " + std::to_string(degree));
    for (Elem c : poly)
      if (!k->contains(c)) throw std::invalid_argument(std::string(name) + " has a coefficient outside its field");
    if (!is_irreducible(*k, poly)) throw std::invalid_argument(std::string(name) + " is not irreducible");
    if (poly.back() != 1) {
      const Elem lead_inv = k->inv(poly.back());
      for (Elem& c : poly) c = k->mul(c, lead_inv);
    }
    return poly;
  };

  t.f_ = pick(t.prime_, e, f, "f");
  t.base_ = e == 1 ? t.prime_ : GaloisField::extension(t.prime_, t.f_);
  t.g_ = pick(t.base_, m, g, "g");
  t.top_ = m == 1 ? t.base_ : GaloisField::extension(t.base_, t.g_);
  return t;
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("element of a null field");
  if (!field_->contains(value_)) throw std::invalid_argument("element code outside the field");
}

const FieldPtr& FieldElement::checked(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) throw std::invalid_argument("field mismatch");
  return field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {checked(o), field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {checked(o), field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {checked(o), field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {checked(o), field_->div(value_, o.value_)};
}

FieldElement frobenius(const FieldTower& tower, const FieldElement& x) {
  if (!same_field(x.field(), tower.top())) throw std::invalid_argument("frobenius: element not in the top field");
  return {tower.top(), tower.frobenius(x.value())};
}

}  // namespace gw
