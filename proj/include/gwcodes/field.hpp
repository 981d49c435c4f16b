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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace gw {

/// Packed field element: the base-b digits of the code are the coefficient
/// tuple (low degree first) over the immediate base field of size b.
using Elem = std::uint32_t;

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// A finite field, either F_p or an extension K[x]/(g) of another GaloisField K.
///
/// Instances are immutable and shared by pointer; two independently built
/// fields compare equal when they have the same base and modulus.
class GaloisField {
 public:
  static FieldPtr prime(std::uint32_t p);
  /// `modulus` holds the coefficients of a monic irreducible polynomial over
  /// `base`, low degree first, leading 1 included.
  static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_prime() const noexcept { return base_ == nullptr; }
  const FieldPtr& base() const noexcept { return base_; }
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }

  Elem add(Elem a, Elem b) const noexcept {
    return tabled_ ? add_[idx(a, b)] : add_slow(a, b);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept { return tabled_ ? neg_[a] : neg_slow(a); }
  Elem mul(Elem a, Elem b) const noexcept {
    return tabled_ ? mul_[idx(a, b)] : mul_slow(a, b);
  }
  /// Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  bool contains(Elem a) const noexcept { return a < size_; }
  std::vector<Elem> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const Elem> coeffs) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b);

 private:
  GaloisField() = default;
  void build_tables();
  std::size_t idx(Elem a, Elem b) const noexcept { return std::size_t{a} * size_ + b; }
  Elem add_slow(Elem a, Elem b) const noexcept;
  Elem neg_slow(Elem a) const noexcept;
  Elem mul_slow(Elem a, Elem b) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t degree_ = 1;
  FieldPtr base_;
  std::vector<Elem> modulus_;

  bool tabled_ = false;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

bool is_prime_number(std::uint32_t n) noexcept;

/// Trial-division irreducibility test for a polynomial over `k`
/// (coefficients low degree first; trailing zeros are ignored).
bool is_irreducible(const GaloisField& k, std::span<const Elem> poly);

/// The monic irreducible polynomial of the given degree over `k` whose
/// coefficient tuple, read as the integer sum c_i |k|^i, is smallest.
std::vector<Elem> smallest_irreducible(const GaloisField& k, std::uint32_t degree);

/// The tower F_p ⊆ F_q = F_p[x]/(f) ⊆ F_{q^m} = F_q[y]/(g).
///
/// F_q embeds in F_{q^m} as the constant polynomials in y, so an element of
/// the top field lies in F_q exactly when its code is below q.
class FieldTower {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return base_->size(); }
  /// Empty when e == 1.
  const std::vector<Elem>& f() const noexcept { return f_; }
  /// Empty when m == 1.
  const std::vector<Elem>& g() const noexcept { return g_; }

  const FieldPtr& prime_field() const noexcept { return prime_; }
  const FieldPtr& base() const noexcept { return base_; }
  const FieldPtr& top() const noexcept { return top_; }

  /// x ↦ x^q on the top field.
  Elem frobenius(Elem x) const noexcept { return top_->pow(x, q()); }
  bool in_base(Elem x) const noexcept { return x < q(); }

  friend bool operator==(const FieldTower& a, const FieldTower& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.m_ == b.m_ && a.f_ == b.f_ && a.g_ == b.g_;
  }

 private:
  friend FieldTower make_field(std::uint32_t, std::uint32_t, std::uint32_t,
                               std::optional<std::vector<Elem>>, std::optional<std::vector<Elem>>);
  std::uint32_t p_ = 0, e_ = 0, m_ = 0;
  std::vector<Elem> f_, g_;
  FieldPtr prime_, base_, top_;
};

/// Builds F_{p^e} and F_{(p^e)^m}. Omitted polynomials default to
/// smallest_irreducible. Throws std::invalid_argument on a non-prime p, a zero
/// degree, or a supplied polynomial of the wrong degree or not irreducible.
FieldTower make_field(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                      std::optional<std::vector<Elem>> f = std::nullopt,
                      std::optional<std::vector<Elem>> g = std::nullopt);

/// A field element bound to its field, for checked arithmetic at API edges.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<Elem> coefficients() const { return field_->coefficients(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && same_field(a.field_, b.field_);
  }

 private:
  const FieldPtr& checked(const FieldElement& o) const;
  FieldPtr field_;
  Elem value_;
};

/// x^q for x in the top field of `tower`.
FieldElement frobenius(const FieldTower& tower, const FieldElement& x);

}  // namespace gw
