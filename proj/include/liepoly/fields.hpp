// Copyright 2026 The liepoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIEPOLY_FIELDS_HPP
#define LIEPOLY_FIELDS_HPP

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace liepoly {

/// Largest extension degree over the prime field that FieldElem can hold.
/// GF(16^6) = GF(2^24) is the widest field the scans touch.
inline constexpr unsigned kMaxExtDegree = 24;

class FieldCtx;

/// An element of GF(p^m): coordinates over F_p in the power basis of the
/// context's modulus, lowest degree first.
class FieldElem {
 public:
  FieldElem() = default;

  const FieldCtx* ctx() const { return ctx_; }
  std::uint32_t coeff(unsigned i) const { return c_[i]; }
  std::span<const std::uint32_t> coeffs() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

 private:
  friend class FieldCtx;
  const FieldCtx* ctx_ = nullptr;
  std::array<std::uint32_t, kMaxExtDegree> c_{};
};

/// Contexts are interned: field_make hands out references that stay valid
/// for the life of the process, and elements point back at them.
class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t order() const { return order_; }
  /// m + 1 coefficients, lowest first; the last is 1.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// The class of x, i.e. a root of the modulus.
  FieldElem x() const;

  /// Enumeration in coeffs-lex order (c0 most significant): element(0) = 0
  /// and element(i) < element(j) iff i < j.
  FieldElem element(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;

  /// Prime divisors of order() - 1.
  const std::vector<std::uint64_t>& group_order_primes() const;
  /// Smallest multiplicative generator in enumeration order.
  const FieldElem& smallest_generator() const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(const FieldElem& a) const;
  /// Smallest non-square in enumeration order (odd p only).
  const FieldElem& smallest_non_square() const;

  bool is_square(const FieldElem& a) const;
  /// A square root of a square, or nullopt.
  std::optional<FieldElem> sqrt(const FieldElem& a) const;

  std::string describe() const;

 private:
  friend const FieldCtx& field_make(std::uint64_t p, unsigned m);
  FieldCtx(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

  void check(const FieldElem& a) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> neg_tail_;  // (p - modulus[i]) % p for i < m

  mutable std::once_flag primes_once_;
  mutable std::vector<std::uint64_t> group_order_primes_;
  mutable std::once_flag generator_once_;
  mutable FieldElem generator_;
  mutable std::once_flag non_square_once_;
  mutable FieldElem non_square_;
};

/// GF(p^m) with the lexicographically smallest monic irreducible modulus of
/// degree m (coefficients compared lowest degree first). m = 1 uses modulus x.
const FieldCtx& field_make(std::uint64_t p, unsigned m);
/// Same, from a prime power q.
const FieldCtx& field_of_order(std::uint64_t q);

/// Cached embedding GF(p^m) -> GF(p^M), m | M. When M/m is prime the
/// generator goes to the smallest root of the subfield modulus; otherwise the
/// map factors through GF(p^(m*l)) for the smallest prime l | M/m, so the
/// chains F_q -> F_q^2 -> F_q^4 and F_q -> F_q^4 agree.
class Embedding {
 public:
  Embedding(const FieldCtx& sub, const FieldCtx& sup, const FieldElem& image_of_x);

  const FieldCtx& sub() const { return *sub_; }
  const FieldCtx& sup() const { return *sup_; }
  FieldElem apply(const FieldElem& a) const;
  /// Inverse image, or nullopt when b is outside the embedded subfield.
  std::optional<FieldElem> preimage(const FieldElem& b) const;

 private:
  const FieldCtx* sub_;
  const FieldCtx* sup_;
  std::vector<FieldElem> basis_images_;          // images of x^0..x^(m-1)
  std::vector<std::vector<std::uint32_t>> left_inverse_;  // m rows of length M
};

const Embedding& embedding(const FieldCtx& sub, const FieldCtx& sup);
FieldElem embed(const FieldElem& a, const FieldCtx& sub, const FieldCtx& sup);

/// Deterministic element of exact multiplicative order n, n | order() - 1:
/// smallest_generator()^((order() - 1) / n).
FieldElem element_of_order(const FieldCtx& ctx, std::uint64_t n);

/// All roots, with multiplicity and sorted in enumeration order, of the monic
/// polynomial whose coefficients (lowest first, leading 1 included) are
/// given. Degree must be 2 or 3 and the polynomial must split in ctx.
std::vector<FieldElem> roots_monic(std::span<const FieldElem> coeffs, const FieldCtx& ctx);

/// Sort key matching FieldCtx::element order.
bool enum_less(const FieldElem& a, const FieldElem& b);

/// "c0" for prime fields, "c0;c1;...;c(m-1)" otherwise.
std::string to_string(const FieldElem& a);
nlohmann::json to_json(const FieldElem& a);
nlohmann::json to_json(const FieldCtx& ctx);

}  // namespace liepoly

#endif  // LIEPOLY_FIELDS_HPP
