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

#ifndef LIEPOLY_POLYCORE_HPP
#define LIEPOLY_POLYCORE_HPP

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liepoly/fields.hpp"

namespace liepoly {

using Integer = mpz_class;

inline constexpr std::size_t kMaxVars = 3;

/// Exponent vector; entries past nvars are always zero.
using Exponents = std::array<std::uint32_t, kMaxVars>;

struct Term {
  Exponents exponents{};
  Integer coeff;
};

/// Graded-lex descending: higher total degree first, ties broken by
/// lexicographic comparison with the first variable most significant.
bool grlex_before(const Exponents& a, const Exponents& b);

/// Sparse polynomial in 1..3 variables with arbitrary-precision integer
/// coefficients. Terms are kept in graded-lex descending order with no zero
/// coefficients, so two equal polynomials have identical term vectors.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 2);

  static MultiPoly constant(std::size_t nvars, const Integer& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(std::size_t nvars, const Exponents& e, const Integer& c);
  /// Merges duplicate exponents, drops zeros and sorts.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  Integer coeff(const Exponents& e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly scaled(const Integer& c) const;
  MultiPoly pow(unsigned n) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Human-readable form such as "x^2 - 2*y - 4".
  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Square polynomial mapping: arity components, each in arity variables.
class PolyMap {
 public:
  explicit PolyMap(std::vector<MultiPoly> components);

  static PolyMap identity(std::size_t arity);

  std::size_t arity() const { return components_.size(); }
  const MultiPoly& operator[](std::size_t i) const { return components_[i]; }
  std::span<const MultiPoly> components() const { return components_; }

  friend bool operator==(const PolyMap& a, const PolyMap& b) = default;

 private:
  std::vector<MultiPoly> components_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

/// Substitutes values[i] for variable i of outer. All values must share one
/// variable count, which becomes the result's.
MultiPoly poly_substitute(const MultiPoly& outer, std::span<const MultiPoly> values);
MultiPoly poly_compose(const MultiPoly& outer, const PolyMap& inner);
/// outer ∘ inner, componentwise.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Coefficients reduced into [0, p); p must be prime.
MultiPoly poly_mod_p(const MultiPoly& a, std::uint64_t p);
PolyMap poly_mod_p(const PolyMap& a, std::uint64_t p);

FieldElem poly_eval(const MultiPoly& a, std::span<const FieldElem> point, const FieldCtx& ctx);
/// Exact evaluation at an integer point.
Integer poly_eval_integer(const MultiPoly& a, std::span<const Integer> point);

/// A polynomial pre-reduced into one field for repeated evaluation.
class PolyEvaluator {
 public:
  PolyEvaluator(const MultiPoly& poly, const FieldCtx& ctx);
  FieldElem operator()(std::span<const FieldElem> point) const;

 private:
  const FieldCtx* ctx_;
  std::size_t nvars_;
  std::array<unsigned, kMaxVars> max_degree_{};
  struct Reduced {
    Exponents exponents;
    FieldElem coeff;
  };
  std::vector<Reduced> terms_;
};

/// Parses expressions like "x^2 - 2x + (-2y - 6)" over variables x, y, z.
/// Implicit multiplication between adjacent factors is accepted.
MultiPoly parse_poly(std::string_view text, std::size_t nvars);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PolyMap& m);
PolyMap polymap_from_json(const nlohmann::json& j);

}  // namespace liepoly

#endif  // LIEPOLY_POLYCORE_HPP
