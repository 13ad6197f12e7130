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

#ifndef LIEPOLY_FIELD_POLY_HPP
#define LIEPOLY_FIELD_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "liepoly/fields.hpp"

namespace liepoly {

/// Dense univariate polynomial over a finite field, lowest degree first.
class FieldPoly {
 public:
  explicit FieldPoly(const FieldCtx& ctx);
  FieldPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);

  static FieldPoly x(const FieldCtx& ctx);
  static FieldPoly constant(const FieldElem& c);

  const FieldCtx& ctx() const { return *ctx_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const FieldElem& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const FieldElem& lead() const { return c_.back(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  FieldPoly monic() const;
  FieldElem eval(const FieldElem& x) const;

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b);

 private:
  void trim();

  const FieldCtx* ctx_;
  std::vector<FieldElem> c_;
};

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
FieldPoly operator%(const FieldPoly& a, const FieldPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);
FieldPoly powmod(const FieldPoly& base, std::uint64_t e, const FieldPoly& mod);

/// Distinct roots in ctx of a nonzero polynomial, unsorted.
std::vector<FieldElem> distinct_roots(const FieldPoly& f);

/// Rabin's test over the prime field F_p (f's ctx must have m = 1).
bool is_irreducible(const FieldPoly& f);

}  // namespace liepoly

#endif  // LIEPOLY_FIELD_POLY_HPP
