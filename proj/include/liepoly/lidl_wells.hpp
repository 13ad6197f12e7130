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

#ifndef LIEPOLY_LIDL_WELLS_HPP
#define LIEPOLY_LIDL_WELLS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "liepoly/fields.hpp"

namespace liepoly {

using FieldMatrix = std::vector<std::vector<FieldElem>>;

/// det(tI - A) by Berkowitz's division-free recursion, highest degree first
/// (so the leading entry is 1).
std::vector<FieldElem> charpoly(const FieldMatrix& a, const FieldCtx& ctx);

FieldMatrix matrix_mul(const FieldMatrix& a, const FieldMatrix& b, const FieldCtx& ctx);
FieldMatrix matrix_pow(const FieldMatrix& a, std::uint64_t e, const FieldCtx& ctx);

/// Companion matrix of t^(n+1) + x1 t^n + ... + xn t + b.
FieldMatrix companion(std::span<const FieldElem> x, const FieldElem& b, const FieldCtx& ctx);

/// g(n, k, b) at x: the coefficients x~1..x~n of the monic polynomial whose
/// roots are the k-th powers of the roots of t^(n+1) + x1 t^n + ... + b.
/// Throws InvariantViolation unless its constant term is
/// (-1)^((n+1)(k+1)) b^k.
std::vector<FieldElem> lw_eval(unsigned n, unsigned k, std::int64_t b, std::span<const FieldElem> x,
                               const FieldCtx& ctx);

}  // namespace liepoly

#endif  // LIEPOLY_LIDL_WELLS_HPP
