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

#include "liepoly/lidl_wells.hpp"

#include "liepoly/error.hpp"

namespace liepoly {

FieldMatrix matrix_mul(const FieldMatrix& a, const FieldMatrix& b, const FieldCtx& ctx) {
  const std::size_t n = a.size();
  FieldMatrix r(n, std::vector<FieldElem>(n, ctx.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

FieldMatrix matrix_pow(const FieldMatrix& a, std::uint64_t e, const FieldCtx& ctx) {
  const std::size_t n = a.size();
  FieldMatrix result(n, std::vector<FieldElem>(n, ctx.zero()));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = ctx.one();
  FieldMatrix base = a;
  while (e != 0) {
    if (e & 1U) result = matrix_mul(result, base, ctx);
    e >>= 1U;
    if (e != 0) base = matrix_mul(base, base, ctx);
  }
  return result;
}

std::vector<FieldElem> charpoly(const FieldMatrix& a, const FieldCtx& ctx) {
  const std::size_t n = a.size();
  if (n == 0) return {ctx.one()};
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("charpoly needs a square matrix");
  }
  std::vector<FieldElem> vect = {ctx.one(), -a[0][0]};
  for (std::size_t i = 1; i < n; ++i) {
    // Bordering step: leading block M = a[0..i)[0..i), row R, column C.
    std::vector<FieldElem> q = {ctx.one(), -a[i][i]};
    std::vector<FieldElem> mc(i);  // M^j C, starting at j = 0
    for (std::size_t r = 0; r < i; ++r) mc[r] = a[r][i];
    for (std::size_t j = 0; j < i; ++j) {
      FieldElem dot = ctx.zero();
      for (std::size_t c = 0; c < i; ++c) dot += a[i][c] * mc[c];
      q.push_back(-dot);
      std::vector<FieldElem> next(i, ctx.zero());
      for (std::size_t r = 0; r < i; ++r) {
        for (std::size_t c = 0; c < i; ++c) next[r] += a[r][c] * mc[c];
      }
      mc = std::move(next);
    }
    std::vector<FieldElem> out(i + 2, ctx.zero());
    for (std::size_t j = 0; j < i + 2; ++j) {
      for (std::size_t l = 0; l <= std::min(j, i); ++l) out[j] += q[j - l] * vect[l];
    }
    vect = std::move(out);
  }
  return vect;
}

FieldMatrix companion(std::span<const FieldElem> x, const FieldElem& b, const FieldCtx& ctx) {
  const std::size_t n = x.size() + 1;
  FieldMatrix m(n, std::vector<FieldElem>(n, ctx.zero()));
  for (std::size_t i = 1; i < n; ++i) m[i][i - 1] = ctx.one();
  // Last column: -(b, x_n, ..., x_1) from the top.
  m[0][n - 1] = -b;
  for (std::size_t i = 1; i < n; ++i) m[i][n - 1] = -x[n - 1 - i];
  return m;
}

std::vector<FieldElem> lw_eval(unsigned n, unsigned k, std::int64_t b, std::span<const FieldElem> x,
                               const FieldCtx& ctx) {
  if (n < 1) throw InvalidInput("g(n, k, b) needs n >= 1");
  if (x.size() != n) throw InvalidInput("point has the wrong number of coordinates");
  for (const auto& c : x) {
    if (c.ctx() != &ctx) throw InvalidInput("point is not in " + ctx.describe());
  }
  const FieldElem bf = ctx.from_int(b);
  const auto poly = charpoly(matrix_pow(companion(x, bf, ctx), k, ctx), ctx);
  const bool negative = ((n + 1) * (k + 1)) % 2 == 1;
  FieldElem expected = bf.pow(k);
  if (negative) expected = -expected;
  if (!(poly[n + 1] == expected)) {
    throw InvariantViolation("constant term of the power polynomial is not (-1)^((n+1)(k+1)) b^k");
  }
  return {poly.begin() + 1, poly.begin() + 1 + n};
}

}  // namespace liepoly
