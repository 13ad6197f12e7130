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

#include "liepoly/field_poly.hpp"

#include <algorithm>
#include <random>

#include "liepoly/error.hpp"
#include "liepoly/numtheory.hpp"

namespace liepoly {

FieldPoly::FieldPoly(const FieldCtx& ctx) : ctx_(&ctx) {}

FieldPoly::FieldPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.ctx() != ctx_) throw InvalidInput("polynomial coefficient from a different field");
  }
  trim();
}

FieldPoly FieldPoly::x(const FieldCtx& ctx) { return FieldPoly(ctx, {ctx.zero(), ctx.one()}); }

FieldPoly FieldPoly::constant(const FieldElem& c) { return FieldPoly(*c.ctx(), {c}); }

void FieldPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  const FieldElem inv = lead().inv();
  FieldPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

FieldElem FieldPoly::eval(const FieldElem& x) const {
  FieldElem acc = ctx_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r = a.c_.size() >= b.c_.size() ? a : b;
  const FieldPoly& s = a.c_.size() >= b.c_.size() ? b : a;
  for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] += s.c_[i];
  r.trim();
  return r;
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r = a;
  if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), a.ctx_->zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r(*a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.ctx_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const FieldCtx& ctx = a.ctx();
  std::vector<FieldElem> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {FieldPoly(ctx), a};
  std::vector<FieldElem> quot(static_cast<std::size_t>(a.degree() - db + 1), ctx.zero());
  const FieldElem lead_inv = b.lead().inv();
  for (int d = a.degree(); d >= db; --d) {
    const FieldElem c = rem[d] * lead_inv;
    if (c.is_zero()) continue;
    quot[d - db] = c;
    for (int j = 0; j <= db; ++j) rem[d - db + j] -= c * b.coeff(j);
  }
  return {FieldPoly(ctx, std::move(quot)), FieldPoly(ctx, std::move(rem))};
}

FieldPoly operator%(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).second; }

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r0 = a;
  FieldPoly r1 = b;
  while (!r1.is_zero()) {
    FieldPoly t = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(t);
  }
  return r0.monic();
}

FieldPoly powmod(const FieldPoly& base, std::uint64_t e, const FieldPoly& mod) {
  FieldPoly result = FieldPoly::constant(base.ctx().one()) % mod;
  FieldPoly b = base % mod;
  while (e != 0) {
    if (e & 1U) result = result * b % mod;
    e >>= 1U;
    if (e != 0) b = b * b % mod;
  }
  return result;
}

namespace {

// Splits a squarefree product of distinct linear factors (Cantor-Zassenhaus).
void split_linear(const FieldPoly& g, std::mt19937_64& rng, std::vector<FieldElem>& out) {
  const FieldCtx& ctx = g.ctx();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    FieldPoly m = g.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  const std::uint64_t q = ctx.order();
  for (;;) {
    FieldElem a = ctx.element(rng() % q);
    FieldPoly h(ctx);
    if (ctx.p() == 2) {
      // Absolute trace of a*x.
      FieldPoly ax = FieldPoly(ctx, {ctx.zero(), a}) % g;
      FieldPoly term = ax;
      h = ax;
      for (unsigned i = 1; i < ctx.m(); ++i) {
        term = term * term % g;
        h = h + term;
      }
    } else {
      FieldPoly lin(ctx, {a, ctx.one()});
      h = powmod(lin, (q - 1) / 2, g) - FieldPoly::constant(ctx.one());
    }
    FieldPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElem> distinct_roots(const FieldPoly& f) {
  if (f.is_zero()) throw InvalidInput("the zero polynomial has every element as a root");
  const FieldCtx& ctx = f.ctx();
  std::vector<FieldElem> out;
  if (f.degree() <= 0) return out;
  FieldPoly fm = f.monic();
  FieldPoly xq = powmod(FieldPoly::x(ctx), ctx.order(), fm);
  FieldPoly g = gcd(fm, xq - FieldPoly::x(ctx));
  std::mt19937_64 rng(0x5eed5eedULL);
  split_linear(g, rng, out);
  return out;
}

bool is_irreducible(const FieldPoly& f) {
  const FieldCtx& ctx = f.ctx();
  if (ctx.m() != 1) throw InvalidInput("irreducibility test needs a prime field");
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  FieldPoly fm = f.monic();
  const FieldPoly x = FieldPoly::x(ctx);
  // frob[i] = x^(p^i) mod f
  std::vector<FieldPoly> frob{x % fm};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), ctx.p(), fm));
  if (!(frob[n] == x % fm)) return false;
  for (std::uint64_t l : nt::prime_divisors(static_cast<std::uint64_t>(n))) {
    FieldPoly g = gcd(fm, frob[n / l] - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<FieldElem> roots_monic(std::span<const FieldElem> coeffs, const FieldCtx& ctx) {
  if (coeffs.size() != 3 && coeffs.size() != 4) throw InvalidInput("roots_monic expects degree 2 or 3");
  for (const auto& c : coeffs) {
    if (c.ctx() != &ctx) throw InvalidInput("coefficient from a different field");
  }
  if (!coeffs.back().is_one()) throw InvalidInput("polynomial is not monic");
  const std::size_t degree = coeffs.size() - 1;
  std::vector<FieldElem> roots;

  if (degree == 2 && ctx.p() != 2) {
    // x^2 + b x + c: (-b +- sqrt(b^2 - 4c)) / 2
    const FieldElem& b = coeffs[1];
    const FieldElem& c = coeffs[0];
    auto s = ctx.sqrt(b * b - ctx.from_int(4) * c);
    if (!s) throw InvalidInput("polynomial does not split over " + ctx.describe());
    const FieldElem half = ctx.from_int(2).inv();
    roots = {(*s - b) * half, (-*s - b) * half};
  } else {
    FieldPoly f(ctx, std::vector<FieldElem>(coeffs.begin(), coeffs.end()));
    std::vector<FieldElem> distinct;
    if (ctx.order() <= 64) {
      for (std::uint64_t i = 0; i < ctx.order(); ++i) {
        FieldElem e = ctx.element(i);
        if (f.eval(e).is_zero()) distinct.push_back(e);
      }
    } else {
      distinct = distinct_roots(f);
    }
    for (const auto& r : distinct) {
      const FieldPoly lin(ctx, {-r, ctx.one()});
      while (f.degree() >= 1 && f.eval(r).is_zero()) {
        f = divmod(f, lin).first;
        roots.push_back(r);
      }
    }
    if (roots.size() != degree) throw InvalidInput("polynomial does not split over " + ctx.describe());
  }
  std::sort(roots.begin(), roots.end(), enum_less);
  return roots;
}

}  // namespace liepoly
