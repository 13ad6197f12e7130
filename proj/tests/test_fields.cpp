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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "liepoly/error.hpp"
#include "liepoly/field_poly.hpp"
#include "liepoly/fields.hpp"
#include "oracles.hpp"

using namespace liepoly;

namespace {

oracle::Coeffs coeffs_of(const FieldElem& a, unsigned m) {
  oracle::Coeffs c(m);
  for (unsigned i = 0; i < m; ++i) c[i] = a.coeff(i);
  return c;
}

oracle::Coeffs modulus_of(const FieldCtx& ctx) {
  return {ctx.modulus().begin(), ctx.modulus().end()};
}

}  // namespace

TEST_CASE("moduli are the smallest irreducibles") {
  CHECK(modulus_of(field_make(2, 2)) == oracle::Coeffs{1, 1, 1});
  CHECK(modulus_of(field_make(3, 2)) == oracle::Coeffs{1, 0, 1});
  CHECK(modulus_of(field_make(7, 1)) == oracle::Coeffs{0, 1});
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {
      {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}, {13, 3}};
  for (auto [p, m] : cases) {
    CAPTURE(p);
    CAPTURE(m);
    CHECK(modulus_of(field_make(p, m)) == oracle::smallest_irreducible(p, m));
  }
}

TEST_CASE("multiplication matches schoolbook reduction") {
  std::mt19937_64 rng(17);
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {
      {2, 1}, {2, 4}, {2, 8}, {2, 24}, {3, 5}, {3, 18}, {5, 3}, {5, 12}, {199, 1}, {199, 6}, {65537, 2}};
  for (auto [p, m] : cases) {
    const FieldCtx& ctx = field_make(p, m);
    const auto mod = modulus_of(ctx);
    for (int i = 0; i < 200; ++i) {
      std::vector<std::uint32_t> a(m), b(m);
      for (unsigned j = 0; j < m; ++j) {
        a[j] = static_cast<std::uint32_t>(rng() % p);
        b[j] = static_cast<std::uint32_t>(rng() % p);
      }
      const FieldElem x = ctx.from_coeffs(a);
      const FieldElem y = ctx.from_coeffs(b);
      REQUIRE(coeffs_of(x * y, m) == oracle::naive_mul(coeffs_of(x, m), coeffs_of(y, m), mod, p));
      if (!x.is_zero()) REQUIRE((x * x.inv()).is_one());
      REQUIRE(x.pow(ctx.order()) == x);  // Frobenius over F_q
    }
  }
}

TEST_CASE("F4 by hand") {
  const FieldCtx& f4 = field_make(2, 2);
  const FieldElem w = f4.x();
  CHECK((w * (w + f4.one())).is_one());
  CHECK((w * w + w + f4.one()).is_zero());
  CHECK(to_string(w) == "0;1");
  CHECK(to_string(f4.element(2)) == "1;0");
}

TEST_CASE("enumeration order is a bijection") {
  for (std::uint64_t q : {2, 4, 9, 25, 27, 49}) {
    const FieldCtx& ctx = field_of_order(q);
    for (std::uint64_t i = 0; i < q; ++i) {
      REQUIRE(ctx.index_of(ctx.element(i)) == i);
      if (i > 0) REQUIRE(enum_less(ctx.element(i - 1), ctx.element(i)));
    }
    CHECK(ctx.element(0).is_zero());
  }
  CHECK_THROWS_AS(field_of_order(12), InvalidInput);
  CHECK_THROWS_AS(field_make(4, 2), InvalidInput);
}

TEST_CASE("multiplicative structure") {
  for (std::uint64_t q : {3, 4, 8, 13, 16, 25, 81}) {
    const FieldCtx& ctx = field_of_order(q);
    CHECK(ctx.multiplicative_order(ctx.smallest_generator()) == q - 1);
    for (std::uint64_t n = 1; n < q; ++n) {
      if ((q - 1) % n == 0) CHECK(ctx.multiplicative_order(element_of_order(ctx, n)) == n);
    }
  }
  CHECK_THROWS_AS(element_of_order(field_of_order(7), 4), InvalidInput);
}

TEST_CASE("square roots") {
  for (std::uint64_t q : {2, 7, 9, 13, 16, 17, 25, 49, 97}) {
    const FieldCtx& ctx = field_of_order(q);
    std::size_t squares = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
      const FieldElem a = ctx.element(i);
      const auto r = ctx.sqrt(a);
      REQUIRE(r.has_value() == ctx.is_square(a));
      if (r) {
        REQUIRE(*r * *r == a);
        ++squares;
      }
    }
    CHECK(squares == (q % 2 == 0 ? q : (q + 1) / 2));
  }
}

TEST_CASE("embeddings are homomorphisms and compose coherently") {
  std::mt19937_64 rng(23);
  for (auto [q, big] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {4, 4}, {3, 6}, {9, 2}, {5, 4}, {4, 3}}) {
    const FieldCtx& sub = field_of_order(q);
    const FieldCtx& sup = field_make(sub.p(), sub.m() * big);
    const Embedding& emb = embedding(sub, sup);
    for (int i = 0; i < 50; ++i) {
      const FieldElem a = sub.element(rng() % sub.order());
      const FieldElem b = sub.element(rng() % sub.order());
      REQUIRE(emb.apply(a + b) == emb.apply(a) + emb.apply(b));
      REQUIRE(emb.apply(a * b) == emb.apply(a) * emb.apply(b));
      REQUIRE(emb.preimage(emb.apply(a)) == a);
    }
  }
  // F_q -> F_q^2 -> F_q^4 equals F_q -> F_q^4.
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx& f1 = field_of_order(q);
    const FieldCtx& f2 = field_make(f1.p(), f1.m() * 2);
    const FieldCtx& f4 = field_make(f1.p(), f1.m() * 4);
    for (std::uint64_t i = 0; i < f2.order(); ++i) {
      const FieldElem a = f2.element(i);
      REQUIRE(embed(a, f2, f4) == embedding(f2, f4).apply(a));
      if (i < q) REQUIRE(embed(embed(f1.element(i), f1, f2), f2, f4) == embed(f1.element(i), f1, f4));
    }
  }
  const FieldCtx& f2 = field_make(2, 1);
  const FieldCtx& f4 = field_make(2, 2);
  CHECK_FALSE(embedding(f2, f4).preimage(f4.x()).has_value());
  CHECK_THROWS_AS(embedding(field_make(2, 2), field_make(2, 3)), InvalidInput);
}

TEST_CASE("roots_monic") {
  std::mt19937_64 rng(29);
  for (std::uint64_t q : {2, 3, 4, 7, 16, 25, 81, 625, 4096, 15625}) {
    const FieldCtx& ctx = field_of_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      const unsigned deg = 2 + trial % 2;
      std::vector<FieldElem> want;
      for (unsigned i = 0; i < deg; ++i) want.push_back(ctx.element(rng() % (trial < 4 ? 2 : q)));
      FieldPoly f = FieldPoly::constant(ctx.one());
      for (const auto& r : want) f = f * (FieldPoly::x(ctx) - FieldPoly::constant(r));
      std::sort(want.begin(), want.end(), enum_less);
      REQUIRE(roots_monic(f.coeffs(), ctx) == want);
    }
  }
  const FieldCtx& f3 = field_of_order(3);
  const std::vector<FieldElem> x2p1 = {f3.one(), f3.zero(), f3.one()};
  CHECK_THROWS_AS(roots_monic(x2p1, f3), InvalidInput);
  const FieldCtx& f7 = field_of_order(7);
  const std::vector<FieldElem> cube = {f7.from_int(-1), f7.zero(), f7.zero(), f7.one()};
  const auto r = roots_monic(cube, f7);
  CHECK(r == std::vector<FieldElem>{f7.from_int(1), f7.from_int(2), f7.from_int(4)});
}

TEST_CASE("field polynomials") {
  for (std::uint64_t p : {2, 3, 5}) {
    const FieldCtx& ctx = field_of_order(p);
    for (unsigned deg = 1; deg <= 4; ++deg) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        oracle::Coeffs c(deg + 1, 0);
        std::vector<FieldElem> e(deg + 1);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < deg; ++i) {
          c[i] = t % p;
          t /= p;
          e[i] = ctx.from_int(static_cast<std::int64_t>(c[i]));
        }
        c[deg] = 1;
        e[deg] = ctx.one();
        const FieldPoly f(ctx, e);
        REQUIRE(is_irreducible(f) == oracle::naive_irreducible(c, p));
        auto roots = distinct_roots(f);
        std::vector<FieldElem> scan;
        for (std::uint64_t i = 0; i < p; ++i) {
          if (f.eval(ctx.element(i)).is_zero()) scan.push_back(ctx.element(i));
        }
        std::sort(roots.begin(), roots.end(), enum_less);
        REQUIRE(roots == scan);
      }
    }
  }
  const FieldCtx& f9 = field_of_order(9);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<FieldElem> ac, bc;
    for (int i = 0; i < 6; ++i) ac.push_back(f9.element(rng() % 9));
    for (int i = 0; i < 3; ++i) bc.push_back(f9.element(rng() % 9));
    bc.push_back(f9.one());
    const FieldPoly a(f9, ac), b(f9, bc);
    const auto [quo, rem] = divmod(a, b);
    REQUIRE(quo * b + rem == a);
    REQUIRE(rem.degree() < b.degree());
    const FieldPoly g = gcd(a * b, b * b);
    REQUIRE((b * b % g).is_zero());
    REQUIRE((a * b % g).is_zero());
  }
}
