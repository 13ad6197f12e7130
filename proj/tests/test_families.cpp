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

#include <cmath>
#include <random>

#include "golden.hpp"
#include "liepoly/error.hpp"
#include "liepoly/families.hpp"
#include "oracles.hpp"

using namespace liepoly;

namespace {

MultiPoly p2(const char* s) { return parse_poly(s, 2); }

// Sum of |c| |x|^e over the terms: the size of the cancellation in a float evaluation.
double magnitude(const MultiPoly& f, const std::vector<double>& x) {
  double acc = 0;
  for (const auto& t : f.terms()) {
    double m = std::fabs(t.coeff.get_d());
    for (std::size_t v = 0; v < f.nvars(); ++v) m *= std::pow(std::fabs(x[v]), t.exponents[v]);
    acc += m;
  }
  return acc;
}

}  // namespace

TEST_CASE("seeds reproduce the displayed maps") {
  for (const auto& [k, want] : golden::seeds("b2_seeds.txt")) {
    CAPTURE(k);
    CHECK(b2_seed(k) == want);
    CHECK(b2_symmetrize_oracle(k) == want);
  }
  for (const auto& [k, want] : golden::seeds("g2_seeds.txt")) {
    CAPTURE(k);
    CHECK(g2_seed(k) == want);
    CHECK(g2_from_tilde(k) == want);
  }
}

TEST_CASE("Dickson closed form, recurrence and cosine identity") {
  for (unsigned k = 0; k <= 40; ++k) REQUIRE(dickson(k) == dickson_recurrence(k));
  CHECK(dickson(0) == parse_poly("2", 1));
  CHECK(dickson(5) == parse_poly("x^5 - 5x^3 + 5x", 1));
  for (unsigned k = 0; k <= 20; ++k) {
    for (double th : {0.1, 0.7, 1.3, 2.9}) {
      const double got = oracle::eval_real(dickson(k), {2 * std::cos(th)});
      CHECK(got == doctest::Approx(2 * std::cos(k * th)).epsilon(1e-9));
    }
  }
}

TEST_CASE("recurrences agree with direct constructions") {
  for (unsigned k = 0; k <= 16; ++k) {
    CAPTURE(k);
    REQUIRE(b2_family(k) == b2_symmetrize_oracle(k));
  }
  for (unsigned k = 0; k <= 10; ++k) {
    CAPTURE(k);
    REQUIRE(g2_family(k) == g2_from_tilde(k));
  }
}

TEST_CASE("families semiconjugate multiplication by k on the torus") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (bool g2 : {false, true}) {
    for (unsigned k = 0; k <= 12; ++k) {
      const PolyMap& f = g2 ? g2_family(k) : b2_family(k);
      for (int i = 0; i < 8; ++i) {
        const double s = u(rng), t = u(rng);
        const auto [x, y] = oracle::phi(g2, s, t);
        const auto [wx, wy] = oracle::phi(g2, k * s, k * t);
        const std::vector<double> pt = {x, y};
        CHECK(std::fabs(oracle::eval_real(f[0], pt) - wx) <= 1e-11 * (1 + magnitude(f[0], pt)));
        CHECK(std::fabs(oracle::eval_real(f[1], pt) - wy) <= 1e-11 * (1 + magnitude(f[1], pt)));
      }
    }
  }
}

TEST_CASE("corner points") {
  const std::vector<Integer> p0 = {4, 4}, p1 = {-4, 4}, p2 = {0, -4};
  const std::vector<Integer> q0 = {6, 6};
  for (unsigned k = 0; k <= 20; ++k) {
    const PolyMap& b = b2_family(k);
    CHECK(poly_eval_integer(b[0], p0) == 4);
    CHECK(poly_eval_integer(b[1], p0) == 4);
    // P1 = Phi(1/2, 1/2) and P2 = Phi(0, 1/2) go to P0 for even k.
    const auto& want1 = k % 2 == 0 ? p0 : p1;
    const auto& want2 = k % 2 == 0 ? p0 : p2;
    CHECK(poly_eval_integer(b[0], p1) == want1[0]);
    CHECK(poly_eval_integer(b[1], p1) == want1[1]);
    CHECK(poly_eval_integer(b[0], p2) == want2[0]);
    CHECK(poly_eval_integer(b[1], p2) == want2[1]);
    const PolyMap& g = g2_family(k);
    CHECK(poly_eval_integer(g[0], q0) == 6);
    CHECK(poly_eval_integer(g[1], q0) == 6);
  }
}

TEST_CASE("semigroup law on small indices") {
  for (unsigned k = 0; k <= 4; ++k) {
    for (unsigned l = 0; l <= 3; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(compose(b2_family(k), b2_family(l)) == b2_family(k * l));
      CHECK(compose(g2_family(k), g2_family(l)) == g2_family(k * l));
    }
  }
}

TEST_CASE("surface maps and conjugation") {
  const PolyMap tri = g2_trivariate(2);
  CHECK(tri[0] == parse_poly("x^2 - 2y - 6", 3));
  CHECK(g2_tilde(0) == PolyMap({p2("6"), p2("12")}));
  CHECK(g2_tilde(2) == PolyMap({p2("x^2 - 2y - 6"), p2("-2x^3 - 4x^2 + (4y + 8)x + (y^2 + 8y + 12)")}));
  CHECK(g2_conjugation() == G2Conjugation::kTildeIsLinvGL);
  for (unsigned k = 0; k <= 7; ++k) {
    CHECK(compose(LinearConj::l_g2_inverse(), compose(g2_family(k), LinearConj::l_g2())) == g2_tilde(k));
  }
  CHECK(compose(LinearConj::l_g2(), LinearConj::l_g2_inverse()) == PolyMap::identity(2));
  CHECK(compose(LinearConj::l_sign(3), LinearConj::l_sign(3)) == PolyMap::identity(3));
}

TEST_CASE("power sums F_k") {
  CHECK(f_power(0) == PolyMap({parse_poly("3", 3), parse_poly("3", 3), parse_poly("1", 3)}));
  CHECK(f_power(2) ==
        PolyMap({parse_poly("x^2 - 2y", 3), parse_poly("y^2 - 2x*z", 3), parse_poly("z^2", 3)}));
  for (unsigned k = 0; k <= 12; ++k) REQUIRE(f_power(k) == f_power_oracle(k));
}

TEST_CASE("family names") {
  CHECK(parse_family("b2") == FamilyId::b2());
  CHECK(parse_family("g2").tag == FamilyTag::kG2);
  CHECK(parse_family("lw", 2, -1).tag == FamilyTag::kLwA2);
  CHECK(parse_family("lw", 3, 1).tag == FamilyTag::kLwGeneral);
  CHECK(parse_family("lw", 3, 1).arity() == 3);
  CHECK(parse_family("f-power").arity() == 3);
  CHECK(parse_family("dickson").name() == "dickson");
  CHECK_THROWS_AS(parse_family("a3"), InvalidInput);
  CHECK_THROWS_AS(family_map(FamilyId::lw(3, 1), 2), InvalidInput);
  CHECK_THROWS_AS(b2_seed(4), InvalidInput);
}
