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

#include "liepoly/error.hpp"
#include "liepoly/lifted.hpp"
#include "liepoly/numtheory.hpp"
#include "liepoly/torus.hpp"
#include "oracles.hpp"

using namespace liepoly;

namespace {

TorusPoint tp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return TorusPoint::make({a, b}, {c, d}); }

oracle::Pt as_pt(const TorusPoint& p) {
  return {{p.sigma.num(), p.sigma.den()}, {p.tau.num(), p.tau.den()}};
}

}  // namespace

TEST_CASE("rationals") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.frac() == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(0).to_string() == "0/1");
  CHECK(Rational(-7, 14).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
  CHECK(tp(5, 3, -1, 4) == tp(2, 3, 3, 4));
}

TEST_CASE("Weyl groups") {
  CHECK(weyl_group(FamilyTag::kB2).elements.size() == 8);
  CHECK(weyl_group(FamilyTag::kG2).elements.size() == 12);
  for (bool g2 : {false, true}) {
    const auto& lib = weyl_group(g2 ? FamilyTag::kG2 : FamilyTag::kB2).elements;
    const auto gen = oracle::weyl_from_generators(g2);
    CHECK(std::set<oracle::Mat>(lib.begin(), lib.end()) == std::set<oracle::Mat>(gen.begin(), gen.end()));
  }
  CHECK_THROWS_AS(weyl_group(FamilyTag::kDickson), InvalidInput);
}

TEST_CASE("canonical representatives") {
  const auto& b2 = weyl_group(FamilyTag::kB2);
  const auto& g2 = weyl_group(FamilyTag::kG2);
  CHECK(weyl_canonical(tp(2, 3, 1, 3), b2) == tp(1, 3, 1, 3));
  CHECK(weyl_canonical(tp(0, 1, 0, 1), b2) == tp(0, 1, 0, 1));
  CHECK(weyl_canonical(tp(1, 2, 0, 1), g2) == tp(0, 1, 1, 2));
  std::mt19937_64 rng(47);
  for (int i = 0; i < 400; ++i) {
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 40);
    const TorusPoint p = tp(static_cast<std::int64_t>(rng() % d), d, static_cast<std::int64_t>(rng() % 97), 97);
    for (bool is_g2 : {false, true}) {
      const auto& action = is_g2 ? g2 : b2;
      const TorusPoint c = weyl_canonical(p, action);
      const auto group = oracle::weyl_from_generators(is_g2);
      REQUIRE(as_pt(c) == oracle::orbit_min({p.sigma.num(), p.sigma.den()}, {p.tau.num(), p.tau.den()}, group));
      for (std::size_t w = 0; w < action.elements.size(); ++w) REQUIRE(weyl_canonical(action.apply(w, p), action) == c);
      // Lands in the fundamental region.
      const double s = c.sigma.to_double(), t = c.tau.to_double();
      if (is_g2) {
        REQUIRE((s >= 0 && s <= 1.0 / 3 && s <= t && t <= (1 - s) / 2 + 1e-15));
      } else {
        REQUIRE((s >= 0 && s <= 0.5 && s <= t && t <= 0.5));
      }
    }
  }
}

TEST_CASE("fixed points") {
  for (bool is_g2 : {false, true}) {
    const FamilyTag tag = is_g2 ? FamilyTag::kG2 : FamilyTag::kB2;
    const auto& action = weyl_group(tag);
    for (unsigned k = 2; k <= 9; ++k) {
      CAPTURE(k);
      const FixedPointSet fix = fix_enumerate(tag, k);
      CHECK(fix.points.size() == k * k);
      CHECK(std::is_sorted(fix.points.begin(), fix.points.end()));
      std::set<oracle::Pt> got;
      for (const auto& p : fix.points) {
        REQUIRE(weyl_canonical(p.scaled(k), action) == p);
        got.insert(as_pt(p));
      }
      CHECK(got == oracle::fixed_point_lattice(is_g2, k));
    }
  }
  const auto b = fix_enumerate(FamilyTag::kB2, 2);
  CHECK(std::find(b.points.begin(), b.points.end(), tp(1, 5, 2, 5)) != b.points.end());
  CHECK(b.points.front() == tp(0, 1, 0, 1));
  CHECK(fix_enumerate(FamilyTag::kG2, 3).points.size() == 9);
  CHECK_THROWS_AS(fix_enumerate(FamilyTag::kB2, 1), InvalidInput);
  const auto j = to_json(b);
  CHECK(j["family"] == "b2");
  CHECK(j["points"][0]["sigma"] == "0/1");
}

TEST_CASE("phi_float") {
  auto near = [](std::pair<double, double> a, double x, double y) {
    return std::fabs(a.first - x) < 1e-12 && std::fabs(a.second - y) < 1e-12;
  };
  CHECK(near(phi_float(FamilyTag::kB2, 0, 0), 4, 4));
  CHECK(near(phi_float(FamilyTag::kB2, 0.5, 0.5), -4, 4));
  CHECK(near(phi_float(FamilyTag::kB2, 0, 0.5), 0, -4));
  CHECK(near(phi_float(FamilyTag::kG2, tp(1, 3, 1, 3)), -3, 6));
  CHECK(near(phi_float(FamilyTag::kG2, 0, 0.5), -2, -2));
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double s = u(rng), t = u(rng);
    for (bool is_g2 : {false, true}) {
      const FamilyTag tag = is_g2 ? FamilyTag::kG2 : FamilyTag::kB2;
      const auto want = oracle::phi(is_g2, s, t);
      const auto got = phi_float(tag, s, t);
      REQUIRE(std::fabs(got.first - want.first) < 1e-12);
      REQUIRE(std::fabs(got.second - want.second) < 1e-12);
      for (const auto& w : weyl_group(tag).elements) {
        const auto img = phi_float(tag, w[0] * s + w[1] * t, w[2] * s + w[3] * t);
        REQUIRE(std::fabs(img.first - got.first) < 1e-12);
        REQUIRE(std::fabs(img.second - got.second) < 1e-12);
      }
    }
    // The displayed product form of the B2 second component.
    const double c1 = 2 * std::cos(2 * M_PI * s), c2 = 2 * std::cos(2 * M_PI * t);
    REQUIRE(std::fabs(phi_float(FamilyTag::kB2, s, t).second - c1 * c2) < 1e-12);
  }
}

TEST_CASE("phi_field") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx& ctx = field_of_order(q);
    const auto zero = phi_field(FamilyTag::kB2, tp(0, 1, 0, 1), ctx);
    CHECK(zero.first == ctx.from_int(4));
    CHECK(zero.second == ctx.from_int(4));
    CHECK(phi_field(FamilyTag::kG2, tp(0, 1, 0, 1), ctx).first == ctx.from_int(6));
  }
  // Weyl invariance, exactly, on points whose denominators divide q^N - 1.
  for (std::uint64_t q : {2, 3, 5, 7}) {
    const FieldCtx& ctx = field_of_order(q);
    for (bool is_g2 : {false, true}) {
      const FamilyTag tag = is_g2 ? FamilyTag::kG2 : FamilyTag::kB2;
      const auto fix = fix_enumerate(tag, static_cast<unsigned>(q));
      for (const auto& p : fix.points) {
        const auto v = phi_field(tag, p, ctx);
        const auto& action = weyl_group(tag);
        for (std::size_t w = 0; w < action.elements.size(); ++w) REQUIRE(phi_field(tag, action.apply(w, p), ctx) == v);
      }
    }
  }
  CHECK_THROWS_AS(phi_field(FamilyTag::kB2, tp(1, 7, 0, 1), field_of_order(2)), InvalidInput);
}

TEST_CASE("reduction commutes with the family") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx& ctx = field_of_order(q);
    for (bool is_g2 : {false, true}) {
      const FamilyTag tag = is_g2 ? FamilyTag::kG2 : FamilyTag::kB2;
      const FamilyId fam = is_g2 ? FamilyId::g2() : FamilyId::b2();
      for (unsigned k = 0; k <= 9; ++k) {
        for (const auto& p : fix_enumerate(tag, static_cast<unsigned>(q)).points) {
          const auto a = phi_field(tag, p, ctx);
          const std::array<FieldElem, 2> pt = {a.first, a.second};
          const auto want = phi_field(tag, p.scaled(k), ctx);
          REQUIRE(family_eval_lifted(fam, k, pt, ctx) == std::vector<FieldElem>{want.first, want.second});
        }
      }
    }
  }
}

TEST_CASE("region samples") {
  for (bool is_g2 : {false, true}) {
    const FamilyTag tag = is_g2 ? FamilyTag::kG2 : FamilyTag::kB2;
    const auto one = region_sample(tag, 1);
    std::size_t interior = 0;
    for (const auto& r : one.rows) interior += r.kind == SampleKind::kInterior;
    CHECK(interior == 1);
    const auto& c = one.rows.front();
    const auto pre = corner_preimages(tag);
    CHECK(c.sigma == doctest::Approx((pre[0].sigma.to_double() + pre[1].sigma.to_double() + pre[2].sigma.to_double()) / 3));
    const auto rs = region_sample(tag, 20);
    interior = 0;
    for (const auto& r : rs.rows) {
      interior += r.kind == SampleKind::kInterior;
      const auto want = oracle::phi(is_g2, r.sigma, r.tau);
      REQUIRE(std::fabs(r.x - want.first) < 1e-12);
      REQUIRE(std::fabs(r.y - want.second) < 1e-12);
      for (double res : region_residuals(tag, r.x, r.y)) REQUIRE(res >= -1e-9);
    }
    CHECK(interior == 400);
    CHECK(rs.rows.size() == 400 + 3 * 513);
    const auto corners = corner_points(tag);
    for (int i = 0; i < 3; ++i) {
      const auto v = phi_float(tag, pre[i]);
      CHECK(std::fabs(v.first - corners[i].first) < 1e-12);
      CHECK(std::fabs(v.second - corners[i].second) < 1e-12);
    }
  }
  CHECK(to_string(SampleKind::kBoundary2) == "boundary2");
}
