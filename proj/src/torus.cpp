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

#include "liepoly/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "liepoly/error.hpp"

namespace liepoly {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::frac() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  return {r, den_};
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1)};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::int64_t TorusPoint::denominator() const { return std::lcm(sigma.den(), tau.den()); }

TorusPoint WeylGroupAction::apply(std::size_t i, const TorusPoint& p) const {
  const auto& m = elements.at(i);
  return TorusPoint::make(Rational(m[0]) * p.sigma + Rational(m[1]) * p.tau,
                          Rational(m[2]) * p.sigma + Rational(m[3]) * p.tau);
}

namespace {

using Mat = std::array<int, 4>;

Mat compose(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

WeylGroupAction build_group(FamilyTag family) {
  WeylGroupAction g{family, {}};
  if (family == FamilyTag::kB2) {
    // I-VIII: (+-s, +-t) and (+-t, +-s).
    g.elements = {{1, 0, 0, 1},  {-1, 0, 0, 1},  {1, 0, 0, -1},  {-1, 0, 0, -1},
                  {0, 1, 1, 0},  {0, -1, 1, 0},  {0, 1, -1, 0},  {0, -1, -1, 0}};
  } else if (family == FamilyTag::kG2) {
    g.elements = {
        {1, 0, 0, 1},    // I    (s, t)
        {0, 1, 1, 0},    // II   (t, s)
        {-1, 0, 0, -1},  // III  (-s, -t)
        {0, -1, -1, 0},  // IV   (-t, -s)
        {1, 0, -1, -1},  // V    (s, -s-t)
        {-1, -1, 1, 0},  // VI   (-s-t, s)
        {-1, 0, 1, 1},   // VII  (-s, s+t)
        {1, 1, -1, 0},   // VIII (s+t, -s)
        {0, 1, -1, -1},  // IX   (t, -s-t)
        {-1, -1, 0, 1},  // X    (-s-t, t)
        {0, -1, 1, 1},   // XI   (-t, s+t)
        {1, 1, 0, -1},   // XII  (s+t, -t)
    };
  } else {
    throw InvalidInput("Weyl group is only defined for b2 and g2");
  }
  const std::set<Mat> members(g.elements.begin(), g.elements.end());
  if (members.size() != g.elements.size()) throw InvariantViolation("repeated Weyl group element");
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements) {
      if (!members.contains(compose(a, b))) throw InvariantViolation("Weyl group table is not closed");
    }
  }
  return g;
}

}  // namespace

const WeylGroupAction& weyl_group(FamilyTag family) {
  static const WeylGroupAction b2 = build_group(FamilyTag::kB2);
  static const WeylGroupAction g2 = build_group(FamilyTag::kG2);
  if (family == FamilyTag::kB2) return b2;
  if (family == FamilyTag::kG2) return g2;
  throw InvalidInput("Weyl group is only defined for b2 and g2");
}

TorusPoint weyl_canonical(const TorusPoint& p, const WeylGroupAction& action) {
  TorusPoint best = action.apply(0, p);
  for (std::size_t i = 1; i < action.elements.size(); ++i) best = std::min(best, action.apply(i, p));
  return best;
}

namespace {

struct Branch {
  std::string label;
  std::vector<TorusPoint> points;
};

// Every printed parametrization, d and e over a full residue system.
std::vector<Branch> fix_branches(FamilyTag family, std::int64_t k) {
  std::vector<Branch> out;
  auto grid = [&](std::int64_t den1, std::int64_t den2, std::string label) {
    Branch b{std::move(label), {}};
    for (std::int64_t d = 0; d < den1; ++d) {
      for (std::int64_t e = 0; e < den2; ++e) b.points.push_back(TorusPoint::make({d, den1}, {e, den2}));
    }
    out.push_back(std::move(b));
  };
  auto line = [&](std::int64_t den, std::int64_t slope, std::string label) {
    Branch b{std::move(label), {}};
    for (std::int64_t d = 0; d < den; ++d) b.points.push_back(TorusPoint::make({d, den}, {slope * d, den}));
    out.push_back(std::move(b));
  };
  if (family == FamilyTag::kB2) {
    for (std::int64_t s1 : {-1, 1}) {
      for (std::int64_t s2 : {-1, 1}) {
        grid(k + s1, k + s2, "(d/(k" + std::string(s1 < 0 ? "-" : "+") + "1), e/(k" + (s2 < 0 ? "-" : "+") + "1))");
      }
    }
    line(k * k + 1, k, "(d/(k^2+1), kd/(k^2+1))");
    line(k * k - 1, -k, "(d/(k^2-1), -kd/(k^2-1))");
  } else if (family == FamilyTag::kG2) {
    grid(k - 1, k - 1, "S1");
    line(k * k - 1, k, "S2");
    line(k * k + k + 1, k, "S3");
    grid(k + 1, k + 1, "S4");
    line(k * k - 1, -k, "S5");
    line(k * k - k + 1, -k, "S6");
  } else {
    throw InvalidInput("fixed points are only available for b2 and g2");
  }
  return out;
}

std::string describe(const TorusPoint& p) { return "(" + p.sigma.to_string() + ", " + p.tau.to_string() + ")"; }

}  // namespace

FixedPointSet fix_enumerate(FamilyTag family, unsigned k) {
  if (k < 2) throw InvalidInput("fix_enumerate needs k >= 2");
  const auto& action = weyl_group(family);
  const auto branches = fix_branches(family, k);
  std::set<TorusPoint> canon;
  std::vector<std::string> bad;
  for (const auto& br : branches) {
    for (const auto& p : br.points) {
      const TorusPoint c = weyl_canonical(p, action);
      if (weyl_canonical(c.scaled(k), action) != c) bad.push_back(br.label + " gives non-fixed " + describe(p));
      canon.insert(c);
    }
  }
  const std::size_t expected = static_cast<std::size_t>(k) * k;
  if (!bad.empty() || canon.size() != expected) {
    std::ostringstream msg;
    msg << "fixed points for k = " << k << ": " << canon.size() << " classes, expected " << expected;
    for (const auto& br : branches) {
      std::set<TorusPoint> own;
      for (const auto& p : br.points) own.insert(weyl_canonical(p, action));
      msg << "; " << br.label << " contributes " << own.size();
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 8); ++i) msg << "; " << bad[i];
    throw InvariantViolation(msg.str());
  }
  return {family, k, {canon.begin(), canon.end()}};
}

std::pair<double, double> phi_float(FamilyTag family, double sigma, double tau) {
  auto c = [](double a) { return 2.0 * std::cos(2.0 * std::numbers::pi * a); };
  if (family == FamilyTag::kB2) {
    // Sums of e(+-s +- t) over the orbit of each weight.
    return {c(sigma) + c(tau), c(sigma + tau) + c(sigma - tau)};
  }
  if (family == FamilyTag::kG2) {
    return {c(sigma) + c(tau) + c(sigma + tau), c(2 * sigma + tau) + c(sigma + 2 * tau) + c(sigma - tau)};
  }
  throw InvalidInput("phi is only defined for b2 and g2");
}

std::pair<double, double> phi_float(FamilyTag family, const TorusPoint& p) {
  return phi_float(family, p.sigma.to_double(), p.tau.to_double());
}

std::pair<FieldElem, FieldElem> phi_field(FamilyTag family, const TorusPoint& p, const FieldCtx& base) {
  unsigned degree = 0;
  if (family == FamilyTag::kB2) {
    degree = 4;
  } else if (family == FamilyTag::kG2) {
    degree = 6;
  } else {
    throw InvalidInput("phi is only defined for b2 and g2");
  }
  if (base.m() * degree > kMaxExtDegree) throw InvalidInput("extension of " + base.describe() + " is too large");
  const FieldCtx& ext = field_make(base.p(), base.m() * degree);
  const TorusPoint r = TorusPoint::make(p.sigma, p.tau);
  const auto n = static_cast<std::uint64_t>(r.denominator());
  if ((ext.order() - 1) % n != 0) {
    throw InvalidInput("denominator " + std::to_string(n) + " of " + describe(r) + " does not divide " +
                       std::to_string(ext.order()) + " - 1");
  }
  const FieldElem zeta = element_of_order(ext, n);
  auto e = [&](const Rational& a) {
    return zeta.pow(static_cast<std::uint64_t>(a.frac().num()) * (n / static_cast<std::uint64_t>(a.frac().den())));
  };
  auto two_cos = [&](const Rational& a) { return e(a) + e(-a); };
  const Rational& s = r.sigma;
  const Rational& t = r.tau;
  FieldElem x;
  FieldElem y;
  if (family == FamilyTag::kB2) {
    x = two_cos(s) + two_cos(t);
    y = two_cos(s + t) + two_cos(s - t);
  } else {
    x = two_cos(s) + two_cos(t) + two_cos(s + t);
    y = two_cos(Rational(2) * s + t) + two_cos(s + Rational(2) * t) + two_cos(s - t);
  }
  const Embedding& emb = embedding(base, ext);
  auto xb = emb.preimage(x);
  auto yb = emb.preimage(y);
  if (!xb || !yb) throw InvariantViolation("reduction of " + describe(r) + " is not in " + base.describe());
  return {*xb, *yb};
}

namespace {

struct Tri {
  std::array<double, 2> a, b, c;
};

Tri fundamental_triangle(FamilyTag family) {
  if (family == FamilyTag::kB2) return {{0.0, 0.0}, {0.0, 0.5}, {0.5, 0.5}};
  if (family == FamilyTag::kG2) return {{0.0, 0.0}, {0.0, 0.5}, {1.0 / 3.0, 1.0 / 3.0}};
  throw InvalidInput("regions are only defined for b2 and g2");
}

}  // namespace

RegionSample region_sample(FamilyTag family, unsigned n) {
  if (n < 1) throw InvalidInput("region sampling needs n >= 1");
  const Tri tri = fundamental_triangle(family);
  RegionSample out{family, {}};
  auto push = [&](double s, double t, SampleKind kind) {
    const auto [x, y] = phi_float(family, s, t);
    out.rows.push_back({s, t, x, y, kind});
  };
  // Barycentric lattice of step 1/n: point (i, j) = a + i/n (b - a) + j/n (c - a).
  auto at = [&](double i, double j) {
    const double u = i / n;
    const double v = j / n;
    return std::array<double, 2>{tri.a[0] + u * (tri.b[0] - tri.a[0]) + v * (tri.c[0] - tri.a[0]),
                                 tri.a[1] + u * (tri.b[1] - tri.a[1]) + v * (tri.c[1] - tri.a[1])};
  };
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; i + j < n; ++j) {
      const auto up = at(i + 1.0 / 3.0, j + 1.0 / 3.0);
      push(up[0], up[1], SampleKind::kInterior);
      if (i + j + 1 < n) {
        const auto down = at(i + 2.0 / 3.0, j + 2.0 / 3.0);
        push(down[0], down[1], SampleKind::kInterior);
      }
    }
  }
  constexpr int kSteps = 512;
  auto trace = [&](const std::array<double, 2>& from, const std::array<double, 2>& to, SampleKind kind) {
    for (int s = 0; s <= kSteps; ++s) {
      const double w = static_cast<double>(s) / kSteps;
      push(from[0] + w * (to[0] - from[0]), from[1] + w * (to[1] - from[1]), kind);
    }
  };
  if (family == FamilyTag::kB2) {
    trace(tri.a, tri.b, SampleKind::kBoundary1);  // sigma = 0
    trace(tri.b, tri.c, SampleKind::kBoundary1);  // tau = 1/2
    trace(tri.a, tri.c, SampleKind::kBoundary2);  // sigma = tau
  } else {
    trace(tri.a, tri.c, SampleKind::kBoundary1);  // sigma = tau
    trace(tri.c, tri.b, SampleKind::kBoundary1);  // tau = (1 - sigma) / 2
    trace(tri.a, tri.b, SampleKind::kBoundary2);  // sigma = 0
  }
  return out;
}

std::vector<double> region_residuals(FamilyTag family, double x, double y) {
  if (family == FamilyTag::kB2) return {y + 4 + 2 * x, y + 4 - 2 * x, x * x - 4 * y};
  if (family == FamilyTag::kG2) {
    const double lhs = y + 6 * x + 12;
    return {4 * (x + 3) * (x + 3) * (x + 3) - lhs * lhs, 4 * y - (x * x - 12)};
  }
  throw InvalidInput("regions are only defined for b2 and g2");
}

std::array<std::pair<double, double>, 3> corner_points(FamilyTag family) {
  if (family == FamilyTag::kB2) return {{{4, 4}, {-4, 4}, {0, -4}}};
  if (family == FamilyTag::kG2) return {{{6, 6}, {-3, 6}, {-2, -2}}};
  throw InvalidInput("regions are only defined for b2 and g2");
}

std::array<TorusPoint, 3> corner_preimages(FamilyTag family) {
  if (family == FamilyTag::kB2) return {{{{0}, {0}}, {{1, 2}, {1, 2}}, {{0}, {1, 2}}}};
  if (family == FamilyTag::kG2) return {{{{0}, {0}}, {{1, 3}, {1, 3}}, {{0}, {1, 2}}}};
  throw InvalidInput("regions are only defined for b2 and g2");
}

std::string to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::kInterior:
      return "interior";
    case SampleKind::kBoundary1:
      return "boundary1";
    default:
      return "boundary2";
  }
}

nlohmann::json to_json(const FixedPointSet& set) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : set.points) pts.push_back({{"sigma", p.sigma.to_string()}, {"tau", p.tau.to_string()}});
  return {{"family", set.family == FamilyTag::kB2 ? "b2" : "g2"}, {"k", set.k}, {"points", pts}};
}

}  // namespace liepoly
