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

#ifndef LIEPOLY_TORUS_HPP
#define LIEPOLY_TORUS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liepoly/families.hpp"
#include "liepoly/fields.hpp"

namespace liepoly {

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Representative of this value mod 1 in [0, 1).
  Rational frac() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// Always "a/b", so 0 is "0/1".
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const { return {-num_, den_}; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A point of (R/Z)^2, both coordinates in [0, 1).
struct TorusPoint {
  Rational sigma;
  Rational tau;

  static TorusPoint make(const Rational& sigma, const Rational& tau) { return {sigma.frac(), tau.frac()}; }
  TorusPoint scaled(std::int64_t k) const { return make(sigma * Rational(k), tau * Rational(k)); }
  /// lcm of the two denominators.
  std::int64_t denominator() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

/// Integer matrices (sigma, tau) -> (a sigma + b tau, c sigma + d tau),
/// stored row-major as {a, b, c, d}.
struct WeylGroupAction {
  FamilyTag family;
  std::vector<std::array<int, 4>> elements;

  TorusPoint apply(std::size_t i, const TorusPoint& p) const;
};

/// The order-8 (B2) or order-12 (G2) group, closure-checked on first use.
const WeylGroupAction& weyl_group(FamilyTag family);

/// Lexicographically smallest point of the Weyl orbit.
TorusPoint weyl_canonical(const TorusPoint& p, const WeylGroupAction& action);

struct FixedPointSet {
  FamilyTag family;
  unsigned k;
  std::vector<TorusPoint> points;  // canonical, sorted
};

/// Fix(B_k) or Fix(G_k) from the explicit parametrizations. Throws
/// InvariantViolation unless exactly k^2 classes arise.
FixedPointSet fix_enumerate(FamilyTag family, unsigned k);

std::pair<double, double> phi_float(FamilyTag family, double sigma, double tau);
std::pair<double, double> phi_float(FamilyTag family, const TorusPoint& p);

/// Phi evaluated with e^(2 pi i / n) replaced by element_of_order(F_{q^N}, n),
/// N = 4 (B2) or 6 (G2), and pulled back to F_q.
std::pair<FieldElem, FieldElem> phi_field(FamilyTag family, const TorusPoint& p, const FieldCtx& base);

enum class SampleKind { kInterior, kBoundary1, kBoundary2 };

struct RegionSample {
  struct Row {
    double sigma;
    double tau;
    double x;
    double y;
    SampleKind kind;
  };
  FamilyTag family;
  std::vector<Row> rows;
};

/// n^2 interior samples (centroids of the n^2 congruent subtriangles of the
/// fundamental region) followed by 512-step traces of its edges. For B2,
/// boundary1 maps onto the lines y + 4 +- 2x = 0 and boundary2 onto 4y = x^2;
/// for G2, boundary1 maps onto the cubic and boundary2 onto the parabola.
RegionSample region_sample(FamilyTag family, unsigned n);

/// Signed residuals of the inequalities bounding Delta; all are >= 0 on it.
std::vector<double> region_residuals(FamilyTag family, double x, double y);

/// The corner images P_0, P_1, P_2 or Q_0, Q_1, Q_2 and their torus points.
std::array<std::pair<double, double>, 3> corner_points(FamilyTag family);
std::array<TorusPoint, 3> corner_preimages(FamilyTag family);

std::string to_string(SampleKind kind);
nlohmann::json to_json(const FixedPointSet& set);

}  // namespace liepoly

#endif  // LIEPOLY_TORUS_HPP
