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

#ifndef LIEPOLY_FAMILIES_HPP
#define LIEPOLY_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "liepoly/polycore.hpp"

namespace liepoly {

enum class FamilyTag { kDickson, kB2, kG2, kG2Tilde, kG2Trivariate, kFPower, kLwA2, kLwGeneral };

/// A family name plus the Lidl-Wells parameters where they apply. n is the
/// number of coordinates of g(n, k, b); kLwA2 is the symbolic n = 2 case.
struct FamilyId {
  FamilyTag tag = FamilyTag::kB2;
  unsigned n = 2;
  std::int64_t b = 1;

  static FamilyId dickson() { return {FamilyTag::kDickson, 1, 1}; }
  static FamilyId b2() { return {FamilyTag::kB2, 2, 1}; }
  static FamilyId g2() { return {FamilyTag::kG2, 2, 1}; }
  static FamilyId lw(unsigned n, std::int64_t b);

  /// Number of coordinates the induced map acts on.
  unsigned arity() const;
  /// CLI name: dickson | b2 | g2 | g2-tilde | g2-3var | f-power | lw.
  std::string name() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Accepts the CLI names; "lw" yields kLwA2 when n = 2 and kLwGeneral
/// otherwise.
FamilyId parse_family(std::string_view name, unsigned n = 2, std::int64_t b = 1);

/// D_k from the closed-form sum, one variable. D_0 = 2.
MultiPoly dickson(unsigned k);
/// D_k from D_{k+2} = x D_{k+1} - D_k.
MultiPoly dickson_recurrence(unsigned k);

/// The seeds exactly as displayed: B_0..B_3 and G_0..G_5.
PolyMap b2_seed(unsigned k);
PolyMap g2_seed(unsigned k);

/// B_k from the four-term recurrence.
const PolyMap& b2_family(unsigned k);
/// (D_k(u1) + D_k(u2), D_k(u1) D_k(u2)) rewritten in x = u1 + u2, y = u1 u2.
PolyMap b2_symmetrize_oracle(unsigned k);

/// Elementary symmetric functions of D_k(u1), D_k(u2), D_k(u3) in the
/// elementary symmetric functions x, y, z of the u_i.
PolyMap g2_trivariate(unsigned k);
/// First two components of g2_trivariate(k) on the surface z = x^2 - 2y - 4.
PolyMap g2_tilde(unsigned k);
/// G_k from the six-term recurrence.
const PolyMap& g2_family(unsigned k);
/// G_k obtained by conjugating g2_tilde(k) with L.
PolyMap g2_from_tilde(unsigned k);

/// The linear changes of variables used by the families.
struct LinearConj {
  /// (x1, ..., xn) -> (-x1, x2, -x3, ...).
  static PolyMap l_sign(std::size_t n);
  /// (x, y) -> (x, y - x).
  static PolyMap l_g2();
  static PolyMap l_g2_inverse();
};

/// Which way L conjugates G_k onto the surface map, settled by comparing
/// against the displayed degree-two maps on first use.
enum class G2Conjugation {
  kTildeIsLinvGL,  // tilde = L^-1 o G o L
  kTildeIsLGLinv,  // tilde = L o G o L^-1
};
G2Conjugation g2_conjugation();

/// F_k = elementary symmetric functions of t1^k, t2^k, t3^k, from the
/// explicit double sums (third component z^k). F_0 = (3, 3, 1).
PolyMap f_power(unsigned k);
/// The same map by Newton-identity symmetrization.
PolyMap f_power_oracle(unsigned k);

/// Symbolic g(2, k, b) in x1, x2.
PolyMap lw_a2(unsigned k, std::int64_t b);

/// Symbolic form of any family with a finite presentation. kLwGeneral is
/// only available for n = 1 and n = 2.
PolyMap family_map(const FamilyId& fam, unsigned k);

}  // namespace liepoly

#endif  // LIEPOLY_FAMILIES_HPP
