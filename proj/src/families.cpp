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

#include "liepoly/families.hpp"

#include <array>
#include <deque>
#include <mutex>

#include "liepoly/error.hpp"

namespace liepoly {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// num / den, which must be exact.
Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw InvariantViolation(std::string("non-integral coefficient in ") + what);
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

MultiPoly var(std::size_t nvars, std::size_t i) { return MultiPoly::variable(nvars, i); }
MultiPoly cst(std::size_t nvars, long c) { return MultiPoly::constant(nvars, c); }

// Power sums p_0..p_max of n indeterminates, written in their elementary
// symmetric functions e_1..e_n (variables 0..n-1).
std::vector<MultiPoly> power_sums_in_e(std::size_t n, unsigned max) {
  std::vector<MultiPoly> p;
  p.push_back(cst(n, static_cast<long>(n)));
  for (unsigned m = 1; m <= max; ++m) {
    MultiPoly acc(n);
    const std::size_t top = std::min<std::size_t>(m, n);
    for (std::size_t i = 1; i <= top; ++i) {
      MultiPoly term = i == m ? var(n, i - 1).scaled(m) : var(n, i - 1) * p[m - i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p.push_back(std::move(acc));
  }
  return p;
}

// Newton: j E_j = sum_{i=1..j} (-1)^(i-1) E_(j-i) P_i.
std::vector<MultiPoly> elementary_from_power_sums(const std::vector<MultiPoly>& power, std::size_t n) {
  const std::size_t nv = power.front().nvars();
  std::vector<MultiPoly> e{cst(nv, 1)};
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly acc(nv);
    for (std::size_t i = 1; i <= j; ++i) {
      MultiPoly term = e[j - i] * power[i - 1];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    std::vector<Term> terms(acc.terms().begin(), acc.terms().end());
    for (auto& t : terms) t.coeff = exact_div(t.coeff, Integer(static_cast<unsigned long>(j)), "Newton identity");
    e.push_back(MultiPoly::from_terms(nv, std::move(terms)));
  }
  e.erase(e.begin());
  return e;
}

std::vector<Integer> elementary_of_values(const std::vector<Integer>& v) {
  std::vector<Integer> e(v.size() + 1, 0);
  e[0] = 1;
  for (const auto& x : v) {
    for (std::size_t j = v.size(); j >= 1; --j) e[j] += e[j - 1] * x;
  }
  e.erase(e.begin());
  return e;
}

// Spot check at integer points that sym[j] expresses the j-th elementary
// symmetric function of h(u_1), ..., h(u_n).
void check_symmetrization(const std::vector<MultiPoly>& sym, const MultiPoly& h, std::size_t n) {
  static const std::array<long, 9> kSamples = {2, -3, 5, 1, -1, 4, -2, 3, 7};
  for (std::size_t shift = 0; shift < 3; ++shift) {
    std::vector<Integer> u;
    for (std::size_t i = 0; i < n; ++i) u.emplace_back(kSamples[(shift * n + i) % kSamples.size()]);
    std::vector<Integer> hu;
    for (const auto& ui : u) hu.push_back(poly_eval_integer(h, std::span(&ui, 1)));
    const auto e_u = elementary_of_values(u);
    const auto expected = elementary_of_values(hu);
    for (std::size_t j = 0; j < n; ++j) {
      if (poly_eval_integer(sym[j], e_u) != expected[j]) {
        throw InvariantViolation("symmetrization left a non-symmetric residue");
      }
    }
  }
}

// Elementary symmetric functions of h(u_1), ..., h(u_n) in e_1..e_n.
std::vector<MultiPoly> symmetrize(const MultiPoly& h, std::size_t n) {
  const unsigned deg = h.total_degree();
  const auto p = power_sums_in_e(n, static_cast<unsigned>(deg * n));
  std::vector<MultiPoly> big_p;
  MultiPoly hj = cst(1, 1);
  for (std::size_t j = 1; j <= n; ++j) {
    hj *= h;
    MultiPoly acc(n);
    for (const auto& t : hj.terms()) acc += p[t.exponents[0]].scaled(t.coeff);
    big_p.push_back(std::move(acc));
  }
  auto e = elementary_from_power_sums(big_p, n);
  check_symmetrization(e, h, n);
  return e;
}

// Dickson polynomial with parameter a: D_k(t + a/t, a) = t^k + (a/t)^k.
MultiPoly dickson_with_parameter(unsigned k, const Integer& a) {
  if (k == 0) return cst(1, 2);
  std::vector<Term> terms;
  Integer power_of_minus_a = 1;
  for (unsigned i = 0; i <= k / 2; ++i) {
    Integer c = exact_div(Integer(static_cast<unsigned long>(k)) * binomial(k - i, i),
                          Integer(static_cast<unsigned long>(k - i)), "Dickson sum");
    Term t;
    t.exponents[0] = k - 2 * i;
    t.coeff = c * power_of_minus_a;
    terms.push_back(std::move(t));
    power_of_minus_a *= -a;
  }
  return MultiPoly::from_terms(1, std::move(terms));
}

PolyMap parse_map(std::initializer_list<const char*> comps) {
  std::vector<MultiPoly> out;
  for (const char* c : comps) out.push_back(parse_poly(c, comps.size()));
  return PolyMap(std::move(out));
}

// Displayed degree-two surface map, used only to orient the conjugation.
PolyMap g2_tilde_display() { return parse_map({"x^2 + (-2y - 6)", "-2x^3 - 4x^2 + (4y + 8)x + (y^2 + 8y + 12)"}); }

template <typename Step>
class RecurrenceCache {
 public:
  RecurrenceCache(std::size_t order, PolyMap (*seed)(unsigned), Step step)
      : order_(order), seed_(seed), step_(step) {}

  const PolyMap& get(unsigned k) {
    std::lock_guard lock(mu_);
    while (values_.size() <= k) {
      const std::size_t i = values_.size();
      if (i < order_) {
        values_.push_back(seed_(static_cast<unsigned>(i)));
      } else {
        values_.push_back(step_(values_, i));
      }
    }
    return values_[k];
  }

 private:
  std::size_t order_;
  PolyMap (*seed_)(unsigned);
  Step step_;
  std::mutex mu_;
  std::deque<PolyMap> values_;
};

PolyMap b2_step(const std::deque<PolyMap>& v, std::size_t n) {
  // n = k + 4
  const MultiPoly x = var(2, 0);
  const MultiPoly y = var(2, 1);
  const MultiPoly two_plus_y = y + cst(2, 2);
  const MultiPoly g_coeff = x * x - y.scaled(2) - cst(2, 2);
  MultiPoly f = x * (v[n - 1][0] + v[n - 3][0]) - two_plus_y * v[n - 2][0] - v[n - 4][0];
  MultiPoly g = y * (v[n - 1][1] + v[n - 3][1]) - g_coeff * v[n - 2][1] - v[n - 4][1];
  return PolyMap({std::move(f), std::move(g)});
}

PolyMap g2_step(const std::deque<PolyMap>& v, std::size_t n) {
  // n = k + 6
  const MultiPoly x = var(2, 0);
  const MultiPoly y = var(2, 1);
  const MultiPoly fa = x + y + cst(2, 3);
  const MultiPoly fb = x * x - y.scaled(2) - cst(2, 4);
  const MultiPoly ga = x.pow(3) - (x * y).scaled(3) - x.scaled(9) - y.scaled(5) - cst(2, 9);
  const MultiPoly gb =
      y * y - x.pow(3).scaled(2) + (x * y).scaled(6) + x.scaled(18) + y.scaled(12) + cst(2, 20);
  auto f = [&](std::size_t i) -> const MultiPoly& { return v[i][0]; };
  auto g = [&](std::size_t i) -> const MultiPoly& { return v[i][1]; };
  MultiPoly fn = x * (f(n - 1) + f(n - 5)) - fa * (f(n - 2) + f(n - 4)) + fb * f(n - 3) - f(n - 6);
  MultiPoly gn = y * (g(n - 1) + g(n - 5)) - ga * (g(n - 2) + g(n - 4)) + gb * g(n - 3) - g(n - 6);
  return PolyMap({std::move(fn), std::move(gn)});
}

PolyMap conjugate(const PolyMap& outer_linear, const PolyMap& m, const PolyMap& inner_linear) {
  return compose(outer_linear, compose(m, inner_linear));
}

}  // namespace

// ---------------------------------------------------------------- FamilyId

FamilyId FamilyId::lw(unsigned n, std::int64_t b) {
  if (n < 1) throw InvalidInput("Lidl-Wells family needs n >= 1");
  return {n == 2 ? FamilyTag::kLwA2 : FamilyTag::kLwGeneral, n, b};
}

unsigned FamilyId::arity() const {
  switch (tag) {
    case FamilyTag::kDickson:
      return 1;
    case FamilyTag::kG2Trivariate:
    case FamilyTag::kFPower:
      return 3;
    case FamilyTag::kLwA2:
    case FamilyTag::kLwGeneral:
      return n;
    default:
      return 2;
  }
}

std::string FamilyId::name() const {
  switch (tag) {
    case FamilyTag::kDickson:
      return "dickson";
    case FamilyTag::kB2:
      return "b2";
    case FamilyTag::kG2:
      return "g2";
    case FamilyTag::kG2Tilde:
      return "g2-tilde";
    case FamilyTag::kG2Trivariate:
      return "g2-3var";
    case FamilyTag::kFPower:
      return "f-power";
    case FamilyTag::kLwA2:
    case FamilyTag::kLwGeneral:
      return "lw";
  }
  return "?";
}

FamilyId parse_family(std::string_view name, unsigned n, std::int64_t b) {
  if (name == "dickson") return FamilyId::dickson();
  if (name == "b2") return FamilyId::b2();
  if (name == "g2") return FamilyId::g2();
  if (name == "g2-tilde") return {FamilyTag::kG2Tilde, 2, 1};
  if (name == "g2-3var") return {FamilyTag::kG2Trivariate, 3, 1};
  if (name == "f-power") return {FamilyTag::kFPower, 3, 1};
  if (name == "lw") return FamilyId::lw(n, b);
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

// ------------------------------------------------------------------ Dickson

MultiPoly dickson(unsigned k) { return dickson_with_parameter(k, 1); }

MultiPoly dickson_recurrence(unsigned k) {
  MultiPoly prev = cst(1, 2);
  if (k == 0) return prev;
  MultiPoly cur = var(1, 0);
  for (unsigned i = 1; i < k; ++i) {
    MultiPoly next = var(1, 0) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------------- B2

PolyMap b2_seed(unsigned k) {
  switch (k) {
    case 0:
      return parse_map({"4", "4"});
    case 1:
      return parse_map({"x", "y"});
    case 2:
      return parse_map({"x^2-2y-4", "y^2-2x^2+4y+4"});
    case 3:
      return parse_map({"x^3-3xy-3x", "y^3-3x^2y+6y^2+9y"});
    default:
      throw InvalidInput("B2 seeds exist for k = 0..3");
  }
}

const PolyMap& b2_family(unsigned k) {
  static RecurrenceCache cache(4, &b2_seed, &b2_step);
  return cache.get(k);
}

PolyMap b2_symmetrize_oracle(unsigned k) { return PolyMap(symmetrize(dickson(k), 2)); }

// ---------------------------------------------------------------------- G2

PolyMap g2_seed(unsigned k) {
  switch (k) {
    case 0:
      return parse_map({"6", "6"});
    case 1:
      return parse_map({"x", "y"});
    case 2:
      return parse_map({"x^2 - 2x + (-2y - 6)", "-2x^3 + (6y + 18)x + (y^2 + 10y + 18)"});
    case 3:
      return parse_map({"x^3 + (-3y - 9)x + (-6y - 12)",
                        "(-3y - 6)x^3 + (9y^2 + 45y + 54)x + (y^3 + 18y^2 + 63y + 60)"});
    case 4:
      return parse_map({"x^4 + (-4y - 10)x^2 + (-4y - 8)x + (2y^2 + 8y + 6)",
                        "2x^6 + (-12y - 36)x^4 + (-4y^2 - 28y - 40)x^3 + (18y^2 + 108y + 162)x^2"
                        " + (12y^3 + 120y^2 + 372y + 360)x + (y^4 + 24y^3 + 134y^2 + 280y + 198)"});
    case 5:
      return parse_map({"x^5 + (-5y - 15)x^3 + (-5y - 10)x^2 + (5y^2 + 35y + 55)x + (10y^2 + 50y + 60)",
                        "(5y + 10)x^6 + (-30y^2 - 150y - 180)x^4 + (-5y^3 - 65y^2 - 205y - 190)x^3"
                        " + (45y^3 + 360y^2 + 945y + 810)x^2 + (15y^4 + 240y^3 + 1200y^2 + 2415y + 1710)x"
                        " + (y^5 + 30y^4 + 255y^3 + 920y^2 + 1495y + 900)"});
    default:
      throw InvalidInput("G2 seeds exist for k = 0..5");
  }
}

const PolyMap& g2_family(unsigned k) {
  static RecurrenceCache cache(6, &g2_seed, &g2_step);
  return cache.get(k);
}

PolyMap g2_trivariate(unsigned k) { return PolyMap(symmetrize(dickson(k), 3)); }

PolyMap g2_tilde(unsigned k) {
  const PolyMap g = g2_trivariate(k);
  const MultiPoly x = var(2, 0);
  const MultiPoly y = var(2, 1);
  const std::array<MultiPoly, 3> on_surface = {x, y, x * x - y.scaled(2) - cst(2, 4)};
  return PolyMap({poly_substitute(g[0], on_surface), poly_substitute(g[1], on_surface)});
}

PolyMap LinearConj::l_sign(std::size_t n) {
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(i % 2 == 0 ? -var(n, i) : var(n, i));
  return PolyMap(std::move(comps));
}

PolyMap LinearConj::l_g2() { return PolyMap({var(2, 0), var(2, 1) - var(2, 0)}); }

PolyMap LinearConj::l_g2_inverse() { return PolyMap({var(2, 0), var(2, 1) + var(2, 0)}); }

G2Conjugation g2_conjugation() {
  static std::once_flag once;
  static G2Conjugation dir;
  std::call_once(once, [] {
    const PolyMap tilde = g2_tilde(2);
    if (!(tilde == g2_tilde_display())) {
      throw InvariantViolation("surface map at k = 2 disagrees with its displayed form");
    }
    const PolyMap g = g2_seed(2);
    const PolyMap l = LinearConj::l_g2();
    const PolyMap l_inv = LinearConj::l_g2_inverse();
    if (conjugate(l_inv, g, l) == tilde) {
      dir = G2Conjugation::kTildeIsLinvGL;
    } else if (conjugate(l, g, l_inv) == tilde) {
      dir = G2Conjugation::kTildeIsLGLinv;
    } else {
      throw InvariantViolation("G_2 is not conjugate to the surface map by L in either direction");
    }
  });
  return dir;
}

PolyMap g2_from_tilde(unsigned k) {
  const PolyMap tilde = g2_tilde(k);
  const PolyMap l = LinearConj::l_g2();
  const PolyMap l_inv = LinearConj::l_g2_inverse();
  // Invert whichever relation holds.
  if (g2_conjugation() == G2Conjugation::kTildeIsLinvGL) return conjugate(l, tilde, l_inv);
  return conjugate(l_inv, tilde, l);
}

// ------------------------------------------------------------------ F_k

PolyMap f_power(unsigned k) {
  if (k == 0) return parse_map({"3", "3", "1"});
  std::vector<Term> first;
  std::vector<Term> second;
  for (unsigned i = 0; 2 * i <= k; ++i) {
    for (unsigned j = 0; 2 * i + 3 * j <= k; ++j) {
      const unsigned top = k - i - 2 * j;
      const Integer c = exact_div(Integer(static_cast<unsigned long>(k)) * binomial(top, i + j) * binomial(i + j, i),
                                  Integer(static_cast<unsigned long>(top)), "power-map double sum");
      Term t1;
      t1.exponents = {k - 2 * i - 3 * j, i, j};
      t1.coeff = i % 2 == 0 ? c : Integer(-c);
      first.push_back(std::move(t1));
      Term t2;
      t2.exponents = {i, k - 2 * i - 3 * j, i + 2 * j};
      t2.coeff = i % 2 == 0 ? c : Integer(-c);
      second.push_back(std::move(t2));
    }
  }
  return PolyMap({MultiPoly::from_terms(3, std::move(first)), MultiPoly::from_terms(3, std::move(second)),
                  MultiPoly::variable(3, 2).pow(k)});
}

PolyMap f_power_oracle(unsigned k) {
  const auto p = power_sums_in_e(3, 3 * k);
  std::vector<MultiPoly> big_p = {p[k], p[2 * k], p[3 * k]};
  auto e = elementary_from_power_sums(big_p, 3);
  check_symmetrization(e, MultiPoly::variable(1, 0).pow(k), 3);
  return PolyMap(std::move(e));
}

// -------------------------------------------------------------- Lidl-Wells

PolyMap lw_a2(unsigned k, std::int64_t b) {
  // Roots of t^3 + x1 t^2 + x2 t + b have e1 = -x1, e2 = x2, e3 = -b.
  const PolyMap f = f_power(k);
  const std::array<MultiPoly, 3> e = {-var(2, 0), var(2, 1),
                                      MultiPoly::constant(2, Integer(std::to_string(-b)))};
  return PolyMap({-poly_substitute(f[0], e), poly_substitute(f[1], e)});
}

PolyMap family_map(const FamilyId& fam, unsigned k) {
  switch (fam.tag) {
    case FamilyTag::kDickson:
      return PolyMap({dickson(k)});
    case FamilyTag::kB2:
      return b2_family(k);
    case FamilyTag::kG2:
      return g2_family(k);
    case FamilyTag::kG2Tilde:
      return g2_tilde(k);
    case FamilyTag::kG2Trivariate:
      return g2_trivariate(k);
    case FamilyTag::kFPower:
      return f_power(k);
    case FamilyTag::kLwA2:
      return lw_a2(k, fam.b);
    case FamilyTag::kLwGeneral:
      if (fam.n == 1) {
        // Roots of t^2 + x t + b: t1 + t2 = -x, t1 t2 = b.
        const MultiPoly d = dickson_with_parameter(k, Integer(std::to_string(fam.b)));
        const std::array<MultiPoly, 1> minus_x = {-var(1, 0)};
        return PolyMap({-poly_substitute(d, minus_x)});
      }
      if (fam.n == 2) return lw_a2(k, fam.b);
      throw InvalidInput("symbolic g(n, k, b) is only built for n <= 2");
  }
  throw InvalidInput("unknown family");
}

}  // namespace liepoly
