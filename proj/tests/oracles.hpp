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

// Independent reference implementations used only by the tests. None of
// them call into the library code they are compared against.

#ifndef LIEPOLY_TESTS_ORACLES_HPP
#define LIEPOLY_TESTS_ORACLES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "liepoly/polycore.hpp"

namespace oracle {

using Coeffs = std::vector<std::uint64_t>;  // lowest degree first

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// a mod b over F_p, b monic.
inline Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

/// Schoolbook product in F_p[x]/(modulus).
inline Coeffs naive_mul(const Coeffs& a, const Coeffs& b, const Coeffs& modulus, std::uint64_t p) {
  Coeffs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  r = poly_rem(r, modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool naive_irreducible(const Coeffs& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Lexicographically smallest monic irreducible of degree m, comparing the
/// coefficients from the constant term upward.
inline Coeffs smallest_irreducible(std::uint64_t p, unsigned m) {
  if (m == 1) return {0, 1};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(m + 1, 0);
    std::uint64_t t = idx;
    for (unsigned i = m; i-- > 0;) {  // c0 most significant
      f[i] = t % p;
      t /= p;
    }
    f[m] = 1;
    if (naive_irreducible(f, p)) return f;
  }
  return {};
}

// ------------------------------------------------------------ torus

struct Frac {
  std::int64_t n, d;
};

inline Frac reduce(std::int64_t n, std::int64_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t r = ((n % d) + d) % d;
  const std::int64_t g = std::gcd(r, d);
  return {r / g, d / g};
}

using Pt = std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>;
using Mat = std::array<int, 4>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// Closure of a swap, the central symmetry and a sign change (B2) or
/// (s, t) -> (s, -s - t) (G2).
inline std::vector<Mat> weyl_from_generators(bool g2) {
  const Mat swap = {0, 1, 1, 0};
  const Mat minus = {-1, 0, 0, -1};
  const Mat other = g2 ? Mat{1, 0, -1, -1} : Mat{-1, 0, 0, 1};
  std::set<Mat> seen = {{1, 0, 0, 1}};
  std::vector<Mat> frontier = {{1, 0, 0, 1}};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& m : frontier) {
      for (const auto& g : {swap, minus, other}) {
        const Mat c = mat_mul(g, m);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Exact comparisons via cross multiplication.
inline bool frac_less(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }

inline Pt orbit_min(const Frac& s, const Frac& t, const std::vector<Mat>& group) {
  bool have = false;
  Frac bs{}, bt{};
  for (const auto& m : group) {
    const std::int64_t d = std::lcm(s.d, t.d);
    const std::int64_t sn = s.n * (d / s.d), tn = t.n * (d / t.d);
    const Frac a = reduce(m[0] * sn + m[1] * tn, d);
    const Frac b = reduce(m[2] * sn + m[3] * tn, d);
    if (!have || frac_less(a, bs) || (!frac_less(bs, a) && frac_less(b, bt))) {
      bs = a;
      bt = b;
      have = true;
    }
  }
  return {{bs.n, bs.d}, {bt.n, bt.d}};
}

/// Orbit classes of solutions of k v = w v (mod Z^2) over all w: each
/// lattice (kI - w)^-1 Z^2 is listed as adj(kI - w) u / det for u in a box.
inline std::set<Pt> fixed_point_lattice(bool g2, std::int64_t k) {
  const auto group = weyl_from_generators(g2);
  std::set<Pt> out;
  for (const auto& w : group) {
    const std::int64_t a = k - w[0], b = -w[1], c = -w[2], d = k - w[3];
    const std::int64_t det = a * d - b * c;
    if (det == 0) continue;
    const std::int64_t n = det < 0 ? -det : det;
    for (std::int64_t u0 = 0; u0 < n; ++u0) {
      for (std::int64_t u1 = 0; u1 < n; ++u1) {
        const Frac s = reduce(d * u0 - b * u1, det);
        const Frac t = reduce(-c * u0 + a * u1, det);
        out.insert(orbit_min(s, t, group));
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ cosines

inline std::complex<double> e(double a) { return std::polar(1.0, 2.0 * M_PI * a); }

/// Orbit sums of the exponentials, written directly from the weights.
inline std::pair<double, double> phi(bool g2, double s, double t) {
  if (!g2) {
    const auto x = e(s) + e(-s) + e(t) + e(-t);
    const auto y = e(s + t) + e(-s - t) + e(s - t) + e(t - s);
    return {x.real(), y.real()};
  }
  const auto x = e(s) + e(-s) + e(t) + e(-t) + e(s + t) + e(-s - t);
  const auto y = e(2 * s + t) + e(-2 * s - t) + e(s + 2 * t) + e(-s - 2 * t) + e(s - t) + e(t - s);
  return {x.real(), y.real()};
}

/// A MultiPoly at a real point.
inline double eval_real(const liepoly::MultiPoly& f, const std::vector<double>& x) {
  double acc = 0;
  for (const auto& term : f.terms()) {
    double m = term.coeff.get_d();
    for (std::size_t v = 0; v < f.nvars(); ++v) m *= std::pow(x[v], static_cast<double>(term.exponents[v]));
    acc += m;
  }
  return acc;
}

}  // namespace oracle

#endif  // LIEPOLY_TESTS_ORACLES_HPP
