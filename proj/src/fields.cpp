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

#include "liepoly/fields.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <utility>

#include "liepoly/error.hpp"
#include "liepoly/field_poly.hpp"
#include "liepoly/numtheory.hpp"

namespace liepoly {

namespace {

constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 62;

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  std::int64_t r = p;
  std::int64_t new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Dense F_p[x] helpers for the extended Euclid in FieldCtx::inv.
using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a -= s * x^shift * b
void sub_scaled(Coeffs& a, const Coeffs& b, std::uint64_t s, std::size_t shift, std::uint64_t p) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::uint64_t t = s * b[i] % p;
    a[i + shift] = (a[i + shift] + p - t) % p;
  }
  trim(a);
}

}  // namespace

// ---------------------------------------------------------------- FieldElem

std::span<const std::uint32_t> FieldElem::coeffs() const {
  return {c_.data(), ctx_ ? ctx_->m() : 0U};
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElem::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FieldElem FieldElem::operator-() const {
  if (!ctx_) throw InvalidInput("field element has no context");
  return ctx_->neg(*this);
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  if (!ctx_) throw InvalidInput("field element has no context");
  *this = ctx_->add(*this, rhs);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  if (!ctx_) throw InvalidInput("field element has no context");
  *this = ctx_->sub(*this, rhs);
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  if (!ctx_) throw InvalidInput("field element has no context");
  *this = ctx_->mul(*this, rhs);
  return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.ctx_ == b.ctx_ && a.c_ == b.c_;
}

FieldElem FieldElem::inv() const {
  if (!ctx_) throw InvalidInput("field element has no context");
  return ctx_->inv(*this);
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  if (!ctx_) throw InvalidInput("field element has no context");
  return ctx_->pow(*this, e);
}

// ----------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), order_(*nt::checked_pow(p, m)), modulus_(std::move(modulus)) {
  neg_tail_.resize(m_);
  for (unsigned i = 0; i < m_; ++i) neg_tail_[i] = (p_ - modulus_[i]) % p_;
}

void FieldCtx::check(const FieldElem& a) const {
  if (a.ctx_ != this) throw InvalidInput("field element belongs to a different context");
}

FieldElem FieldCtx::zero() const {
  FieldElem r;
  r.ctx_ = this;
  return r;
}

FieldElem FieldCtx::one() const {
  FieldElem r = zero();
  r.c_[0] = 1;
  return r;
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  FieldElem r = zero();
  std::int64_t red = v % static_cast<std::int64_t>(p_);
  if (red < 0) red += p_;
  r.c_[0] = static_cast<std::uint32_t>(red);
  return r;
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw InvalidInput("coefficient vector length must equal extension degree");
  FieldElem r = zero();
  for (unsigned i = 0; i < m_; ++i) {
    if (coeffs[i] >= p_) throw InvalidInput("coefficient out of range [0, p)");
    r.c_[i] = coeffs[i];
  }
  return r;
}

FieldElem FieldCtx::x() const {
  FieldElem r = zero();
  if (m_ == 1) {
    r.c_[0] = (p_ - modulus_[0]) % p_;
  } else {
    r.c_[1] = 1;
  }
  return r;
}

FieldElem FieldCtx::element(std::uint64_t index) const {
  if (index >= order_) throw InvalidInput("element index out of range");
  FieldElem r = zero();
  for (unsigned i = m_; i-- > 0;) {
    r.c_[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return r;
}

std::uint64_t FieldCtx::index_of(const FieldElem& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (unsigned i = 0; i < m_; ++i) idx = idx * p_ + a.c_[i];
  return idx;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r = zero();
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t s = a.c_[i] + b.c_[i];
    r.c_[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r = zero();
  for (unsigned i = 0; i < m_; ++i) {
    r.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p_ - b.c_[i];
  }
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  check(a);
  FieldElem r = zero();
  for (unsigned i = 0; i < m_; ++i) r.c_[i] = a.c_[i] == 0 ? 0 : p_ - a.c_[i];
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r = zero();
  const std::uint64_t p = p_;
  if (m_ == 1) {
    r.c_[0] = static_cast<std::uint32_t>(std::uint64_t{a.c_[0]} * b.c_[0] % p);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtDegree> prod{};
  // Below 2^16 the unreduced sums stay far from 64-bit overflow.
  const bool lazy = p < (1U << 16);
  for (unsigned i = 0; i < m_; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] += std::uint64_t{a.c_[i]} * b.c_[j];
      if (!lazy) prod[i + j] %= p;
    }
  }
  for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
    std::uint64_t c = prod[d] % p;
    if (c == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[d - m_ + j] += c * neg_tail_[j];
      if (!lazy) prod[d - m_ + j] %= p;
    }
  }
  for (unsigned i = 0; i < m_; ++i) r.c_[i] = static_cast<std::uint32_t>(prod[i] % p);
  return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  check(a);
  if (a.is_zero()) throw InvalidInput("inverse of zero");
  if (m_ == 1) {
    FieldElem r = zero();
    r.c_[0] = inv_mod_prime(a.c_[0], p_);
    return r;
  }
  // Extended Euclid in F_p[x]; track only the cofactor of a.
  const std::uint64_t p = p_;
  Coeffs r0(modulus_.begin(), modulus_.end());
  Coeffs r1(a.c_.begin(), a.c_.begin() + m_);
  trim(r1);
  Coeffs s0;
  Coeffs s1{1};
  while (r1.size() > 1) {
    const std::uint64_t lead_inv = inv_mod_prime(static_cast<std::uint32_t>(r1.back()), p_);
    while (r0.size() >= r1.size()) {
      std::size_t shift = r0.size() - r1.size();
      std::uint64_t q = r0.back() * lead_inv % p;
      sub_scaled(r0, r1, q, shift, p);
      sub_scaled(s0, s1, q, shift, p);
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t c_inv = inv_mod_prime(static_cast<std::uint32_t>(r1[0]), p_);
  FieldElem r = zero();
  for (std::size_t i = 0; i < s1.size() && i < m_; ++i) {
    r.c_[i] = static_cast<std::uint32_t>(s1[i] * c_inv % p);
  }
  return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, std::uint64_t e) const {
  check(a);
  FieldElem result = one();
  FieldElem base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

const std::vector<std::uint64_t>& FieldCtx::group_order_primes() const {
  std::call_once(primes_once_, [this] { group_order_primes_ = nt::prime_divisors(order_ - 1); });
  return group_order_primes_;
}

const FieldElem& FieldCtx::smallest_generator() const {
  std::call_once(generator_once_, [this] {
    const auto& primes = group_order_primes();
    for (std::uint64_t i = 1; i < order_; ++i) {
      FieldElem g = element(i);
      bool ok = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t l) {
        return !pow(g, (order_ - 1) / l).is_one();
      });
      if (ok) {
        generator_ = g;
        return;
      }
    }
    throw InvariantViolation("no multiplicative generator found in " + describe());
  });
  return generator_;
}

std::uint64_t FieldCtx::multiplicative_order(const FieldElem& a) const {
  check(a);
  if (a.is_zero()) throw InvalidInput("zero has no multiplicative order");
  std::uint64_t n = order_ - 1;
  for (std::uint64_t l : group_order_primes()) {
    while (n % l == 0 && pow(a, n / l).is_one()) n /= l;
  }
  return n;
}

const FieldElem& FieldCtx::smallest_non_square() const {
  std::call_once(non_square_once_, [this] {
    if (p_ == 2) throw InvalidInput("every element of a binary field is a square");
    for (std::uint64_t i = 1; i < order_; ++i) {
      FieldElem c = element(i);
      if (!is_square(c)) {
        non_square_ = c;
        return;
      }
    }
    throw InvariantViolation("no non-square found in " + describe());
  });
  return non_square_;
}

bool FieldCtx::is_square(const FieldElem& a) const {
  check(a);
  if (p_ == 2 || a.is_zero()) return true;
  return pow(a, (order_ - 1) / 2).is_one();
}

std::optional<FieldElem> FieldCtx::sqrt(const FieldElem& a) const {
  check(a);
  if (a.is_zero()) return a;
  if (p_ == 2) return pow(a, order_ / 2);
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t t = order_ - 1;
  unsigned s = 0;
  while ((t & 1U) == 0) {
    t >>= 1U;
    ++s;
  }
  FieldElem z = pow(smallest_non_square(), t);
  FieldElem x = pow(a, (t + 1) / 2);
  FieldElem b = pow(a, t);
  unsigned m = s;
  while (!b.is_one()) {
    unsigned i = 0;
    FieldElem b2 = b;
    while (!b2.is_one()) {
      b2 = mul(b2, b2);
      ++i;
    }
    FieldElem w = z;
    for (unsigned j = 0; j + i + 1 < m; ++j) w = mul(w, w);
    x = mul(x, w);
    z = mul(w, w);
    b = mul(b, z);
    m = i;
  }
  return x;
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

// ----------------------------------------------------------------- registry

namespace {

std::vector<std::uint32_t> smallest_irreducible(const FieldCtx& prime_field, unsigned m) {
  const std::uint32_t p = prime_field.p();
  if (m == 1) return {0, 1};
  const std::uint64_t count = *nt::checked_pow(p, m);
  // c0 is the most significant digit and must be nonzero.
  for (std::uint64_t idx = count / p; idx < count; ++idx) {
    std::vector<std::uint32_t> c(m + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = m; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    c[m] = 1;
    std::vector<FieldElem> coeffs;
    coeffs.reserve(m + 1);
    for (std::uint32_t v : c) coeffs.push_back(prime_field.from_int(v));
    if (is_irreducible(FieldPoly(prime_field, std::move(coeffs)))) return c;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const FieldCtx& field_make(std::uint64_t p, unsigned m) {
  if (!nt::is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw InvalidInput("field characteristic exceeds 32 bits");
  if (m < 1 || m > kMaxExtDegree) throw InvalidInput("extension degree out of range");
  auto order = nt::checked_pow(p, m);
  if (!order || *order > kMaxFieldOrder) throw InvalidInput("field order exceeds 2^62");

  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldCtx>> registry;
  const auto key = std::make_pair(p, m);
  {
    std::lock_guard lock(registry_mutex());
    if (auto it = registry.find(key); it != registry.end()) return *it->second;
  }
  std::vector<std::uint32_t> modulus;
  if (m == 1) {
    modulus = {0, 1};
  } else {
    modulus = smallest_irreducible(field_make(p, 1), m);
  }
  std::unique_ptr<FieldCtx> ctx(new FieldCtx(static_cast<std::uint32_t>(p), m, std::move(modulus)));
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry.emplace(key, std::move(ctx));
  return *it->second;
}

const FieldCtx& field_of_order(std::uint64_t q) {
  auto pp = nt::prime_power(q);
  if (!pp) throw InvalidInput(std::to_string(q) + " is not a prime power");
  return field_make(pp->first, pp->second);
}

// ---------------------------------------------------------------- Embedding

Embedding::Embedding(const FieldCtx& sub, const FieldCtx& sup, const FieldElem& image_of_x)
    : sub_(&sub), sup_(&sup) {
  const unsigned m = sub.m();
  const unsigned big_m = sup.m();
  const std::uint64_t p = sup.p();
  FieldElem power = sup.one();
  for (unsigned i = 0; i < m; ++i) {
    basis_images_.push_back(power);
    power = power * image_of_x;
  }
  // Row-reduce [E | I] where column i of E holds basis_images_[i].
  std::vector<std::vector<std::uint64_t>> rows(big_m, std::vector<std::uint64_t>(m + big_m, 0));
  for (unsigned r = 0; r < big_m; ++r) {
    for (unsigned c = 0; c < m; ++c) rows[r][c] = basis_images_[c].coeff(r);
    rows[r][m + r] = 1;
  }
  unsigned pivot_row = 0;
  for (unsigned c = 0; c < m; ++c) {
    unsigned sel = pivot_row;
    while (sel < big_m && rows[sel][c] == 0) ++sel;
    if (sel == big_m) throw InvariantViolation("embedding basis is not independent");
    std::swap(rows[sel], rows[pivot_row]);
    const std::uint64_t inv = inv_mod_prime(static_cast<std::uint32_t>(rows[pivot_row][c]),
                                            static_cast<std::uint32_t>(p));
    for (auto& v : rows[pivot_row]) v = v * inv % p;
    for (unsigned r = 0; r < big_m; ++r) {
      if (r == pivot_row || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (unsigned k = 0; k < m + big_m; ++k) {
        rows[r][k] = (rows[r][k] + p * p - f * rows[pivot_row][k]) % p;
      }
    }
    ++pivot_row;
  }
  left_inverse_.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    left_inverse_[i].resize(big_m);
    for (unsigned j = 0; j < big_m; ++j) left_inverse_[i][j] = static_cast<std::uint32_t>(rows[i][m + j]);
  }
}

FieldElem Embedding::apply(const FieldElem& a) const {
  if (a.ctx() != sub_) throw InvalidInput("element is not in the embedding's source field");
  FieldElem r = sup_->zero();
  for (unsigned i = 0; i < sub_->m(); ++i) {
    if (a.coeff(i) == 0) continue;
    r += sup_->from_int(a.coeff(i)) * basis_images_[i];
  }
  return r;
}

std::optional<FieldElem> Embedding::preimage(const FieldElem& b) const {
  if (b.ctx() != sup_) throw InvalidInput("element is not in the embedding's target field");
  const std::uint64_t p = sup_->p();
  std::vector<std::uint32_t> a(sub_->m(), 0);
  for (unsigned i = 0; i < sub_->m(); ++i) {
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < sup_->m(); ++j) acc = (acc + std::uint64_t{left_inverse_[i][j]} * b.coeff(j)) % p;
    a[i] = static_cast<std::uint32_t>(acc);
  }
  FieldElem candidate = sub_->from_coeffs(a);
  if (!(apply(candidate) == b)) return std::nullopt;
  return candidate;
}

const Embedding& embedding(const FieldCtx& sub, const FieldCtx& sup) {
  if (sub.p() != sup.p() || sup.m() % sub.m() != 0) {
    throw InvalidInput("no embedding " + sub.describe() + " -> " + sup.describe());
  }
  static std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::unique_ptr<Embedding>> cache;
  static std::mutex mu;
  const auto key = std::make_pair(&sub, &sup);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  FieldElem image;
  const unsigned ratio = sup.m() / sub.m();
  if (ratio == 1) {
    image = sup.x();
  } else if (sub.m() == 1) {
    image = sup.from_int(sup.p() - sub.modulus()[0]);
  } else {
    const auto primes = nt::prime_divisors(ratio);
    if (primes.front() == ratio) {
      std::vector<FieldElem> coeffs;
      for (std::uint32_t c : sub.modulus()) coeffs.push_back(sup.from_int(c));
      auto roots = distinct_roots(FieldPoly(sup, std::move(coeffs)));
      if (roots.empty()) throw InvariantViolation("subfield modulus has no root in " + sup.describe());
      image = *std::min_element(roots.begin(), roots.end(), enum_less);
    } else {
      const FieldCtx& mid = field_make(sub.p(), sub.m() * static_cast<unsigned>(primes.front()));
      image = embedding(mid, sup).apply(embedding(sub, mid).apply(sub.x()));
    }
  }
  auto emb = std::make_unique<Embedding>(sub, sup, image);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(emb));
  return *it->second;
}

FieldElem embed(const FieldElem& a, const FieldCtx& sub, const FieldCtx& sup) {
  return embedding(sub, sup).apply(a);
}

FieldElem element_of_order(const FieldCtx& ctx, std::uint64_t n) {
  const std::uint64_t group = ctx.order() - 1;
  if (n == 0 || group % n != 0) {
    throw InvalidInput("order " + std::to_string(n) + " does not divide |" + ctx.describe() + "*|");
  }
  return ctx.smallest_generator().pow(group / n);
}

bool enum_less(const FieldElem& a, const FieldElem& b) {
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::string to_string(const FieldElem& a) {
  std::ostringstream os;
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ';';
    os << c[i];
  }
  return os.str();
}

nlohmann::json to_json(const FieldElem& a) {
  auto c = a.coeffs();
  return nlohmann::json(std::vector<std::uint32_t>(c.begin(), c.end()));
}

nlohmann::json to_json(const FieldCtx& ctx) {
  auto mod = ctx.modulus();
  return {{"p", ctx.p()}, {"m", ctx.m()}, {"modulus", std::vector<std::uint32_t>(mod.begin(), mod.end())}};
}

}  // namespace liepoly
