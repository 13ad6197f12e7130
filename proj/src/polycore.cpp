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

#include "liepoly/polycore.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "liepoly/error.hpp"
#include "liepoly/numtheory.hpp"

namespace liepoly {

namespace {

constexpr unsigned kExpBits = 21;
constexpr std::uint64_t kExpMask = (std::uint64_t{1} << kExpBits) - 1;

std::uint64_t pack(const Exponents& e) {
  return (std::uint64_t{e[0]} << (2 * kExpBits)) | (std::uint64_t{e[1]} << kExpBits) | e[2];
}

Exponents unpack(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> (2 * kExpBits)),
          static_cast<std::uint32_t>((key >> kExpBits) & kExpMask), static_cast<std::uint32_t>(key & kExpMask)};
}

unsigned degree_of(const Exponents& e) { return e[0] + e[1] + e[2]; }

void require_nvars(std::size_t n) {
  if (n < 1 || n > kMaxVars) throw InvalidInput("polynomials have 1 to 3 variables");
}

void require_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("variable-count mismatch");
}

const char kVarNames[kMaxVars] = {'x', 'y', 'z'};

}  // namespace

bool grlex_before(const Exponents& a, const Exponents& b) {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) { require_nvars(nvars); }

MultiPoly MultiPoly::constant(std::size_t nvars, const Integer& c) {
  return monomial(nvars, Exponents{}, c);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidInput("variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(nvars, e, 1);
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const Exponents& e, const Integer& c) {
  return from_terms(nvars, {Term{e, c}});
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  MultiPoly r(nvars);
  for (const auto& t : terms) {
    for (std::size_t i = nvars; i < kMaxVars; ++i) {
      if (t.exponents[i] != 0) throw InvalidInput("exponent vector longer than nvars");
    }
    for (std::uint32_t e : t.exponents) {
      if (e > kExpMask) throw InvalidInput("exponent too large");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_before(a.exponents, b.exponents); });
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().exponents == t.exponents) {
      r.terms_.back().coeff += t.coeff;
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(r.terms_, [](const Term& t) { return t.coeff == 0; });
  return r;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0); }

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.front().exponents); }

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

Integer MultiPoly::coeff(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& key) { return grlex_before(t.exponents, key); });
  if (it != terms_.end() && it->exponents == e) return it->coeff;
  return 0;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same(*this, rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && grlex_before(a->exponents, b->exponents))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_before(b->exponents, a->exponents)) {
      merged.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(Term{a->exponents, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
  std::unordered_map<std::uint64_t, Integer> acc;
  acc.reserve(a.size() * b.size());
  Integer prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Exponents e{ta.exponents[0] + tb.exponents[0], ta.exponents[1] + tb.exponents[1],
                  ta.exponents[2] + tb.exponents[2]};
      for (std::uint32_t v : e) {
        if (v > kExpMask) throw InvalidInput("exponent too large");
      }
      mpz_mul(prod.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      Integer& slot = acc[pack(e)];
      slot += prod;
    }
  }
  MultiPoly r(a.nvars());
  r.terms_.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (c != 0) r.terms_.push_back(Term{unpack(key), std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return grlex_before(x.exponents, y.exponents); });
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
  if (c == 0) return MultiPoly(nvars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = abs(t.coeff);
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || degree_of(t.exponents) == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (t.exponents[v] == 0) continue;
      if (wrote) os << '*';
      os << kVarNames[v];
      if (t.exponents[v] > 1) os << '^' << t.exponents[v];
      wrote = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ PolyMap

PolyMap::PolyMap(std::vector<MultiPoly> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidInput("polynomial map needs at least one component");
  for (const auto& c : components_) {
    if (c.nvars() != components_.size()) throw InvalidInput("polynomial map must be square");
  }
}

PolyMap PolyMap::identity(std::size_t arity) {
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < arity; ++i) comps.push_back(MultiPoly::variable(arity, i));
  return PolyMap(std::move(comps));
}

// ------------------------------------------------------------- composition

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

namespace {

// Powers of one substituted value, filled on demand by squaring and products.
class PowerCache {
 public:
  explicit PowerCache(const MultiPoly& base) : base_(base) {}

  const MultiPoly& get(unsigned n) {
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    MultiPoly value(base_.nvars());
    if (n == 0) {
      value = MultiPoly::constant(base_.nvars(), 1);
    } else if (n == 1) {
      value = base_;
    } else {
      const MultiPoly& half = get(n / 2);
      value = half * half;
      if (n % 2 == 1) value *= base_;
    }
    return cache_.emplace(n, std::move(value)).first->second;
  }

 private:
  const MultiPoly& base_;
  std::map<unsigned, MultiPoly> cache_;
};

}  // namespace

MultiPoly poly_substitute(const MultiPoly& outer, std::span<const MultiPoly> values) {
  if (values.size() != outer.nvars()) throw InvalidInput("arity mismatch in substitution");
  const std::size_t nv = values.front().nvars();
  for (const auto& v : values) {
    if (v.nvars() != nv) throw InvalidInput("substituted values disagree on variable count");
  }
  std::vector<PowerCache> powers;
  powers.reserve(values.size());
  for (const auto& v : values) powers.emplace_back(v);
  // Group terms by the exponent of the first variable, so each group needs
  // one multiplication by a power of values[0].
  std::map<std::uint32_t, std::vector<const Term*>> groups;
  for (const auto& t : outer.terms()) groups[t.exponents[0]].push_back(&t);
  MultiPoly result(nv);
  for (const auto& [e0, terms] : groups) {
    MultiPoly inner(nv);
    for (const Term* t : terms) {
      MultiPoly prod = MultiPoly::constant(nv, t->coeff);
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (t->exponents[i] != 0) prod *= powers[i].get(t->exponents[i]);
      }
      inner += prod;
    }
    result += e0 == 0 ? inner : inner * powers[0].get(e0);
  }
  return result;
}

MultiPoly poly_compose(const MultiPoly& outer, const PolyMap& inner) {
  return poly_substitute(outer, inner.components());
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.arity() != inner.arity()) throw InvalidInput("arity mismatch in composition");
  std::vector<MultiPoly> comps;
  for (const auto& c : outer.components()) comps.push_back(poly_compose(c, inner));
  return PolyMap(std::move(comps));
}

MultiPoly poly_mod_p(const MultiPoly& a, std::uint64_t p) {
  if (!nt::is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  const Integer mod(std::to_string(p));
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), mod.get_mpz_t());
    if (r != 0) terms.push_back(Term{t.exponents, std::move(r)});
  }
  return MultiPoly::from_terms(a.nvars(), std::move(terms));
}

PolyMap poly_mod_p(const PolyMap& a, std::uint64_t p) {
  std::vector<MultiPoly> comps;
  for (const auto& c : a.components()) comps.push_back(poly_mod_p(c, p));
  return PolyMap(std::move(comps));
}

// -------------------------------------------------------------- evaluation

namespace {

FieldElem integer_to_field(const Integer& c, const FieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
  return ctx.from_int(static_cast<std::int64_t>(r.get_ui()));
}

}  // namespace

PolyEvaluator::PolyEvaluator(const MultiPoly& poly, const FieldCtx& ctx) : ctx_(&ctx), nvars_(poly.nvars()) {
  for (std::size_t v = 0; v < nvars_; ++v) max_degree_[v] = poly.degree_in(v);
  for (const auto& t : poly.terms()) {
    FieldElem c = integer_to_field(t.coeff, ctx);
    if (!c.is_zero()) terms_.push_back(Reduced{t.exponents, c});
  }
}

FieldElem PolyEvaluator::operator()(std::span<const FieldElem> point) const {
  if (point.size() != nvars_) throw InvalidInput("point dimension does not match polynomial");
  for (const auto& v : point) {
    if (v.ctx() != ctx_) throw InvalidInput("evaluation point from a different field");
  }
  std::array<std::vector<FieldElem>, kMaxVars> powers;
  for (std::size_t v = 0; v < nvars_; ++v) {
    powers[v].reserve(max_degree_[v] + 1);
    powers[v].push_back(ctx_->one());
    for (unsigned d = 1; d <= max_degree_[v]; ++d) powers[v].push_back(powers[v].back() * point[v]);
  }
  FieldElem acc = ctx_->zero();
  for (const auto& t : terms_) {
    FieldElem term = t.coeff;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (t.exponents[v] != 0) term *= powers[v][t.exponents[v]];
    }
    acc += term;
  }
  return acc;
}

FieldElem poly_eval(const MultiPoly& a, std::span<const FieldElem> point, const FieldCtx& ctx) {
  return PolyEvaluator(a, ctx)(point);
}

Integer poly_eval_integer(const MultiPoly& a, std::span<const Integer> point) {
  if (point.size() != a.nvars()) throw InvalidInput("point dimension does not match polynomial");
  Integer acc = 0;
  Integer term;
  Integer power;
  for (const auto& t : a.terms()) {
    term = t.coeff;
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      if (t.exponents[v] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[v].get_mpz_t(), t.exponents[v]);
      term *= power;
    }
    acc += term;
  }
  return acc;
}

// --------------------------------------------------------------------- JSON

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(t.exponents.begin(), t.exponents.begin() + p.nvars());
    terms.push_back({{"e", e}, {"c", t.coeff.get_str()}});
  }
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  try {
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    require_nvars(nvars);
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("e").get<std::vector<std::uint32_t>>();
      if (e.size() != nvars) throw InvalidInput("exponent vector length must equal nvars");
      Term term;
      std::copy(e.begin(), e.end(), term.exponents.begin());
      const auto& c = t.at("c");
      if (c.is_string()) {
        if (term.coeff.set_str(c.get<std::string>(), 10) != 0) throw InvalidInput("bad coefficient string");
      } else {
        term.coeff = Integer(std::to_string(c.get<std::int64_t>()));
      }
      terms.push_back(std::move(term));
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const PolyMap& m) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : m.components()) comps.push_back(to_json(c));
  return {{"arity", m.arity()}, {"components", comps}};
}

PolyMap polymap_from_json(const nlohmann::json& j) {
  try {
    std::vector<MultiPoly> comps;
    for (const auto& c : j.at("components")) comps.push_back(multipoly_from_json(c));
    return PolyMap(std::move(comps));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("malformed polynomial map JSON: ") + ex.what());
  }
}

}  // namespace liepoly
