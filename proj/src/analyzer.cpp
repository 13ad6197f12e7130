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

#include "liepoly/analyzer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "liepoly/error.hpp"
#include "liepoly/lidl_wells.hpp"
#include "liepoly/numtheory.hpp"
#include "liepoly/torus.hpp"

namespace liepoly {

namespace {

bool is_lidl_wells(FamilyTag tag) { return tag == FamilyTag::kLwA2 || tag == FamilyTag::kLwGeneral; }

bool has_lift(FamilyTag tag) {
  return tag == FamilyTag::kDickson || tag == FamilyTag::kB2 || tag == FamilyTag::kG2;
}

std::uint64_t domain_size(std::uint64_t q, unsigned arity) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (n > kBruteMaxPoints / q) throw InvalidInput("F_q^n with q = " + std::to_string(q) + " exceeds the scan budget");
    n *= q;
  }
  return n;
}

}  // namespace

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(n, 1024))));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        if (failed.load()) return;
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

// ------------------------------------------------------------ evaluation

DomainEvaluator::DomainEvaluator(const FamilyId& fam, const FieldCtx& ctx, EvalRoute route)
    : fam_(fam), ctx_(&ctx), route_(route), arity_(fam.arity()) {
  if (ctx.order() > kBruteMaxQ) throw InvalidInput("q = " + std::to_string(ctx.order()) + " exceeds the scan budget");
  size_ = domain_size(ctx.order(), arity_);
  if (route_ == EvalRoute::kAuto) {
    const bool big_prime = ctx.m() == 1 && ctx.order() > 64;
    route_ = has_lift(fam.tag) && !big_prime ? EvalRoute::kLifted : EvalRoute::kSymbolic;
  }
  if (is_lidl_wells(fam.tag)) route_ = EvalRoute::kSymbolic;  // evaluated by matrix powers
  if (route_ == EvalRoute::kLifted) {
    if (!has_lift(fam.tag)) throw InvalidInput("family " + fam.name() + " has no lifted evaluation");
    lifted_ = &lifted_evaluator(fam.tag, ctx);
    lifts_.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i) lifts_.push_back(lifted_->lift(point(i)));
  }
}

std::vector<FieldElem> DomainEvaluator::point(std::uint64_t index) const {
  std::vector<FieldElem> out(arity_);
  const std::uint64_t q = ctx_->order();
  for (unsigned i = arity_; i-- > 0;) {
    out[i] = ctx_->element(index % q);
    index /= q;
  }
  return out;
}

std::uint64_t DomainEvaluator::index_of(std::span<const FieldElem> point) const {
  std::uint64_t idx = 0;
  for (const auto& c : point) idx = idx * ctx_->order() + ctx_->index_of(c);
  return idx;
}

std::vector<FieldElem> DomainEvaluator::eval(std::uint64_t index, unsigned k) const {
  if (route_ == EvalRoute::kLifted) return lifted_->eval(lifts_.at(index), k);
  const auto pt = point(index);
  if (is_lidl_wells(fam_.tag)) return lw_eval(fam_.n, k, fam_.b, pt, *ctx_);
  const PolyMap map = family_map(fam_, k);
  std::vector<FieldElem> out;
  for (const auto& c : map.components()) out.push_back(poly_eval(c, pt, *ctx_));
  return out;
}

std::vector<std::uint32_t> DomainEvaluator::images(unsigned k) const {
  std::vector<std::uint32_t> out(size_);
  if (route_ == EvalRoute::kLifted) {
    for (std::uint64_t i = 0; i < size_; ++i) out[i] = static_cast<std::uint32_t>(index_of(lifted_->eval(lifts_[i], k)));
    return out;
  }
  if (is_lidl_wells(fam_.tag)) {
    for (std::uint64_t i = 0; i < size_; ++i) {
      out[i] = static_cast<std::uint32_t>(index_of(lw_eval(fam_.n, k, fam_.b, point(i), *ctx_)));
    }
    return out;
  }
  const PolyMap map = family_map(fam_, k);
  std::vector<PolyEvaluator> comps;
  for (const auto& c : map.components()) comps.emplace_back(c, *ctx_);
  std::vector<FieldElem> img(comps.size());
  for (std::uint64_t i = 0; i < size_; ++i) {
    const auto pt = point(i);
    for (std::size_t c = 0; c < comps.size(); ++c) img[c] = comps[c](pt);
    out[i] = static_cast<std::uint32_t>(index_of(img));
  }
  return out;
}

// ------------------------------------------------------------ verdicts

BruteResult perm_brute(const DomainEvaluator& dom, unsigned k) {
  std::vector<bool> hit(dom.size(), false);
  for (auto i : dom.images(k)) hit[i] = true;
  const auto miss = std::find(hit.begin(), hit.end(), false);
  if (miss == hit.end()) return {true, std::nullopt};
  const auto w = static_cast<std::uint32_t>(miss - hit.begin());
  // Second pass: nothing may land on the witness.
  for (auto i : dom.images(k)) {
    if (i == w) throw InvariantViolation("witness of non-surjectivity was hit on re-evaluation");
  }
  return {false, dom.point(w)};
}

BruteResult perm_brute(const FamilyId& fam, unsigned k, std::uint64_t q, EvalRoute route) {
  if (q > kBruteMaxQ) throw InvalidInput("q = " + std::to_string(q) + " exceeds the scan budget");
  return perm_brute(DomainEvaluator(fam, field_of_order(q), route), k);
}

bool perm_criterion(const FamilyId& fam, unsigned k, std::uint64_t q) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw InvalidInput(std::to_string(q) + " is not a prime power");
  unsigned top = 0;
  switch (fam.tag) {
    case FamilyTag::kDickson:
      return nt::gcd_with_power_minus_one(k, q, 2) == 1;
    case FamilyTag::kB2:
      return nt::gcd_with_power_minus_one(k, q, 4) == 1;
    case FamilyTag::kG2:
    case FamilyTag::kG2Tilde:
      return nt::gcd_with_power_minus_one(k, q, 6) == 1;
    case FamilyTag::kLwA2:
    case FamilyTag::kLwGeneral: {
      const auto p = static_cast<std::int64_t>(pp->first);
      top = fam.b % p == 0 ? fam.n : fam.n + 1;
      break;
    }
    default:
      throw InvalidInput("no permutation criterion for family " + fam.name());
  }
  for (unsigned s = 1; s <= top; ++s) {
    if (nt::gcd_with_power_minus_one(k, q, s) != 1) return false;
  }
  return true;
}

namespace {

PermVerdict make_verdict(const FamilyId& fam, unsigned k, std::uint64_t q, PermMethod method,
                         const DomainEvaluator* dom) {
  PermVerdict v;
  v.family = fam;
  v.k = k;
  v.q = q;
  v.criterion = perm_criterion(fam, k, q);
  if (method != PermMethod::kCriterion) {
    auto r = dom ? perm_brute(*dom, k) : perm_brute(fam, k, q);
    v.brute = r.is_perm;
    v.witness = std::move(r.witness);
    if (method == PermMethod::kBoth) v.agree = *v.brute == v.criterion;
  }
  if (is_lidl_wells(fam.tag) && fam.b % static_cast<std::int64_t>(field_of_order(q).p()) == 0) {
    v.note = "p divides b: criterion over s = 1.." + std::to_string(fam.n);
  }
  return v;
}

}  // namespace

PermVerdict perm_test(const FamilyId& fam, unsigned k, std::uint64_t q, PermMethod method) {
  return make_verdict(fam, k, q, method, nullptr);
}

std::vector<PermVerdict> scan(const FamilyId& fam, const std::vector<unsigned>& ks,
                              const std::vector<std::uint64_t>& qs, const ScanOptions& opts) {
  for (auto q : qs) {
    if (!nt::prime_power(q)) throw InvalidInput(std::to_string(q) + " is not a prime power");
    if (opts.method != PermMethod::kCriterion && q > kBruteMaxQ) {
      throw InvalidInput("q = " + std::to_string(q) + " exceeds the scan budget");
    }
  }
  std::vector<PermVerdict> out(ks.size() * qs.size());
  parallel_for(qs.size(), opts.jobs, [&](std::size_t qi) {
    const std::uint64_t q = qs[qi];
    std::optional<DomainEvaluator> dom;
    if (opts.method != PermMethod::kCriterion && !ks.empty()) dom.emplace(fam, field_of_order(q), opts.route);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      out[ki * qs.size() + qi] = make_verdict(fam, ks[ki], q, opts.method, dom ? &*dom : nullptr);
    }
  });
  return out;
}

bool frobenius_check(const FamilyId& fam, std::uint64_t q, FrobeniusMode mode) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw InvalidInput(std::to_string(q) + " is not a prime power");
  if (q > 0xffffffffULL) throw InvalidInput("q is too large");
  const auto k = static_cast<unsigned>(q);
  if (mode == FrobeniusMode::kSymbolic) {
    const PolyMap reduced = poly_mod_p(family_map(fam, k), pp->first);
    const std::size_t n = reduced.arity();
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e{};
      e[i] = k;
      if (!(reduced[i] == MultiPoly::monomial(n, e, Integer(1)))) return false;
    }
    return true;
  }
  const DomainEvaluator dom(fam, field_of_order(q));
  const auto img = dom.images(k);
  for (std::uint64_t i = 0; i < dom.size(); ++i) {
    if (img[i] != i) return false;  // x^q = x on F_q
  }
  return true;
}

// ------------------------------------------------------------ correspondence

CorrespondenceReport correspondence_check(FamilyTag family, std::uint64_t q) {
  if (family != FamilyTag::kB2 && family != FamilyTag::kG2) {
    throw InvalidInput("the correspondence is only stated for b2 and g2");
  }
  if (q < 2 || !nt::prime_power(q)) throw InvalidInput(std::to_string(q) + " is not a prime power");
  if (q > kBruteMaxQ) throw InvalidInput("q = " + std::to_string(q) + " exceeds the scan budget");
  const FieldCtx& ctx = field_of_order(q);
  const FamilyId fam = family == FamilyTag::kB2 ? FamilyId::b2() : FamilyId::g2();
  const unsigned big_n = family == FamilyTag::kB2 ? 4 : 6;

  CorrespondenceReport rep;
  rep.family = family;
  rep.q = q;
  const FixedPointSet fix = fix_enumerate(family, static_cast<unsigned>(q));
  rep.fixed_points = fix.points.size();

  auto describe = [](const TorusPoint& p) { return "(" + p.sigma.to_string() + ", " + p.tau.to_string() + ")"; };
  std::map<std::uint64_t, TorusPoint> seen;
  std::vector<std::pair<TorusPoint, std::pair<FieldElem, FieldElem>>> reduced;
  for (const auto& p : fix.points) {
    try {
      auto img = phi_field(family, p, ctx);
      const std::uint64_t key = ctx.index_of(img.first) * q + ctx.index_of(img.second);
      auto [it, fresh] = seen.emplace(key, p);
      if (!fresh) {
        rep.problems.push_back("collision: " + describe(p) + " and " + describe(it->second) + " both reduce to (" +
                               to_string(img.first) + ", " + to_string(img.second) + ")");
      }
      reduced.emplace_back(p, img);
    } catch (const std::exception& e) {
      rep.problems.push_back(describe(p) + ": " + e.what());
    }
  }
  rep.distinct_images = seen.size();
  if (rep.fixed_points != q * q) {
    rep.problems.push_back(std::to_string(rep.fixed_points) + " fixed points, expected " + std::to_string(q * q));
  }

  for (unsigned k = 2; rep.equivariance_ks.size() < 3; ++k) {
    if (nt::gcd_with_power_minus_one(k, q, big_n) == 1) rep.equivariance_ks.push_back(k);
  }
  const auto& action = weyl_group(family);
  for (unsigned k : rep.equivariance_ks) {
    const PolyMap map = family_map(fam, k);
    const PolyEvaluator fx(map[0], ctx);
    const PolyEvaluator fy(map[1], ctx);
    for (const auto& [p, img] : reduced) {
      const std::array<FieldElem, 2> pt = {img.first, img.second};
      const auto target = phi_field(family, weyl_canonical(p.scaled(k), action), ctx);
      if (!(fx(pt) == target.first) || !(fy(pt) == target.second)) {
        rep.problems.push_back("k = " + std::to_string(k) + ": reduction does not commute at " + describe(p));
      }
    }
  }
  return rep;
}

// ------------------------------------------------------------ counterexamples

std::vector<unsigned> known_excluded_residues(FamilyTag family) {
  if (family == FamilyTag::kB2) return {1, 5, 8, 12};
  if (family == FamilyTag::kG2) return {1, 3, 4, 9, 10, 12};
  throw InvalidInput("no residue set for this family");
}

Realizability realizability_check(unsigned modulus, const std::vector<unsigned>& excluded, unsigned max_s) {
  Realizability out;
  out.max_s = max_s;
  auto roots_of_unity = [&](unsigned s) {
    std::set<unsigned> r;
    for (unsigned a = 1; a < modulus; ++a) {
      if (nt::powmod(a, s, modulus) == 1) r.insert(a);
    }
    return r;
  };
  const std::set<unsigned> target(excluded.begin(), excluded.end());
  std::set<std::vector<unsigned>> sets;
  for (unsigned mask = 0; mask < (1U << max_s); ++mask) {
    std::set<unsigned> ex;
    for (unsigned s = 1; s <= max_s; ++s) {
      if (mask & (1U << (s - 1))) ex.merge(roots_of_unity(s));
    }
    sets.insert({ex.begin(), ex.end()});
  }
  out.realizable.assign(sets.begin(), sets.end());
  out.expected_realizable = sets.contains({target.begin(), target.end()});
  for (unsigned n = 1; n < modulus; ++n) {
    if (roots_of_unity(n) == target) {
      out.order_exponent = n;
      break;
    }
  }
  return out;
}

ResidueReport counterexample_report(FamilyTag family, unsigned k, std::uint64_t p_max, unsigned jobs) {
  if (family != FamilyTag::kB2 && family != FamilyTag::kG2) {
    throw InvalidInput("counterexample reports are only available for b2 and g2");
  }
  if (k < 2 || !nt::is_prime(k)) throw InvalidInput("the residue report needs a prime k");
  if (p_max > kBruteMaxQ) throw InvalidInput("pmax exceeds the scan budget " + std::to_string(kBruteMaxQ));
  const FamilyId fam = family == FamilyTag::kB2 ? FamilyId::b2() : FamilyId::g2();
  ResidueReport rep;
  rep.modulus = k;
  rep.family = family;
  rep.k = k;
  rep.p_max = p_max;
  if (k == 13) {
    rep.expected_excluded = known_excluded_residues(family);
  } else {
    // k | p^N - 1 depends only on p mod k.
    const unsigned big_n = family == FamilyTag::kB2 ? 4 : 6;
    for (unsigned r = 1; r < k; ++r) {
      if (nt::powmod(r, big_n, k) == 1) rep.expected_excluded.push_back(r);
    }
  }

  std::vector<std::uint64_t> primes;
  for (auto p : nt::primes_up_to(p_max)) {
    if (p != k) primes.push_back(p);
  }
  family_map(fam, k);  // build the recurrence once, outside the workers
  std::vector<char> verdict(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) {
    verdict[i] = perm_brute(fam, k, primes[i], EvalRoute::kSymbolic).is_perm ? 1 : 0;
  });

  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto& cls = rep.classes[static_cast<unsigned>(primes[i] % k)];
    cls.primes.push_back(primes[i]);
    cls.is_perm.push_back(verdict[i] != 0);
  }
  std::set<unsigned> observed;
  for (auto& [r, cls] : rep.classes) {
    cls.consistent = std::all_of(cls.is_perm.begin(), cls.is_perm.end(), [&](bool b) { return b == cls.is_perm[0]; });
    rep.consistent = rep.consistent && cls.consistent;
    if (!cls.is_perm[0]) observed.insert(r);
  }
  rep.observed_excluded.assign(observed.begin(), observed.end());
  // Residues with no sampled prime cannot contradict the expected set.
  std::vector<unsigned> expected_seen;
  for (auto r : rep.expected_excluded) {
    if (rep.classes.contains(r)) expected_seen.push_back(r);
  }
  rep.matches = rep.consistent && expected_seen == rep.observed_excluded;
  rep.realizability = realizability_check(k, rep.expected_excluded);
  return rep;
}

// ------------------------------------------------------------ output

namespace {

nlohmann::json point_json(const std::optional<std::vector<FieldElem>>& w) {
  if (!w) return nullptr;
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : *w) a.push_back(to_string(c));
  return a;
}

std::string family_label(FamilyTag tag) { return tag == FamilyTag::kB2 ? "b2" : "g2"; }

}  // namespace

nlohmann::json to_json(const PermVerdict& v) {
  nlohmann::json j = {{"family", v.family.name()}, {"k", v.k}, {"q", v.q}};
  if (is_lidl_wells(v.family.tag)) {
    j["n"] = v.family.n;
    j["b"] = v.family.b;
  }
  j["brute"] = v.brute ? nlohmann::json(*v.brute) : nlohmann::json(nullptr);
  j["criterion"] = v.criterion;
  j["agree"] = v.agree;
  j["witness"] = point_json(v.witness);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const CorrespondenceReport& r) {
  return {{"family", family_label(r.family)},
          {"q", r.q},
          {"fixed_points", r.fixed_points},
          {"distinct_images", r.distinct_images},
          {"bijective", r.ok()},
          {"equivariance_k", r.equivariance_ks},
          {"problems", r.problems}};
}

nlohmann::json to_json(const ResidueReport& r) {
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& [res, cls] : r.classes) {
    classes[std::to_string(res)] = {{"primes", cls.primes},
                                    {"permutation", cls.is_perm[0]},
                                    {"consistent", cls.consistent}};
  }
  return {{"family", family_label(r.family)},
          {"k", r.k},
          {"modulus", r.modulus},
          {"pmax", r.p_max},
          {"classes", classes},
          {"expected_excluded", r.expected_excluded},
          {"observed_excluded", r.observed_excluded},
          {"consistent", r.consistent},
          {"matches", r.matches},
          {"realizability",
           {{"max_s", r.realizability.max_s},
            {"realizable_sets", r.realizability.realizable},
            {"expected_realizable", r.realizability.expected_realizable},
            {"order_exponent", r.realizability.order_exponent}}}};
}

std::string scan_csv_header() { return "family,k,q,brute,criterion,agree,witness_x,witness_y"; }

std::string to_csv_row(const PermVerdict& v) {
  std::ostringstream os;
  auto b = [](bool x) { return x ? "true" : "false"; };
  os << v.family.name() << ',' << v.k << ',' << v.q << ',' << (v.brute ? b(*v.brute) : "") << ',' << b(v.criterion)
     << ',' << b(v.agree) << ',';
  if (v.witness) {
    os << to_string((*v.witness)[0]) << ',';
    for (std::size_t i = 1; i < v.witness->size(); ++i) os << (i > 1 ? " " : "") << to_string((*v.witness)[i]);
  } else {
    os << ',';
  }
  return os.str();
}

}  // namespace liepoly
