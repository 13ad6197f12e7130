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

#include "liepoly/lifted.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "liepoly/error.hpp"

namespace liepoly {

unsigned lift_degree(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kDickson:
      return 2;
    case FamilyTag::kB2:
      return 4;
    case FamilyTag::kG2:
      return 6;
    default:
      throw InvalidInput("no lifted evaluation for this family");
  }
}

LiftedEvaluator::LiftedEvaluator(FamilyTag tag, const FieldCtx& base) : tag_(tag), base_(&base) {
  const unsigned n = lift_degree(tag);
  if (base.m() * n > kMaxExtDegree) throw InvalidInput("lift field for " + base.describe() + " is too large");
  ext_ = &field_make(base.p(), base.m() * n);
  emb_ = &embedding(base, *ext_);
}

FieldElem LiftedEvaluator::descend(const FieldElem& a) const {
  auto r = emb_->preimage(a);
  if (!r) throw InvariantViolation("lifted value escaped the base field " + base_->describe());
  return *r;
}

std::pair<FieldElem, FieldElem> LiftedEvaluator::torus_roots(const FieldElem& u) const {
  const std::array<FieldElem, 3> quad = {ext_->one(), -u, ext_->one()};
  auto r = roots_monic(quad, *ext_);
  return {r[0], r[1]};
}

LiftedEvaluator::Lift LiftedEvaluator::lift(std::span<const FieldElem> point) const {
  if (point.size() != arity()) throw InvalidInput("point has the wrong number of coordinates");
  for (const auto& c : point) {
    if (c.ctx() != base_) throw InvalidInput("point is not in " + base_->describe());
  }
  Lift out;
  std::vector<FieldElem> u;
  switch (tag_) {
    case FamilyTag::kDickson:
      u = {emb_->apply(point[0])};
      break;
    case FamilyTag::kB2: {
      // u^2 - x u + y
      const std::array<FieldElem, 3> quad = {emb_->apply(point[1]), -emb_->apply(point[0]), ext_->one()};
      u = roots_monic(quad, *ext_);
      break;
    }
    default: {
      // Back to the surface coordinates, then u^3 - x u^2 + y u - z.
      const FieldElem x = emb_->apply(point[0]);
      const FieldElem y = emb_->apply(point[1]) + x;
      const FieldElem z = x * x - y - y - ext_->from_int(4);
      const std::array<FieldElem, 4> cubic = {-z, y, -x, ext_->one()};
      u = roots_monic(cubic, *ext_);
      break;
    }
  }
  for (std::size_t i = 0; i < u.size(); ++i) std::tie(out.t[i], out.t_inv[i]) = torus_roots(u[i]);
  return out;
}

std::vector<FieldElem> LiftedEvaluator::eval(const Lift& lift, unsigned k) const {
  const std::size_t count = tag_ == FamilyTag::kDickson ? 1 : (tag_ == FamilyTag::kB2 ? 2 : 3);
  std::array<FieldElem, 3> d;
  for (std::size_t i = 0; i < count; ++i) d[i] = lift.t[i].pow(k) + lift.t_inv[i].pow(k);
  switch (tag_) {
    case FamilyTag::kDickson:
      return {descend(d[0])};
    case FamilyTag::kB2:
      return {descend(d[0] + d[1]), descend(d[0] * d[1])};
    default: {
      const FieldElem e1 = d[0] + d[1] + d[2];
      const FieldElem e2 = d[0] * d[1] + d[0] * d[2] + d[1] * d[2];
      return {descend(e1), descend(e2 - e1)};
    }
  }
}

std::vector<FieldElem> LiftedEvaluator::operator()(std::span<const FieldElem> point, unsigned k) const {
  return eval(lift(point), k);
}

const LiftedEvaluator& lifted_evaluator(FamilyTag tag, const FieldCtx& base) {
  static std::mutex mu;
  static std::map<std::pair<int, const FieldCtx*>, std::unique_ptr<LiftedEvaluator>> cache;
  const auto key = std::make_pair(static_cast<int>(tag), &base);
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<LiftedEvaluator>(tag, base)).first;
  return *it->second;
}

std::vector<FieldElem> family_eval_lifted(const FamilyId& fam, unsigned k, std::span<const FieldElem> point,
                                          const FieldCtx& ctx) {
  return lifted_evaluator(fam.tag, ctx)(point, k);
}

}  // namespace liepoly
