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

#ifndef LIEPOLY_LIFTED_HPP
#define LIEPOLY_LIFTED_HPP

#include <array>
#include <span>
#include <vector>

#include "liepoly/families.hpp"
#include "liepoly/fields.hpp"

namespace liepoly {

/// Evaluates D_k, B_k or G_k at points of F_q without the symbolic map.
/// A point is lifted once to torus coordinates t_i in F_{q^N} (N = 2, 4, 6);
/// the k-th member is then t_i -> t_i^k followed by re-symmetrization.
class LiftedEvaluator {
 public:
  struct Lift {
    std::array<FieldElem, 3> t;
    std::array<FieldElem, 3> t_inv;
  };

  LiftedEvaluator(FamilyTag tag, const FieldCtx& base);

  FamilyTag tag() const { return tag_; }
  const FieldCtx& base() const { return *base_; }
  const FieldCtx& ext() const { return *ext_; }
  unsigned arity() const { return tag_ == FamilyTag::kDickson ? 1 : 2; }

  Lift lift(std::span<const FieldElem> point) const;
  std::vector<FieldElem> eval(const Lift& lift, unsigned k) const;
  std::vector<FieldElem> operator()(std::span<const FieldElem> point, unsigned k) const;

 private:
  FieldElem descend(const FieldElem& a) const;
  // t and 1/t from t^2 - u t + 1.
  std::pair<FieldElem, FieldElem> torus_roots(const FieldElem& u) const;

  FamilyTag tag_;
  const FieldCtx* base_;
  const FieldCtx* ext_;
  const Embedding* emb_;
};

/// Extension degree over the base field used for the lift.
unsigned lift_degree(FamilyTag tag);

/// Shared evaluator per (family, field); kDickson, kB2, kG2 only.
const LiftedEvaluator& lifted_evaluator(FamilyTag tag, const FieldCtx& base);

std::vector<FieldElem> family_eval_lifted(const FamilyId& fam, unsigned k, std::span<const FieldElem> point,
                                          const FieldCtx& ctx);

}  // namespace liepoly

#endif  // LIEPOLY_LIFTED_HPP
