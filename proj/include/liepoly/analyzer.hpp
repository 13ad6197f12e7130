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

#ifndef LIEPOLY_ANALYZER_HPP
#define LIEPOLY_ANALYZER_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "liepoly/families.hpp"
#include "liepoly/fields.hpp"
#include "liepoly/lifted.hpp"
#include "liepoly/polycore.hpp"

namespace liepoly {

/// Largest q accepted by the exhaustive tests.
inline constexpr std::uint64_t kBruteMaxQ = 256;
/// Largest domain (q^arity points) accepted by the exhaustive tests.
inline constexpr std::uint64_t kBruteMaxPoints = std::uint64_t{1} << 20;

enum class EvalRoute {
  kAuto,      // lifted for small or non-prime q, symbolic for prime q > 64
  kLifted,    // torus coordinates in an extension field
  kSymbolic,  // the integer polynomial map reduced into F_q
};

/// Every point of F_q^arity under one family, for any number of k.
/// Points are indexed with the first coordinate most significant, each
/// coordinate by its FieldCtx::element index.
class DomainEvaluator {
 public:
  DomainEvaluator(const FamilyId& fam, const FieldCtx& ctx, EvalRoute route = EvalRoute::kAuto);

  const FamilyId& family() const { return fam_; }
  const FieldCtx& ctx() const { return *ctx_; }
  std::uint64_t size() const { return size_; }
  EvalRoute route() const { return route_; }

  std::vector<FieldElem> point(std::uint64_t index) const;
  std::uint64_t index_of(std::span<const FieldElem> point) const;
  /// Index of the image of every point under the k-th member.
  std::vector<std::uint32_t> images(unsigned k) const;
  std::vector<FieldElem> eval(std::uint64_t index, unsigned k) const;

 private:
  FamilyId fam_;
  const FieldCtx* ctx_;
  EvalRoute route_;
  unsigned arity_;
  std::uint64_t size_;
  const LiftedEvaluator* lifted_ = nullptr;
  std::vector<LiftedEvaluator::Lift> lifts_;
};

struct BruteResult {
  bool is_perm = false;
  std::optional<std::vector<FieldElem>> witness;  // a point with no preimage
};

/// Surjectivity test over all of F_q^arity. A missed point is confirmed by a
/// second full evaluation pass; InvariantViolation if the passes disagree.
BruteResult perm_brute(const DomainEvaluator& dom, unsigned k);
BruteResult perm_brute(const FamilyId& fam, unsigned k, std::uint64_t q, EvalRoute route = EvalRoute::kAuto);

/// gcd(k, q^N - 1) = 1 with N = 2 (Dickson), 4 (B2), 6 (G2). For Lidl-Wells,
/// gcd(k, q^s - 1) = 1 for every s = 1..n+1, or s = 1..n when p | b.
bool perm_criterion(const FamilyId& fam, unsigned k, std::uint64_t q);

struct PermVerdict {
  FamilyId family;
  unsigned k = 0;
  std::uint64_t q = 0;
  std::optional<bool> brute;
  bool criterion = false;
  bool agree = true;
  std::optional<std::vector<FieldElem>> witness;
  std::string note;
};

enum class PermMethod { kBrute, kCriterion, kBoth };

PermVerdict perm_test(const FamilyId& fam, unsigned k, std::uint64_t q, PermMethod method);

struct ScanOptions {
  unsigned jobs = 1;
  PermMethod method = PermMethod::kBoth;
  EvalRoute route = EvalRoute::kAuto;
};

/// All (k, q) cells, ordered by k then by position in qs. Each q is
/// evaluated by one worker so lifts are shared across k.
std::vector<PermVerdict> scan(const FamilyId& fam, const std::vector<unsigned>& ks,
                              const std::vector<std::uint64_t>& qs, const ScanOptions& opts = {});

enum class FrobeniusMode { kSymbolic, kPointwise };

/// The q-th member agrees with (x1^q, ..., xn^q): modulo p as polynomials, or
/// as functions on F_q^arity.
bool frobenius_check(const FamilyId& fam, std::uint64_t q, FrobeniusMode mode);

struct CorrespondenceReport {
  FamilyTag family = FamilyTag::kB2;
  std::uint64_t q = 0;
  std::size_t fixed_points = 0;
  std::size_t distinct_images = 0;
  std::vector<unsigned> equivariance_ks;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty() && distinct_images == q * q; }
};

/// Reduces Fix(F_q) onto F_q^2 through phi_field and checks for a bijection,
/// then checks reduction against the first three k >= 2 prime to q^N - 1.
CorrespondenceReport correspondence_check(FamilyTag family, std::uint64_t q);

struct Realizability {
  unsigned max_s = 3;
  /// Excluded residue sets {r : r^s = 1 mod m for some s in S}, S within 1..max_s.
  std::vector<std::vector<unsigned>> realizable;
  bool expected_realizable = false;
  /// Smallest N with excluded = {r : r^N = 1 mod m}, 0 if none.
  unsigned order_exponent = 0;
};

struct ResidueReport {
  unsigned modulus = 13;
  FamilyTag family = FamilyTag::kB2;
  unsigned k = 13;
  std::uint64_t p_max = 0;
  struct ResidueClass {
    std::vector<std::uint64_t> primes;
    std::vector<bool> is_perm;
    bool consistent = true;
  };
  std::map<unsigned, ResidueClass> classes;
  std::vector<unsigned> expected_excluded;
  std::vector<unsigned> observed_excluded;
  bool consistent = true;
  bool matches = false;
  Realizability realizability;
};

/// Residues mod 13 for which B_13 / G_13 fails to permute F_p^2.
std::vector<unsigned> known_excluded_residues(FamilyTag family);

/// Brute verdict of the k-th member on F_p^2 for every prime p <= p_max,
/// p != k, grouped by p mod k and compared with the expected residue set.
ResidueReport counterexample_report(FamilyTag family, unsigned k, std::uint64_t p_max, unsigned jobs = 1);

Realizability realizability_check(unsigned modulus, const std::vector<unsigned>& excluded, unsigned max_s = 3);

/// Runs fn(i) for i in [0, n) on up to jobs threads; the first exception is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

nlohmann::json to_json(const PermVerdict& v);
nlohmann::json to_json(const CorrespondenceReport& r);
nlohmann::json to_json(const ResidueReport& r);
std::string scan_csv_header();
std::string to_csv_row(const PermVerdict& v);

}  // namespace liepoly

#endif  // LIEPOLY_ANALYZER_HPP
