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

#ifndef LIEPOLY_NUMTHEORY_HPP
#define LIEPOLY_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Machine-word number theory used by the field and analyzer layers.
namespace liepoly::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// q = p^m with p prime and m >= 1, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Exact p^m; nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// gcd(k, q^s - 1) computed without forming q^s. gcd(0, n) = n.
std::uint64_t gcd_with_power_minus_one(std::uint64_t k, std::uint64_t q, unsigned s);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace liepoly::nt

#endif  // LIEPOLY_NUMTHEORY_HPP
