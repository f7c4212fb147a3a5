/*
   Copyright 2026 the circinv developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CIRCINV_LATTICE_HPP
#define CIRCINV_LATTICE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "circinv/multipoly.hpp"

namespace circinv {

/// Identifies the 0/1 vector supported on the arithmetic progression
/// i, i + n/p, ..., i + (p-1) n/p. Indices are normalized mod n/p.
struct GeneratorId {
    unsigned p = 0;
    unsigned i = 0;

    auto operator<=>(const GeneratorId&) const = default;
};

/// Nonnegative integer combination over the progression generators; only
/// strictly positive coefficients are stored.
struct Decomposition {
    unsigned n = 0;
    std::map<GeneratorId, std::int64_t> coeffs;

    ExpVec reconstruct() const;
    std::int64_t coeff_sum() const;
};

/// True iff sum_i alpha_i zeta_n^i reduces to zero.
bool in_Vn(unsigned n, const ExpVec& alpha);

/// The shifted cyclotomic-coefficient vectors; a basis of the relation
/// lattice, of size n - phi(n). Empty for n = 1.
std::vector<ExpVec> basis_Sn(unsigned n);

/// Exact rank over the rationals.
unsigned rational_rank(const std::vector<ExpVec>& vectors);

/// The 0/1 progression vector for divisor p of n at index i (normalized mod n/p).
ExpVec generator_v(unsigned n, unsigned p, long i);

/// All progression generators over the prime divisors of n, in (p, i) order.
std::vector<std::pair<GeneratorId, ExpVec>> generators_Tn(unsigned n);

/// Integer combination sum_i c_i v^(p)_i + sum_i d_i v^(q)_i.
ExpVec sigma(unsigned n, unsigned p, unsigned q, const std::vector<std::int64_t>& c,
             const std::vector<std::int64_t>& d);

/// Integer combination over all prime factors of n; one coefficient vector per
/// prime factor, ascending, of length n / p_j each.
ExpVec tau(unsigned n, const std::vector<std::vector<std::int64_t>>& coeff_vectors);

/// Expresses a nonnegative lattice vector as a nonnegative integer combination
/// of the progression generators. n must have at most two prime factors.
/// Single prime factor p: coefficients are the leading n/p entries of alpha.
/// Two prime factors p < q: exact rational solve in the basis
/// {v^(p)_i} ∪ {v^(q)_i, i < n/q - n/(pq)}, followed by the min-shift
/// rebalancing that moves whole progression blocks from the p side to the q
/// side; nonnegativity and integrality of the result are asserted.
Decomposition decompose(const ExpVec& alpha, unsigned n);

/// A nonnegative lattice vector outside the nonnegative span of the
/// generators, for n with at least three prime factors. Built from the three
/// smallest primes p < q < r as v-combination with one negative part whose
/// expansion is nonnegative entrywise.
ExpVec counterexample(unsigned n);

enum class OracleVerdict { Member, NonMember, BudgetExceeded };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::NonMember;
    std::optional<Decomposition> decomposition;  // present for Member
    std::int64_t search_bound = 0;               // coefficient-sum cap actually applied
};

/// Exhaustive bounded search for membership in the nonnegative span of the
/// generators. Coefficients are bounded per generator by the minimum of alpha
/// over its support, and the total coefficient sum by
/// min(budget, total_degree(alpha)/2). NonMember is definitive whenever the
/// budget was not the binding constraint.
OracleResult monoid_member_oracle(const ExpVec& alpha, unsigned n, std::int64_t budget);

}  // namespace circinv

#endif
