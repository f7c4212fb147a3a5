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

#include "circinv/invariant.hpp"

#include <algorithm>
#include <sstream>

namespace circinv {

Poly GeneratorExpression::evaluate_y() const
{
    Poly out(n, Basis::Y);
    for (const auto& [ids, coeff] : terms) {
        ExpVec exp(n);
        for (const auto& id : ids) exp = exp + generator_v(n, id.p, id.i);
        out.add_term(exp, coeff);
    }
    return out;
}

std::string GeneratorExpression::str() const
{
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ids, coeff] : terms) {
        if (!first) os << " + ";
        first = false;
        bool rational_unit = coeff.is_rational() && coeff.rational_value() == 1 && !ids.empty();
        if (!rational_unit) {
            bool simple = coeff.is_rational();
            if (!simple) os << "(";
            os << coeff.str();
            if (!simple) os << ")";
            if (!ids.empty()) os << "*";
        }
        if (ids.empty() && rational_unit) os << "1";
        for (size_t k = 0; k < ids.size();) {
            size_t run = k + 1;
            while (run < ids.size() && ids[run] == ids[k]) ++run;
            if (k) os << "*";
            os << "T(" << ids[k].p << "," << ids[k].i << ")";
            if (run - k > 1) os << "^" << run - k;
            k = run;
        }
    }
    return os.str();
}

bool is_invariant(const Poly& f)
{
    bool d_zero = apply_operator(Operator::D, f).is_zero();
    bool delta_zero = apply_operator(Operator::Delta, f).is_zero();
    if (d_zero != delta_zero)
        throw Error(ErrorCode::Internal, "the two shift derivations disagree on invariance");
    return d_zero;
}

GeneratorExpression express_in_generators(const Poly& f)
{
    const unsigned n = f.n();
    if (prime_factors(n).size() > 2)
        throw Error(ErrorCode::TooManyPrimeFactors,
                    "express_in_generators: n must have at most two prime factors");
    if (!is_invariant(f))
        throw Error(ErrorCode::NotInvariant, "express_in_generators: input is not invariant");
    Poly g = f.basis() == Basis::Y ? f : to_y(f);
    GeneratorExpression expr;
    expr.n = n;
    for (const auto& [alpha, coeff] : g.terms()) {
        Decomposition dec = decompose(alpha, n);
        std::vector<GeneratorId> ids;
        for (const auto& [id, k] : dec.coeffs)
            for (std::int64_t t = 0; t < k; ++t) ids.push_back(id);
        auto [it, inserted] = expr.terms.emplace(std::move(ids), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) expr.terms.erase(it);
        }
    }
    if (expr.evaluate_y() != g)
        throw Error(ErrorCode::Internal, "generator expression does not evaluate back to the input");
    return expr;
}

GapWitness gap_witness(unsigned n)
{
    ExpVec alpha = counterexample(n);  // throws TooFewPrimeFactors below three primes
    Poly mono = Poly::monomial(n, Basis::Y, alpha, CycElement::one(n));
    GapWitness w(n, alpha, mono);
    w.invariant = is_invariant(mono);
    w.oracle = monoid_member_oracle(alpha, n, alpha.total_degree());
    if (!w.invariant || w.oracle.verdict != OracleVerdict::NonMember)
        throw Error(ErrorCode::Internal, "gap witness failed its defining checks");
    return w;
}

bool is_sl_invariant(const Poly& f)
{
    Poly g = f.basis() == Basis::Y ? f : to_y(f);
    for (const auto& [exp, coeff] : g.terms())
        if (!exp.is_constant_vector()) return false;
    return true;
}

}  // namespace circinv
