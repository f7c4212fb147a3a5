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

#ifndef CIRCINV_INVARIANT_HPP
#define CIRCINV_INVARIANT_HPP

#include <map>
#include <string>
#include <vector>

#include "circinv/circulant.hpp"
#include "circinv/lattice.hpp"
#include "circinv/multipoly.hpp"

namespace circinv {

/// A polynomial in the abstract block-determinant generators: terms are
/// sorted multisets of generator ids with cyclotomic coefficients.
struct GeneratorExpression {
    unsigned n = 0;
    std::map<std::vector<GeneratorId>, CycElement> terms;

    /// Evaluates each generator to its single-monomial image in the y
    /// variables and expands; the result reproduces the source polynomial.
    Poly evaluate_y() const;
    std::string str() const;
};

/// True iff the shift derivation annihilates f. Applied in f's native basis;
/// the two derivations always agree and this is asserted.
bool is_invariant(const Poly& f);

/// Expresses an invariant polynomial in the block-determinant generators by
/// decomposing each Y-monomial exponent over the progression generators.
/// Requires n with at most two prime factors and an invariant input; the
/// round trip through evaluate_y is asserted.
GeneratorExpression express_in_generators(const Poly& f);

struct GapWitness {
    unsigned n = 0;
    ExpVec alpha;
    Poly monomial;  // Y basis
    bool invariant = false;
    OracleResult oracle;

    GapWitness(unsigned n_, ExpVec a, Poly m) : n(n_), alpha(std::move(a)), monomial(std::move(m)) {}
};

/// For n with at least three prime factors: the invariant Y-monomial outside
/// the subring generated by the block determinants, with the oracle's
/// definitive NonMember answer as evidence.
GapWitness gap_witness(unsigned n);

/// Membership in the invariant ring of the determinant-one circulant group:
/// true iff every Y-monomial exponent vector of f is constant.
bool is_sl_invariant(const Poly& f);

}  // namespace circinv

#endif
