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

#ifndef CIRCINV_CIRCULANT_HPP
#define CIRCINV_CIRCULANT_HPP

#include <optional>
#include <string>
#include <vector>

#include "circinv/multipoly.hpp"

namespace circinv {

/// Default cap on n for full X-basis expansions; Y-basis identities stay
/// available at larger n.
inline constexpr unsigned kDefaultMaxExpandN = 16;

struct BlockSpec {
    unsigned n;
    unsigned p;  // divisor of n, >= 2
    unsigned i;  // block index, 0 <= i < n/p

    void validate() const;
};

/// The circulant determinant of order n, expanded in the x variables as the
/// product of its eigenvalue linear forms. All coefficients are rational
/// integers (asserted). Guarded by max_expand_n.
Poly circulant_det(unsigned n, unsigned max_expand_n = kDefaultMaxExpandN);

/// The p block linear forms y^(p)_{i,j} = sum_l zeta^{i(j+pl)} x_{j+pl}.
std::vector<Poly> block_vars(const BlockSpec& spec);

/// The j-th eigenvalue linear form of the p x p block circulant:
/// sum_k zeta_p^{jk} y^(p)_{i,k}, as an X-basis polynomial of degree 1.
Poly block_factor(const BlockSpec& spec, unsigned j);

/// The p x p circulant determinant in the block variables, expanded in the x
/// variables as the product of its p eigenvalue factors.
Poly theta_block(const BlockSpec& spec);

struct FactorizationReport {
    bool ok = false;
    size_t lhs_terms = 0;
    size_t rhs_terms = 0;
    std::optional<std::string> first_mismatch;
};

/// Expands the order-n circulant determinant and the product of its n/p block
/// determinants in the X basis and compares term maps.
FactorizationReport verify_factorization(unsigned n, unsigned p,
                                         unsigned max_expand_n = kDefaultMaxExpandN);

/// Same identity checked in the Y basis, where both sides are products of
/// single-variable monomials; cheap at much larger n.
FactorizationReport verify_factorization_y(unsigned n, unsigned p);

/// Checks that the block determinant maps to the single monomial with the
/// progression exponent vector and unit coefficient under the change to the
/// y variables. The image is computed factorwise (the basis change is a ring
/// homomorphism), so only degree-1 substitutions are expanded.
bool verify_monomial_identity(const BlockSpec& spec);

/// to_y(theta_block(spec)) computed as the product of the images of its
/// linear factors.
Poly theta_block_in_y(const BlockSpec& spec);

}  // namespace circinv

#endif
