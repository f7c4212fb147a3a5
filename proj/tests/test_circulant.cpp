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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "circinv/circulant.hpp"
#include "circinv/lattice.hpp"

using namespace circinv;

namespace {

Poly xvar(unsigned n, unsigned i) { return Poly::variable(n, Basis::X, i); }

// Independent oracle: Leibniz expansion of the n x n matrix whose entry at
// (row r, col c) is x_{(r - c) mod n}, i.e. columns are cyclic shifts of
// (x0, ..., x_{n-1}).
Poly leibniz_circulant(unsigned n)
{
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    Poly det = Poly::zero(n, Basis::X);
    do {
        // parity of the permutation
        std::vector<bool> seen(n, false);
        int sign = 1;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            unsigned len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        ExpVec e(static_cast<size_t>(n));
        for (unsigned c = 0; c < n; ++c) e.e[(perm[c] + n - c) % n] += 1;
        det.add_term(e, CycElement::from_int(n, sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

TEST_CASE("circulant determinant small cases")
{
    CHECK(circulant_det(1) == xvar(1, 0));

    Poly t2 = xvar(2, 0) * xvar(2, 0) - xvar(2, 1) * xvar(2, 1);
    CHECK(circulant_det(2) == t2);

    Poly t3 = xvar(3, 0) * xvar(3, 0) * xvar(3, 0) + xvar(3, 1) * xvar(3, 1) * xvar(3, 1) +
              xvar(3, 2) * xvar(3, 2) * xvar(3, 2) -
              (xvar(3, 0) * xvar(3, 1) * xvar(3, 2)).scaled(CycElement::from_int(3, 3));
    CHECK(circulant_det(3) == t3);
}

TEST_CASE("circulant determinant matches the Leibniz oracle for n up to 5")
{
    for (unsigned n = 1; n <= 5; ++n) CHECK(circulant_det(n) == leibniz_circulant(n));
}

TEST_CASE("integer coefficients and homogeneity")
{
    for (unsigned n = 1; n <= 10; ++n) {
        Poly t = circulant_det(n);
        CHECK(t.has_integer_coeffs());
        for (const auto& [e, c] : t.terms()) CHECK(e.total_degree() == n);
    }
}

TEST_CASE("expansion guard")
{
    try {
        circulant_det(17);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExpansionTooLarge);
    }
    CHECK_THROWS_AS(circulant_det(5, 4), Error);
    // explicit override lifts the guard
    CHECK_FALSE(circulant_det(5, 5).is_zero());
}

TEST_CASE("block variables")
{
    auto b0 = block_vars(BlockSpec{4, 2, 0});
    REQUIRE(b0.size() == 2);
    CHECK(b0[0] == xvar(4, 0) + xvar(4, 2));
    CHECK(b0[1] == xvar(4, 1) + xvar(4, 3));

    auto b1 = block_vars(BlockSpec{4, 2, 1});
    CHECK(b1[0] == xvar(4, 0) - xvar(4, 2));
    CHECK(b1[1] == xvar(4, 1).scaled(CycElement::zeta_power(4, 1)) +
                       xvar(4, 3).scaled(CycElement::zeta_power(4, 3)));

    // n = p: the blocks are the original variables
    auto bp = block_vars(BlockSpec{5, 5, 0});
    for (unsigned j = 0; j < 5; ++j) CHECK(bp[j] == xvar(5, j));

    CHECK_THROWS_AS(block_vars(BlockSpec{6, 4, 0}), Error);
    CHECK_THROWS_AS(block_vars(BlockSpec{6, 2, 3}), Error);
}

TEST_CASE("block determinants")
{
    Poly a = xvar(4, 0) + xvar(4, 2), b = xvar(4, 1) + xvar(4, 3);
    CHECK(theta_block(BlockSpec{4, 2, 0}) == a * a - b * b);

    Poly c = xvar(4, 0) - xvar(4, 2), d = xvar(4, 1) - xvar(4, 3);
    CHECK(theta_block(BlockSpec{4, 2, 1}) == c * c + d * d);

    for (unsigned p : {2u, 3u, 5u}) CHECK(theta_block(BlockSpec{p, p, 0}) == circulant_det(p));
}

TEST_CASE("factorization identity in the X basis")
{
    for (auto [n, p] : std::vector<std::pair<unsigned, unsigned>>{
             {4, 2}, {6, 2}, {6, 3}, {6, 6}, {8, 2}, {8, 4}, {9, 3}, {10, 5}}) {
        auto fr = verify_factorization(n, p);
        CHECK(fr.ok);
        CHECK(fr.lhs_terms == fr.rhs_terms);
        CHECK_FALSE(fr.first_mismatch.has_value());
    }
    CHECK_THROWS_AS(verify_factorization(6, 4), Error);
}

TEST_CASE("factorization identity in the Y basis")
{
    for (unsigned n = 2; n <= 30; ++n)
        for (unsigned p : divisors(n)) {
            if (p < 2) continue;
            CHECK(verify_factorization_y(n, p).ok);
        }
}

TEST_CASE("block determinant maps to the progression monomial")
{
    // examples with explicit images
    CHECK(theta_block_in_y(BlockSpec{6, 2, 0}) ==
          Poly::monomial(6, Basis::Y, generator_v(6, 2, 0), CycElement::one(6)));
    CHECK(theta_block_in_y(BlockSpec{6, 3, 1}) ==
          Poly::monomial(6, Basis::Y, generator_v(6, 3, 1), CycElement::one(6)));
    CHECK(theta_block_in_y(BlockSpec{2, 2, 0}) ==
          Poly::monomial(2, Basis::Y, ExpVec({1, 1}), CycElement::one(2)));

    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned p : divisors(n)) {
            if (p < 2) continue;
            for (unsigned i = 0; i < n / p; ++i) CHECK(verify_monomial_identity(BlockSpec{n, p, i}));
        }
}

TEST_CASE("factorwise image agrees with the expanded basis change")
{
    // cross-check the factorwise computation against to_y on the expansion
    for (auto [n, p, i] : std::vector<std::array<unsigned, 3>>{
             {4, 2, 0}, {4, 2, 1}, {6, 2, 2}, {6, 3, 0}, {8, 4, 1}, {9, 3, 2}})
        CHECK(theta_block_in_y(BlockSpec{n, p, i}) == to_y(theta_block(BlockSpec{n, p, i})));
}
