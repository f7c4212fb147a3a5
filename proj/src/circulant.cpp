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

#include "circinv/circulant.hpp"

#include <sstream>

#include "circinv/lattice.hpp"

namespace circinv {

void BlockSpec::validate() const
{
    if (p < 2 || n % p != 0)
        throw Error(ErrorCode::NotADivisor, "block spec: p must be a divisor of n with p >= 2");
    if (i >= n / p) throw Error(ErrorCode::IndexOutOfRange, "block spec: index must be below n/p");
}

namespace {

void check_expand_guard(unsigned n, unsigned max_expand_n)
{
    if (n > max_expand_n) {
        std::ostringstream os;
        os << "X-basis expansion guard: n = " << n << " exceeds max " << max_expand_n;
        throw Error(ErrorCode::ExpansionTooLarge, os.str());
    }
}

}  // namespace

Poly circulant_det(unsigned n, unsigned max_expand_n)
{
    if (n == 0) throw Error(ErrorCode::InvalidOrder, "circulant_det: n must be positive");
    check_expand_guard(n, max_expand_n);
    Poly prod = Poly::constant(n, Basis::X, CycElement::one(n));
    for (unsigned i = 0; i < n; ++i) prod = prod * y_in_x(n, i);
    if (!prod.has_integer_coeffs())
        throw Error(ErrorCode::Internal, "circulant determinant has non-integer coefficients");
    return prod;
}

std::vector<Poly> block_vars(const BlockSpec& spec)
{
    spec.validate();
    const unsigned n = spec.n, p = spec.p, np = n / p;
    std::vector<Poly> out;
    out.reserve(p);
    for (unsigned j = 0; j < p; ++j) {
        Poly form(n, Basis::X);
        for (unsigned l = 0; l < np; ++l) {
            ExpVec e(n);
            e.e[j + p * l] = 1;
            form.add_term(e, CycElement::zeta_power(n, static_cast<long>(spec.i) * (j + p * l)));
        }
        out.push_back(std::move(form));
    }
    return out;
}

Poly block_factor(const BlockSpec& spec, unsigned j)
{
    spec.validate();
    const unsigned n = spec.n, p = spec.p, np = n / p;
    if (j >= p) throw Error(ErrorCode::IndexOutOfRange, "block_factor: factor index must be below p");
    // zeta_p = zeta_n^{n/p}; the factor is sum_k zeta_p^{jk} y^(p)_{i,k}.
    Poly form(n, Basis::X);
    const auto vars = block_vars(spec);
    for (unsigned k = 0; k < p; ++k)
        form += vars[k].scaled(CycElement::zeta_power(n, static_cast<long>(np) * j * k));
    return form;
}

Poly theta_block(const BlockSpec& spec)
{
    spec.validate();
    Poly prod = Poly::constant(spec.n, Basis::X, CycElement::one(spec.n));
    for (unsigned j = 0; j < spec.p; ++j) prod = prod * block_factor(spec, j);
    return prod;
}

namespace {

FactorizationReport compare_polys(const Poly& lhs, const Poly& rhs)
{
    FactorizationReport rep;
    rep.lhs_terms = lhs.term_count();
    rep.rhs_terms = rhs.term_count();
    Poly diff = lhs - rhs;
    rep.ok = diff.is_zero();
    if (!rep.ok) {
        const auto& [e, c] = *diff.terms().begin();
        std::ostringstream os;
        os << "exponent " << e.str() << " coefficient difference " << c.str();
        rep.first_mismatch = os.str();
    }
    return rep;
}

}  // namespace

FactorizationReport verify_factorization(unsigned n, unsigned p, unsigned max_expand_n)
{
    if (p < 2 || n % p != 0)
        throw Error(ErrorCode::NotADivisor, "verify_factorization: p must divide n, p >= 2");
    check_expand_guard(n, max_expand_n);
    Poly lhs = circulant_det(n, max_expand_n);
    Poly rhs = Poly::constant(n, Basis::X, CycElement::one(n));
    for (unsigned i = 0; i < n / p; ++i) rhs = rhs * theta_block(BlockSpec{n, p, i});
    return compare_polys(lhs, rhs);
}

FactorizationReport verify_factorization_y(unsigned n, unsigned p)
{
    if (p < 2 || n % p != 0)
        throw Error(ErrorCode::NotADivisor, "verify_factorization: p must divide n, p >= 2");
    ExpVec ones(n);
    for (auto& v : ones.e) v = 1;
    Poly lhs = Poly::monomial(n, Basis::Y, ones, CycElement::one(n));
    Poly rhs = Poly::constant(n, Basis::Y, CycElement::one(n));
    for (unsigned i = 0; i < n / p; ++i) rhs = rhs * theta_block_in_y(BlockSpec{n, p, i});
    return compare_polys(lhs, rhs);
}

Poly theta_block_in_y(const BlockSpec& spec)
{
    spec.validate();
    Poly prod = Poly::constant(spec.n, Basis::Y, CycElement::one(spec.n));
    for (unsigned j = 0; j < spec.p; ++j) prod = prod * to_y(block_factor(spec, j));
    return prod;
}

bool verify_monomial_identity(const BlockSpec& spec)
{
    spec.validate();
    Poly image = theta_block_in_y(spec);
    Poly expected =
        Poly::monomial(spec.n, Basis::Y, generator_v(spec.n, spec.p, spec.i), CycElement::one(spec.n));
    return image == expected;
}

}  // namespace circinv
