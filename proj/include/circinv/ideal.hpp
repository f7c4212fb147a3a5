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

#ifndef CIRCINV_IDEAL_HPP
#define CIRCINV_IDEAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circinv/lattice.hpp"
#include "circinv/multipoly.hpp"

namespace circinv {

/// Exponent pair of a monomial z^c w^d: c has length n/p, d has length n/q.
struct ZWExp {
    ExpVec c;
    ExpVec d;

    std::int64_t total_degree() const { return c.total_degree() + d.total_degree(); }
    bool operator==(const ZWExp& o) const { return c == o.c && d == o.d; }
};

/// Graded lexicographic order on the concatenated (c, d) exponents.
struct ZWGradedLexLess {
    bool operator()(const ZWExp& a, const ZWExp& b) const;
};

/// Sparse polynomial in the abstract generator variables z_i (0 <= i < n/p)
/// and w_j (0 <= j < n/q) over Q(zeta_n). p and q must divide n; the
/// coprimality and pq | n requirements are enforced where the relation ideal
/// and the substitution homomorphism need them.
class GenPoly {
public:
    using TermMap = std::map<ZWExp, CycElement, ZWGradedLexLess>;

    GenPoly(unsigned n, unsigned p, unsigned q);

    static GenPoly zero(unsigned n, unsigned p, unsigned q) { return GenPoly(n, p, q); }
    static GenPoly constant(unsigned n, unsigned p, unsigned q, const CycElement& c);
    static GenPoly monomial(unsigned n, unsigned p, unsigned q, const ZWExp& exp, const CycElement& c);
    static GenPoly z_var(unsigned n, unsigned p, unsigned q, unsigned i);
    static GenPoly w_var(unsigned n, unsigned p, unsigned q, unsigned j);

    unsigned n() const { return n_; }
    unsigned p() const { return p_; }
    unsigned q() const { return q_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ZWExp& exp, const CycElement& coeff);

    GenPoly operator+(const GenPoly& o) const;
    GenPoly operator-(const GenPoly& o) const;
    GenPoly operator-() const;
    GenPoly operator*(const GenPoly& o) const;
    GenPoly& operator+=(const GenPoly& o);
    GenPoly& operator-=(const GenPoly& o);
    GenPoly scaled(const CycElement& c) const;

    bool operator==(const GenPoly& o) const;
    bool operator!=(const GenPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_compatible(const GenPoly& o) const;

    unsigned n_, p_, q_;
    TermMap terms_;
};

/// The n/(pq) binomial relations prod_j z_{i + n_pq j} - prod_j w_{i + n_pq j}.
/// Requires gcd(p, q) = 1 and pq | n. Each relation maps to zero under the
/// substitution homomorphism (checked).
std::vector<GenPoly> relations(unsigned n, unsigned p, unsigned q);

/// Substitution z_i -> y^{v^(p)_i} for polynomials in the z variables only
/// (all w exponents must be zero).
Poly rho_apply(const GenPoly& F);

/// Substitution z_i -> y^{v^(p)_i}, w_j -> y^{v^(q)_j}; each term z^c w^d
/// maps to y^{sigma(c, d)}. Requires gcd(p, q) = 1 and pq | n.
Poly rho_prime_apply(const GenPoly& F);

/// Cofactors g_0 .. g_{n_pq - 1} with sum g_i * t_i equal to the certified
/// polynomial.
struct Certificate {
    std::vector<GenPoly> cofactors;
};

struct KernelResult {
    bool in_kernel = false;
    std::optional<Poly> witness;  // a nonzero image monomial when not in the kernel
    std::optional<Certificate> certificate;
};

/// Decides kernel membership of the substitution homomorphism by applying it
/// (exact and complete). On request, builds a syzygy certificate by rewriting
/// each sigma-fiber of terms to a common reference monomial, one progression
/// block swap at a time; the certificate is re-verified by expansion before
/// returning.
KernelResult kernel_membership(const GenPoly& F, bool want_certificate);

/// Expands sum g_i * t_i and compares with F term by term.
bool verify_certificate(const GenPoly& F, const Certificate& cert);

struct RhoTrivialityReport {
    bool ok = false;
    std::string detail;
};

/// Verifies that the z-variable substitution is injective: the supports of
/// the images partition the variable index set, and random nonzero
/// polynomials map to nonzero.
RhoTrivialityReport kernel_rho_trivial(unsigned n, unsigned p);

}  // namespace circinv

#endif
