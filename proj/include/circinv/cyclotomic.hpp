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

#ifndef CIRCINV_CYCLOTOMIC_HPP
#define CIRCINV_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "circinv/errors.hpp"

namespace circinv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Distinct prime factors of n, ascending.
std::vector<unsigned> prime_factors(unsigned n);

/// Euler's totient, via the prime factorization of n.
unsigned euler_phi(unsigned n);

/// Positive divisors of n, ascending.
std::vector<unsigned> divisors(unsigned n);

/// The n-th cyclotomic polynomial with integer coefficients, ascending degree.
/// Degree is euler_phi(n); leading coefficient 1, constant term nonzero.
struct CyclotomicPoly {
    unsigned n;
    std::vector<Integer> coeffs;

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

/// Computed by exact division of x^n - 1 by the product of the cyclotomic
/// polynomials of the proper divisors of n. Memoized; safe for concurrent
/// callers. Rejects n = 0.
const CyclotomicPoly& cyclotomic_poly(unsigned n);

/// An element of Q(zeta_n) in reduced power-basis coordinates
/// (1, zeta, ..., zeta^{phi(n)-1}). Representation is canonical: equality
/// of elements is coordinate-wise equality, and is_zero is exact.
class CycElement {
public:
    CycElement() : n_(1), coords_(1, Rational(0)) {}

    static CycElement zero(unsigned n);
    static CycElement one(unsigned n);
    static CycElement from_rational(unsigned n, const Rational& r);
    static CycElement from_int(unsigned n, long v) { return from_rational(n, Rational(v)); }
    /// zeta_n^k, k reduced mod n first.
    static CycElement zeta_power(unsigned n, long k);

    unsigned order() const { return n_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    /// True iff all coordinates above the constant one vanish.
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    CycElement operator+(const CycElement& o) const;
    CycElement operator-(const CycElement& o) const;
    CycElement operator-() const;
    CycElement operator*(const CycElement& o) const;
    CycElement& operator+=(const CycElement& o);
    CycElement& operator-=(const CycElement& o);
    CycElement& operator*=(const CycElement& o);
    CycElement scaled(const Rational& r) const;
    /// Extended Euclidean inverse against the n-th cyclotomic polynomial.
    CycElement inverse() const;

    bool operator==(const CycElement& o) const { return n_ == o.n_ && coords_ == o.coords_; }
    bool operator!=(const CycElement& o) const { return !(*this == o); }

    /// Human-readable form, e.g. "1 - 1/2*zeta + zeta^3".
    std::string str() const;

private:
    CycElement(unsigned n, std::vector<Rational> coords) : n_(n), coords_(std::move(coords)) {}
    static void check_same_order(const CycElement& a, const CycElement& b);

    unsigned n_;
    std::vector<Rational> coords_;  // length euler_phi(n)
};

}  // namespace circinv

#endif
