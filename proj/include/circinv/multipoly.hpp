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

#ifndef CIRCINV_MULTIPOLY_HPP
#define CIRCINV_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "circinv/cyclotomic.hpp"

namespace circinv {

/// Integer exponent vector of length n. Doubles as a lattice vector, where
/// entries may be negative; monomial use sites require nonnegative entries.
struct ExpVec {
    std::vector<std::int64_t> e;

    ExpVec() = default;
    explicit ExpVec(size_t n) : e(n, 0) {}
    explicit ExpVec(std::vector<std::int64_t> v) : e(std::move(v)) {}

    size_t size() const { return e.size(); }
    std::int64_t total_degree() const;
    bool is_nonnegative() const;
    bool is_zero() const;
    bool is_constant_vector() const;  // all entries equal

    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-(const ExpVec& o) const;
    ExpVec scaled(std::int64_t k) const;

    bool operator==(const ExpVec& o) const { return e == o.e; }
    bool operator!=(const ExpVec& o) const { return e != o.e; }

    std::string str() const;
};

/// Graded lexicographic order: total degree first, then lex.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

enum class Basis { X, Y };

inline const char* basis_name(Basis b) { return b == Basis::X ? "x" : "y"; }

/// Sparse multivariate polynomial over Q(zeta_n) in n variables, tagged with
/// the variable family its exponents refer to. No stored coefficient is zero.
class Poly {
public:
    using TermMap = std::map<ExpVec, CycElement, GradedLexLess>;

    Poly(unsigned n, Basis basis) : n_(n), basis_(basis) {}

    static Poly zero(unsigned n, Basis basis) { return Poly(n, basis); }
    static Poly constant(unsigned n, Basis basis, const CycElement& c);
    static Poly monomial(unsigned n, Basis basis, const ExpVec& exp, const CycElement& coeff);
    static Poly variable(unsigned n, Basis basis, unsigned index);

    unsigned n() const { return n_; }
    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t total_degree() const;  // -1 for the zero polynomial

    /// Adds coeff * basis^exp, pruning a resulting zero term.
    void add_term(const ExpVec& exp, const CycElement& coeff);
    CycElement coeff_of(const ExpVec& exp) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly scaled(const CycElement& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// True iff every coefficient is a rational integer.
    bool has_integer_coeffs() const;

    /// Substitutes variable i by forms[i] simultaneously; all forms must share
    /// the order and target basis.
    Poly substitute(const std::vector<Poly>& forms) const;

private:
    void check_compatible(const Poly& o) const;

    unsigned n_;
    Basis basis_;
    TermMap terms_;
};

enum class Operator { D, Delta };

/// The cyclic-shift derivation in either basis. In the X basis it applies
/// sum_i x_{i -+ 1} d/dx_i (indices mod n); in the Y basis each monomial is an
/// eigenvector and is scaled by its eigenvalue sum_i a_i zeta^{+-i}.
Poly apply_operator(Operator which, const Poly& f);

/// Eigenvalue of a Y-monomial under D (sum a_i zeta^i) or Delta (sum a_i zeta^-i).
CycElement operator_eigenvalue(Operator which, unsigned n, const ExpVec& alpha);

/// The linear form for y_i in the x variables: sum_j zeta^{ij} x_j.
Poly y_in_x(unsigned n, unsigned i);
/// The linear form for x_j in the y variables: (1/n) sum_i zeta^{-ij} y_i.
Poly x_in_y(unsigned n, unsigned j);

/// Basis changes; mutually inverse ring isomorphisms.
Poly to_y(const Poly& f);
Poly to_x(const Poly& g);

}  // namespace circinv

#endif
