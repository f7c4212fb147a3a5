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

#include "circinv/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace circinv {

std::int64_t ExpVec::total_degree() const
{
    std::int64_t s = 0;
    for (auto v : e) s += v;
    return s;
}

bool ExpVec::is_nonnegative() const
{
    return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v >= 0; });
}

bool ExpVec::is_zero() const
{
    return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

bool ExpVec::is_constant_vector() const
{
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] != e[0]) return false;
    return true;
}

ExpVec ExpVec::operator+(const ExpVec& o) const
{
    if (e.size() != o.e.size()) throw Error(ErrorCode::LengthMismatch, "exponent vector lengths differ");
    ExpVec r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const
{
    if (e.size() != o.e.size()) throw Error(ErrorCode::LengthMismatch, "exponent vector lengths differ");
    ExpVec r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

ExpVec ExpVec::scaled(std::int64_t k) const
{
    ExpVec r = *this;
    for (auto& v : r.e) v *= k;
    return r;
}

std::string ExpVec::str() const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << ")";
    return os.str();
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const
{
    std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

Poly Poly::constant(unsigned n, Basis basis, const CycElement& c)
{
    Poly p(n, basis);
    p.add_term(ExpVec(n), c);
    return p;
}

Poly Poly::monomial(unsigned n, Basis basis, const ExpVec& exp, const CycElement& coeff)
{
    if (exp.size() != n) throw Error(ErrorCode::LengthMismatch, "monomial exponent length differs from n");
    if (!exp.is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "monomial exponent must be nonnegative");
    Poly p(n, basis);
    p.add_term(exp, coeff);
    return p;
}

Poly Poly::variable(unsigned n, Basis basis, unsigned index)
{
    if (index >= n) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
    ExpVec e(n);
    e.e[index] = 1;
    return monomial(n, basis, e, CycElement::one(n));
}

std::int64_t Poly::total_degree() const
{
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

void Poly::add_term(const ExpVec& exp, const CycElement& coeff)
{
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CycElement Poly::coeff_of(const ExpVec& exp) const
{
    auto it = terms_.find(exp);
    return it == terms_.end() ? CycElement::zero(n_) : it->second;
}

void Poly::check_compatible(const Poly& o) const
{
    if (n_ != o.n_) throw Error(ErrorCode::OrderMismatch, "polynomial orders differ");
    if (basis_ != o.basis_) throw Error(ErrorCode::BasisMismatch, "polynomial bases differ");
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const
{
    Poly r(n_, basis_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const
{
    check_compatible(o);
    Poly r(n_, basis_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Poly Poly::scaled(const CycElement& c) const
{
    Poly r(n_, basis_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) {
        CycElement prod = t * c;
        if (!prod.is_zero()) r.terms_.emplace(e, std::move(prod));
    }
    return r;
}

bool Poly::operator==(const Poly& o) const
{
    return n_ == o.n_ && basis_ == o.basis_ && terms_ == o.terms_;
}

bool Poly::has_integer_coeffs() const
{
    for (const auto& [e, c] : terms_) {
        if (!c.is_rational()) return false;
        if (c.rational_value().get_den() != 1) return false;
    }
    return true;
}

Poly Poly::substitute(const std::vector<Poly>& forms) const
{
    if (forms.size() != n_) throw Error(ErrorCode::LengthMismatch, "need one substitution form per variable");
    const Basis target = forms.empty() ? basis_ : forms[0].basis();

    // One source variable is eliminated per round over a merged term map, so
    // cancellations collapse intermediates early instead of once at the end.
    // Keys concatenate the residual source exponents with the target ones.
    using Key = std::vector<std::int64_t>;
    using State = std::map<Key, CycElement>;
    State state;
    for (const auto& [exp, coeff] : terms_) {
        Key k(2 * n_, 0);
        std::copy(exp.e.begin(), exp.e.end(), k.begin());
        state.emplace(std::move(k), coeff);
    }

    for (unsigned j = 0; j < n_; ++j) {
        std::vector<Poly> powers{Poly::constant(n_, target, CycElement::one(n_))};
        auto power = [&](std::int64_t k) -> const Poly& {
            while (static_cast<std::int64_t>(powers.size()) <= k)
                powers.push_back(powers.back() * forms[j]);
            return powers[static_cast<size_t>(k)];
        };
        State next;
        auto merge = [&](Key&& k, CycElement&& c) {
            auto it = next.find(k);
            if (it == next.end()) {
                next.emplace(std::move(k), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        for (auto& [key, coeff] : state) {
            std::int64_t e = key[j];
            if (e == 0) {
                Key k = key;
                merge(std::move(k), std::move(coeff));
                continue;
            }
            const Poly& pw = power(e);
            for (const auto& [fe, fc] : pw.terms()) {
                Key k = key;
                k[j] = 0;
                for (unsigned i = 0; i < n_; ++i) k[n_ + i] += fe.e[i];
                CycElement c = coeff * fc;
                if (!c.is_zero()) merge(std::move(k), std::move(c));
            }
        }
        state = std::move(next);
    }

    Poly result(n_, target);
    for (auto& [key, coeff] : state) {
        ExpVec ye(static_cast<size_t>(n_));
        std::copy(key.begin() + n_, key.end(), ye.e.begin());
        result.add_term(ye, coeff);
    }
    return result;
}

CycElement operator_eigenvalue(Operator which, unsigned n, const ExpVec& alpha)
{
    CycElement s = CycElement::zero(n);
    for (unsigned i = 0; i < alpha.size(); ++i) {
        if (alpha.e[i] == 0) continue;
        long sign = which == Operator::D ? 1 : -1;
        s += CycElement::zeta_power(n, sign * static_cast<long>(i)).scaled(Rational(alpha.e[i]));
    }
    return s;
}

Poly apply_operator(Operator which, const Poly& f)
{
    const unsigned n = f.n();
    Poly r(n, f.basis());
    if (f.basis() == Basis::Y) {
        for (const auto& [exp, coeff] : f.terms()) {
            CycElement lambda = operator_eigenvalue(which, n, exp);
            r.add_term(exp, coeff * lambda);
        }
        return r;
    }
    // X basis: sum_i x_{i-1} d/dx_i for D, x_{i+1} d/dx_i for Delta, indices mod n.
    const int shift = which == Operator::D ? -1 : 1;
    for (const auto& [exp, coeff] : f.terms()) {
        for (unsigned i = 0; i < n; ++i) {
            if (exp.e[i] == 0) continue;
            ExpVec d = exp;
            d.e[i] -= 1;
            d.e[(i + n + shift) % n] += 1;
            r.add_term(d, coeff.scaled(Rational(exp.e[i])));
        }
    }
    return r;
}

Poly y_in_x(unsigned n, unsigned i)
{
    Poly p(n, Basis::X);
    for (unsigned j = 0; j < n; ++j) {
        ExpVec e(n);
        e.e[j] = 1;
        p.add_term(e, CycElement::zeta_power(n, static_cast<long>(i) * j));
    }
    return p;
}

Poly x_in_y(unsigned n, unsigned j)
{
    Poly p(n, Basis::Y);
    Rational inv_n(1, n);
    for (unsigned i = 0; i < n; ++i) {
        ExpVec e(n);
        e.e[i] = 1;
        p.add_term(e, CycElement::zeta_power(n, -static_cast<long>(i) * j).scaled(inv_n));
    }
    return p;
}

Poly to_y(const Poly& f)
{
    if (f.basis() != Basis::X) throw Error(ErrorCode::BasisMismatch, "to_y expects an X-basis polynomial");
    const unsigned n = f.n();
    // Substitute with the forms scaled by n so intermediates avoid rational
    // denominators; the forms are linear, so a term of degree d in the image
    // is off by exactly n^d and the factor can be restored at the end.
    std::vector<Poly> forms;
    forms.reserve(n);
    for (unsigned j = 0; j < n; ++j)
        forms.push_back(x_in_y(n, j).scaled(CycElement::from_int(n, static_cast<long>(n))));
    Poly scaled = f.substitute(forms);
    Poly result(n, Basis::Y);
    std::map<std::int64_t, Rational> inv_pow;
    for (const auto& [e, c] : scaled.terms()) {
        std::int64_t d = e.total_degree();
        auto it = inv_pow.find(d);
        if (it == inv_pow.end()) {
            Rational r(1);
            for (std::int64_t k = 0; k < d; ++k) r /= n;
            it = inv_pow.emplace(d, std::move(r)).first;
        }
        result.add_term(e, c.scaled(it->second));
    }
    return result;
}

Poly to_x(const Poly& g)
{
    if (g.basis() != Basis::Y) throw Error(ErrorCode::BasisMismatch, "to_x expects a Y-basis polynomial");
    std::vector<Poly> forms;
    forms.reserve(g.n());
    for (unsigned i = 0; i < g.n(); ++i) forms.push_back(y_in_x(g.n(), i));
    return g.substitute(forms);
}

}  // namespace circinv
