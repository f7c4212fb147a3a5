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

#include "circinv/ideal.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace circinv {

bool ZWGradedLexLess::operator()(const ZWExp& a, const ZWExp& b) const
{
    std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    if (a.c.e != b.c.e) return a.c.e < b.c.e;
    return a.d.e < b.d.e;
}

GenPoly::GenPoly(unsigned n, unsigned p, unsigned q) : n_(n), p_(p), q_(q)
{
    if (p < 2 || n % p != 0 || q < 2 || n % q != 0)
        throw Error(ErrorCode::NotADivisor, "GenPoly: p and q must be divisors of n, >= 2");
}

GenPoly GenPoly::constant(unsigned n, unsigned p, unsigned q, const CycElement& c)
{
    GenPoly g(n, p, q);
    g.add_term(ZWExp{ExpVec(n / p), ExpVec(n / q)}, c);
    return g;
}

GenPoly GenPoly::monomial(unsigned n, unsigned p, unsigned q, const ZWExp& exp, const CycElement& c)
{
    GenPoly g(n, p, q);
    if (exp.c.size() != n / p || exp.d.size() != n / q)
        throw Error(ErrorCode::LengthMismatch, "GenPoly monomial: exponent lengths must be n/p and n/q");
    if (!exp.c.is_nonnegative() || !exp.d.is_nonnegative())
        throw Error(ErrorCode::NegativeEntry, "GenPoly monomial: exponents must be nonnegative");
    g.add_term(exp, c);
    return g;
}

GenPoly GenPoly::z_var(unsigned n, unsigned p, unsigned q, unsigned i)
{
    if (i >= n / p) throw Error(ErrorCode::IndexOutOfRange, "z variable index out of range");
    ZWExp e{ExpVec(n / p), ExpVec(n / q)};
    e.c.e[i] = 1;
    return monomial(n, p, q, e, CycElement::one(n));
}

GenPoly GenPoly::w_var(unsigned n, unsigned p, unsigned q, unsigned j)
{
    if (j >= n / q) throw Error(ErrorCode::IndexOutOfRange, "w variable index out of range");
    ZWExp e{ExpVec(n / p), ExpVec(n / q)};
    e.d.e[j] = 1;
    return monomial(n, p, q, e, CycElement::one(n));
}

void GenPoly::add_term(const ZWExp& exp, const CycElement& coeff)
{
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GenPoly::check_compatible(const GenPoly& o) const
{
    if (n_ != o.n_ || p_ != o.p_ || q_ != o.q_)
        throw Error(ErrorCode::OrderMismatch, "GenPoly operands live in different rings");
}

GenPoly GenPoly::operator+(const GenPoly& o) const
{
    GenPoly r = *this;
    r += o;
    return r;
}

GenPoly GenPoly::operator-(const GenPoly& o) const
{
    GenPoly r = *this;
    r -= o;
    return r;
}

GenPoly GenPoly::operator-() const
{
    GenPoly r(n_, p_, q_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GenPoly& GenPoly::operator+=(const GenPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GenPoly GenPoly::operator*(const GenPoly& o) const
{
    check_compatible(o);
    GenPoly r(n_, p_, q_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(ZWExp{ea.c + eb.c, ea.d + eb.d}, ca * cb);
    return r;
}

GenPoly GenPoly::scaled(const CycElement& c) const
{
    GenPoly r(n_, p_, q_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) {
        CycElement prod = t * c;
        if (!prod.is_zero()) r.terms_.emplace(e, std::move(prod));
    }
    return r;
}

bool GenPoly::operator==(const GenPoly& o) const
{
    return n_ == o.n_ && p_ == o.p_ && q_ == o.q_ && terms_ == o.terms_;
}

std::string GenPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = c.is_rational() && c.rational_value() == 1 && e.total_degree() > 0;
        if (!unit) {
            bool simple = c.is_rational();
            if (!simple) os << "(";
            os << c.str();
            if (!simple) os << ")";
        }
        bool printed = !unit;
        auto emit = [&](char name, const ExpVec& exp) {
            for (size_t i = 0; i < exp.size(); ++i) {
                if (exp.e[i] == 0) continue;
                if (printed) os << "*";
                printed = true;
                os << name << i;
                if (exp.e[i] > 1) os << "^" << exp.e[i];
            }
        };
        emit('z', e.c);
        emit('w', e.d);
        if (!printed) os << "";  // constant already emitted
    }
    return os.str();
}

namespace {

void require_coprime_pair(unsigned n, unsigned p, unsigned q)
{
    if (std::gcd(p, q) != 1) throw Error(ErrorCode::NotCoprime, "p and q must be coprime");
    if (p < 2 || q < 2 || n % (p * q) != 0)
        throw Error(ErrorCode::NotADivisor, "pq must divide n with p, q >= 2");
}

}  // namespace

std::vector<GenPoly> relations(unsigned n, unsigned p, unsigned q)
{
    require_coprime_pair(n, p, q);
    const unsigned npq = n / (p * q);
    std::vector<GenPoly> out;
    out.reserve(npq);
    for (unsigned i = 0; i < npq; ++i) {
        ZWExp zu{ExpVec(n / p), ExpVec(n / q)};
        for (unsigned j = 0; j < q; ++j) zu.c.e[i + npq * j] = 1;
        ZWExp wv{ExpVec(n / p), ExpVec(n / q)};
        for (unsigned j = 0; j < p; ++j) wv.d.e[i + npq * j] = 1;
        GenPoly t(n, p, q);
        t.add_term(zu, CycElement::one(n));
        t.add_term(wv, -CycElement::one(n));
        if (!rho_prime_apply(t).is_zero())
            throw Error(ErrorCode::Internal, "relation does not map to zero");
        out.push_back(std::move(t));
    }
    return out;
}

Poly rho_apply(const GenPoly& F)
{
    Poly out(F.n(), Basis::Y);
    for (const auto& [e, c] : F.terms()) {
        if (!e.d.is_zero())
            throw Error(ErrorCode::LengthMismatch, "rho_apply: polynomial must use z variables only");
        ExpVec alpha(F.n());
        for (unsigned i = 0; i < e.c.size(); ++i)
            if (e.c.e[i] != 0) alpha = alpha + generator_v(F.n(), F.p(), i).scaled(e.c.e[i]);
        out.add_term(alpha, c);
    }
    return out;
}

Poly rho_prime_apply(const GenPoly& F)
{
    require_coprime_pair(F.n(), F.p(), F.q());
    Poly out(F.n(), Basis::Y);
    for (const auto& [e, c] : F.terms()) out.add_term(sigma(F.n(), F.p(), F.q(), e.c.e, e.d.e), c);
    return out;
}

namespace {

// Rewrites a * z^c w^d to a * z^{c_ref} w^{d_ref} plus cofactor * relation
// contributions accumulated into cofactors; one block swap per step.
void rewrite_to_reference(unsigned n, unsigned p, unsigned q, const ZWExp& from, const ZWExp& ref,
                          const CycElement& a, std::vector<GenPoly>& cofactors)
{
    const unsigned npq = n / (p * q);
    std::vector<std::int64_t> m(npq);
    for (unsigned i = 0; i < npq; ++i) {
        m[i] = from.c.e[i] - ref.c.e[i];
        for (unsigned j = 0; j < q; ++j)
            if (from.c.e[i + npq * j] - ref.c.e[i + npq * j] != m[i])
                throw Error(ErrorCode::Internal, "fiber difference is not block constant on z");
        for (unsigned j = 0; j < p; ++j)
            if (from.d.e[i + npq * j] - ref.d.e[i + npq * j] != -m[i])
                throw Error(ErrorCode::Internal, "fiber difference is not block constant on w");
    }

    ZWExp cur = from;
    auto strip_u = [&](unsigned i) {
        for (unsigned j = 0; j < q; ++j) cur.c.e[i + npq * j] -= 1;
    };
    auto add_u = [&](unsigned i) {
        for (unsigned j = 0; j < q; ++j) cur.c.e[i + npq * j] += 1;
    };
    auto strip_v = [&](unsigned i) {
        for (unsigned j = 0; j < p; ++j) cur.d.e[i + npq * j] -= 1;
    };
    auto add_v = [&](unsigned i) {
        for (unsigned j = 0; j < p; ++j) cur.d.e[i + npq * j] += 1;
    };

    // Positive blocks first, then negative, ascending index within each group.
    for (unsigned i = 0; i < npq; ++i) {
        for (std::int64_t step = 0; step < m[i]; ++step) {
            strip_u(i);  // u_i * R = v_i * R + t_i * R
            cofactors[i].add_term(cur, a);
            add_v(i);
        }
    }
    for (unsigned i = 0; i < npq; ++i) {
        for (std::int64_t step = 0; step < -m[i]; ++step) {
            strip_v(i);  // v_i * R = u_i * R - t_i * R
            cofactors[i].add_term(cur, -a);
            add_u(i);
        }
    }
    if (!(cur == ref)) throw Error(ErrorCode::Internal, "block rewriting did not reach the reference");
}

}  // namespace

KernelResult kernel_membership(const GenPoly& F, bool want_certificate)
{
    KernelResult res;
    Poly image = rho_prime_apply(F);
    if (!image.is_zero()) {
        res.in_kernel = false;
        const auto& [exp, coeff] = *image.terms().begin();
        res.witness = Poly::monomial(F.n(), Basis::Y, exp, coeff);
        return res;
    }
    res.in_kernel = true;
    if (!want_certificate) return res;

    const unsigned n = F.n(), p = F.p(), q = F.q();
    const unsigned npq = n / (p * q);
    std::vector<GenPoly> cofactors(npq, GenPoly::zero(n, p, q));

    // Group terms by their image exponent; the term map order makes the
    // graded-lex least pair of each fiber its reference.
    std::map<ExpVec, std::vector<std::pair<ZWExp, CycElement>>, GradedLexLess> fibers;
    for (const auto& [e, c] : F.terms())
        fibers[sigma(n, p, q, e.c.e, e.d.e)].emplace_back(e, c);

    for (const auto& [alpha, terms] : fibers) {
        const ZWExp& ref = terms.front().first;
        CycElement coeff_sum = CycElement::zero(n);
        for (const auto& [e, c] : terms) {
            coeff_sum += c;
            if (e == ref) continue;
            rewrite_to_reference(n, p, q, e, ref, c, cofactors);
        }
        if (!coeff_sum.is_zero())
            throw Error(ErrorCode::Internal, "fiber coefficient sum is nonzero for a kernel element");
    }

    Certificate cert;
    cert.cofactors = std::move(cofactors);
    if (!verify_certificate(F, cert))
        throw Error(ErrorCode::Internal, "constructed certificate failed verification");
    res.certificate = std::move(cert);
    return res;
}

bool verify_certificate(const GenPoly& F, const Certificate& cert)
{
    const unsigned n = F.n(), p = F.p(), q = F.q();
    auto rels = relations(n, p, q);
    if (cert.cofactors.size() != rels.size())
        throw Error(ErrorCode::LengthMismatch, "certificate length differs from the relation count");
    GenPoly acc = GenPoly::zero(n, p, q);
    for (size_t i = 0; i < rels.size(); ++i) acc += cert.cofactors[i] * rels[i];
    return acc == F;
}

RhoTrivialityReport kernel_rho_trivial(unsigned n, unsigned p)
{
    if (p < 2 || n % p != 0)
        throw Error(ErrorCode::NotADivisor, "kernel_rho_trivial: p must divide n, p >= 2");
    RhoTrivialityReport rep;
    const unsigned np = n / p;
    std::vector<bool> seen(n, false);
    for (unsigned i = 0; i < np; ++i) {
        ExpVec v = generator_v(n, p, i);
        for (unsigned pos = 0; pos < n; ++pos) {
            if (v.e[pos] == 0) continue;
            if (seen[pos]) {
                rep.ok = false;
                rep.detail = "image supports overlap at position " + std::to_string(pos);
                return rep;
            }
            seen[pos] = true;
        }
    }
    for (unsigned pos = 0; pos < n; ++pos) {
        if (!seen[pos]) {
            rep.ok = false;
            rep.detail = "image supports miss position " + std::to_string(pos);
            return rep;
        }
    }
    // Disjoint supports make distinct z-monomials map to distinct y-monomials,
    // so random nonzero polynomials must map to nonzero.
    std::mt19937 rng(20260823u + n * 131u + p);
    std::uniform_int_distribution<int> expo(0, 3), coeff(-4, 4), count(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        GenPoly f(n, p, p);
        int terms = count(rng);
        for (int t = 0; t < terms; ++t) {
            ZWExp e{ExpVec(np), ExpVec(np)};
            for (unsigned i = 0; i < np; ++i) e.c.e[i] = expo(rng);
            int a = coeff(rng);
            if (a == 0) a = 1;
            f.add_term(e, CycElement::from_int(n, a));
        }
        if (!f.is_zero() && rho_apply(f).is_zero()) {
            rep.ok = false;
            rep.detail = "nonzero polynomial mapped to zero";
            return rep;
        }
    }
    rep.ok = true;
    rep.detail = "supports partition {0.." + std::to_string(n - 1) + "}; random nonzero inputs map to nonzero";
    return rep;
}

}  // namespace circinv
