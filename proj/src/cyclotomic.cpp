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

#include "circinv/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace circinv {

std::vector<unsigned> prime_factors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

unsigned euler_phi(unsigned n)
{
    if (n == 0) throw Error(ErrorCode::InvalidOrder, "euler_phi: n must be positive");
    unsigned result = n;
    for (unsigned p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

std::vector<unsigned> divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

namespace {

// Exact division of integer polynomials, remainder must be zero.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num, const std::vector<Integer>& den)
{
    std::vector<Integer> rem = num;
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    const size_t dd = den.size() - 1;
    for (size_t k = rem.size(); k-- > dd;) {
        Integer c = rem[k] / den[dd];
        if (c * den[dd] != rem[k])
            throw Error(ErrorCode::Internal, "cyclotomic division not exact");
        quot[k - dd] = c;
        for (size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw Error(ErrorCode::Internal, "cyclotomic division left a remainder");
    return quot;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Integer> compute_cyclotomic(unsigned n)
{
    if (n == 1) return {Integer(-1), Integer(1)};
    // x^n - 1 divided by the product of the proper-divisor cyclotomics.
    std::vector<Integer> den{Integer(1)};
    for (unsigned d : divisors(n))
        if (d < n) den = poly_mul(den, cyclotomic_poly(d).coeffs);
    std::vector<Integer> num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    return poly_div_exact(num, den);
}

// Per-order data shared by all CycElement operations: the cyclotomic
// coefficients as rationals and the reduction rows for zeta^k, phi <= k < 2*phi.
struct FieldContext {
    unsigned n = 0;
    unsigned phi = 0;
    std::vector<Rational> phi_coeffs;                // length phi + 1
    std::vector<std::vector<Rational>> power_rows;   // power_rows[k] = zeta^{phi + k} in the basis
    std::vector<std::vector<Integer>> power_rows_z;  // same rows with integer entries
};

void reduce_once(std::vector<Rational>& v, const FieldContext& ctx)
{
    // Reduce a coefficient vector of arbitrary length to length phi in place.
    const unsigned phi = ctx.phi;
    while (v.size() > phi) {
        Rational top = v.back();
        v.pop_back();
        if (top == 0) continue;
        const size_t shift = v.size() - phi;  // x^{phi + shift} position removed
        for (unsigned j = 0; j < phi; ++j) {
            Rational t = top * ctx.phi_coeffs[j];
            v[shift + j] -= t;
        }
    }
    v.resize(phi, Rational(0));
}

const FieldContext& field_context(unsigned n)
{
    static std::mutex mtx;
    static std::map<unsigned, std::unique_ptr<FieldContext>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<FieldContext>();
    ctx->n = n;
    const CyclotomicPoly& cp = cyclotomic_poly(n);
    ctx->phi = cp.degree();
    ctx->phi_coeffs.reserve(cp.coeffs.size());
    for (const auto& c : cp.coeffs) ctx->phi_coeffs.emplace_back(c);
    // Rows for zeta^{phi}..zeta^{2 phi - 2}, enough for products of reduced elements.
    ctx->power_rows.resize(ctx->phi == 0 ? 0 : ctx->phi - 1);
    for (unsigned k = 0; k + 1 < ctx->phi; ++k) {
        std::vector<Rational> v(ctx->phi + k + 1, Rational(0));
        v.back() = 1;
        reduce_once(v, *ctx);
        ctx->power_rows[k] = std::move(v);
    }
    // The rows are integral because the cyclotomic polynomial is monic over Z.
    ctx->power_rows_z.resize(ctx->power_rows.size());
    for (size_t k = 0; k < ctx->power_rows.size(); ++k)
        for (const auto& r : ctx->power_rows[k]) ctx->power_rows_z[k].push_back(r.get_num());
    auto& slot = cache[n];
    slot = std::move(ctx);
    return *slot;
}

}  // namespace

const CyclotomicPoly& cyclotomic_poly(unsigned n)
{
    if (n == 0) throw Error(ErrorCode::InvalidOrder, "cyclotomic_poly: n must be positive");
    static std::mutex mtx;
    static std::map<unsigned, std::unique_ptr<CyclotomicPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    // Computed outside the lock; recursion over divisors re-enters this function.
    auto poly = std::make_unique<CyclotomicPoly>();
    poly->n = n;
    poly->coeffs = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[n];
    if (!slot) slot = std::move(poly);
    return *slot;
}

CycElement CycElement::zero(unsigned n)
{
    return CycElement(n, std::vector<Rational>(euler_phi(n), Rational(0)));
}

CycElement CycElement::one(unsigned n)
{
    auto e = zero(n);
    e.coords_[0] = 1;
    return e;
}

CycElement CycElement::from_rational(unsigned n, const Rational& r)
{
    auto e = zero(n);
    e.coords_[0] = r;
    return e;
}

CycElement CycElement::zeta_power(unsigned n, long k)
{
    const auto& ctx = field_context(n);
    long kk = k % static_cast<long>(n);
    if (kk < 0) kk += n;
    std::vector<Rational> v(static_cast<size_t>(kk) + 1, Rational(0));
    v.back() = 1;
    reduce_once(v, ctx);
    return CycElement(n, std::move(v));
}

bool CycElement::is_zero() const
{
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycElement::is_rational() const
{
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational CycElement::rational_value() const
{
    if (!is_rational()) throw Error(ErrorCode::Internal, "CycElement is not rational");
    return coords_[0];
}

void CycElement::check_same_order(const CycElement& a, const CycElement& b)
{
    if (a.n_ != b.n_)
        throw Error(ErrorCode::OrderMismatch, "CycElement operands have different orders");
}

CycElement CycElement::operator+(const CycElement& o) const
{
    CycElement r = *this;
    r += o;
    return r;
}

CycElement CycElement::operator-(const CycElement& o) const
{
    CycElement r = *this;
    r -= o;
    return r;
}

CycElement CycElement::operator-() const
{
    CycElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycElement& CycElement::operator+=(const CycElement& o)
{
    check_same_order(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CycElement& CycElement::operator-=(const CycElement& o)
{
    check_same_order(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

namespace {

bool all_integral(const std::vector<Rational>& v)
{
    for (const auto& c : v)
        if (c.get_den() != 1) return false;
    return true;
}

}  // namespace

CycElement CycElement::operator*(const CycElement& o) const
{
    check_same_order(*this, o);
    const auto& ctx = field_context(n_);
    const unsigned phi = ctx.phi;
    if (all_integral(coords_) && all_integral(o.coords_)) {
        // Integer fast path: mpz convolution and reduction, no gcd work.
        std::vector<Integer> conv(2 * phi - 1, Integer(0));
        for (unsigned i = 0; i < phi; ++i) {
            if (coords_[i] == 0) continue;
            mpz_srcptr a = mpq_numref(coords_[i].get_mpq_t());
            for (unsigned j = 0; j < phi; ++j) {
                if (o.coords_[j] == 0) continue;
                mpz_addmul(conv[i + j].get_mpz_t(), a, mpq_numref(o.coords_[j].get_mpq_t()));
            }
        }
        for (unsigned k = phi; k < 2 * phi - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& row = ctx.power_rows_z[k - phi];
            for (unsigned j = 0; j < phi; ++j)
                mpz_addmul(conv[j].get_mpz_t(), conv[k].get_mpz_t(), row[j].get_mpz_t());
        }
        std::vector<Rational> out;
        out.reserve(phi);
        for (unsigned k = 0; k < phi; ++k) out.emplace_back(std::move(conv[k]));
        return CycElement(n_, std::move(out));
    }
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (coords_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.coords_[j] == 0) continue;
            conv[i + j] += coords_[i] * o.coords_[j];
        }
    }
    std::vector<Rational> out(phi, Rational(0));
    for (unsigned k = 0; k < phi; ++k) out[k] = conv[k];
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = ctx.power_rows[k - phi];
        for (unsigned j = 0; j < phi; ++j) out[j] += conv[k] * row[j];
    }
    return CycElement(n_, std::move(out));
}

CycElement& CycElement::operator*=(const CycElement& o)
{
    *this = *this * o;
    return *this;
}

CycElement CycElement::scaled(const Rational& r) const
{
    CycElement out = *this;
    for (auto& c : out.coords_) c *= r;
    return out;
}

namespace {

// Degree of a rational coefficient vector, -1 for zero.
int rdeg(const std::vector<Rational>& v)
{
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

}  // namespace

CycElement CycElement::inverse() const
{
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic element");
    const auto& ctx = field_context(n_);
    // Extended Euclid: s*a + t*Phi = gcd (a nonzero of degree < phi, so gcd is
    // a nonzero constant because Phi is irreducible over Q).
    std::vector<Rational> r0 = ctx.phi_coeffs;
    std::vector<Rational> r1 = coords_;
    std::vector<Rational> s0{Rational(0)};
    std::vector<Rational> s1{Rational(1)};
    while (true) {
        int d1 = rdeg(r1);
        if (d1 < 0) throw Error(ErrorCode::Internal, "cyclotomic gcd hit zero remainder early");
        if (d1 == 0) break;
        int d0 = rdeg(r0);
        // r0 = q*r1 + rem; replace (r0, s0) <- (r1, s1), (r1, s1) <- (rem, s0 - q*s1)
        std::vector<Rational> rem = r0;
        std::vector<Rational> q(static_cast<size_t>(d0 - d1) + 1, Rational(0));
        for (int k = d0; k >= d1; --k) {
            Rational c = rem[k] / r1[d1];
            if (c == 0) continue;
            q[k - d1] = c;
            for (int j = 0; j <= d1; ++j) rem[k - d1 + j] -= c * r1[j];
        }
        std::vector<Rational> snew = s0;
        snew.resize(std::max(snew.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(snew);
    }
    // r1 is the nonzero constant gcd; inverse = s1 / r1[0] reduced mod Phi.
    Rational g = r1[0];
    std::vector<Rational> inv = s1;
    for (auto& c : inv) c /= g;
    reduce_once(inv, ctx);
    return CycElement(n_, std::move(inv));
}

std::string CycElement::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c == 0) continue;
        Rational a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace circinv
