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

#include "circinv/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace circinv {

ExpVec Decomposition::reconstruct() const
{
    ExpVec acc(n);
    for (const auto& [id, k] : coeffs) acc = acc + generator_v(n, id.p, id.i).scaled(k);
    return acc;
}

std::int64_t Decomposition::coeff_sum() const
{
    std::int64_t s = 0;
    for (const auto& [id, k] : coeffs) s += k;
    return s;
}

bool in_Vn(unsigned n, const ExpVec& alpha)
{
    if (alpha.size() != n) throw Error(ErrorCode::LengthMismatch, "in_Vn: vector length differs from n");
    CycElement s = CycElement::zero(n);
    for (unsigned i = 0; i < n; ++i) {
        if (alpha.e[i] == 0) continue;
        s += CycElement::zeta_power(n, i).scaled(Rational(alpha.e[i]));
    }
    return s.is_zero();
}

std::vector<ExpVec> basis_Sn(unsigned n)
{
    if (n == 0) throw Error(ErrorCode::InvalidOrder, "basis_Sn: n must be positive");
    std::vector<ExpVec> out;
    if (n == 1) return out;  // the relation lattice is trivial
    const CyclotomicPoly& cp = cyclotomic_poly(n);
    const unsigned phi = cp.degree();
    for (unsigned i = 0; i + phi < n; ++i) {
        ExpVec v(n);
        for (unsigned j = 0; j <= phi; ++j) v.e[i + j] = cp.coeffs[j].get_si();
        out.push_back(std::move(v));
    }
    return out;
}

unsigned rational_rank(const std::vector<ExpVec>& vectors)
{
    if (vectors.empty()) return 0;
    const size_t cols = vectors[0].size();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<Rational> r(cols);
        for (size_t j = 0; j < cols; ++j) r[j] = Rational(v.e[j]);
        rows.push_back(std::move(r));
    }
    unsigned rank = 0;
    size_t col = 0;
    for (size_t pivot_row = 0; pivot_row < rows.size() && col < cols; ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[pivot_row][col];
            for (size_t j = col; j < cols; ++j) rows[r][j] -= f * rows[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

ExpVec generator_v(unsigned n, unsigned p, long i)
{
    if (p < 2 || n % p != 0) throw Error(ErrorCode::NotADivisor, "generator_v: p must divide n, p >= 2");
    const unsigned np = n / p;
    long idx = i % static_cast<long>(np);
    if (idx < 0) idx += np;
    ExpVec v(n);
    for (unsigned j = 0; j < p; ++j) v.e[idx + np * j] = 1;
    return v;
}

std::vector<std::pair<GeneratorId, ExpVec>> generators_Tn(unsigned n)
{
    if (n < 2) throw Error(ErrorCode::InvalidOrder, "generators_Tn: n must be at least 2");
    std::vector<std::pair<GeneratorId, ExpVec>> out;
    for (unsigned p : prime_factors(n))
        for (unsigned i = 0; i < n / p; ++i)
            out.emplace_back(GeneratorId{p, i}, generator_v(n, p, i));
    return out;
}

ExpVec sigma(unsigned n, unsigned p, unsigned q, const std::vector<std::int64_t>& c,
             const std::vector<std::int64_t>& d)
{
    if (p < 2 || n % p != 0 || q < 2 || n % q != 0)
        throw Error(ErrorCode::NotADivisor, "sigma: p and q must divide n");
    if (c.size() != n / p || d.size() != n / q)
        throw Error(ErrorCode::LengthMismatch, "sigma: coefficient vector lengths must be n/p and n/q");
    ExpVec acc(n);
    for (unsigned i = 0; i < c.size(); ++i)
        if (c[i] != 0) acc = acc + generator_v(n, p, i).scaled(c[i]);
    for (unsigned i = 0; i < d.size(); ++i)
        if (d[i] != 0) acc = acc + generator_v(n, q, i).scaled(d[i]);
    return acc;
}

ExpVec tau(unsigned n, const std::vector<std::vector<std::int64_t>>& coeff_vectors)
{
    const auto primes = prime_factors(n);
    if (coeff_vectors.size() != primes.size())
        throw Error(ErrorCode::LengthMismatch, "tau: need one coefficient vector per prime factor");
    ExpVec acc(n);
    for (size_t j = 0; j < primes.size(); ++j) {
        if (coeff_vectors[j].size() != n / primes[j])
            throw Error(ErrorCode::LengthMismatch, "tau: coefficient vector length must be n/p");
        for (unsigned i = 0; i < coeff_vectors[j].size(); ++i)
            if (coeff_vectors[j][i] != 0)
                acc = acc + generator_v(n, primes[j], i).scaled(coeff_vectors[j][i]);
    }
    return acc;
}

namespace {

// Solves basis * x = alpha exactly over Q; the basis must be linearly
// independent and alpha in its span.
std::vector<Rational> solve_in_basis(const std::vector<ExpVec>& basis, const ExpVec& alpha)
{
    const size_t m = basis.size();
    const size_t nrows = alpha.size();
    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(m + 1));
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t c = 0; c < m; ++c) a[r][c] = Rational(basis[c].e[r]);
        a[r][m] = Rational(alpha.e[r]);
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < m && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && a[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[row], a[sel]);
        Rational inv = 1 / a[row][col];
        for (size_t j = col; j <= m; ++j) a[row][j] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t j = col; j <= m; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t r = row; r < nrows; ++r)
        if (a[r][m] != 0) throw Error(ErrorCode::NotInLattice, "vector is not in the span of the basis");
    if (pivot_col.size() != m)
        throw Error(ErrorCode::Internal, "basis vectors are not linearly independent");
    std::vector<Rational> x(m, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][m];
    return x;
}

}  // namespace

Decomposition decompose(const ExpVec& alpha, unsigned n)
{
    if (alpha.size() != n) throw Error(ErrorCode::LengthMismatch, "decompose: vector length differs from n");
    if (!alpha.is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "decompose: entries must be nonnegative");
    const auto primes = prime_factors(n);
    if (primes.size() > 2)
        throw Error(ErrorCode::TooManyPrimeFactors, "decompose: n must have at most two prime factors");
    if (!in_Vn(n, alpha)) throw Error(ErrorCode::NotInLattice, "decompose: vector is not in the relation lattice");

    Decomposition result;
    result.n = n;
    if (primes.empty()) return result;  // n = 1, alpha = 0

    if (primes.size() == 1) {
        const unsigned p = primes[0];
        const unsigned np = n / p;
        for (unsigned i = 0; i < np; ++i)
            if (alpha.e[i] != 0) result.coeffs[GeneratorId{p, i}] = alpha.e[i];
    } else {
        const unsigned p = primes[0], q = primes[1];
        const unsigned np = n / p, nq = n / q, npq = n / (p * q);
        // Solve in the basis {v^(p)_i} ∪ {v^(q)_i, i < nq - npq}.
        std::vector<ExpVec> basis;
        for (unsigned i = 0; i < np; ++i) basis.push_back(generator_v(n, p, i));
        for (unsigned i = 0; i + npq < nq; ++i) basis.push_back(generator_v(n, q, i));
        std::vector<Rational> sol = solve_in_basis(basis, alpha);
        std::vector<Rational> c(sol.begin(), sol.begin() + np);
        std::vector<Rational> d(sol.begin() + np, sol.end());
        d.resize(nq, Rational(0));
        // Per residue class mod npq, shift whole q-blocks off the p side.
        auto put = [&](unsigned prime, unsigned idx, const Rational& value) {
            if (value == 0) return;
            if (value < 0 || value.get_den() != 1)
                throw Error(ErrorCode::Internal, "rebalanced coefficient not a nonnegative integer");
            result.coeffs[GeneratorId{prime, idx}] = value.get_num().get_si();
        };
        for (unsigned i = 0; i < npq; ++i) {
            Rational cmin = c[i];
            for (unsigned j = 1; j < q; ++j) cmin = std::min(cmin, c[i + npq * j]);
            for (unsigned j = 0; j < q; ++j) put(p, i + npq * j, c[i + npq * j] - cmin);
            for (unsigned j = 0; j + 1 < p; ++j) put(q, i + npq * j, cmin + d[i + npq * j]);
            put(q, i + nq - npq, cmin);
        }
    }
    if (result.reconstruct() != alpha)
        throw Error(ErrorCode::Internal, "decompose reconstruction mismatch");
    return result;
}

ExpVec counterexample(unsigned n)
{
    const auto primes = prime_factors(n);
    if (primes.size() < 3)
        throw Error(ErrorCode::TooFewPrimeFactors, "counterexample: n needs at least three prime factors");
    const unsigned p = primes[0], q = primes[1], r = primes[2];
    const unsigned np = n / p, nq = n / q;
    ExpVec acc(n);
    for (unsigned j = 2; j <= p; ++j) acc = acc + generator_v(n, q, static_cast<long>(np) * j);
    acc = acc + generator_v(n, r, static_cast<long>(np) + nq);
    acc = acc - generator_v(n, p, nq);
    if (!acc.is_nonnegative() || !in_Vn(n, acc) || acc.e[0] < 1)
        throw Error(ErrorCode::Internal, "counterexample construction failed its own checks");
    return acc;
}

OracleResult monoid_member_oracle(const ExpVec& alpha, unsigned n, std::int64_t budget)
{
    if (alpha.size() != n) throw Error(ErrorCode::LengthMismatch, "oracle: vector length differs from n");
    if (!alpha.is_nonnegative()) throw Error(ErrorCode::NegativeEntry, "oracle: entries must be nonnegative");

    const auto gens = generators_Tn(n);
    const std::int64_t degree_cap = alpha.total_degree() / 2;  // every generator has degree >= 2
    const std::int64_t cap = std::min(budget, degree_cap);

    // Positions coverable by generators at index >= k; a positive remainder
    // outside the coverage kills the branch.
    const size_t g = gens.size();
    std::vector<std::vector<bool>> covered(g + 1, std::vector<bool>(n, false));
    for (size_t k = g; k-- > 0;) {
        covered[k] = covered[k + 1];
        for (unsigned pos = 0; pos < n; ++pos)
            if (gens[k].second.e[pos] != 0) covered[k][pos] = true;
    }

    OracleResult out;
    out.search_bound = cap;
    std::vector<std::int64_t> rem = alpha.e;
    std::map<GeneratorId, std::int64_t> chosen;

    std::function<bool(size_t, std::int64_t)> dfs = [&](size_t k, std::int64_t used) -> bool {
        bool any = false;
        for (unsigned pos = 0; pos < n; ++pos) {
            if (rem[pos] == 0) continue;
            any = true;
            if (k == g || !covered[k][pos]) return false;
        }
        if (!any) return true;
        const auto& [id, vec] = gens[k];
        std::int64_t maxc = cap - used;
        for (unsigned pos = 0; pos < n; ++pos)
            if (vec.e[pos] != 0) maxc = std::min(maxc, rem[pos]);
        for (std::int64_t cnt = maxc; cnt >= 0; --cnt) {
            if (cnt > 0) {
                for (unsigned pos = 0; pos < n; ++pos) rem[pos] -= cnt * vec.e[pos];
            }
            if (dfs(k + 1, used + cnt)) {
                if (cnt > 0) chosen[id] = cnt;
                return true;
            }
            if (cnt > 0) {
                for (unsigned pos = 0; pos < n; ++pos) rem[pos] += cnt * vec.e[pos];
            }
        }
        return false;
    };

    if (dfs(0, 0)) {
        out.verdict = OracleVerdict::Member;
        Decomposition dec;
        dec.n = n;
        dec.coeffs = std::move(chosen);
        if (dec.reconstruct() != alpha)
            throw Error(ErrorCode::Internal, "oracle decomposition reconstruction mismatch");
        out.decomposition = std::move(dec);
    } else {
        // Any representation has coefficient sum at most total_degree/2, so the
        // search is exhaustive unless the caller's budget undercut that bound.
        out.verdict = cap >= degree_cap ? OracleVerdict::NonMember : OracleVerdict::BudgetExceeded;
    }
    return out;
}

}  // namespace circinv
