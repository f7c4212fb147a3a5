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

// End-to-end acceptance battery. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "circinv/circulant.hpp"
#include "circinv/ideal.hpp"
#include "circinv/invariant.hpp"
#include "circinv/lattice.hpp"
#include "circinv/multipoly.hpp"

using namespace circinv;

namespace {

int g_failures = 0;

void criterion(int index, const char* name, const std::function<std::string()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (problem.empty()) {
        std::printf("criterion %d [%s]: PASS (%.1fs)\n", index, name, secs);
    } else {
        std::printf("criterion %d [%s]: FAIL (%.1fs) %s\n", index, name, secs, problem.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

std::string at(unsigned n, unsigned p)
{
    return "n=" + std::to_string(n) + " p=" + std::to_string(p);
}

// ---- criterion 3 helpers -------------------------------------------------

// Integer power-basis coordinates of zeta_n^i; integral because the
// cyclotomic polynomial is monic over the integers.
std::vector<std::vector<std::int64_t>> zeta_coord_table(unsigned n)
{
    std::vector<std::vector<std::int64_t>> rows(n);
    for (unsigned i = 0; i < n; ++i) {
        CycElement z = CycElement::zeta_power(n, i);
        const auto& c = z.coords();
        rows[i].reserve(c.size());
        for (const auto& r : c) {
            if (r.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral zeta coordinate");
            rows[i].push_back(static_cast<std::int64_t>(r.get_num().get_si()));
        }
    }
    return rows;
}

// Enumerates every nonnegative alpha with total degree <= max_deg whose
// zeta-weighted sum vanishes, invoking visit on each.
void enumerate_lattice_simplex(unsigned n, std::int64_t max_deg,
                               const std::function<void(const ExpVec&)>& visit)
{
    auto zc = zeta_coord_table(n);
    size_t dim = zc[0].size();
    std::vector<std::int64_t> sum(dim, 0), alpha(n, 0);
    std::function<void(unsigned, std::int64_t)> walk = [&](unsigned pos, std::int64_t left) {
        if (pos == n) {
            for (std::int64_t s : sum)
                if (s != 0) return;
            visit(ExpVec(alpha));
            return;
        }
        walk(pos + 1, left);  // alpha[pos] = 0
        for (std::int64_t v = 1; v <= left; ++v) {
            alpha[pos] = v;
            for (size_t k = 0; k < dim; ++k) sum[k] += zc[pos][k];
            walk(pos + 1, left - v);
        }
        if (alpha[pos] > 0) {
            for (size_t k = 0; k < dim; ++k) sum[k] -= zc[pos][k] * alpha[pos];
            alpha[pos] = 0;
        }
    };
    walk(0, max_deg);
}

// ---- criterion 5 helpers -------------------------------------------------

GenPoly random_zw_monomial(std::mt19937& rng, unsigned n, unsigned p, unsigned q, int max_exp)
{
    std::uniform_int_distribution<int> ex(0, max_exp), cf(-3, 3);
    ZWExp e{ExpVec(static_cast<size_t>(n / p)), ExpVec(static_cast<size_t>(n / q))};
    for (auto& v : e.c.e) v = ex(rng);
    for (auto& v : e.d.e) v = ex(rng);
    int a = cf(rng);
    if (a == 0) a = 1;
    GenPoly m = GenPoly::zero(n, p, q);
    m.add_term(e, CycElement::from_int(n, a));
    return m;
}

bool fiber_sums_vanish(const GenPoly& F)
{
    std::map<ExpVec, CycElement, GradedLexLess> sums;
    for (const auto& [e, c] : F.terms()) {
        ExpVec a = sigma(F.n(), F.p(), F.q(), e.c.e, e.d.e);
        auto [it, fresh] = sums.try_emplace(a, c);
        if (!fresh) it->second += c;
    }
    for (const auto& [a, s] : sums)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace

int main()
{
    criterion(1, "block determinant factorization", []() -> std::string {
        for (unsigned n = 2; n <= 10; ++n)
            for (unsigned p : divisors(n)) {
                if (p < 2) continue;
                auto fr = verify_factorization(n, p);
                if (!fr.ok) return "X basis mismatch at " + at(n, p);
            }
        for (unsigned n = 2; n <= 30; ++n)
            for (unsigned p : divisors(n)) {
                if (p < 2) continue;
                if (!verify_factorization_y(n, p).ok) return "Y basis mismatch at " + at(n, p);
            }
        return {};
    });

    criterion(2, "relation lattice rank", []() -> std::string {
        for (unsigned n = 2; n <= 100; ++n) {
            auto basis = basis_Sn(n);
            if (basis.size() != n - euler_phi(n)) return "size at n=" + std::to_string(n);
            for (const auto& v : basis)
                if (!in_Vn(n, v)) return "membership at n=" + std::to_string(n);
            if (rational_rank(basis) != n - euler_phi(n)) return "rank at n=" + std::to_string(n);
        }
        return {};
    });

    criterion(3, "full simplex decomposition", []() -> std::string {
        std::string bad;
        for (unsigned n : {4u, 6u, 8u, 9u, 12u, 18u}) {
            size_t count = 0;
            enumerate_lattice_simplex(n, 8, [&](const ExpVec& a) {
                if (!bad.empty()) return;
                ++count;
                Decomposition dec = decompose(a, n);
                if (dec.reconstruct() != a) {
                    bad = "reconstruction at n=" + std::to_string(n) + " alpha=" + a.str();
                    return;
                }
                auto o = monoid_member_oracle(a, n, a.total_degree());
                if (o.verdict != OracleVerdict::Member)
                    bad = "oracle disagreement at n=" + std::to_string(n) + " alpha=" + a.str();
            });
            if (!bad.empty()) return bad;
            if (count == 0) return "empty enumeration at n=" + std::to_string(n);
        }
        return {};
    });

    criterion(4, "three prime gap witness", []() -> std::string {
        GapWitness w = gap_witness(30);
        std::vector<std::int64_t> expect(30, 0);
        for (int i : {0, 1, 7, 13, 19, 20}) expect[static_cast<size_t>(i)] = 1;
        if (w.alpha != ExpVec(expect)) return "unexpected witness vector";
        if (!in_Vn(30, w.alpha) || !w.alpha.is_nonnegative()) return "witness not in the cone";
        if (!w.invariant) return "witness monomial not invariant";
        if (w.oracle.verdict != OracleVerdict::NonMember) return "oracle verdict not definitive";
        return {};
    });

    criterion(5, "relation ideal kernel", []() -> std::string {
        for (unsigned n : {6u, 12u, 18u}) {
            const unsigned p = 2, q = 3;
            auto rels = relations(n, p, q);
            std::mt19937 rng(4242u + n);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(rels.size()) - 1);
            std::uniform_int_distribution<int> parts(1, 4);
            for (int trial = 0; trial < 200; ++trial) {
                GenPoly F = GenPoly::zero(n, p, q);
                int k = parts(rng);
                for (int t = 0; t < k; ++t)
                    F += random_zw_monomial(rng, n, p, q, 2) * rels[static_cast<size_t>(pick(rng))];
                KernelResult kr = kernel_membership(F, true);
                if (!kr.in_kernel) return "member rejected at n=" + std::to_string(n);
                if (!kr.certificate || !verify_certificate(F, *kr.certificate))
                    return "certificate failure at n=" + std::to_string(n);
            }
            int negatives = 0;
            while (negatives < 200) {
                GenPoly F = GenPoly::zero(n, p, q);
                int k = parts(rng);
                for (int t = 0; t < k; ++t)
                    F += random_zw_monomial(rng, n, p, q, 2) * rels[static_cast<size_t>(pick(rng))];
                F += random_zw_monomial(rng, n, p, q, 2).scaled(CycElement::from_int(n, 5));
                if (fiber_sums_vanish(F)) continue;  // rare collision, resample
                KernelResult kr = kernel_membership(F, false);
                if (kr.in_kernel) return "non-member accepted at n=" + std::to_string(n);
                if (!kr.witness) return "missing witness at n=" + std::to_string(n);
                ++negatives;
            }
        }
        // injectivity of the z-only substitution on prime powers
        for (unsigned n = 2; n <= 27; ++n) {
            if (prime_factors(n).size() != 1) continue;
            for (unsigned p : divisors(n)) {
                if (p < 2) continue;
                auto rep = kernel_rho_trivial(n, p);
                if (!rep.ok) return "rho not injective at " + at(n, p) + ": " + rep.detail;
            }
        }
        return {};
    });

    criterion(6, "block image monomial identity", []() -> std::string {
        for (unsigned n = 2; n <= 12; ++n)
            for (unsigned p : divisors(n)) {
                if (p < 2) continue;
                for (unsigned i = 0; i < n / p; ++i)
                    if (!verify_monomial_identity(BlockSpec{n, p, i}))
                        return at(n, p) + " i=" + std::to_string(i);
            }
        return {};
    });

    criterion(7, "determinant-one invariance criterion", []() -> std::string {
        for (unsigned n = 1; n <= 8; ++n)
            if (!is_sl_invariant(circulant_det(n)))
                return "determinant not accepted at n=" + std::to_string(n);
        for (unsigned n : {2u, 3u, 5u, 7u, 11u, 13u}) {
            std::mt19937 rng(9000u + n);
            std::uniform_int_distribution<int> deg(0, 3), cf(1, 5),
                pos(0, static_cast<int>(n) - 1);
            for (int trial = 0; trial < 100; ++trial) {
                Poly inv = Poly::zero(n, Basis::Y);
                for (int k = 0; k <= deg(rng); ++k)
                    inv.add_term(ExpVec(std::vector<std::int64_t>(n, k)),
                                 CycElement::from_int(n, cf(rng)));
                if (!is_invariant(inv) || !is_sl_invariant(inv))
                    return "invariant rejected at n=" + std::to_string(n);

                Poly bad = inv;
                ExpVec e(std::vector<std::int64_t>(n, 1));
                e.e[static_cast<size_t>(pos(rng))] += 1;
                bad.add_term(e, CycElement::from_int(n, cf(rng)));
                if (is_invariant(bad) || is_sl_invariant(bad))
                    return "non-invariant accepted at n=" + std::to_string(n);
                // the strong criterion implies the weak one on everything tested
                for (const Poly* f : {&inv, &bad})
                    if (is_sl_invariant(*f) && !is_invariant(*f))
                        return "implication violated at n=" + std::to_string(n);
            }
        }
        return {};
    });

    criterion(8, "operator identities", []() -> std::string {
        for (unsigned n = 1; n <= 30; ++n)
            for (unsigned i = 0; i < n; ++i) {
                Poly yi = Poly::variable(n, Basis::Y, i);
                if (apply_operator(Operator::D, yi) != yi.scaled(CycElement::zeta_power(n, i)))
                    return "D eigenvalue at n=" + std::to_string(n) + " i=" + std::to_string(i);
                if (apply_operator(Operator::Delta, yi) !=
                    yi.scaled(CycElement::zeta_power(n, -static_cast<long>(i))))
                    return "Delta eigenvalue at n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        std::mt19937 rng(777u);
        std::uniform_int_distribution<int> nt(1, 4), ex(0, 3), cf(-4, 4);
        for (unsigned n = 2; n <= 6; ++n)
            for (int trial = 0; trial < 100; ++trial) {
                auto rand_poly = [&]() {
                    Poly f = Poly::zero(n, Basis::X);
                    int terms = nt(rng);
                    for (int t = 0; t < terms; ++t) {
                        ExpVec e(static_cast<size_t>(n));
                        for (auto& v : e.e) v = ex(rng);
                        int a = cf(rng);
                        if (a == 0) a = 1;
                        f.add_term(e, CycElement::from_int(n, a));
                    }
                    return f;
                };
                Poly f = rand_poly(), g = rand_poly();
                for (Operator op : {Operator::D, Operator::Delta}) {
                    Poly lhs = apply_operator(op, f * g);
                    Poly rhs = apply_operator(op, f) * g + f * apply_operator(op, g);
                    if (lhs != rhs) return "derivation property at n=" + std::to_string(n);
                    if (to_y(apply_operator(op, f)) != apply_operator(op, to_y(f)))
                        return "naturality at n=" + std::to_string(n);
                }
            }
        return {};
    });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
