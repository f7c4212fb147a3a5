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

#include "circinv/report.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "circinv/circulant.hpp"
#include "circinv/ideal.hpp"
#include "circinv/invariant.hpp"
#include "circinv/lattice.hpp"
#include "circinv/parse.hpp"

namespace circinv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int exit_code_for(ErrorCode c)
{
    return c == ErrorCode::ExpansionTooLarge ? 3 : 2;
}

void fill_error(Report& rep, const Error& e)
{
    rep.verdict = "error";
    rep.details["error"] = error_code_name(e.code());
    rep.details["message"] = e.what();
    rep.exit_code = exit_code_for(e.code());
}

Basis detect_basis(const std::string& expr)
{
    for (char c : expr) {
        if (c == 'x') return Basis::X;
        if (c == 'y') return Basis::Y;
    }
    return Basis::X;  // constant expressions default to the x family
}

nlohmann::json rational_str(const Rational& r)
{
    return r.get_str();
}

nlohmann::json coeff_to_json(const CycElement& c)
{
    nlohmann::json j;
    if (c.is_rational()) {
        j["num"] = c.rational_value().get_num().get_str();
        j["den"] = c.rational_value().get_den().get_str();
    } else {
        j["num"] = "0";
        j["den"] = "1";
    }
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& r : c.coords()) coords.push_back(rational_str(r));
    j["zeta_coords"] = coords;
    return j;
}

nlohmann::json decomposition_to_json(const Decomposition& dec)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [id, k] : dec.coeffs)
        arr.push_back({{"p", id.p}, {"i", id.i}, {"coeff", k}});
    return arr;
}

}  // namespace

nlohmann::json poly_to_json(const Poly& f)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [exp, coeff] : f.terms()) {
        nlohmann::json t;
        t["exponents"] = exp.e;
        t["coeff"] = coeff_to_json(coeff);
        arr.push_back(std::move(t));
    }
    return arr;
}

unsigned effective_max_n(unsigned max_n, unsigned fallback)
{
    if (max_n != 0) return max_n;
    if (const char* env = std::getenv("CIRCINV_MAX_N")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return fallback;
}

std::string Report::to_json_string() const
{
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    j["verdict"] = verdict;
    j["details"] = details;
    j["timings_ms"] = timings_ms;
    return j.dump(2);
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << command << ": " << verdict << "\n";
    std::function<void(const std::string&, const nlohmann::json&, int)> emit =
        [&](const std::string& key, const nlohmann::json& v, int depth) {
            std::string pad(static_cast<size_t>(depth) * 2, ' ');
            if (v.is_object()) {
                os << pad << key << ":\n";
                for (const auto& [k, sub] : v.items()) emit(k, sub, depth + 1);
            } else if (v.is_array() && !v.empty() && v[0].is_object()) {
                os << pad << key << ":\n";
                for (size_t i = 0; i < v.size(); ++i)
                    emit("[" + std::to_string(i) + "]", v[i], depth + 1);
            } else if (v.is_string()) {
                os << pad << key << ": " << v.get<std::string>() << "\n";
            } else {
                os << pad << key << ": " << v.dump() << "\n";
            }
        };
    for (const auto& [k, v] : details.items()) emit(k, v, 1);
    return os.str();
}

Report run_factor(unsigned n, unsigned p, bool emit_blocks, unsigned max_n)
{
    Report rep;
    rep.command = "factor";
    rep.params = {{"n", n}, {"p", p}, {"emit_blocks", emit_blocks}};
    auto t0 = Clock::now();
    try {
        unsigned guard = effective_max_n(max_n, kGuardDefaultX);
        FactorizationReport fr = verify_factorization(n, p, guard);
        rep.verdict = fr.ok ? "pass" : "fail";
        rep.exit_code = fr.ok ? 0 : 1;
        rep.details["lhs_terms"] = fr.lhs_terms;
        rep.details["rhs_terms"] = fr.rhs_terms;
        if (fr.first_mismatch) rep.details["first_mismatch"] = *fr.first_mismatch;
        if (emit_blocks) {
            nlohmann::json blocks = nlohmann::json::array();
            for (unsigned i = 0; i < n / p; ++i) {
                Poly tb = theta_block(BlockSpec{n, p, i});
                blocks.push_back({{"i", i}, {"expansion", print_poly(tb)}});
            }
            rep.details["blocks"] = blocks;
        }
    } catch (const Error& e) {
        fill_error(rep, e);
    }
    rep.timings_ms["total"] = ms_since(t0);
    return rep;
}

Report run_invariant(unsigned n, const std::string& expr, bool express, bool sl, bool want_gap_witness,
                     unsigned max_n)
{
    Report rep;
    rep.command = "invariant";
    rep.params = {{"n", n}, {"expr", expr}, {"express", express}, {"sl", sl},
                  {"gap_witness", want_gap_witness}};
    auto t0 = Clock::now();
    try {
        if (want_gap_witness) {
            GapWitness w = gap_witness(n);
            rep.verdict = "pass";
            rep.details["witness"] = print_poly(w.monomial);
            rep.details["alpha"] = w.alpha.e;
            rep.details["invariant"] = w.invariant;
            rep.details["in_generator_subring"] = false;
            rep.details["oracle"] = "NonMember";
            rep.details["oracle_search_bound"] = w.oracle.search_bound;
            rep.timings_ms["total"] = ms_since(t0);
            return rep;
        }
        unsigned guard = effective_max_n(max_n, kGuardDefaultX);
        Basis basis = detect_basis(expr);
        if (basis == Basis::X && (express || sl) && n > guard)
            throw Error(ErrorCode::ExpansionTooLarge,
                        "basis change guard: n = " + std::to_string(n) + " exceeds max " +
                            std::to_string(guard));
        Poly f = parse_poly(expr, n, basis);
        bool inv = is_invariant(f);
        rep.details["invariant"] = inv;
        rep.verdict = inv ? "pass" : "fail";
        rep.exit_code = inv ? 0 : 1;
        if (express) {
            GeneratorExpression ge = express_in_generators(f);  // throws NotInvariant if not
            rep.details["expression"] = ge.str();
        }
        if (sl) {
            bool sli = is_sl_invariant(f);
            rep.details["sl_invariant"] = sli;
        }
    } catch (const Error& e) {
        fill_error(rep, e);
    }
    rep.timings_ms["total"] = ms_since(t0);
    return rep;
}

Report run_kernel(unsigned n, unsigned p, unsigned q, const std::string& expr, bool certificate,
                  unsigned max_n)
{
    (void)max_n;  // generator-variable computations are cheap; no guard needed
    Report rep;
    rep.command = "kernel";
    rep.params = {{"n", n}, {"p", p}, {"q", q}, {"expr", expr}, {"certificate", certificate}};
    auto t0 = Clock::now();
    try {
        GenPoly F = parse_genpoly(expr, n, p, q);
        KernelResult kr = kernel_membership(F, certificate);
        rep.details["in_kernel"] = kr.in_kernel;
        rep.verdict = kr.in_kernel ? "pass" : "fail";
        rep.exit_code = kr.in_kernel ? 0 : 1;
        if (kr.witness) rep.details["witness"] = print_poly(*kr.witness);
        if (kr.certificate) {
            nlohmann::json cof = nlohmann::json::array();
            for (const auto& g : kr.certificate->cofactors) cof.push_back(print_genpoly(g));
            rep.details["certificate"] = cof;
            rep.details["certificate_verified"] = verify_certificate(F, *kr.certificate);
        }
    } catch (const Error& e) {
        fill_error(rep, e);
    }
    rep.timings_ms["total"] = ms_since(t0);
    return rep;
}

Report run_decompose(unsigned n, const std::string& alpha_csv)
{
    Report rep;
    rep.command = "decompose";
    rep.params = {{"n", n}, {"alpha", alpha_csv}};
    auto t0 = Clock::now();
    try {
        ExpVec alpha(n);
        std::istringstream is(alpha_csv);
        std::string tok;
        size_t idx = 0;
        while (std::getline(is, tok, ',')) {
            if (idx >= n) throw Error(ErrorCode::LengthMismatch, "too many entries for n");
            try {
                alpha.e[idx] = std::stoll(tok);
            } catch (const std::exception&) {
                throw Error(ErrorCode::SyntaxError, "bad integer entry: '" + tok + "'");
            }
            ++idx;
        }
        if (idx != n) throw Error(ErrorCode::LengthMismatch, "expected n = " + std::to_string(n) + " entries");
        Decomposition dec = decompose(alpha, n);
        rep.verdict = "pass";
        rep.details["decomposition"] = decomposition_to_json(dec);
        rep.details["coefficient_sum"] = dec.coeff_sum();
    } catch (const Error& e) {
        fill_error(rep, e);
    }
    rep.timings_ms["total"] = ms_since(t0);
    return rep;
}

Report run_counterexample(unsigned n)
{
    Report rep;
    rep.command = "counterexample";
    rep.params = {{"n", n}};
    auto t0 = Clock::now();
    try {
        ExpVec alpha = counterexample(n);
        OracleResult oracle = monoid_member_oracle(alpha, n, alpha.total_degree());
        rep.verdict = oracle.verdict == OracleVerdict::NonMember ? "pass" : "fail";
        rep.exit_code = rep.verdict == "pass" ? 0 : 1;
        rep.details["alpha"] = alpha.e;
        rep.details["in_lattice"] = in_Vn(n, alpha);
        rep.details["nonnegative"] = alpha.is_nonnegative();
        rep.details["oracle"] = oracle.verdict == OracleVerdict::NonMember ? "NonMember" : "other";
        rep.details["oracle_search_bound"] = oracle.search_bound;
    } catch (const Error& e) {
        fill_error(rep, e);
    }
    rep.timings_ms["total"] = ms_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// verify-all battery

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string = pass, else failure detail
};

std::string fail_at(const std::string& what)
{
    return what;
}

std::vector<Check> build_checks(unsigned n_max)
{
    std::vector<Check> checks;
    auto cap = [n_max](unsigned hard) { return std::min(n_max, hard); };

    checks.push_back({"block_monomial_identity", [cap]() -> std::string {
        for (unsigned n = 2; n <= cap(12); ++n)
            for (unsigned p : divisors(n)) {
                if (p < 2) continue;
                for (unsigned i = 0; i < n / p; ++i)
                    if (!verify_monomial_identity(BlockSpec{n, p, i}))
                        return fail_at("n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                       " i=" + std::to_string(i));
            }
        return {};
    }});

    checks.push_back({"cyclotomic_product", [cap]() -> std::string {
        for (unsigned n = 1; n <= cap(100); ++n) {
            std::vector<Integer> prod{Integer(1)};
            for (unsigned d : divisors(n)) {
                const auto& cd = cyclotomic_poly(d).coeffs;
                std::vector<Integer> next(prod.size() + cd.size() - 1, Integer(0));
                for (size_t i = 0; i < prod.size(); ++i)
                    for (size_t j = 0; j < cd.size(); ++j) next[i + j] += prod[i] * cd[j];
                prod = std::move(next);
            }
            if (prod.size() != n + 1 || prod[0] != -1 || prod[n] != 1)
                return fail_at("n=" + std::to_string(n));
            for (size_t k = 1; k < n; ++k)
                if (prod[k] != 0) return fail_at("n=" + std::to_string(n));
        }
        return {};
    }});

    checks.push_back({"decompose_roundtrip", [cap]() -> std::string {
        for (unsigned n : {4u, 6u, 8u, 9u, 12u}) {
            if (n > cap(18)) continue;
            // Enumerate the degree simplex and check every lattice vector.
            std::vector<std::int64_t> alpha(n, 0);
            std::string bad;
            std::function<void(unsigned, std::int64_t)> walk = [&](unsigned pos, std::int64_t left) {
                if (!bad.empty()) return;
                if (pos == n) {
                    ExpVec a{alpha};
                    if (a.total_degree() == 0 || !in_Vn(n, a)) return;
                    Decomposition dec = decompose(a, n);
                    if (dec.reconstruct() != a) bad = "reconstruct n=" + std::to_string(n);
                    auto o = monoid_member_oracle(a, n, a.total_degree());
                    if (o.verdict != OracleVerdict::Member) bad = "oracle n=" + std::to_string(n);
                    return;
                }
                for (std::int64_t v = 0; v <= left; ++v) {
                    alpha[pos] = v;
                    walk(pos + 1, left - v);
                }
                alpha[pos] = 0;
            };
            walk(0, 6);
            if (!bad.empty()) return bad;
        }
        return {};
    }});

    checks.push_back({"factorization_x", [cap]() -> std::string {
        for (unsigned n = 2; n <= cap(10); ++n)
            for (unsigned p : divisors(n)) {
                if (p < 2) continue;
                auto fr = verify_factorization(n, p);
                if (!fr.ok)
                    return fail_at("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                                   fr.first_mismatch.value_or(""));
            }
        return {};
    }});

    checks.push_back({"factorization_y", [cap]() -> std::string {
        for (unsigned n = 2; n <= cap(30); ++n)
            for (unsigned p : divisors(n)) {
                if (p < 2) continue;
                auto fr = verify_factorization_y(n, p);
                if (!fr.ok) return fail_at("n=" + std::to_string(n) + " p=" + std::to_string(p));
            }
        return {};
    }});

    if (n_max >= 30) {
        checks.push_back({"gap_witness_30", []() -> std::string {
            GapWitness w = gap_witness(30);
            if (!w.invariant) return fail_at("witness not invariant");
            if (w.oracle.verdict != OracleVerdict::NonMember) return fail_at("oracle verdict");
            return {};
        }});
    }

    checks.push_back({"generators_in_lattice", [cap]() -> std::string {
        for (unsigned n = 2; n <= cap(60); ++n)
            for (const auto& [id, v] : generators_Tn(n))
                if (!v.is_nonnegative() || !in_Vn(n, v))
                    return fail_at("n=" + std::to_string(n) + " p=" + std::to_string(id.p) +
                                   " i=" + std::to_string(id.i));
        return {};
    }});

    checks.push_back({"kernel_certificates", [cap, n_max]() -> std::string {
        std::mt19937 rng(7u);
        for (unsigned n : {6u, 12u, 18u}) {
            if (n > n_max) continue;
            const unsigned p = 2, q = 3;
            auto rels = relations(n, p, q);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(rels.size()) - 1);
            std::uniform_int_distribution<int> expo(0, 2), cf(-3, 3), nterms(1, 4);
            for (int trial = 0; trial < 25; ++trial) {
                GenPoly F = GenPoly::zero(n, p, q);
                int parts = nterms(rng);
                for (int t = 0; t < parts; ++t) {
                    GenPoly mult = GenPoly::zero(n, p, q);
                    ZWExp e{ExpVec(n / p), ExpVec(n / q)};
                    for (auto& v : e.c.e) v = expo(rng);
                    for (auto& v : e.d.e) v = expo(rng);
                    int a = cf(rng);
                    if (a == 0) a = 2;
                    mult.add_term(e, CycElement::from_int(n, a));
                    F += mult * rels[static_cast<size_t>(pick(rng))];
                }
                auto kr = kernel_membership(F, true);
                if (!kr.in_kernel) return fail_at("member misclassified n=" + std::to_string(n));
                if (!F.is_zero() && !verify_certificate(F, *kr.certificate))
                    return fail_at("certificate n=" + std::to_string(n));
            }
        }
        return {};
    }});

    checks.push_back({"lattice_rank", [cap]() -> std::string {
        for (unsigned n = 2; n <= cap(100); ++n) {
            auto basis = basis_Sn(n);
            if (rational_rank(basis) != n - euler_phi(n)) return fail_at("n=" + std::to_string(n));
            for (const auto& v : basis)
                if (!in_Vn(n, v)) return fail_at("n=" + std::to_string(n));
        }
        return {};
    }});

    checks.push_back({"operator_eigenvalues", [cap]() -> std::string {
        for (unsigned n = 2; n <= cap(30); ++n)
            for (unsigned i = 0; i < n; ++i) {
                Poly yi = Poly::variable(n, Basis::Y, i);
                Poly dy = apply_operator(Operator::D, yi);
                Poly expect = yi.scaled(CycElement::zeta_power(n, i));
                if (dy != expect) return fail_at("D n=" + std::to_string(n) + " i=" + std::to_string(i));
                Poly ddy = apply_operator(Operator::Delta, yi);
                Poly dexpect = yi.scaled(CycElement::zeta_power(n, -static_cast<long>(i)));
                if (ddy != dexpect)
                    return fail_at("Delta n=" + std::to_string(n) + " i=" + std::to_string(i));
            }
        return {};
    }});

    checks.push_back({"operator_product_rule", [cap]() -> std::string {
        std::mt19937 rng(11u);
        for (unsigned n = 2; n <= cap(6); ++n) {
            std::uniform_int_distribution<int> expo(0, 2), cf(-3, 3), nterms(1, 3);
            for (int trial = 0; trial < 20; ++trial) {
                auto rand_poly = [&](Basis b) {
                    Poly f(n, b);
                    int parts = nterms(rng);
                    for (int t = 0; t < parts; ++t) {
                        ExpVec e(n);
                        for (auto& v : e.e) v = expo(rng);
                        int a = cf(rng);
                        if (a == 0) a = 1;
                        f.add_term(e, CycElement::from_int(n, a));
                    }
                    return f;
                };
                Poly f = rand_poly(Basis::X), g = rand_poly(Basis::X);
                Poly lhs = apply_operator(Operator::D, f * g);
                Poly rhs = apply_operator(Operator::D, f) * g + f * apply_operator(Operator::D, g);
                if (lhs != rhs) return fail_at("product rule n=" + std::to_string(n));
                if (to_y(apply_operator(Operator::D, f)) != apply_operator(Operator::D, to_y(f)))
                    return fail_at("naturality n=" + std::to_string(n));
            }
        }
        return {};
    }});

    checks.push_back({"rho_injectivity", [cap]() -> std::string {
        for (unsigned n = 2; n <= cap(27); ++n) {
            auto primes = prime_factors(n);
            if (primes.size() != 1) continue;
            auto rep = kernel_rho_trivial(n, primes[0]);
            if (!rep.ok) return fail_at("n=" + std::to_string(n) + ": " + rep.detail);
        }
        return {};
    }});

    checks.push_back({"sigma_kernel", [cap]() -> std::string {
        std::mt19937 rng(13u);
        for (unsigned n = 2; n <= cap(36); ++n) {
            auto primes = prime_factors(n);
            if (primes.size() != 2) continue;
            const unsigned p = primes[0], q = primes[1], npq = n / (p * q);
            std::uniform_int_distribution<int> cf(-2, 2);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<std::int64_t> c(n / p), d(n / q);
                for (auto& v : c) v = cf(rng);
                for (auto& v : d) v = cf(rng);
                bool zero = sigma(n, p, q, c, d).is_zero();
                bool block_form = true;
                for (unsigned i = 0; i < npq && block_form; ++i) {
                    std::int64_t m = c[i];
                    for (unsigned j = 0; j < q; ++j)
                        if (c[i + npq * j] != m) block_form = false;
                    for (unsigned j = 0; j < p; ++j)
                        if (d[i + npq * j] != -m) block_form = false;
                }
                if (zero != block_form) return fail_at("n=" + std::to_string(n));
            }
        }
        return {};
    }});

    checks.push_back({"sl_invariance", [cap]() -> std::string {
        for (unsigned n : {2u, 3u, 5u, 7u, 11u, 13u}) {
            if (n > cap(13)) continue;
            std::mt19937 rng(17u + n);
            std::uniform_int_distribution<int> expo(0, 3), cf(-3, 3), nterms(1, 3);
            for (int trial = 0; trial < 20; ++trial) {
                // Invariant: polynomial in the full-progression monomial.
                Poly inv(n, Basis::Y);
                for (int t = 0, parts = nterms(rng); t < parts; ++t) {
                    std::int64_t k = expo(rng);
                    ExpVec e(n);
                    for (auto& v : e.e) v = k;
                    int a = cf(rng);
                    if (a == 0) a = 1;
                    inv.add_term(e, CycElement::from_int(n, a));
                }
                if (is_sl_invariant(inv) != is_invariant(inv)) return fail_at("invariant side n=" + std::to_string(n));
                // Non-invariant: inject a non-constant exponent vector.
                Poly noninv = inv;
                ExpVec e(n);
                e.e[0] = 1 + expo(rng);
                noninv.add_term(e, CycElement::from_int(n, 1));
                if (is_sl_invariant(noninv) != is_invariant(noninv))
                    return fail_at("non-invariant side n=" + std::to_string(n));
                if (is_sl_invariant(noninv)) return fail_at("generated non-invariant was invariant");
            }
        }
        return {};
    }});

    return checks;
}

}  // namespace

Report run_verify_all(unsigned n_max)
{
    Report rep;
    rep.command = "verify-all";
    rep.params = {{"n_max", n_max}};
    auto t0 = Clock::now();
    if (n_max == 0) {
        fill_error(rep, Error(ErrorCode::InvalidOrder, "n_max must be positive"));
        rep.timings_ms["total"] = ms_since(t0);
        return rep;
    }
    auto checks = build_checks(n_max);
    nlohmann::json results = nlohmann::json::object();
    bool all_ok = true;
    for (auto& check : checks) {  // already sorted by construction order = name order
        auto c0 = Clock::now();
        std::string detail;
        try {
            detail = check.run();
        } catch (const Error& e) {
            detail = std::string(error_code_name(e.code())) + ": " + e.what();
        }
        bool ok = detail.empty();
        all_ok = all_ok && ok;
        results[check.name] = ok ? nlohmann::json{{"status", "pass"}}
                                 : nlohmann::json{{"status", "fail"}, {"detail", detail}};
        rep.timings_ms[check.name] = ms_since(c0);
    }
    rep.details["checks"] = results;
    rep.verdict = all_ok ? "pass" : "fail";
    rep.exit_code = all_ok ? 0 : 1;
    rep.timings_ms["total"] = ms_since(t0);
    return rep;
}

}  // namespace circinv
