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

#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"

#include "circinv.h"

namespace {

// "-" means: read the expression from stdin, for inputs too long for argv.
std::string resolve_expr(const std::string& expr)
{
    if (expr != "-") return expr;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

int emit(circinv_status st, circinv_result* res, bool json)
{
    if (res != nullptr) {
        std::cout << (json ? circinv_result_json(res) : circinv_result_text(res)) << "\n";
        circinv_result_free(res);
    }
    return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact invariant-ring toolkit for circulant determinants"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(circinv_version()));

    bool json = false;
    app.add_flag("--json", json, "emit the structured JSON report");

    unsigned n = 0, p = 0, q = 0, max_n = 0;
    std::string expr;
    bool emit_blocks = false, express = false, sl = false, gap_witness = false, certificate = false;

    auto* factor = app.add_subcommand("factor", "verify the block-determinant factorization");
    factor->add_option("n", n, "circulant order")->required();
    factor->add_option("p", p, "divisor of n")->required();
    factor->add_flag("--emit-blocks", emit_blocks, "print the block determinant expansions");
    factor->add_option("--max-n", max_n, "override the expansion guard");

    auto* invariant = app.add_subcommand("invariant", "check invariance of an expression");
    invariant->add_option("n", n, "circulant order")->required();
    invariant->add_option("expr", expr, "polynomial in x<k> or y<k> variables; - reads stdin");
    invariant->add_flag("--express", express, "write the input in the block-determinant generators");
    invariant->add_flag("--sl", sl, "also apply the determinant-one group criterion");
    invariant->add_flag("--gap-witness", gap_witness,
                        "emit the invariant monomial outside the generated subring");
    invariant->add_option("--max-n", max_n, "override the expansion guard");

    auto* kernel = app.add_subcommand("kernel", "decide kernel membership of the generator map");
    kernel->add_option("n", n, "circulant order")->required();
    kernel->add_option("p", p, "first coprime divisor")->required();
    kernel->add_option("q", q, "second coprime divisor")->required();
    kernel->add_option("expr", expr, "polynomial in z<k>/w<k> variables; - reads stdin")->required();
    kernel->add_flag("--certificate", certificate, "construct and verify relation cofactors");
    kernel->add_option("--max-n", max_n, "override the expansion guard");

    auto* decompose = app.add_subcommand("decompose", "decompose a lattice vector over the generators");
    decompose->add_option("n", n, "circulant order")->required();
    decompose->add_option("alpha", expr, "comma-separated integer vector of length n")->required();

    auto* counterexample =
        app.add_subcommand("counterexample", "construct the three-prime generation gap witness");
    counterexample->add_option("n", n, "order with at least three distinct prime factors")->required();

    auto* verify_all = app.add_subcommand("verify-all", "run the full identity battery");
    verify_all->add_option("n_max", n, "largest order to exercise")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    circinv_result* res = nullptr;
    circinv_status st = CIRCINV_USAGE_ERROR;
    if (factor->parsed()) {
        st = circinv_factor(n, p, emit_blocks ? 1 : 0, max_n, &res);
    } else if (invariant->parsed()) {
        if (!gap_witness && expr.empty()) {
            std::cerr << "invariant: an expression is required unless --gap-witness is given\n";
            return 2;
        }
        std::string e = resolve_expr(expr);
        st = circinv_invariant(n, e.c_str(), express ? 1 : 0, sl ? 1 : 0, gap_witness ? 1 : 0, max_n,
                               &res);
    } else if (kernel->parsed()) {
        std::string e = resolve_expr(expr);
        st = circinv_kernel(n, p, q, e.c_str(), certificate ? 1 : 0, max_n, &res);
    } else if (decompose->parsed()) {
        st = circinv_decompose(n, expr.c_str(), &res);
    } else if (counterexample->parsed()) {
        st = circinv_counterexample(n, &res);
    } else if (verify_all->parsed()) {
        if (n == 0) {
            std::cerr << "verify-all: n_max must be positive\n";
            return 2;
        }
        st = circinv_verify_all(n, &res);
    } else {
        return 2;
    }
    return emit(st, res, json);
}
