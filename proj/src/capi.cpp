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

#include "circinv.h"

#include <new>
#include <string>

#include "circinv/report.hpp"

struct circinv_result {
    std::string json;
    std::string text;
    std::string verdict;
    int exit_code = 0;
};

namespace {

circinv_status wrap(circinv_result** out, circinv::Report (*run)(void*), void* args)
{
    if (out == nullptr) return CIRCINV_USAGE_ERROR;
    *out = nullptr;
    circinv::Report rep;
    try {
        rep = run(args);
    } catch (const std::exception& e) {
        rep.command = "error";
        rep.verdict = "error";
        rep.details["error"] = e.what();
        rep.exit_code = 2;
    }
    auto* r = new (std::nothrow) circinv_result;
    if (r == nullptr) return CIRCINV_USAGE_ERROR;
    r->json = rep.to_json_string();
    r->text = rep.to_text();
    r->verdict = rep.verdict;
    r->exit_code = rep.exit_code;
    *out = r;
    return static_cast<circinv_status>(rep.exit_code);
}

}  // namespace

extern "C" {

circinv_status circinv_factor(unsigned n, unsigned p, int emit_blocks, unsigned max_n,
                              circinv_result** out)
{
    struct Args {
        unsigned n, p, max_n;
        bool emit;
    } a{n, p, max_n, emit_blocks != 0};
    return wrap(
        out,
        [](void* v) {
            auto* x = static_cast<Args*>(v);
            return circinv::run_factor(x->n, x->p, x->emit, x->max_n);
        },
        &a);
}

circinv_status circinv_invariant(unsigned n, const char* expr, int express, int sl, int gap_witness,
                                 unsigned max_n, circinv_result** out)
{
    struct Args {
        unsigned n, max_n;
        std::string expr;
        bool express, sl, gap;
    } a{n, max_n, expr != nullptr ? expr : "", express != 0, sl != 0, gap_witness != 0};
    return wrap(
        out,
        [](void* v) {
            auto* x = static_cast<Args*>(v);
            return circinv::run_invariant(x->n, x->expr, x->express, x->sl, x->gap, x->max_n);
        },
        &a);
}

circinv_status circinv_kernel(unsigned n, unsigned p, unsigned q, const char* expr, int certificate,
                              unsigned max_n, circinv_result** out)
{
    struct Args {
        unsigned n, p, q, max_n;
        std::string expr;
        bool cert;
    } a{n, p, q, max_n, expr != nullptr ? expr : "", certificate != 0};
    return wrap(
        out,
        [](void* v) {
            auto* x = static_cast<Args*>(v);
            return circinv::run_kernel(x->n, x->p, x->q, x->expr, x->cert, x->max_n);
        },
        &a);
}

circinv_status circinv_decompose(unsigned n, const char* alpha_csv, circinv_result** out)
{
    struct Args {
        unsigned n;
        std::string csv;
    } a{n, alpha_csv != nullptr ? alpha_csv : ""};
    return wrap(
        out,
        [](void* v) {
            auto* x = static_cast<Args*>(v);
            return circinv::run_decompose(x->n, x->csv);
        },
        &a);
}

circinv_status circinv_counterexample(unsigned n, circinv_result** out)
{
    struct Args {
        unsigned n;
    } a{n};
    return wrap(
        out,
        [](void* v) { return circinv::run_counterexample(static_cast<Args*>(v)->n); }, &a);
}

circinv_status circinv_verify_all(unsigned n_max, circinv_result** out)
{
    struct Args {
        unsigned n_max;
    } a{n_max};
    return wrap(
        out,
        [](void* v) { return circinv::run_verify_all(static_cast<Args*>(v)->n_max); }, &a);
}

const char* circinv_result_json(const circinv_result* r)
{
    return r != nullptr ? r->json.c_str() : "";
}

const char* circinv_result_text(const circinv_result* r)
{
    return r != nullptr ? r->text.c_str() : "";
}

const char* circinv_result_verdict(const circinv_result* r)
{
    return r != nullptr ? r->verdict.c_str() : "";
}

void circinv_result_free(circinv_result* r)
{
    delete r;
}

const char* circinv_version(void)
{
    return "1.0.0";
}

}  // extern "C"
