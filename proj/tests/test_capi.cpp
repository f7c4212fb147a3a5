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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "circinv.h"

namespace {

struct Result {
    circinv_status st;
    std::string json, text, verdict;
};

// Takes the address of the result slot so the call filling it can appear as a
// sibling argument without relying on evaluation order.
Result take(circinv_status st, circinv_result** r)
{
    Result out{st, "", "", ""};
    REQUIRE(*r != nullptr);
    out.json = circinv_result_json(*r);
    out.text = circinv_result_text(*r);
    out.verdict = circinv_result_verdict(*r);
    circinv_result_free(*r);
    *r = nullptr;
    return out;
}

}  // namespace

TEST_CASE("factor pass and usage error")
{
    circinv_result* r = nullptr;
    Result ok = take(circinv_factor(6, 2, 0, 0, &r), &r);
    CHECK(ok.st == CIRCINV_OK);
    CHECK(ok.verdict == "pass");
    CHECK(ok.json.find("\"lhs_terms\"") != std::string::npos);
    CHECK(ok.text.find("factor: pass") != std::string::npos);

    r = nullptr;
    Result bad = take(circinv_factor(6, 4, 0, 0, &r), &r);
    CHECK(bad.st == CIRCINV_USAGE_ERROR);
    CHECK(bad.verdict == "error");
    CHECK(bad.json.find("NotADivisor") != std::string::npos);
}

TEST_CASE("guard trips with status 3")
{
    circinv_result* r = nullptr;
    Result g = take(circinv_factor(20, 2, 0, 0, &r), &r);
    CHECK(g.st == CIRCINV_GUARD);
    CHECK(g.json.find("ExpansionTooLarge") != std::string::npos);

    // raising the cap makes the same call succeed
    r = nullptr;
    Result ok = take(circinv_factor(12, 2, 0, 16, &r), &r);
    CHECK(ok.st == CIRCINV_OK);
}

TEST_CASE("invariant verdicts")
{
    circinv_result* r = nullptr;
    Result inv = take(circinv_invariant(2, "x0^2 - x1^2", 1, 0, 0, 0, &r), &r);
    CHECK(inv.st == CIRCINV_OK);
    CHECK(inv.json.find("T(2,0)") != std::string::npos);

    r = nullptr;
    Result non = take(circinv_invariant(2, "x0", 0, 0, 0, 0, &r), &r);
    CHECK(non.st == CIRCINV_VERDICT_FAIL);
    CHECK(non.verdict == "fail");

    r = nullptr;
    Result gap = take(circinv_invariant(30, "", 0, 0, 1, 0, &r), &r);
    CHECK(gap.st == CIRCINV_OK);
    CHECK(gap.text.find("y0*y1*y7*y13*y19*y20") != std::string::npos);

    r = nullptr;
    Result syn = take(circinv_invariant(2, "x0 +", 0, 0, 0, 0, &r), &r);
    CHECK(syn.st == CIRCINV_USAGE_ERROR);
}

TEST_CASE("kernel decisions")
{
    circinv_result* r = nullptr;
    Result in = take(circinv_kernel(6, 2, 3, "z0*z1*z2 - w0*w1", 1, 0, &r), &r);
    CHECK(in.st == CIRCINV_OK);
    CHECK(in.json.find("\"in_kernel\": true") != std::string::npos);

    r = nullptr;
    Result out = take(circinv_kernel(6, 2, 3, "z0", 0, 0, &r), &r);
    CHECK(out.st == CIRCINV_VERDICT_FAIL);
    CHECK(out.text.find("y0*y3") != std::string::npos);

    r = nullptr;
    Result cop = take(circinv_kernel(6, 2, 6, "z0", 0, 0, &r), &r);
    CHECK(cop.st == CIRCINV_USAGE_ERROR);
    CHECK(cop.json.find("NotCoprime") != std::string::npos);
}

TEST_CASE("decompose and counterexample")
{
    circinv_result* r = nullptr;
    Result d = take(circinv_decompose(4, "2,1,2,1", &r), &r);
    CHECK(d.st == CIRCINV_OK);

    r = nullptr;
    Result bad = take(circinv_decompose(4, "1,1,0", &r), &r);
    CHECK(bad.st == CIRCINV_USAGE_ERROR);

    r = nullptr;
    Result ce = take(circinv_counterexample(30, &r), &r);
    CHECK(ce.st == CIRCINV_OK);
    CHECK(ce.json.find("NonMember") != std::string::npos);

    r = nullptr;
    Result few = take(circinv_counterexample(6, &r), &r);
    CHECK(few.st == CIRCINV_USAGE_ERROR);
}

TEST_CASE("verify-all and version")
{
    circinv_result* r = nullptr;
    Result v = take(circinv_verify_all(6, &r), &r);
    CHECK(v.st == CIRCINV_OK);
    CHECK(v.verdict == "pass");

    CHECK(std::string(circinv_version()).find('.') != std::string::npos);
    CHECK(circinv_factor(6, 2, 0, 0, nullptr) == CIRCINV_USAGE_ERROR);
    CHECK(std::string(circinv_result_text(nullptr)).empty());
}

TEST_CASE("reports are byte stable across runs")
{
    circinv_result* r = nullptr;
    Result a = take(circinv_factor(8, 2, 1, 0, &r), &r);
    r = nullptr;
    Result b = take(circinv_factor(8, 2, 1, 0, &r), &r);
    CHECK(a.text == b.text);  // timings are excluded from the text rendering
}
