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

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs a shell command; "%" is replaced with the quoted CLI path.
RunResult run_cmd(const std::string& tmpl)
{
    std::string cmd = tmpl;
    size_t at = cmd.find('%');
    REQUIRE(at != std::string::npos);
    cmd.replace(at, 1, "'" + g_cli + "'");
    cmd += " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int st = pclose(pipe);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

RunResult run(const std::string& args) { return run_cmd("% " + args); }

}  // namespace

int main(int argc, char** argv)
{
    doctest::Context ctx;
    int shift = 0;
    if (argc > 1 && argv[1][0] != '-') {
        g_cli = argv[1];
        shift = 1;
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli_driver <path-to-cli>\n");
        return 1;
    }
    ctx.applyCommandLine(argc - shift, argv + shift);
    return ctx.run();
}

TEST_CASE("exit codes")
{
    CHECK(run("factor 6 2").code == 0);
    CHECK(run("factor 6 4").code == 2);           // not a divisor
    CHECK(run("factor 20 2").code == 3);          // expansion guard
    CHECK(run("kernel 6 2 3 z0").code == 1);      // definite negative verdict
    CHECK(run("kernel 6 2 6 z0").code == 2);      // not coprime
    CHECK(run("verify-all 0").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("invariant 2").code == 2);          // missing expression
}

TEST_CASE("text output examples")
{
    RunResult f = run("factor 6 2");
    CHECK(f.out.find("factor: pass") != std::string::npos);

    RunResult inv = run("invariant 2 'x0^2 - x1^2' --express");
    CHECK(inv.code == 0);
    CHECK(inv.out.find("T(2,0)") != std::string::npos);

    RunResult gap = run("invariant 30 --gap-witness");
    CHECK(gap.code == 0);
    CHECK(gap.out.find("y0*y1*y7*y13*y19*y20") != std::string::npos);

    RunResult ker = run("kernel 12 2 3 'w0*w2 - z0*z2*z4' --certificate");
    CHECK(ker.code == 0);
    CHECK(ker.out.find("-1") != std::string::npos);

    RunResult ce = run("counterexample 30");
    CHECK(ce.code == 0);
    CHECK(ce.out.find("NonMember") != std::string::npos);

    RunResult blocks = run("factor 4 2 --emit-blocks");
    CHECK(blocks.code == 0);
    CHECK(blocks.out.find("x0^2") != std::string::npos);
}

TEST_CASE("json output is deterministic")
{
    RunResult a = run("--json factor 6 2");
    RunResult b = run("--json factor 6 2");
    CHECK(a.code == 0);
    // strip the timing lines before comparing
    auto strip = [](std::string s) {
        std::string out;
        size_t start = 0;
        while (start < s.size()) {
            size_t end = s.find('\n', start);
            if (end == std::string::npos) end = s.size();
            std::string line = s.substr(start, end - start);
            if (line.find("\"total\"") == std::string::npos) out += line + "\n";
            start = end + 1;
        }
        return out;
    };
    CHECK(strip(a.out) == strip(b.out));
    CHECK(a.out.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("stdin expression via dash")
{
    RunResult r = run_cmd("echo 'z0*z1*z2 - w0*w1' | % kernel 6 2 3 -");
    CHECK(r.code == 0);
    CHECK(r.out.find("kernel: pass") != std::string::npos);
}

TEST_CASE("environment guard variable")
{
    CHECK(run("factor 12 2").code == 0);
    RunResult g = run_cmd("CIRCINV_MAX_N=10 % factor 12 2");
    CHECK(g.code == 3);
    RunResult lifted = run_cmd("CIRCINV_MAX_N=10 % factor 12 2 --max-n 16");
    CHECK(lifted.code == 0);
}
