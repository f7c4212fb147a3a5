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

#ifndef CIRCINV_REPORT_HPP
#define CIRCINV_REPORT_HPP

#include <string>

#include "json.hpp"

#include "circinv/multipoly.hpp"

namespace circinv {

/// Default caps for X-basis and Y-basis expansion guards; overridable per
/// command and via the CIRCINV_MAX_N environment variable.
inline constexpr unsigned kGuardDefaultX = 16;
inline constexpr unsigned kGuardDefaultY = 30;

/// Machine-readable command outcome. Timings live in their own field so the
/// rest of the report is byte-stable across runs.
struct Report {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::string verdict;  // "pass" | "fail" | "error"
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json timings_ms = nlohmann::json::object();
    int exit_code = 0;  // 0 pass, 1 verdict fail, 2 usage/parse error, 3 guard

    std::string to_json_string() const;
    std::string to_text() const;
};

/// Exact, bit-stable JSON form of a polynomial: an array of
/// {exponents, coeff: {num, den, zeta_coords}} with rationals as strings.
nlohmann::json poly_to_json(const Poly& f);

/// Resolves the effective guard: explicit max_n if nonzero, else the
/// CIRCINV_MAX_N environment variable, else the built-in default.
unsigned effective_max_n(unsigned max_n, unsigned fallback);

Report run_factor(unsigned n, unsigned p, bool emit_blocks, unsigned max_n);
Report run_invariant(unsigned n, const std::string& expr, bool express, bool sl, bool want_gap_witness,
                     unsigned max_n);
Report run_kernel(unsigned n, unsigned p, unsigned q, const std::string& expr, bool certificate,
                  unsigned max_n);
Report run_decompose(unsigned n, const std::string& alpha_csv);
Report run_counterexample(unsigned n);
Report run_verify_all(unsigned n_max);

}  // namespace circinv

#endif
