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

/* C interface to the circulant-determinant invariant-ring library.
 *
 * Every command produces an opaque result handle carrying a verdict, a
 * machine-readable JSON report, and a human-readable text rendering. The
 * returned status doubles as the recommended process exit code:
 *   0 pass, 1 verdict failure, 2 usage/parse error, 3 resource guard.
 * Pass max_n = 0 to use the CIRCINV_MAX_N environment variable or the
 * built-in default.
 */

#ifndef CIRCINV_H
#define CIRCINV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    CIRCINV_OK = 0,
    CIRCINV_VERDICT_FAIL = 1,
    CIRCINV_USAGE_ERROR = 2,
    CIRCINV_GUARD = 3
} circinv_status;

typedef struct circinv_result circinv_result;

/* Verifies the block-determinant product identity for the order-n circulant
 * determinant at divisor p. */
circinv_status circinv_factor(unsigned n, unsigned p, int emit_blocks, unsigned max_n,
                              circinv_result** out);

/* Invariance checks on a parsed expression; flags enable expressing the
 * input in the block-determinant generators, the determinant-one group
 * criterion, and emitting the three-prime gap witness (expr ignored). */
circinv_status circinv_invariant(unsigned n, const char* expr, int express, int sl, int gap_witness,
                                 unsigned max_n, circinv_result** out);

/* Kernel membership of the generator substitution for coprime p, q with
 * pq | n; optionally constructs and verifies a syzygy certificate. */
circinv_status circinv_kernel(unsigned n, unsigned p, unsigned q, const char* expr, int certificate,
                              unsigned max_n, circinv_result** out);

/* Decomposes a comma-separated nonnegative lattice vector over the
 * progression generators (n with at most two prime factors). */
circinv_status circinv_decompose(unsigned n, const char* alpha_csv, circinv_result** out);

/* Emits the nonnegative lattice vector outside the generator span for n
 * with at least three prime factors, with oracle evidence. */
circinv_status circinv_counterexample(unsigned n, circinv_result** out);

/* Runs the full identity battery up to n_max. */
circinv_status circinv_verify_all(unsigned n_max, circinv_result** out);

/* Accessors; the returned strings live as long as the result handle. */
const char* circinv_result_json(const circinv_result* r);
const char* circinv_result_text(const circinv_result* r);
const char* circinv_result_verdict(const circinv_result* r);

void circinv_result_free(circinv_result* r);

const char* circinv_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CIRCINV_H */
