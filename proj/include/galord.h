/*
   Copyright 2026 The galord authors

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

/* C surface of the galord library.
 *
 * Every query is a pure function of its arguments and is safe to call from
 * multiple threads. Results come back as opaque text buffers (JSON, NDJSON,
 * CSV, or a plain-text report, depending on the call); the caller owns the
 * buffer and releases it with galord_buf_free. On GALORD_INVALID the buffer
 * holds a machine-readable {"error": ..., "message": ...} object instead of
 * a payload. Buffers are NUL-terminated UTF-8.
 */
#ifndef GALORD_H
#define GALORD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum galord_status {
  GALORD_OK = 0,
  GALORD_CHECK_FAILED = 1, /* a verification suite found a failing property */
  GALORD_INVALID = 2,      /* bad arguments or domain validation failure */
  GALORD_INTERNAL = 3
} galord_status;

typedef struct galord_buf galord_buf; /* opaque result buffer */

const char* galord_version(void);

const char* galord_buf_data(const galord_buf* buf);
size_t galord_buf_size(const galord_buf* buf);
void galord_buf_free(galord_buf* buf);

/* Freeness verdict for one tuple. closure is "dihedral" or "cyclic";
 * totally_ramified is ignored for cyclic closures. out_free receives 0/1,
 * out_cf_length the expansion length of a/p (0 in the maximal case a = 0).
 * Either out pointer may be NULL. */
galord_status galord_verdict(int64_t p, int64_t e, int64_t t,
                             const char* closure, int totally_ramified,
                             int* out_free, int64_t* out_cf_length);

/* Same query, full record as a JSON object. */
galord_status galord_verdict_json(int64_t p, int64_t e, int64_t t,
                                  const char* closure, int totally_ramified,
                                  galord_buf** out);

/* Valuation profile (nu, n, E, scaffold) as JSON; fails with NotApplicable
 * when a = 0. */
galord_status galord_order_json(int64_t p, int64_t e, int64_t t,
                                const char* closure, int totally_ramified,
                                galord_buf** out);

/* Continued fraction of a/p with convergents and the running-minima set. */
galord_status galord_cf_json(int64_t a, int64_t p, galord_buf** out);

/* Sweep over all valid totally ramified dihedral tuples. Either pass an
 * explicit array of primes (p_list/p_count) or p_list = NULL with a bound
 * p_max. format is "json" (one object per line) or "csv". */
galord_status galord_survey(const int64_t* p_list, size_t p_count,
                            int64_t p_max, int64_t e_max, const char* format,
                            galord_buf** out);

/* Runs a named invariant suite: cfrac, assocorder, groupring, redmethod,
 * patterns, or all. max_p <= 0 keeps each check's default bound; seed feeds
 * the randomized reduction trials. Returns GALORD_CHECK_FAILED when any
 * property fails; the buffer always holds the full report. */
galord_status galord_verify(const char* suite, int64_t max_p, uint64_t seed,
                            galord_buf** out);

/* Reduces a stacked action matrix supplied as JSON:
 *   {"p": 3, "n": 2, "rows": [["1/1", "0/1"], ...]}   (n*n rows of width n,
 * entries as decimal "num/den" strings with denominators coprime to p).
 * The result holds the reduced matrix D, the extracted basis, and the
 * transformation certificate verdict. */
galord_status galord_reduce_json(const char* matrix_json, galord_buf** out);

#ifdef __cplusplus
}
#endif

#endif /* GALORD_H */
