/*
 * Copyright 2026 The permscan authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * permscan: concatenated-permutation sequences, congruence sieves, and
 * perfect-power searches behind a C ABI.
 *
 * Conventions:
 *   - Every fallible function returns ps_status; PS_OK means the out
 *     parameters are valid.
 *   - Objects come back through ps_* opaque handles and are released with
 *     the matching *_free. Strings returned through char** are released
 *     with ps_string_free.
 *   - ps_last_error() describes the most recent failure on the calling
 *     thread.
 */
#ifndef PERMSCAN_PERMSCAN_H_
#define PERMSCAN_PERMSCAN_H_

#include <stdint.h>

#if defined(_WIN32)
#define PERMSCAN_API __declspec(dllexport)
#else
#define PERMSCAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_ERR_INVALID = 1,  /* malformed input or null argument */
  PS_ERR_DOMAIN = 2,   /* argument outside the operation's domain */
  PS_ERR_OVERFLOW = 3, /* result does not fit the requested width */
  PS_ERR_BUDGET = 4,   /* scan refused; see ps_last_error for the size */
  PS_ERR_PARSE = 5,    /* checkpoint or b-file rejected */
  PS_ERR_IO = 6,       /* file could not be opened or replaced */
  PS_ERR_NOMEM = 7,
  PS_ERR_INTERNAL = 8
} ps_status;

PERMSCAN_API const char* ps_status_str(ps_status status);
PERMSCAN_API const char* ps_last_error(void);
PERMSCAN_API const char* ps_version(void);

PERMSCAN_API void ps_string_free(char* s);

/* ---- arbitrary-precision naturals ---- */

typedef struct ps_natural ps_natural;

PERMSCAN_API ps_status ps_natural_from_decimal(const char* decimal,
                                               ps_natural** out);
PERMSCAN_API ps_status ps_natural_to_decimal(const ps_natural* x, char** out);
PERMSCAN_API void ps_natural_free(ps_natural* x);

/* ---- sequences and blocks ---- */

typedef enum ps_seq_kind {
  PS_SEQ_A007908 = 0, /* concatenations 1..m */
  PS_SEQ_A001292 = 1, /* cyclic rotations, sorted per block */
  PS_SEQ_A352991 = 2, /* all block members, ascending per block */
  PS_SEQ_A353025 = 3  /* a352991 minus the sieved-out blocks */
} ps_seq_kind;

PERMSCAN_API ps_status ps_concat_range(uint64_t m, ps_natural** out);
PERMSCAN_API ps_status ps_block_digit_length(uint64_t m, uint64_t* out);
PERMSCAN_API ps_status ps_rotation(uint64_t m, uint64_t offset,
                                   ps_natural** out);

/* First min(limit, block size) members of block m, ascending, as decimal
 * strings. Free with ps_string_array_free. */
PERMSCAN_API ps_status ps_enumerate_block(uint64_t m, uint64_t limit,
                                          char*** out_values,
                                          uint64_t* out_count);
PERMSCAN_API void ps_string_array_free(char** values, uint64_t count);

/* Infinite term-by-term stream of one of the four sequences. */
typedef struct ps_seq_iter ps_seq_iter;
PERMSCAN_API ps_status ps_seq_iter_new(ps_seq_kind kind, ps_seq_iter** out);
PERMSCAN_API ps_status ps_seq_iter_next(ps_seq_iter* it, char** out_value);
PERMSCAN_API void ps_seq_iter_free(ps_seq_iter* it);

/* Block membership. On PS_OK, *out_member is 0 or 1; when 1, *out_m is the
 * block and *out_witness (length *out_witness_len, free with
 * ps_u64_array_free) lists the token order producing the value. */
PERMSCAN_API ps_status ps_membership(const char* decimal, int* out_member,
                                     uint64_t* out_m, uint64_t** out_witness,
                                     uint64_t* out_witness_len);
PERMSCAN_API void ps_u64_array_free(uint64_t* values);

/* ---- congruence filters ---- */

PERMSCAN_API ps_status ps_triangular_residue(uint64_t m, unsigned* out);
PERMSCAN_API ps_status ps_theorem1_excludes(uint64_t m, int* out);
PERMSCAN_API ps_status ps_digital_root(const ps_natural* x, unsigned* out);
PERMSCAN_API ps_status ps_remark1_passes(const ps_natural* x, int* out);

/* ---- perfect powers ---- */

/* *out_exact reports root^k == x; *out_root is the floor root either way. */
PERMSCAN_API ps_status ps_integer_nth_root(const ps_natural* x, uint32_t k,
                                           ps_natural** out_root,
                                           int* out_exact);
/* *out_root is set only when *out_is_square is 1. */
PERMSCAN_API ps_status ps_perfect_square_root(const ps_natural* x,
                                              ps_natural** out_root,
                                              int* out_is_square);
/* Maximal decomposition x = base^exponent; outputs set only when
 * *out_is_power is 1. Requires x >= 2. */
PERMSCAN_API ps_status ps_perfect_power_decompose(const ps_natural* x,
                                                  ps_natural** out_base,
                                                  uint32_t* out_exponent,
                                                  int* out_is_power);

/* ---- scans ---- */

typedef struct ps_scan_options {
  uint64_t budget;   /* bases per (m, k) cell; 0 = unlimited */
  uint32_t workers;  /* 0 = hardware concurrency */
  const char* checkpoint_path; /* NULL = no checkpointing */
  /* When nonzero, a checkpoint at checkpoint_path is loaded and the scan
   * resumes from it; missing file = fresh start. */
  int resume;
} ps_scan_options;

typedef struct ps_report ps_report;

PERMSCAN_API ps_status ps_power_scan_block(uint64_t m, uint32_t k,
                                           const ps_scan_options* opts,
                                           ps_report** out);
PERMSCAN_API ps_status ps_kashihara_scan(uint64_t m_max,
                                         const ps_scan_options* opts,
                                         ps_report** out);
PERMSCAN_API ps_status ps_conjecture1_scan(uint64_t m_max, uint32_t k_max,
                                           const ps_scan_options* opts,
                                           ps_report** out);

PERMSCAN_API uint64_t ps_report_candidates(const ps_report* rep);
PERMSCAN_API uint64_t ps_report_filtered(const ps_report* rep);
PERMSCAN_API double ps_report_elapsed(const ps_report* rep);
PERMSCAN_API uint64_t ps_report_hit_count(const ps_report* rep);
/* i past the hit count yields PS_ERR_DOMAIN. */
PERMSCAN_API ps_status ps_report_hit(const ps_report* rep, uint64_t i,
                                     char** out_value, char** out_base,
                                     uint32_t* out_exponent);
/* 1 when the scanned conjecture survived (rotation scans: no hits;
 * root-range scans: no exponent >= 3 hits). */
PERMSCAN_API int ps_report_holds(const ps_report* rep);
PERMSCAN_API void ps_report_free(ps_report* rep);

/* ---- checkpoints ---- */

typedef struct ps_checkpoint ps_checkpoint;

PERMSCAN_API ps_status ps_checkpoint_load(const char* path,
                                          ps_checkpoint** out);
/* kind: 0 = rotation scan, 1 = root-range scan */
PERMSCAN_API int ps_checkpoint_kind(const ps_checkpoint* cp);
PERMSCAN_API uint64_t ps_checkpoint_m(const ps_checkpoint* cp);
PERMSCAN_API uint32_t ps_checkpoint_exponent(const ps_checkpoint* cp);
PERMSCAN_API ps_status ps_checkpoint_next_root(const ps_checkpoint* cp,
                                               char** out);
PERMSCAN_API uint64_t ps_checkpoint_next_rotation(const ps_checkpoint* cp);
PERMSCAN_API uint64_t ps_checkpoint_hit_count(const ps_checkpoint* cp);
PERMSCAN_API void ps_checkpoint_free(ps_checkpoint* cp);

/* ---- density estimates ---- */

PERMSCAN_API ps_status ps_trailing_digit_law(unsigned digit, uint64_t* num,
                                             uint64_t* den);
PERMSCAN_API ps_status ps_trailing_digit_empirical(uint64_t m_max,
                                                   uint64_t counts[10],
                                                   uint64_t* total);
PERMSCAN_API ps_status ps_kashihara_bound(uint32_t j_max, uint32_t k_max,
                                          double* log10_total,
                                          double* k2_fraction,
                                          double* log10_j_tail);

/* ---- b-files ---- */

/* *out_ok reports the comparison verdict; on a mismatch, *out_index is the
 * failing 1-based index and *out_detail (free with ps_string_free) holds a
 * human-readable message. */
PERMSCAN_API ps_status ps_bfile_compare(ps_seq_kind kind, const char* path,
                                        uint64_t count, int* out_ok,
                                        uint64_t* out_index,
                                        char** out_detail);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PERMSCAN_PERMSCAN_H_ */
