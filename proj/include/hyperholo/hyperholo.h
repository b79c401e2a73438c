/*
 * Copyright (C) 2026 The hyperholo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the hyperholo library. All objects are opaque handles
 * released with their *_free function. Strings returned through char**
 * are owned by the caller and released with hh_string_free. Every call
 * returns an hh_status; on failure hh_last_error() describes the problem
 * (per thread). */

#ifndef HYPERHOLO_H_
#define HYPERHOLO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HH_API __declspec(dllexport)
#else
#define HH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hh_status {
  HH_OK = 0,
  HH_INVALID_ARGUMENT = 1,
  HH_ZERO_DIVISOR = 2,
  HH_SINGULARITY = 3,
  HH_POLE_OF_MAP = 4,
  HH_TOO_CLOSE_TO_BOUNDARY = 5,
  HH_CERTIFICATION_FAILED = 6,
  HH_CONFIG = 7,
  HH_RANK_MISMATCH = 8,
  HH_INTERNAL = 99
} hh_status;

/* Coordinates in the basis 1, e1, e2, e3. */
typedef struct hh_quat {
  double q[4];
} hh_quat;

typedef enum hh_side { HH_LEFT = 0, HH_RIGHT = 1 } hh_side;

typedef struct hh_psi hh_psi;
typedef struct hh_field hh_field;
typedef struct hh_dictionary hh_dictionary;
typedef struct hh_domain hh_domain;
typedef struct hh_moebius hh_moebius;
typedef struct hh_subspace_kernel hh_subspace_kernel;

HH_API const char* hh_version(void);
HH_API const char* hh_last_error(void);
HH_API void hh_string_free(char* s);

/* Quaternion arithmetic. */
HH_API hh_quat hh_quat_mul(hh_quat a, hh_quat b);
HH_API hh_quat hh_quat_conj(hh_quat a);
HH_API double hh_quat_norm(hh_quat a);
HH_API hh_status hh_quat_inverse(hh_quat a, hh_quat* out);

/* Structural sets. */
HH_API hh_status hh_psi_create(const hh_quat frame[4], hh_psi** out);
/* "cimmino" (1, e1, -e2, e3), "standard", or a JSON array of four. */
HH_API hh_status hh_psi_from_json(const char* json, hh_psi** out);
HH_API void hh_psi_free(hh_psi* psi);
HH_API int hh_psi_sign(const hh_psi* psi);
HH_API hh_status hh_psi_coords(const hh_psi* psi, hh_quat q, double out[4]);
HH_API hh_status hh_pairing(const hh_psi* psi, hh_quat q, hh_quat x,
                            double* out);

/* Domains: {"type":"ball","center":[..],"radius":r} or
 * {"type":"box","lo":[..],"hi":[..]}. */
HH_API hh_status hh_domain_from_json(const char* json, hh_domain** out);
HH_API void hh_domain_free(hh_domain* d);
HH_API hh_status hh_domain_contains(const hh_domain* d, hh_quat x, int* out);

/* Fields. */
HH_API hh_status hh_field_constant(hh_quat value, hh_field** out);
HH_API hh_status hh_field_identity(hh_field** out);
HH_API hh_status hh_field_fueter_variable(int k, const hh_psi* psi,
                                          hh_field** out);
HH_API hh_status hh_field_random_polynomial(uint64_t seed, double scale,
                                            hh_field** out);
/* x -> e^{-<q,x>} g(x). */
HH_API hh_status hh_field_exp_modulate(const hh_field* g, hh_quat q,
                                       const hh_psi* psi, hh_field** out);
/* x -> K_q(pole - x). */
HH_API hh_status hh_field_kernel(hh_quat pole, hh_quat q, const hh_psi* psi,
                                 hh_field** out);
HH_API void hh_field_free(hh_field* f);
HH_API hh_status hh_field_eval(const hh_field* f, hh_quat x, hh_quat* out);
HH_API hh_status hh_field_label(const hh_field* f, char** out);
/* Perturbed operator at x; h <= 0 uses closed-form partials when present. */
HH_API hh_status hh_field_apply(const hh_field* f, hh_side side, hh_quat q,
                                const hh_psi* psi, hh_quat x, double h,
                                hh_quat* out);

/* Cauchy kernel K_q(y - x). */
HH_API hh_status hh_cauchy_kernel(hh_quat y, hh_quat x, hh_quat q,
                                  const hh_psi* psi, hh_quat* out);
/* Boundary reconstruction of f at x. resolution_json may be NULL. */
HH_API hh_status hh_cauchy_reconstruct(const hh_field* f, hh_quat q,
                                       const hh_psi* psi, const hh_domain* d,
                                       hh_quat x, const char* resolution_json,
                                       hh_quat* out);

/* Dictionaries: {"psi", "q", "poles", "degree_one"}; certified on build. */
HH_API hh_status hh_dictionary_from_json(const char* json,
                                         hh_dictionary** out);
HH_API void hh_dictionary_free(hh_dictionary* d);
HH_API size_t hh_dictionary_size(const hh_dictionary* d);
HH_API hh_status hh_dictionary_entry(const hh_dictionary* d, size_t i,
                                     hh_field** out);
HH_API hh_status hh_dictionary_to_json(const hh_dictionary* d, char** out);

/* Moebius maps x -> (ax + b)(cx + d)^{-1}. */
HH_API hh_status hh_moebius_create(hh_quat a, hh_quat b, hh_quat c, hh_quat d,
                                   hh_moebius** out);
HH_API void hh_moebius_free(hh_moebius* t);
HH_API hh_status hh_moebius_apply(const hh_moebius* t, hh_quat x,
                                  hh_quat* out);
HH_API hh_status hh_moebius_inverse(const hh_moebius* t, hh_quat y,
                                    hh_quat* out);

/* Subspace kernel of a dictionary in the e^{2<q,x>}-weighted space. */
HH_API hh_status hh_subspace_kernel_create(const hh_dictionary* dict,
                                           const hh_domain* d,
                                           const char* resolution_json,
                                           hh_subspace_kernel** out);
HH_API void hh_subspace_kernel_free(hh_subspace_kernel* k);
HH_API size_t hh_subspace_kernel_rank(const hh_subspace_kernel* k);
HH_API hh_status hh_subspace_kernel_eval(const hh_subspace_kernel* k,
                                         hh_quat x, hh_quat xi, hh_quat* out);
HH_API hh_status hh_subspace_kernel_to_json(const hh_subspace_kernel* k,
                                            char** out);

/* Verification. */
/* JSON array of {"name","description"}. */
HH_API hh_status hh_list_checks(char** out);
/* Validates a config; *out receives the normalized settings JSON. */
HH_API hh_status hh_parse_config(const char* text, char** out);
/* Runs one check; settings_json is a config object without "checks"
 * (NULL for defaults). *out is the report JSON, *pass its verdict. */
HH_API hh_status hh_run_check(const char* name, const char* settings_json,
                              char** out, int* pass);
/* Runs every check of a config. *out is a JSON array of reports. */
HH_API hh_status hh_run_config(const char* text, int jobs, int timings,
                               char** out, int* all_pass);
/* format: "csv" or "text"; reports_json as produced by hh_run_config. */
HH_API hh_status hh_summary(const char* reports_json, const char* format,
                            char** out);

#ifdef __cplusplus
}
#endif

#endif /* HYPERHOLO_H_ */
