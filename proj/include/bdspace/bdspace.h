// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/*
 * C interface of libbdspace.
 *
 * Every fallible function returns a bds_status. On failure the outputs are
 * left untouched and bds_last_error() describes the problem; the message is
 * per thread and stays valid until the next failing call on that thread.
 * Handles are immutable after creation and may be shared between threads.
 */

#ifndef BDSPACE_BDSPACE_H_
#define BDSPACE_BDSPACE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bds_status {
  BDS_OK = 0,
  BDS_DOMAIN = 1,            /* argument outside the mathematical domain */
  BDS_TRUNCATION = 2,        /* series did not converge within its term budget */
  BDS_EVALUATION = 3,        /* non-finite integrand or stencil value */
  BDS_OVERFLOW = 4,          /* result not representable in double */
  BDS_INVALID_ARGUMENT = 5,  /* null pointer, bad enum value, size mismatch */
  BDS_PARSE = 6,             /* malformed JSON input */
  BDS_INTERNAL = 99
} bds_status;

typedef struct bds_complex {
  double re;
  double im;
} bds_complex;

typedef enum bds_kernel_method {
  BDS_METHOD_CLOSED = 0,
  BDS_METHOD_SERIES = 1
} bds_kernel_method;

typedef enum bds_transform_method {
  BDS_TRANSFORM_SERIES = 0,
  BDS_TRANSFORM_INTEGRAL = 1,
  BDS_TRANSFORM_INTEGRAL_VARPI2 = 2
} bds_transform_method;

typedef struct bds_kernel_value {
  bds_complex value;
  int method;       /* bds_kernel_method or bds_transform_method */
  int terms;        /* series terms, or final quadrature size */
  double residual;  /* truncation or quadrature error estimate, >= 0 */
} bds_kernel_value;

typedef struct bds_space bds_space;
typedef struct bds_transform bds_transform;
typedef struct bds_varpi bds_varpi;

const char* bds_version(void);
const char* bds_last_error(void);
const char* bds_status_name(int status);
void bds_string_free(char* s);

/* ---- spaces and reproducing kernels ---- */

bds_status bds_space_create(double nu, int m, bds_space** out);
void bds_space_destroy(bds_space* space);

bds_status bds_monomial_norm_sq(const bds_space* space, int j, double* out);
/* Orthonormal basis function psi_j(z). */
bds_status bds_basis_eval(const bds_space* space, int j, bds_complex z, bds_complex* out);
/* Closed form. */
bds_status bds_reproducing_kernel(const bds_space* space, bds_complex z, bds_complex w, bds_kernel_value* out);
/* Basis series with terms > 0 fixed, or adaptive when terms == 0. */
bds_status bds_reproducing_kernel_series(const bds_space* space, bds_complex z, bds_complex w, int terms,
                                         bds_kernel_value* out);

/* Membership heuristic for a power series given as a JSON array of [re, im]
 * pairs or reals. class_out: 0 convergent, 1 divergent, 2 inconclusive. */
bds_status bds_membership_test(const bds_space* space, const char* coeffs_json, int tail_window, double eps,
                               int* class_out, double* ratio_out, double* bertrand_out);

bds_status bds_heat_kernel(double nu, double t, bds_complex z, bds_complex w, int method, bds_kernel_value* out);
bds_status bds_landau_kernel(double nu, int ell, bds_complex z, bds_complex w, bds_complex* out);
bds_status bds_spectral_projector_kernel(double nu, double lambda, bds_complex z, bds_complex w, bds_complex* out);

/* ---- transforms (m >= 1) ---- */

bds_status bds_transform_create(const bds_space* space, int method, int include_gaussian, bds_transform** out);
void bds_transform_destroy(bds_transform* tr);

bds_status bds_transform_kernel(const bds_transform* tr, bds_complex z, double x, bds_kernel_value* out);

/* B[phi](z_i) for phi = sum_j coeffs[j] h_j, on a Gauss-Hermite rule with
 * hermite_nodes nodes (0 selects 80). */
bds_status bds_transform_hermite(const bds_transform* tr, const double* coeffs, size_t ncoeffs, const bds_complex* z,
                                 size_t nz, int hermite_nodes, bds_complex* out);
/* Same for phi interpolated from samples (x strictly increasing, n >= 4). */
bds_status bds_transform_samples(const bds_transform* tr, const double* x, const double* y, size_t n,
                                 const bds_complex* z, size_t nz, int hermite_nodes, bds_complex* out);

/* ---- varpi_m ---- */

bds_status bds_varpi_create(int m, bds_varpi** out);
void bds_varpi_destroy(bds_varpi* v);
bds_status bds_varpi_eval(const bds_varpi* v, double t, double* out);
bds_status bds_varpi_laplace(const bds_varpi* v, double k, double* numeric, double* closed, double* error_estimate);
bds_status bds_varpi2_closed(double t, double* out);
bds_status bds_varpi_bound(int m, double t, double* out);

/* ---- special functions ---- */

bds_status bds_hermite(int n, double x, double* out);
bds_status bds_laguerre(int n, double alpha, double x, double* out);
bds_status bds_hyp1f1(double alpha, double beta, double t, double* out);
bds_status bds_hyp2f2_11(double b, bds_complex x, bds_complex* out);
bds_status bds_log_gamma(double x, double* out);

/* ---- self-verification ---- */

/* Number of suite names and the i-th one ("all" first). */
size_t bds_verify_suite_count(void);
const char* bds_verify_suite_name(size_t i);

/* Runs a suite and returns its JSON report in *json_out (free with
 * bds_string_free). An unknown suite yields BDS_DOMAIN. */
bds_status bds_verify_run(const char* suite, double tol_scale, uint64_t seed, int timing, char** json_out,
                          int* all_passed_out);

#ifdef __cplusplus
}
#endif

#endif  // BDSPACE_BDSPACE_H_
