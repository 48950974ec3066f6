// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "bdspace/bdspace.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "bdspace/bargmann.hpp"
#include "bdspace/errors.hpp"
#include "bdspace/kernels.hpp"
#include "bdspace/quadrature.hpp"
#include "bdspace/spaces.hpp"
#include "bdspace/specfun.hpp"
#include "bdspace/varpi.hpp"
#include "bdspace/verify.hpp"

struct bds_space {
  bds::spaces::SpaceParams params;
};

struct bds_transform {
  bds::bargmann::TransformEngine engine;
};

struct bds_varpi {
  bds::varpi::VarpiTable table;
};

namespace {

using cplx = std::complex<double>;

thread_local std::string g_last_error;

bds_status fail(bds_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
bds_status guarded(F&& f) {
  try {
    f();
    return BDS_OK;
  } catch (const InvalidArgument& e) {
    return fail(BDS_INVALID_ARGUMENT, e.what());
  } catch (const bds::TruncationError& e) {
    return fail(BDS_TRUNCATION, e.what());
  } catch (const bds::EvaluationError& e) {
    return fail(BDS_EVALUATION, e.what());
  } catch (const bds::OverflowError& e) {
    return fail(BDS_OVERFLOW, e.what());
  } catch (const bds::DomainError& e) {
    return fail(BDS_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BDS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BDS_INTERNAL, e.what());
  } catch (...) {
    return fail(BDS_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

cplx to_cpp(bds_complex z) { return {z.re, z.im}; }
bds_complex to_c(cplx z) { return {z.real(), z.imag()}; }

bds_kernel_value to_c(const bds::kernels::KernelValue& v) {
  return {to_c(v.value), v.method == bds::kernels::Method::ClosedForm ? BDS_METHOD_CLOSED : BDS_METHOD_SERIES, v.terms,
          v.residual};
}

bds::kernels::Method kernel_method(int m) {
  require(m == BDS_METHOD_CLOSED || m == BDS_METHOD_SERIES, "unknown kernel method");
  return m == BDS_METHOD_CLOSED ? bds::kernels::Method::ClosedForm : bds::kernels::Method::SeriesTruncation;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void apply_transform(const bds_transform* tr, const bds::bargmann::RealFunction& phi, const bds_complex* z, size_t nz,
                     int hermite_nodes, bds_complex* out) {
  require(nz == 0 || (z && out), "null pointer");
  require(hermite_nodes >= 0, "hermite_nodes must be >= 0");
  auto rule = bds::quad::make_rule(bds::quad::RuleSpec::hermite(), hermite_nodes ? hermite_nodes : 80);
  std::vector<cplx> values(nz);
  for (size_t i = 0; i < nz; ++i) values[i] = bds::bargmann::transform_apply(tr->engine, phi, to_cpp(z[i]), rule);
  for (size_t i = 0; i < nz; ++i) out[i] = to_c(values[i]);
}

}  // namespace

extern "C" {

const char* bds_version(void) { return "1.0.0"; }

const char* bds_last_error(void) { return g_last_error.c_str(); }

const char* bds_status_name(int status) {
  switch (status) {
    case BDS_OK: return "ok";
    case BDS_DOMAIN: return "domain";
    case BDS_TRUNCATION: return "truncation";
    case BDS_EVALUATION: return "evaluation";
    case BDS_OVERFLOW: return "overflow";
    case BDS_INVALID_ARGUMENT: return "invalid-argument";
    case BDS_PARSE: return "parse";
    case BDS_INTERNAL: return "internal";
    default: return "unknown";
  }
}

void bds_string_free(char* s) { std::free(s); }

bds_status bds_space_create(double nu, int m, bds_space** out) {
  return guarded([&] {
    require(out, "null output pointer");
    bds::spaces::SpaceParams p{nu, m};
    p.validate();
    *out = new bds_space{p};
  });
}

void bds_space_destroy(bds_space* space) { delete space; }

bds_status bds_monomial_norm_sq(const bds_space* space, int j, double* out) {
  return guarded([&] {
    require(space && out, "null pointer");
    *out = bds::spaces::monomial_norm_sq(space->params, j);
  });
}

bds_status bds_basis_eval(const bds_space* space, int j, bds_complex z, bds_complex* out) {
  return guarded([&] {
    require(space && out, "null pointer");
    *out = to_c(bds::spaces::basis_eval(space->params, j, to_cpp(z)));
  });
}

bds_status bds_reproducing_kernel(const bds_space* space, bds_complex z, bds_complex w, bds_kernel_value* out) {
  return guarded([&] {
    require(space && out, "null pointer");
    *out = to_c(bds::kernels::reproducing_kernel(space->params, to_cpp(z), to_cpp(w)));
  });
}

bds_status bds_reproducing_kernel_series(const bds_space* space, bds_complex z, bds_complex w, int terms,
                                         bds_kernel_value* out) {
  return guarded([&] {
    require(space && out, "null pointer");
    require(terms >= 0, "terms must be >= 0");
    auto v = terms == 0 ? bds::kernels::reproducing_kernel_series_adaptive(space->params, to_cpp(z), to_cpp(w))
                        : bds::kernels::reproducing_kernel_series(space->params, to_cpp(z), to_cpp(w), terms);
    *out = to_c(v);
  });
}

bds_status bds_membership_test(const bds_space* space, const char* coeffs_json, int tail_window, double eps,
                               int* class_out, double* ratio_out, double* bertrand_out) {
  bds::spaces::PowerSeries f;
  if (!space || !coeffs_json) return fail(BDS_INVALID_ARGUMENT, "null pointer");
  try {
    f = bds::spaces::PowerSeries::from_json(coeffs_json);
  } catch (const std::exception& e) {
    return fail(BDS_PARSE, e.what());
  }
  return guarded([&] {
    auto v = bds::spaces::membership_test(space->params, f, tail_window, eps);
    if (class_out) *class_out = static_cast<int>(v.classification);
    if (ratio_out) *ratio_out = v.ratio_estimate;
    if (bertrand_out) *bertrand_out = v.bertrand_estimate;
  });
}

bds_status bds_heat_kernel(double nu, double t, bds_complex z, bds_complex w, int method, bds_kernel_value* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = to_c(bds::kernels::heat_kernel(nu, t, to_cpp(z), to_cpp(w), kernel_method(method)));
  });
}

bds_status bds_landau_kernel(double nu, int ell, bds_complex z, bds_complex w, bds_complex* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = to_c(bds::kernels::landau_kernel(nu, ell, to_cpp(z), to_cpp(w)));
  });
}

bds_status bds_spectral_projector_kernel(double nu, double lambda, bds_complex z, bds_complex w, bds_complex* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = to_c(bds::kernels::spectral_projector_kernel(nu, lambda, to_cpp(z), to_cpp(w)));
  });
}

bds_status bds_transform_create(const bds_space* space, int method, int include_gaussian, bds_transform** out) {
  return guarded([&] {
    require(space && out, "null pointer");
    require(method >= BDS_TRANSFORM_SERIES && method <= BDS_TRANSFORM_INTEGRAL_VARPI2, "unknown transform method");
    bds::bargmann::TransformKernelSpec spec;
    spec.params = space->params;
    spec.method = static_cast<bds::bargmann::TransformMethod>(method);
    spec.include_gaussian = include_gaussian != 0;
    *out = new bds_transform{bds::bargmann::TransformEngine(spec)};
  });
}

void bds_transform_destroy(bds_transform* tr) { delete tr; }

bds_status bds_transform_kernel(const bds_transform* tr, bds_complex z, double x, bds_kernel_value* out) {
  return guarded([&] {
    require(tr && out, "null pointer");
    auto r = tr->engine.kernel(to_cpp(z), x);
    *out = {to_c(r.value), static_cast<int>(r.method), r.terms, r.residual};
  });
}

bds_status bds_transform_hermite(const bds_transform* tr, const double* coeffs, size_t ncoeffs, const bds_complex* z,
                                 size_t nz, int hermite_nodes, bds_complex* out) {
  return guarded([&] {
    require(tr && (ncoeffs == 0 || coeffs), "null pointer");
    auto phi = bds::bargmann::hermite_expansion(std::vector<double>(coeffs, coeffs + ncoeffs));
    apply_transform(tr, phi, z, nz, hermite_nodes, out);
  });
}

bds_status bds_transform_samples(const bds_transform* tr, const double* x, const double* y, size_t n,
                                 const bds_complex* z, size_t nz, int hermite_nodes, bds_complex* out) {
  return guarded([&] {
    require(tr && x && y, "null pointer");
    auto phi = bds::bargmann::sampled_function(std::vector<double>(x, x + n), std::vector<double>(y, y + n));
    apply_transform(tr, phi, z, nz, hermite_nodes, out);
  });
}

bds_status bds_varpi_create(int m, bds_varpi** out) {
  return guarded([&] {
    require(out, "null output pointer");
    *out = new bds_varpi{bds::varpi::VarpiTable(m)};
  });
}

void bds_varpi_destroy(bds_varpi* v) { delete v; }

bds_status bds_varpi_eval(const bds_varpi* v, double t, double* out) {
  return guarded([&] {
    require(v && out, "null pointer");
    *out = v->table(t);
  });
}

bds_status bds_varpi_laplace(const bds_varpi* v, double k, double* numeric, double* closed, double* error_estimate) {
  return guarded([&] {
    require(v, "null pointer");
    auto r = bds::varpi::varpi_laplace(v->table, k);
    if (numeric) *numeric = r.numeric;
    if (closed) *closed = r.closed;
    if (error_estimate) *error_estimate = r.error_estimate;
  });
}

bds_status bds_varpi2_closed(double t, double* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = bds::varpi::varpi2_closed(t);
  });
}

bds_status bds_varpi_bound(int m, double t, double* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = bds::varpi::varpi_bound(m, t);
  });
}

bds_status bds_hermite(int n, double x, double* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = bds::specfun::hermite(n, x);
  });
}

bds_status bds_laguerre(int n, double alpha, double x, double* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = bds::specfun::laguerre(n, alpha, x);
  });
}

bds_status bds_hyp1f1(double alpha, double beta, double t, double* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = bds::specfun::hyp1f1(alpha, beta, t);
  });
}

bds_status bds_hyp2f2_11(double b, bds_complex x, bds_complex* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = to_c(bds::specfun::hyp2f2_11(b, to_cpp(x)));
  });
}

bds_status bds_log_gamma(double x, double* out) {
  return guarded([&] {
    require(out, "null pointer");
    *out = bds::specfun::log_gamma(x);
  });
}

size_t bds_verify_suite_count(void) { return bds::verify::suite_names().size(); }

const char* bds_verify_suite_name(size_t i) {
  const auto& names = bds::verify::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

bds_status bds_verify_run(const char* suite, double tol_scale, uint64_t seed, int timing, char** json_out,
                          int* all_passed_out) {
  return guarded([&] {
    require(suite && json_out, "null pointer");
    auto report = bds::verify::run_suite(suite, tol_scale, seed, timing != 0);
    *json_out = dup_string(report.to_json());
    if (all_passed_out) *all_passed_out = report.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
