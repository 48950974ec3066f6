// Copyright 2026 The bdspace Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// bdspace command-line front end. Talks to the library only through the C
// interface in bdspace/bdspace.h.
//
// Exit status: 0 success, 1 failed checks or a numerical failure, 2 usage
// error (bad flags, unknown suite, malformed grid or input file).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "bdspace/bdspace.h"
#include "json.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  LibraryError(bds_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
  bds_status status;
};

void check(bds_status s) {
  if (s != BDS_OK) throw LibraryError(s, std::string(bds_status_name(s)) + ": " + bds_last_error());
}

// ---------------------------------------------------------------------------
// Grids. A range is "a:b:n" (n >= 1 equally spaced points, endpoints
// included) or a single number. A complex grid is "<re-range>,<im-range>".

std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed grid component '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("malformed grid component '" + text + "'");
    return v;
  };
  if (parts.size() == 1) return {num(parts[0])};
  if (parts.size() != 3) throw UsageError("grid range must be 'a:b:n', got '" + text + "'");
  const double a = num(parts[0]), b = num(parts[1]), nd = num(parts[2]);
  if (nd < 1 || nd != std::floor(nd) || nd > 1e6) throw UsageError("grid count must be a positive integer in '" + text + "'");
  const int n = static_cast<int>(nd);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return out;
}

// Row-major: the real part varies slowest.
std::vector<bds_complex> parse_cgrid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError("complex grid must be '<re-range>,<im-range>', got '" + text + "'");
  }
  auto re = parse_range(text.substr(0, comma));
  auto im = parse_range(text.substr(comma + 1));
  std::vector<bds_complex> out;
  out.reserve(re.size() * im.size());
  for (double r : re)
    for (double i : im) out.push_back({r, i});
  return out;
}

// ---------------------------------------------------------------------------
// Tables

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return format_double(*d);
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto s = std::get_if<std::string>(&c)) return csv_field(*s);
  return "";
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
    os << "\r\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
      os << "\r\n";
    }
    return os.str();
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::monostate>) {
              rec[t.columns[i]] = nullptr;
            } else {
              rec[t.columns[i]] = v;
            }
          },
          row[i]);
    }
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + path + "'");
  f << text;
}

// ---------------------------------------------------------------------------
// RAII wrappers for the C handles

struct SpaceDeleter {
  void operator()(bds_space* p) const { bds_space_destroy(p); }
};
struct TransformDeleter {
  void operator()(bds_transform* p) const { bds_transform_destroy(p); }
};
struct VarpiDeleter {
  void operator()(bds_varpi* p) const { bds_varpi_destroy(p); }
};
using SpacePtr = std::unique_ptr<bds_space, SpaceDeleter>;
using TransformPtr = std::unique_ptr<bds_transform, TransformDeleter>;
using VarpiPtr = std::unique_ptr<bds_varpi, VarpiDeleter>;

SpacePtr make_space(double nu, int m) {
  bds_space* s = nullptr;
  check(bds_space_create(nu, m, &s));
  return SpacePtr(s);
}

TransformPtr make_transform(const bds_space* s, int method, bool gaussian) {
  bds_transform* t = nullptr;
  check(bds_transform_create(s, method, gaussian ? 1 : 0, &t));
  return TransformPtr(t);
}

const char* kernel_method_name(int m) { return m == BDS_METHOD_CLOSED ? "closed" : "series"; }

const char* transform_method_name(int m) {
  switch (m) {
    case BDS_TRANSFORM_SERIES: return "series";
    case BDS_TRANSFORM_INTEGRAL: return "integral";
    default: return "integral-varpi2";
  }
}

// ---------------------------------------------------------------------------
// Table builders

struct Options {
  double nu = 1.0;
  int m = 1;
  double t = 1.0;
  std::string z_grid = "-1:1:3,-1:1:3";
  std::string w_grid = "0,0";
  std::string x_grid = "-2:2:5";
  std::string t_grid = "0:5:11";
  std::string method;
  bool include_gaussian = false;
  int j_max = 5;
  int series_terms = 0;
  std::string format = "csv";
  std::string out;
};

Table kernel_table(const Options& o) {
  const auto zs = parse_cgrid(o.z_grid), ws = parse_cgrid(o.w_grid);
  const std::string method = o.method.empty() ? "closed" : o.method;
  auto space = make_space(o.nu, o.m);
  Table t{{"re_z", "im_z", "re_w", "im_w", "re_K", "im_K", "method", "residual"}, {}};
  for (auto z : zs) {
    for (auto w : ws) {
      bds_kernel_value v{};
      if (method == "closed") {
        check(bds_reproducing_kernel(space.get(), z, w, &v));
      } else {
        check(bds_reproducing_kernel_series(space.get(), z, w, o.series_terms, &v));
      }
      t.rows.push_back({z.re, z.im, w.re, w.im, v.value.re, v.value.im, std::string(kernel_method_name(v.method)),
                        v.residual});
    }
  }
  return t;
}

Table heat_table(const Options& o) {
  const auto zs = parse_cgrid(o.z_grid), ws = parse_cgrid(o.w_grid);
  const int method = o.method == "series" ? BDS_METHOD_SERIES : BDS_METHOD_CLOSED;
  Table t{{"re_z", "im_z", "re_w", "im_w", "re_K", "im_K", "method", "residual"}, {}};
  for (auto z : zs) {
    for (auto w : ws) {
      bds_kernel_value v{};
      check(bds_heat_kernel(o.nu, o.t, z, w, method, &v));
      t.rows.push_back({z.re, z.im, w.re, w.im, v.value.re, v.value.im, std::string(kernel_method_name(v.method)),
                        v.residual});
    }
  }
  return t;
}

int transform_method(const std::string& name) {
  if (name.empty() || name == "integral") return BDS_TRANSFORM_INTEGRAL;
  if (name == "series") return BDS_TRANSFORM_SERIES;
  if (name == "integral-varpi2") return BDS_TRANSFORM_INTEGRAL_VARPI2;
  throw UsageError("unknown transform method '" + name + "'");
}

Table transform_kernel_table(const Options& o) {
  const auto zs = parse_cgrid(o.z_grid);
  const auto xs = parse_range(o.x_grid);
  auto space = make_space(o.nu, o.m);
  auto tr = make_transform(space.get(), transform_method(o.method), o.include_gaussian);
  Table t{{"re_z", "im_z", "x", "re_K", "im_K", "method", "terms", "residual"}, {}};
  for (auto z : zs) {
    for (double x : xs) {
      bds_kernel_value v{};
      check(bds_transform_kernel(tr.get(), z, x, &v));
      t.rows.push_back({z.re, z.im, x, v.value.re, v.value.im, std::string(transform_method_name(v.method)),
                        static_cast<long long>(v.terms), v.residual});
    }
  }
  return t;
}

Table varpi_table(const Options& o) {
  const auto ts = parse_range(o.t_grid);
  bds_varpi* raw = nullptr;
  check(bds_varpi_create(o.m, &raw));
  VarpiPtr table(raw);
  Table t{{"t", "varpi", "bound", "closed"}, {}};
  for (double x : ts) {
    double v = 0, b = 0;
    check(bds_varpi_eval(table.get(), x, &v));
    check(bds_varpi_bound(o.m, x, &b));
    Cell closed;
    if (o.m == 2) {
      double c = 0;
      check(bds_varpi2_closed(x, &c));
      closed = c;
    }
    t.rows.push_back({x, v, b, closed});
  }
  return t;
}

Table basis_table(const Options& o) {
  if (o.j_max < 0) throw UsageError("--j-max must be >= 0");
  const auto zs = parse_cgrid(o.z_grid);
  auto space = make_space(o.nu, o.m);
  Table t{{"j", "re_z", "im_z", "re_psi", "im_psi"}, {}};
  for (int j = 0; j <= o.j_max; ++j) {
    for (auto z : zs) {
      bds_complex v{};
      check(bds_basis_eval(space.get(), j, z, &v));
      t.rows.push_back({static_cast<long long>(j), z.re, z.im, v.re, v.im});
    }
  }
  return t;
}

// --phi: inline JSON array, a .json file of Hermite coefficients, or a CSV
// file of "x,y" samples (an optional non-numeric header line is skipped).
struct PhiInput {
  std::vector<double> hermite;
  std::vector<double> x, y;
  bool samples = false;
};

std::vector<double> parse_json_reals(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed --phi JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw UsageError("--phi JSON must be a non-empty array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw UsageError("--phi JSON must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

PhiInput read_phi(const std::string& arg) {
  PhiInput in;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '[') {
    in.hermite = parse_json_reals(arg);
    return in;
  }
  std::ifstream f(arg);
  if (!f) throw UsageError("cannot open --phi file '" + arg + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    in.hermite = parse_json_reals(text);
    return in;
  }
  in.samples = true;
  std::stringstream lines(text);
  int lineno = 0;
  for (std::string line; std::getline(lines, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      std::size_t u1 = 0, u2 = 0;
      const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
      double xv = std::stod(a, &u1), yv = std::stod(b, &u2);
      if (a.find_first_not_of(" \t", u1) != std::string::npos || b.find_first_not_of(" \t", u2) != std::string::npos)
        throw std::invalid_argument("trailing text");
      in.x.push_back(xv);
      in.y.push_back(yv);
    } catch (const std::exception&) {
      if (lineno == 1 && in.x.empty()) continue;  // header
      throw UsageError("malformed sample at line " + std::to_string(lineno) + " of '" + arg + "'");
    }
  }
  return in;
}

Table transform_table(const Options& o, const std::string& phi_arg) {
  const auto zs = parse_cgrid(o.z_grid);
  const PhiInput phi = read_phi(phi_arg);
  auto space = make_space(o.nu, o.m);
  auto tr = make_transform(space.get(), transform_method(o.method), false);
  std::vector<bds_complex> out(zs.size());
  if (phi.samples) {
    check(bds_transform_samples(tr.get(), phi.x.data(), phi.y.data(), phi.x.size(), zs.data(), zs.size(), 0, out.data()));
  } else {
    check(bds_transform_hermite(tr.get(), phi.hermite.data(), phi.hermite.size(), zs.data(), zs.size(), 0, out.data()));
  }
  Table t{{"re_z", "im_z", "re_B", "im_B"}, {}};
  for (std::size_t i = 0; i < zs.size(); ++i) t.rows.push_back({zs[i].re, zs[i].im, out[i].re, out[i].im});
  return t;
}

struct SpecfunOptions {
  std::string fn = "hermite";
  int n = 0;
  double alpha = 0.0;
  double beta = 1.0;
  double b = 1.0;
};

Table specfun_table(const SpecfunOptions& s, const Options& o) {
  const auto xs = parse_range(o.x_grid);
  const bool complex_out = s.fn == "hyp2f2";
  Table t{complex_out ? std::vector<std::string>{"x", "re_value", "im_value"} : std::vector<std::string>{"x", "value"},
          {}};
  for (double x : xs) {
    double v = 0.0;
    if (s.fn == "hermite") {
      check(bds_hermite(s.n, x, &v));
    } else if (s.fn == "laguerre") {
      check(bds_laguerre(s.n, s.alpha, x, &v));
    } else if (s.fn == "hyp1f1") {
      check(bds_hyp1f1(s.alpha, s.beta, x, &v));
    } else if (s.fn == "lgamma") {
      check(bds_log_gamma(x, &v));
    } else if (s.fn == "hyp2f2") {
      bds_complex c{};
      check(bds_hyp2f2_11(s.b, {x, 0.0}, &c));
      t.rows.push_back({x, c.re, c.im});
      continue;
    } else {
      throw UsageError("unknown function '" + s.fn + "'");
    }
    t.rows.push_back({x, v});
  }
  return t;
}

std::vector<std::string> suite_list() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < bds_verify_suite_count(); ++i) out.emplace_back(bds_verify_suite_name(i));
  return out;
}

int run_verify(const std::string& suite, double tol_scale, std::uint64_t seed, bool timing, const std::string& out) {
  const auto suites = suite_list();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end()) throw UsageError("unknown suite '" + suite + "'");
  if (!(tol_scale > 0.0)) throw UsageError("--tol-scale must be positive");
  char* json = nullptr;
  int all_passed = 0;
  check(bds_verify_run(suite.c_str(), tol_scale, seed, timing ? 1 : 0, &json, &all_passed));
  std::string text(json);
  bds_string_free(json);
  emit(text + "\n", out);
  return all_passed ? 0 : kExitFailure;
}

void add_space_options(CLI::App* c, Options& o) {
  c->add_option("--nu", o.nu, "magnetic parameter nu > 0")->capture_default_str();
  c->add_option("--m", o.m, "space index m >= 0")->capture_default_str();
}

void add_output_options(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  c->add_option("--out", o.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bargmann-Dirichlet space kernels, transforms and self-verification"};
  app.set_version_flag("--version", std::string(bds_version()));
  app.require_subcommand(1);

  Options o;

  std::string suite = "all";
  double tol_scale = 1.0;
  std::uint64_t seed = 20260101;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run self-verification suites and print a JSON report");
  verify->add_option("suite", suite, "all, specfun, spaces, kernels, varpi or transform")->capture_default_str();
  verify->add_option("--tol-scale", tol_scale, "multiplier applied to every tolerance")->capture_default_str();
  verify->add_option("--seed", seed, "seed of the randomized checks")->capture_default_str();
  verify->add_flag("--timing", timing, "include wall_time in the report");
  verify->add_option("--out", o.out, "output file (default stdout)");

  std::string kind;
  auto* table = app.add_subcommand("table", "tabulate kernel, transform-kernel, heat, varpi or basis on a grid");
  table->add_option("kind", kind, "table kind")
      ->required()
      ->check(CLI::IsMember({"kernel", "transform-kernel", "heat", "varpi", "basis"}));
  add_space_options(table, o);
  table->add_option("--t", o.t, "heat time t > 0")->capture_default_str();
  table->add_option("--z-grid", o.z_grid, "complex grid 're0:re1:n,im0:im1:n'")->capture_default_str();
  table->add_option("--w-grid", o.w_grid, "second complex grid")->capture_default_str();
  table->add_option("--x-grid", o.x_grid, "real grid 'a:b:n'")->capture_default_str();
  table->add_option("--t-grid", o.t_grid, "real grid of t for varpi")->capture_default_str();
  table->add_option("--method", o.method, "closed|series (kernel, heat) or series|integral|integral-varpi2");
  table->add_option("--series-terms", o.series_terms, "fixed series length, 0 = adaptive")->capture_default_str();
  table->add_flag("--include-gaussian", o.include_gaussian, "transform kernel with the e^{-x^2/2} factor");
  table->add_option("--j-max", o.j_max, "largest basis index")->capture_default_str();
  add_output_options(table, o);

  auto* kernel = app.add_subcommand("kernel", "reproducing kernel K(z,w) on a grid");
  add_space_options(kernel, o);
  kernel->add_option("--z-grid", o.z_grid, "complex grid 're0:re1:n,im0:im1:n'")->capture_default_str();
  kernel->add_option("--w-grid", o.w_grid, "second complex grid")->capture_default_str();
  kernel->add_option("--method", o.method, "closed or series")->check(CLI::IsMember({"closed", "series"}));
  kernel->add_option("--series-terms", o.series_terms, "fixed series length, 0 = adaptive")->capture_default_str();
  add_output_options(kernel, o);

  auto* varpi = app.add_subcommand("varpi", "tabulate varpi_m(t) with its bound (and closed form for m = 2)");
  varpi->add_option("--m", o.m, "order m >= 1")->capture_default_str();
  varpi->add_option("--t-grid", o.t_grid, "real grid 'a:b:n'")->capture_default_str();
  add_output_options(varpi, o);

  std::string phi;
  auto* transform = app.add_subcommand("transform", "apply the transform to a Hermite expansion or sampled input");
  add_space_options(transform, o);
  transform->add_option("--method", o.method, "series or integral")
      ->check(CLI::IsMember({"series", "integral", "integral-varpi2"}));
  transform->add_option("--z-grid", o.z_grid, "complex grid 're0:re1:n,im0:im1:n'")->capture_default_str();
  transform->add_option("--phi", phi, "JSON Hermite coefficients (inline or file) or CSV samples x,y")->required();
  add_output_options(transform, o);

  SpecfunOptions sf;
  auto* specfun = app.add_subcommand("specfun", "tabulate a special function on a real grid");
  specfun->add_option("--fn", sf.fn, "function")
      ->check(CLI::IsMember({"hermite", "laguerre", "hyp1f1", "hyp2f2", "lgamma"}))
      ->capture_default_str();
  specfun->add_option("--n", sf.n, "degree (hermite, laguerre)")->capture_default_str();
  specfun->add_option("--alpha", sf.alpha, "Laguerre alpha or 1F1 numerator")->capture_default_str();
  specfun->add_option("--beta", sf.beta, "1F1 denominator")->capture_default_str();
  specfun->add_option("--b", sf.b, "2F2(1,1;b,b;x) parameter")->capture_default_str();
  specfun->add_option("--x-grid", o.x_grid, "real grid 'a:b:n'")->capture_default_str();
  add_output_options(specfun, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(suite, tol_scale, seed, timing, o.out);
    Table t;
    if (*table) {
      if (kind == "kernel") t = kernel_table(o);
      if (kind == "heat") t = heat_table(o);
      if (kind == "transform-kernel") t = transform_kernel_table(o);
      if (kind == "varpi") t = varpi_table(o);
      if (kind == "basis") t = basis_table(o);
    } else if (*kernel) {
      t = kernel_table(o);
    } else if (*varpi) {
      t = varpi_table(o);
    } else if (*transform) {
      t = transform_table(o, phi);
    } else if (*specfun) {
      t = specfun_table(sf, o);
    }
    emit(render(t, o.format), o.out);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.status == BDS_DOMAIN || e.status == BDS_INVALID_ARGUMENT || e.status == BDS_PARSE;
    return usage ? kExitUsage : kExitFailure;
  }
}
