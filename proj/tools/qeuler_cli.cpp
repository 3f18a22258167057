// Copyright 2026 The qeuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qeuler CLI: evaluation, identity verification, and table generation with
// machine-readable output.
//
// Exit codes: 0 = success / all identities pass, 1 = at least one identity
// failed, 2 = usage, domain, or convergence error.

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeuler/errors.hpp"
#include "qeuler/euler_classical.hpp"
#include "qeuler/q_euler.hpp"
#include "qeuler/q_zeta.hpp"
#include "qeuler/qbasics.hpp"
#include "qeuler/report.hpp"
#include "qeuler/scalar.hpp"
#include "qeuler/symmetry.hpp"

namespace {

using json = nlohmann::ordered_json;
using qeuler::Backend;
using qeuler::QBase;
using qeuler::Rational;
using qeuler::Scalar;
using qeuler::SeriesControl;

constexpr const char* kReportSchema = "qeuler.report/1";
constexpr const char* kValueSchema = "qeuler.value/1";
constexpr const char* kSummarySchema = "qeuler.summary/1";
constexpr const char* kErrorSchema = "qeuler.error/1";

struct RunConfig {
  std::string backend = "float";
  std::string q_text = "0.5";
  long root_denom = 1;
  bool root_denom_given = false;
  int max_terms = 400;
  double abs_tol = 1e-12;
  std::string format = "json";
  unsigned long seed = 0;
};

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    return qeuler::to_double(qeuler::parse_rational(text));
  }
  size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size()) {
    throw qeuler::DomainError("bad numeric literal: " + text);
  }
  return v;
}

std::complex<double> parse_complex(std::string text) {
  std::erase(text, ' ');
  if (text.empty()) throw qeuler::DomainError("empty complex literal");
  if (text.back() != 'i') {
    return {parse_real(text), 0.0};
  }
  std::string body = text.substr(0, text.size() - 1);
  // Split into real and imaginary on the last +/- that is not an exponent
  // sign or leading sign.
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body)};
  }
  std::string re = body.substr(0, split);
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_real(re), parse_real(im)};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& piece : split_commas(text)) {
    auto dots = piece.find("..");
    if (dots != std::string::npos) {
      int lo = std::stoi(piece.substr(0, dots));
      int hi = std::stoi(piece.substr(dots + 2));
      if (hi < lo) throw qeuler::DomainError("empty range: " + piece);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(std::stoi(piece));
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& piece : split_commas(text)) {
    out.push_back(qeuler::parse_rational(piece));
  }
  return out;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  for (const auto& piece : split_commas(text)) {
    out.push_back(parse_complex(piece));
  }
  return out;
}

long lcm_long(long a, long b) {
  qeuler::Integer l = lcm(qeuler::Integer(a), qeuler::Integer(b));
  if (!l.fits_slong_p()) throw qeuler::DomainError("root denominator overflow");
  return l.get_si();
}

/// Smallest D so that every rational in `values` has denominator dividing D.
long auto_root_denom(const std::vector<Rational>& values) {
  long d = 1;
  for (const auto& v : values) {
    if (!v.get_den().fits_slong_p()) {
      throw qeuler::DomainError("denominator too large for root lattice");
    }
    d = lcm_long(d, v.get_den().get_si());
  }
  return d;
}

QBase build_qbase(const RunConfig& cfg,
                  const std::vector<Rational>& exponent_args) {
  if (cfg.backend == "float") {
    return QBase::floating(parse_complex(cfg.q_text));
  }
  if (cfg.backend != "exact") {
    throw qeuler::DomainError("backend must be float or exact, got " +
                              cfg.backend);
  }
  long d = cfg.root_denom;
  if (!cfg.root_denom_given) d = lcm_long(d, auto_root_denom(exponent_args));
  if (cfg.q_text == "formal") return QBase::formal(d);
  return QBase::exact(qeuler::parse_rational(cfg.q_text), d);
}

SeriesControl build_ctrl(const RunConfig& cfg) {
  SeriesControl ctrl;
  ctrl.max_terms = cfg.max_terms;
  ctrl.abs_tol = cfg.abs_tol;
  return ctrl;
}

json complex_json(std::complex<double> z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json scalar_json(const Scalar& s) {
  if (s.backend() == Backend::Float) return complex_json(s.complex_value());
  return json(s.exact_value().to_string());
}

json report_json(const qeuler::IdentityReport& rep,
                 const std::string& identity) {
  json j;
  j["schema"] = kReportSchema;
  j["identity"] = identity;
  j["pass"] = rep.pass;
  j["backend"] = rep.exact_backend ? "exact" : "float";
  j["lhs"] = scalar_json(rep.lhs);
  j["rhs"] = scalar_json(rep.rhs);
  if (std::isnan(rep.abs_diff)) {
    j["abs_diff"] = nullptr;
  } else {
    j["abs_diff"] = rep.abs_diff;
  }
  if (rep.exact_backend) j["exact_equal"] = rep.exact_equal;
  j["tolerance"] = rep.tolerance;
  json params = json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  j["params"] = params;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string json_value_to_csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  return v.dump();
}

/// Flattens report JSON objects into CSV with a fixed column set.
void emit_reports_csv(std::ostream& os, const std::vector<json>& lines,
                      const json& summary) {
  static const std::vector<std::string> kParamCols = {
      "a", "b", "m", "n", "r", "s", "x", "y", "q", "backend", "variant"};
  os << "identity";
  for (const auto& c : kParamCols) os << "," << c;
  os << ",pass,lhs,rhs,abs_diff,tolerance\n";
  for (const auto& line : lines) {
    os << line["identity"].get<std::string>();
    for (const auto& c : kParamCols) {
      os << ",";
      if (line["params"].contains(c)) {
        os << json_value_to_csv_cell(line["params"][c]);
      }
    }
    os << "," << (line["pass"].get<bool>() ? "true" : "false");
    os << "," << json_value_to_csv_cell(line["lhs"].is_object()
                                            ? json(line["lhs"].dump())
                                            : line["lhs"]);
    os << "," << json_value_to_csv_cell(line["rhs"].is_object()
                                            ? json(line["rhs"].dump())
                                            : line["rhs"]);
    os << "," << json_value_to_csv_cell(line["abs_diff"]);
    os << "," << json_value_to_csv_cell(line["tolerance"]);
    os << "\n";
  }
  os << "#summary," << summary["total"] << "," << summary["failures"] << ","
     << json_value_to_csv_cell(summary["max_abs_diff"]) << "\n";
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string kind;
  int n = 0, r = 1, i = 0, a = 1;
  std::string x_text = "0";
  std::string y_text = "0";
  std::string s_text = "0";
  std::string scale_text = "1";
  std::string method;  // closed|single|multi (qeuler), single|multi (zeta)
  std::string eval_at_text;
};

json eval_value_json(const RunConfig& cfg, const std::string& kind,
                     json params, const Scalar& value,
                     std::optional<double> tail, std::optional<int> terms,
                     const QBase& base, const std::string& eval_at_text) {
  json out;
  out["schema"] = kValueSchema;
  out["kind"] = kind;
  out["backend"] = cfg.backend;
  out["params"] = std::move(params);
  out["value"] = scalar_json(value);
  if (tail) out["tail_bound"] = *tail;
  if (terms) out["terms"] = *terms;
  if (value.backend() == Backend::Exact) {
    if (base.has_numeric()) {
      out["value_at_q"] = qeuler::eval_at(value, base.t0()).get_str();
    }
    if (!eval_at_text.empty()) {
      Rational t0 = qeuler::parse_rational(eval_at_text);
      out["value_at"] = json{{"t", t0.get_str()},
                             {"value", qeuler::eval_at(value, t0).get_str()}};
    }
  }
  return out;
}

void emit_value(const RunConfig& cfg, const json& v, std::ostream& os) {
  if (cfg.format == "csv") {
    std::vector<std::string> keys;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.key() == "schema") continue;
      if (it.key() == "params") {
        for (auto p = it->begin(); p != it->end(); ++p) {
          keys.push_back("params." + p.key());
        }
      } else {
        keys.push_back(it.key());
      }
    }
    for (size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "") << keys[i];
    }
    os << "\n";
    for (size_t i = 0; i < keys.size(); ++i) {
      const json* cell;
      if (keys[i].starts_with("params.")) {
        cell = &v["params"][keys[i].substr(7)];
      } else {
        cell = &v[keys[i]];
      }
      os << (i ? "," : "")
         << json_value_to_csv_cell(cell->is_object() ? json(cell->dump())
                                                     : *cell);
    }
    os << "\n";
  } else {
    os << v.dump() << "\n";
  }
}

int run_eval(const RunConfig& cfg, const EvalArgs& args) {
  if (args.kind == "euler-classical") {
    auto poly = qeuler::euler_polynomial(args.n, args.r);
    json out;
    out["schema"] = kValueSchema;
    out["kind"] = args.kind;
    out["params"] = {{"n", args.n}, {"r", args.r}};
    out["polynomial"] = poly.to_string();
    json coeffs = json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_str());
    out["coefficients"] = coeffs;
    emit_value(cfg, out, std::cout);
    return 0;
  }

  Rational x = qeuler::parse_rational(args.x_text);
  SeriesControl ctrl = build_ctrl(cfg);

  if (args.kind == "qeuler") {
    QBase base = build_qbase(cfg, {x});
    std::string method = args.method.empty() ? "closed" : args.method;
    json params{{"n", args.n}, {"r", args.r}, {"x", x.get_str()},
                {"q", base.describe()}, {"method", method}};
    qeuler::QEulerQuery query{args.n, args.r, x, base, ctrl};
    if (method == "closed") {
      Scalar v = qeuler::q_euler_closed(query);
      emit_value(cfg,
                 eval_value_json(cfg, args.kind, params, v, std::nullopt,
                                 std::nullopt, base, args.eval_at_text),
                 std::cout);
      return 0;
    }
    if (cfg.backend != "float") {
      throw qeuler::DomainError("series methods need the float backend");
    }
    auto res = method == "single" ? qeuler::q_euler_single_sum(query)
               : method == "multi" ? qeuler::q_euler_multisum(query)
                                   : throw qeuler::DomainError(
                                         "method must be closed|single|multi");
    emit_value(cfg,
               eval_value_json(cfg, args.kind, params,
                               Scalar::floating(res.value), res.tail_bound,
                               res.terms_used, base, args.eval_at_text),
               std::cout);
    return 0;
  }

  if (args.kind == "zeta") {
    QBase base = build_qbase(cfg, {x});
    std::complex<double> s = parse_complex(args.s_text);
    std::string method = args.method.empty() ? "single" : args.method;
    json params{{"s", complex_json(s)}, {"x", x.get_str()}, {"r", args.r},
                {"q", base.describe()}, {"method", method}};
    if (cfg.backend == "exact") {
      if (s.imag() != 0.0 || s.real() != std::floor(s.real()) || s.real() > 0) {
        throw qeuler::DomainError(
            "exact zeta needs s in {0, -1, -2, ...}; use the float backend");
      }
      int n = static_cast<int>(-s.real());
      Scalar v = qeuler::q_euler_closed({n, args.r, x, base, ctrl});
      emit_value(cfg,
                 eval_value_json(cfg, args.kind, params, v, std::nullopt,
                                 std::nullopt, base, args.eval_at_text),
                 std::cout);
      return 0;
    }
    qeuler::ZetaQuery query{s, x, args.r, base, ctrl};
    auto res = method == "single" ? qeuler::zeta_single_sum(query)
               : method == "multi"
                   ? qeuler::zeta_multisum(query)
                   : throw qeuler::DomainError("method must be single|multi");
    emit_value(cfg,
               eval_value_json(cfg, args.kind, params,
                               Scalar::floating(res.value), res.tail_bound,
                               res.terms_used, base, args.eval_at_text),
               std::cout);
    return 0;
  }

  if (args.kind == "ssum") {
    Rational scale = qeuler::parse_rational(args.scale_text);
    QBase base = build_qbase(cfg, {scale});
    QBase q_eff = base.rebased(scale);
    json params{{"n", args.n}, {"i", args.i}, {"r", args.r}, {"a", args.a},
                {"scale", scale.get_str()}, {"q", base.describe()}};
    Scalar v = qeuler::s_sum(args.n, args.i, args.r, args.a, q_eff);
    emit_value(cfg,
               eval_value_json(cfg, args.kind, params, v, std::nullopt,
                               std::nullopt, base, args.eval_at_text),
               std::cout);
    return 0;
  }

  throw qeuler::DomainError("unknown eval kind: " + args.kind);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string identity;
  int a = 1, b = 1;
  std::string n_text = "0";
  std::string m_text = "0";
  std::string r_text = "1";
  std::string x_text = "1";
  std::string y_text = "0";
  std::string s_text = "2";
  double tol = -1.0;  // negative = identity-specific default
  double perturb_lhs = 0.0;
  bool allow_even = false;
  long sample = 0;
};

double default_tol(const std::string& identity) {
  if (identity == "thm1" || identity == "thm2" || identity == "thm3") {
    return 1e-9;
  }
  if (identity == "eq5") return 1e-10;
  return 1e-12;
}

struct GridPoint {
  int m = 0, n = 0, r = 1;
  Rational x{0}, y{0};
  std::complex<double> s{0.0, 0.0};
};

qeuler::IdentityReport run_one(const std::string& identity,
                               const VerifyArgs& va, const GridPoint& g,
                               const QBase& base, const SeriesControl& ctrl,
                               double tol) {
  using qeuler::SymmetryParams;
  if (identity == "thm1") {
    auto p = va.allow_even
                 ? SymmetryParams::for_exponent_unchecked(
                       va.a, va.b, g.r, g.x, g.s, base, ctrl, tol)
                 : SymmetryParams::for_exponent(va.a, va.b, g.r, g.x, g.s,
                                                base, ctrl, tol);
    return qeuler::zeta_symmetry_report(p);
  }
  if (identity == "thm2" || identity == "thm3") {
    auto p = va.allow_even
                 ? SymmetryParams::for_index_unchecked(va.a, va.b, g.r, g.x,
                                                       g.n, base, ctrl, tol)
                 : SymmetryParams::for_index(va.a, va.b, g.r, g.x, g.n, base,
                                             ctrl, tol);
    return identity == "thm2" ? qeuler::polynomial_symmetry_report(p)
                              : qeuler::convolution_symmetry_report(p);
  }
  if (identity == "eq5") {
    return qeuler::interpolation_report(g.n, g.r, g.x, base, ctrl, tol);
  }
  if (identity == "eq9") {
    return qeuler::addition_report(g.n, g.r, g.x, g.y, base, tol);
  }
  if (identity == "eq15" || identity == "eq16") {
    auto variant = identity == "eq15" ? qeuler::ReflectionVariant::Weighted
                                      : qeuler::ReflectionVariant::Plain;
    return qeuler::reflection_report(g.m, g.n, g.r, g.x, g.y, base, variant,
                                     tol);
  }
  throw qeuler::DomainError("unknown identity: " + identity);
}

int run_verify(const RunConfig& cfg, const VerifyArgs& va) {
  const std::string& id = va.identity;
  double tol = va.tol >= 0 ? va.tol : default_tol(id);

  auto ns = parse_int_list(va.n_text);
  auto ms = parse_int_list(va.m_text);
  auto rs = parse_int_list(va.r_text);
  auto xs = parse_rational_list(va.x_text);
  auto ys = parse_rational_list(va.y_text);
  auto ss = parse_complex_list(va.s_text);

  std::vector<Rational> exponent_args = xs;
  exponent_args.insert(exponent_args.end(), ys.begin(), ys.end());
  QBase base = build_qbase(cfg, exponent_args);
  SeriesControl ctrl = build_ctrl(cfg);

  // Deterministic grid order: the nested loops below.
  std::vector<GridPoint> grid;
  if (id == "thm1") {
    for (auto s : ss)
      for (int r : rs)
        for (const auto& x : xs) grid.push_back({0, 0, r, x, Rational(0), s});
  } else if (id == "thm2" || id == "thm3" || id == "eq5") {
    for (int n : ns)
      for (int r : rs)
        for (const auto& x : xs) grid.push_back({0, n, r, x, Rational(0), {}});
  } else if (id == "eq9") {
    for (int n : ns)
      for (int r : rs)
        for (const auto& x : xs)
          for (const auto& y : ys) grid.push_back({0, n, r, x, y, {}});
  } else if (id == "eq15" || id == "eq16") {
    for (int m : ms)
      for (int n : ns)
        for (int r : rs)
          for (const auto& x : xs)
            for (const auto& y : ys) grid.push_back({m, n, r, x, y, {}});
  } else {
    throw qeuler::DomainError("unknown identity: " + id);
  }

  if (va.sample > 0 && static_cast<size_t>(va.sample) < grid.size()) {
    std::vector<GridPoint> picked;
    std::mt19937_64 rng(cfg.seed);
    std::sample(grid.begin(), grid.end(), std::back_inserter(picked),
                va.sample, rng);
    grid = std::move(picked);
  }

  std::vector<json> lines;
  int failures = 0;
  double max_abs_diff = 0.0;
  bool have_diff = false;
  for (const auto& g : grid) {
    qeuler::IdentityReport rep = run_one(id, va, g, base, ctrl, tol);
    if (va.perturb_lhs != 0.0) {
      if (rep.lhs.backend() != Backend::Float) {
        throw qeuler::DomainError("--perturb-lhs needs the float backend");
      }
      Scalar lhs = Scalar::floating(rep.lhs.complex_value() *
                                    (1.0 + va.perturb_lhs));
      rep = qeuler::make_identity_report(lhs, rep.rhs, tol, rep.params);
    }
    if (!rep.pass) ++failures;
    if (!std::isnan(rep.abs_diff)) {
      max_abs_diff = std::max(max_abs_diff, rep.abs_diff);
      have_diff = true;
    }
    lines.push_back(report_json(rep, id));
  }

  json summary;
  summary["schema"] = kSummarySchema;
  summary["identity"] = id;
  summary["total"] = grid.size();
  summary["failures"] = failures;
  summary["max_abs_diff"] = have_diff ? json(max_abs_diff) : json(nullptr);

  if (cfg.format == "csv") {
    emit_reports_csv(std::cout, lines, summary);
  } else {
    for (const auto& line : lines) std::cout << line.dump() << "\n";
    std::cout << summary.dump() << "\n";
  }
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string kind;
  std::string n_text = "0";
  std::string i_text = "0";
  std::string r_text = "1";
  std::string a_text = "1";
  std::string x_text = "0";
  std::string s_text = "0";
  std::string scale_text = "1";
  std::string method;
  std::string output = "-";
};

int run_table(const RunConfig& cfg, const TableArgs& ta) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (ta.output != "-") {
    file.open(ta.output, std::ios::binary);
    if (!file) throw qeuler::DomainError("cannot open output: " + ta.output);
    os = &file;
  }

  auto ns = parse_int_list(ta.n_text);
  auto is = parse_int_list(ta.i_text);
  auto rs = parse_int_list(ta.r_text);
  auto as = parse_int_list(ta.a_text);
  auto xs = parse_rational_list(ta.x_text);
  auto ss = parse_complex_list(ta.s_text);
  SeriesControl ctrl = build_ctrl(cfg);

  std::vector<json> rows;
  if (ta.kind == "qeuler") {
    QBase base = build_qbase(cfg, xs);
    std::string method = ta.method.empty()
                             ? (cfg.backend == "float" ? "closed" : "closed")
                             : ta.method;
    for (int n : ns)
      for (int r : rs)
        for (const auto& x : xs) {
          qeuler::QEulerQuery query{n, r, x, base, ctrl};
          json row{{"n", n}, {"r", r}, {"x", x.get_str()},
                   {"q", base.describe()}};
          if (method == "closed") {
            Scalar v = qeuler::q_euler_closed(query);
            row["value"] = scalar_json(v);
            if (v.backend() == Backend::Exact && base.has_numeric()) {
              row["value_at_q"] = qeuler::eval_at(v, base.t0()).get_str();
            }
          } else {
            auto res = method == "single" ? qeuler::q_euler_single_sum(query)
                                          : qeuler::q_euler_multisum(query);
            row["value"] = complex_json(res.value);
            row["tail_bound"] = res.tail_bound;
          }
          rows.push_back(std::move(row));
        }
  } else if (ta.kind == "zeta") {
    QBase base = build_qbase(cfg, xs);
    for (const auto& s : ss)
      for (int r : rs)
        for (const auto& x : xs) {
          qeuler::ZetaQuery query{s, x, r, base, ctrl};
          auto res = ta.method == "multi" ? qeuler::zeta_multisum(query)
                                          : qeuler::zeta_single_sum(query);
          rows.push_back(json{{"s", complex_json(s)},
                              {"r", r},
                              {"x", x.get_str()},
                              {"q", base.describe()},
                              {"value", complex_json(res.value)},
                              {"tail_bound", res.tail_bound}});
        }
  } else if (ta.kind == "ssum") {
    Rational scale = qeuler::parse_rational(ta.scale_text);
    QBase base = build_qbase(cfg, {scale});
    QBase q_eff = base.rebased(scale);
    for (int n : ns)
      for (int i : is)
        for (int r : rs)
          for (int a : as) {
            if (i > n) continue;
            Scalar v = qeuler::s_sum(n, i, r, a, q_eff);
            json row{{"n", n}, {"i", i}, {"r", r}, {"a", a},
                     {"q", base.describe()}, {"value", scalar_json(v)}};
            if (v.backend() == Backend::Exact && base.has_numeric()) {
              row["value_at_q"] = qeuler::eval_at(v, base.t0()).get_str();
            }
            rows.push_back(std::move(row));
          }
  } else if (ta.kind == "euler-classical") {
    for (int n : ns)
      for (int r : rs) {
        auto poly = qeuler::euler_polynomial(n, r);
        rows.push_back(json{{"n", n}, {"r", r},
                            {"polynomial", poly.to_string()}});
      }
  } else {
    throw qeuler::DomainError("unknown table kind: " + ta.kind);
  }

  if (cfg.format == "csv") {
    // Union of keys in first-seen order; every row shares the kind's schema.
    std::vector<std::string> keys;
    for (const auto& row : rows) {
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
          keys.push_back(it.key());
        }
      }
    }
    for (size_t i = 0; i < keys.size(); ++i) *os << (i ? "," : "") << keys[i];
    *os << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < keys.size(); ++i) {
        *os << (i ? "," : "");
        if (row.contains(keys[i])) {
          const json& cell = row[keys[i]];
          *os << json_value_to_csv_cell(cell.is_object() ? json(cell.dump())
                                                         : cell);
        }
      }
      *os << "\n";
    }
  } else {
    for (const auto& row : rows) *os << row.dump() << "\n";
  }
  return 0;
}

void emit_error(const std::string& kind, const std::string& message) {
  json err{{"schema", kErrorSchema}, {"kind", kind}, {"error", message}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  EvalArgs eval_args;
  VerifyArgs verify_args;
  TableArgs table_args;

  CLI::App app{
      "q-deformed Euler polynomials, multiple q-zeta values, and symmetric "
      "identity verification"};
  app.fallthrough();
  app.set_config("--config", "", "Read options from a key=value file");
  app.add_option("--backend", cfg.backend, "Scalar backend: float|exact")
      ->capture_default_str();
  app.add_option("--q", cfg.q_text,
                 "Deformation parameter: complex like 0.4+0.3i (float), "
                 "rational p/q or 'formal' (exact)")
      ->capture_default_str();
  auto* d_opt = app.add_option(
      "--D", cfg.root_denom,
      "Root denominator: t = q^(1/D) on the exact backend (default: derived "
      "from the arguments)");
  app.add_option("--max-terms", cfg.max_terms, "Series term budget per index")
      ->capture_default_str();
  app.add_option("--abs-tol", cfg.abs_tol, "Series tail tolerance")
      ->envname("QEULER_ABS_TOL")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: json|csv")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized grid sampling")
      ->capture_default_str();

  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate one quantity: qeuler|zeta|ssum|euler-classical");
  eval_cmd->add_option("kind", eval_args.kind, "What to evaluate")
      ->required()
      ->check(CLI::IsMember({"qeuler", "zeta", "ssum", "euler-classical"}));
  eval_cmd->add_option("--n", eval_args.n, "Index n");
  eval_cmd->add_option("--r", eval_args.r, "Order r");
  eval_cmd->add_option("--i", eval_args.i, "Inner index i (ssum)");
  eval_cmd->add_option("--a", eval_args.a, "Residue bound a (ssum)");
  eval_cmd->add_option("--x", eval_args.x_text, "Argument x (rational)");
  eval_cmd->add_option("--s", eval_args.s_text, "Exponent s (zeta)");
  eval_cmd->add_option("--scale", eval_args.scale_text,
                       "Effective base power: evaluate at q^scale (ssum)");
  eval_cmd->add_option("--method", eval_args.method,
                       "closed|single|multi (default: closed/single)");
  eval_cmd->add_option("--eval-at", eval_args.eval_at_text,
                       "Also evaluate an exact result at t = this rational");

  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Verify an identity over a parameter grid, one JSON report per point");
  verify_cmd
      ->add_option("identity", verify_args.identity,
                   "thm1|thm2|thm3|eq5|eq9|eq15|eq16")
      ->required()
      ->check(CLI::IsMember(
          {"thm1", "thm2", "thm3", "eq5", "eq9", "eq15", "eq16"}));
  verify_cmd->add_option("--a", verify_args.a, "Odd parameter a");
  verify_cmd->add_option("--b", verify_args.b, "Odd parameter b");
  verify_cmd->add_option("--n", verify_args.n_text, "Index grid, e.g. 0..4");
  verify_cmd->add_option("--m", verify_args.m_text, "Second index grid");
  verify_cmd->add_option("--r", verify_args.r_text, "Order grid");
  verify_cmd->add_option("--x", verify_args.x_text,
                         "Arguments x, comma-separated rationals");
  verify_cmd->add_option("--y", verify_args.y_text, "Arguments y");
  verify_cmd->add_option("--s", verify_args.s_text,
                         "Exponents s, comma-separated complex");
  verify_cmd->add_option("--tol", verify_args.tol,
                         "Report tolerance (default per identity)");
  verify_cmd->add_option(
      "--perturb-lhs", verify_args.perturb_lhs,
      "Testing aid: multiply the left side by (1 + eps) before comparing");
  verify_cmd->add_flag("--allow-even", verify_args.allow_even,
                       "Experimentation: skip the odd-parity check");
  verify_cmd->add_option("--sample", verify_args.sample,
                         "Verify only this many randomly sampled grid points");

  auto* table_cmd = app.add_subcommand(
      "table", "Tabulate values over a grid: qeuler|zeta|ssum|euler-classical");
  table_cmd->add_option("kind", table_args.kind, "What to tabulate")
      ->required()
      ->check(CLI::IsMember({"qeuler", "zeta", "ssum", "euler-classical"}));
  table_cmd->add_option("--n", table_args.n_text, "Index grid");
  table_cmd->add_option("--i", table_args.i_text, "Inner index grid (ssum)");
  table_cmd->add_option("--r", table_args.r_text, "Order grid");
  table_cmd->add_option("--a", table_args.a_text, "Residue bound grid (ssum)");
  table_cmd->add_option("--x", table_args.x_text, "Argument grid");
  table_cmd->add_option("--s", table_args.s_text, "Exponent grid (zeta)");
  table_cmd->add_option("--scale", table_args.scale_text,
                        "Effective base power (ssum)");
  table_cmd->add_option("--method", table_args.method, "Evaluation method");
  table_cmd->add_option("--output,-o", table_args.output,
                        "Output path, '-' for stdout")
      ->capture_default_str();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.root_denom_given = d_opt->count() > 0;

  try {
    if (*eval_cmd) return run_eval(cfg, eval_args);
    if (*verify_cmd) return run_verify(cfg, verify_args);
    if (*table_cmd) return run_table(cfg, table_args);
    emit_error("usage", "no subcommand given");
    return 2;
  } catch (const qeuler::ConvergenceError& e) {
    emit_error("convergence", e.what());
    return 2;
  } catch (const qeuler::UnrepresentableError& e) {
    emit_error("domain", e.what());
    return 2;
  } catch (const qeuler::BackendMismatchError& e) {
    emit_error("usage", e.what());
    return 2;
  } catch (const qeuler::Error& e) {
    emit_error("domain", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("usage", e.what());
    return 2;
  }
}
