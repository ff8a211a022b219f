/*
   Copyright 2026 The semirad Authors

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

#include "cli/job.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli/render.hpp"
#include "cli/report_json.hpp"
#include "semirad/arange.hpp"
#include "semirad/bounds.hpp"
#include "semirad/polyzero.hpp"
#include "semirad/semihilbert.hpp"

namespace semirad::cli {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

// Human reading of each validation failure.
const char* condition_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSquare: return "matrices must be square";
    case ErrorCode::NotHermitian: return "A must be Hermitian";
    case ErrorCode::NotPSD: return "A must be positive semidefinite (A >= 0)";
    case ErrorCode::NotAAdjointable: return "T must admit an A-adjoint, i.e. R(T*A) must lie in R(A)";
    case ErrorCode::NotStrictlyPositive: return "A must be strictly positive (A >= mI > 0)";
    case ErrorCode::ContextMismatch: return "all blocks must share the same A";
    case ErrorCode::DimensionMismatch: return "A and T must have matching dimensions";
    case ErrorCode::TOutOfRange: return "t must lie in [0, 1]";
    case ErrorCode::DegreeZero: return "the polynomial must have degree at least 1";
    case ErrorCode::WeightDimensionMismatch: return "one weight per coefficient is required";
    case ErrorCode::NonPositiveWeight: return "weights must be positive";
    case ErrorCode::NonFinite: return "all entries must be finite";
    default: return nullptr;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_document(const std::string& text, const std::string& source) {
  try {
    Json doc = Json::parse(text);
    if (!doc.is_object()) invalid(source + ": input must be a JSON object");
    return doc;
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    invalid(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
            ": malformed JSON");
  }
}

void reject_unknown_keys(const Json& doc, const std::set<std::string>& allowed, Command cmd) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) {
      invalid(std::string("unknown key '") + key + "' for command '" + to_string(cmd) + "'");
    }
  }
}

const Json& required(const Json& doc, const char* key) {
  if (!doc.contains(key)) invalid(std::string("missing required key '") + key + "'");
  return doc.at(key);
}

Context context_from(const Json& doc, const JobConfig& cfg) {
  const bool has_a = doc.contains("A");
  const bool has_id = doc.contains("dim+identity");
  if (has_a == has_id) invalid("exactly one of 'A' or 'dim+identity' is required");
  if (has_a) return make_context(matrix_from_json(doc.at("A"), "A"), cfg.tolerances);
  const Json& n = doc.at("dim+identity");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) {
    invalid("'dim+identity' must be a positive integer");
  }
  return identity_context(n.get<std::size_t>(), cfg.tolerances);
}

std::vector<Complex> complex_list(const Json& j, const char* what) {
  if (!j.is_array()) invalid(std::string(what) + ": expected an array");
  std::vector<Complex> out;
  for (const auto& v : j) out.push_back(complex_from_json(v, what));
  return out;
}

std::vector<double> real_list(const Json& j, const char* what) {
  if (!j.is_array()) invalid(std::string(what) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) invalid(std::string(what) + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Json config_json(const JobConfig& cfg) {
  Json j;
  j["theta_grid"] = cfg.theta_grid;
  j["phi_grid"] = cfg.phi_grid;
  j["mc_samples"] = cfg.mc_samples;
  j["restarts"] = cfg.restarts;
  j["iters"] = cfg.iters;
  j["seed"] = cfg.seed;
  j["herm_tol"] = cfg.tolerances.herm_tol;
  j["rank_tol"] = cfg.tolerances.rank_tol;
  return j;
}

std::string emit_json(const JobConfig& cfg, Json report, Json extra = nullptr) {
  Json doc;
  doc["command"] = to_string(cfg.command);
  doc["config"] = config_json(cfg);
  doc["report"] = std::move(report);
  if (!extra.is_null()) doc["at_t"] = std::move(extra);
  return doc.dump(2) + "\n";
}

void svg_only_for_range(const JobConfig& cfg) {
  if (cfg.output_format == Format::Svg) invalid("svg output is only available for 'range'");
}

RangeOptions range_options(const JobConfig& cfg) {
  RangeOptions r;
  r.theta_grid = cfg.theta_grid;
  return r;
}

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string run_radius(const JobConfig& cfg, const Json& doc) {
  reject_unknown_keys(doc, {"A", "dim+identity", "T"}, cfg.command);
  svg_only_for_range(cfg);
  const Context ctx = context_from(doc, cfg);
  const SemiOperator op = make_operator(ctx, matrix_from_json(required(doc, "T"), "T"));
  const RangeEstimate est = numerical_range(op, range_options(cfg));

  RadiusReport r;
  r.dimension = ctx->dim();
  r.rank = ctx->rank();
  r.strictly_positive = ctx->strictly_positive();
  r.radius = est.radius;
  r.crawford = est.crawford;
  r.seminorm = a_operator_seminorm(op);
  r.theta_identity = w_theta_identity_check(op, cfg.theta_grid);
  r.theta_grid = est.theta_grid;
  r.mc_samples = cfg.mc_samples;
  if (cfg.mc_samples > 0) r.mc_estimate = sampled_radius(op, cfg.mc_samples, cfg.seed);

  if (cfg.output_format == Format::Json) return emit_json(cfg, to_json(r));
  Rows rows = {{"dimension", std::to_string(r.dimension)},
               {"rank(A)", std::to_string(r.rank)},
               {"A strictly positive", r.strictly_positive ? "yes" : "no"},
               {"w_A(T)", fmt6(r.radius)},
               {"m_A(T)", fmt6(r.crawford)},
               {"||T||_A", fmt6(r.seminorm)},
               {"sup_theta ||Re_A(e^{i theta} T)||_A", fmt6(r.theta_identity)},
               {"theta grid", std::to_string(r.theta_grid)}};
  if (r.mc_samples > 0) {
    rows.push_back({"Monte Carlo samples", std::to_string(r.mc_samples)});
    rows.push_back({"Monte Carlo estimate", fmt6(r.mc_estimate)});
  }
  return render_table("A-numerical radius", rows);
}

std::string run_bounds(const JobConfig& cfg, const Json& doc) {
  reject_unknown_keys(doc, {"A", "dim+identity", "T"}, cfg.command);
  svg_only_for_range(cfg);
  const Context ctx = context_from(doc, cfg);
  const SemiOperator op = make_operator(ctx, matrix_from_json(required(doc, "T"), "T"));
  BoundOptions opt;
  opt.range = range_options(cfg);
  opt.phi_grid = cfg.phi_grid;
  const BoundReport r = bound_report(op, opt);

  if (cfg.output_format == Format::Json) return emit_json(cfg, to_json(r));
  return render_table("A-numerical radius bounds",
                      {{"w_A(T)", fmt6(r.w_exact)},
                       {"lower: sqrt(|Re|^2 + |Im|^2) form", fmt6(r.lower_21)},
                       {"lower: |Re +- Im| form", fmt6(r.lower_22)},
                       {"upper: H_phi", fmt6(r.upper_hphi)},
                       {"phi*", fmt6(r.phi_star)},
                       {"||T||_A / 2", fmt6(r.sandwich_lower)},
                       {"||T||_A", fmt6(r.sandwich_upper)},
                       {"||Re_A T||_A", fmt6(r.re_norm)},
                       {"||Im_A T||_A", fmt6(r.im_norm)},
                       {"brackets", r.brackets() ? "yes" : "no"}});
}

std::string run_blockbounds(const JobConfig& cfg, const Json& doc) {
  reject_unknown_keys(doc, {"A", "dim+identity", "T11", "T12", "T21", "T22", "t"}, cfg.command);
  svg_only_for_range(cfg);
  const Context ctx = context_from(doc, cfg);
  auto block = [&](const char* key) {
    return make_operator(ctx, matrix_from_json(required(doc, key), key));
  };
  const BlockOperator blocks(block("T11"), block("T12"), block("T21"), block("T22"));
  BoundOptions opt;
  opt.range = range_options(cfg);
  const MatrixBoundReport r = matrix_bound_report(blocks, opt);

  std::optional<double> t;
  if (doc.contains("t")) {
    if (!doc.at("t").is_number()) invalid("'t' must be a number");
    t = doc.at("t").get<double>();
  }
  Json at_t = nullptr;
  double th27_t = 0.0, th28_t = 0.0;
  if (t) {
    th27_t = th27_closed_form(r.ingredients, *t);
    th28_t = th28_closed_form(r.ingredients, *t);
    at_t = Json::object();
    at_t["t"] = *t;
    at_t["th27"] = th27_t;
    at_t["th28"] = th28_t;
  }

  if (cfg.output_format == Format::Json) return emit_json(cfg, to_json(r), at_t);
  Rows rows = {{"w_B(T)", fmt6(r.w_b_exact)},
               {"w_B(top row only)", fmt6(r.w_b_top_row)},
               {"top-row bound", fmt6(r.lemma24)},
               {"max/mean bound", fmt6(r.th25)},
               {"t-bound (diagonal)", fmt6(r.th27)},
               {"t* (diagonal)", fmt6(r.t_star_27)},
               {"t-bound (off-diagonal)", fmt6(r.th28)},
               {"t* (off-diagonal)", fmt6(r.t_star_28)},
               {"w_A(T11)", fmt6(r.ingredients.w11)},
               {"w_A(T22)", fmt6(r.ingredients.w22)},
               {"||T12||_A", fmt6(r.ingredients.n12)},
               {"||T21||_A", fmt6(r.ingredients.n21)},
               {"consistent", r.consistent() ? "yes" : "no"}};
  if (t) {
    rows.push_back({"t", fmt6(*t)});
    rows.push_back({"t-bound (diagonal) at t", fmt6(th27_t)});
    rows.push_back({"t-bound (off-diagonal) at t", fmt6(th28_t)});
  }
  return render_table("2x2 operator matrix bounds", rows);
}

std::string run_zeros(const JobConfig& cfg, const Json& doc) {
  reject_unknown_keys(doc, {"coeffs", "d", "leading"}, cfg.command);
  svg_only_for_range(cfg);
  std::vector<Complex> coeffs = complex_list(required(doc, "coeffs"), "coeffs");
  const PolynomialSpec p =
      doc.contains("leading")
          ? PolynomialSpec::normalized(std::move(coeffs), complex_from_json(doc.at("leading"), "leading"))
          : PolynomialSpec::monic(std::move(coeffs));
  ZeroOptions opt;
  opt.restarts = cfg.restarts;
  opt.iters = cfg.iters;
  opt.seed = cfg.seed;
  if (doc.contains("d")) opt.user_weights = WeightVector(real_list(doc.at("d"), "d"));
  const ZeroBoundReport r = zero_bound_report(p, opt);

  if (cfg.output_format == Format::Json) return emit_json(cfg, to_json(r));
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt6(v[i]);
    return s;
  };
  Rows rows = {{"degree", std::to_string(p.degree())},
               {"Cauchy", fmt6(r.r_c)},
               {"Carmichael-Mason", fmt6(r.r_cm)},
               {"Fujii-Kubo", fmt6(r.r_fk)},
               {"weighted (optimized)", fmt6(r.r_prk)},
               {"weights", join(r.d_star.values())},
               {"alphas", join(r.alphas)}};
  if (r.r_prk_user) rows.push_back({"weighted (given d)", fmt6(*r.r_prk_user)});
  rows.push_back({"max |zero|", fmt6(r.max_root_modulus)});
  if (r.leading != Complex(1.0, 0.0)) rows.push_back({"leading", fmt6(r.leading)});
  return render_table("Polynomial zero bounds", rows);
}

std::string run_range(const JobConfig& cfg, const Json& doc) {
  reject_unknown_keys(doc, {"A", "dim+identity", "T"}, cfg.command);
  const Context ctx = context_from(doc, cfg);
  const SemiOperator op = make_operator(ctx, matrix_from_json(required(doc, "T"), "T"));
  const RangeEstimate r = numerical_range(op, range_options(cfg));

  if (cfg.output_format == Format::Json) return emit_json(cfg, to_json(r));
  if (cfg.output_format == Format::Svg) return render_range_svg(r);
  Rows rows = {{"w_A(T)", fmt6(r.radius)},
               {"m_A(T)", fmt6(r.crawford)},
               {"boundary points", std::to_string(r.boundary.size())},
               {"theta grid", std::to_string(r.theta_grid)},
               {"refined", r.refined ? "yes" : "no"}};
  if (r.degenerate) rows.push_back({"degenerate", "yes (rank(A) = 0)"});
  for (std::size_t i = 0; i < r.boundary.size(); ++i) {
    rows.push_back({"z[" + std::to_string(i) + "]", fmt6(r.boundary[i])});
  }
  return render_table("A-numerical range", rows);
}

}  // namespace

Command parse_command(const std::string& s) {
  if (s == "radius") return Command::Radius;
  if (s == "bounds") return Command::Bounds;
  if (s == "blockbounds") return Command::BlockBounds;
  if (s == "zeros") return Command::Zeros;
  if (s == "range") return Command::Range;
  invalid("unknown command '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "svg") return Format::Svg;
  invalid("unknown format '" + s + "'");
}

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Radius: return "radius";
    case Command::Bounds: return "bounds";
    case Command::BlockBounds: return "blockbounds";
    case Command::Zeros: return "zeros";
    case Command::Range: return "range";
  }
  return "?";
}

const char* to_string(Format f) noexcept {
  switch (f) {
    case Format::Table: return "table";
    case Format::Json: return "json";
    case Format::Svg: return "svg";
  }
  return "?";
}

Tolerances parse_tolerances(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) invalid("tolerances must be 'herm_tol,rank_tol'");
  Tolerances t;
  try {
    std::size_t used = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    t.herm_tol = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    t.rank_tol = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
  } catch (const std::logic_error&) {
    invalid("tolerances must be 'herm_tol,rank_tol', got '" + s + "'");
  }
  if (!(t.herm_tol > 0.0) || !(t.rank_tol > 0.0) || !std::isfinite(t.herm_tol) ||
      !std::isfinite(t.rank_tol)) {
    invalid("tolerances must be positive and finite");
  }
  return t;
}

void validate(const JobConfig& cfg) {
  if (cfg.theta_grid < 8) invalid("theta grid must be at least 8");
  if (cfg.phi_grid < 8) invalid("phi grid must be at least 8");
  if (cfg.restarts == 0) invalid("restarts must be at least 1");
  if (cfg.iters == 0) invalid("iters must be at least 1");
  if (cfg.output_format == Format::Svg && cfg.command != Command::Range) {
    invalid("svg output is only available for 'range'");
  }
}

std::string execute_text(const JobConfig& cfg, const std::string& text, const std::string& source) {
  validate(cfg);
  const Json doc = parse_document(text, source);
  switch (cfg.command) {
    case Command::Radius: return run_radius(cfg, doc);
    case Command::Bounds: return run_bounds(cfg, doc);
    case Command::BlockBounds: return run_blockbounds(cfg, doc);
    case Command::Zeros: return run_zeros(cfg, doc);
    case Command::Range: return run_range(cfg, doc);
  }
  invalid("unknown command");
}

std::string execute(const JobConfig& cfg) {
  validate(cfg);
  return execute_text(cfg, read_file(cfg.input_path), cfg.input_path);
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) invalid("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) invalid("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    invalid("cannot move output into place at '" + path + "'");
  }
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = execute(cfg);
    if (cfg.output_path.empty()) {
      out << text;
      out.flush();
    } else {
      write_atomically(cfg.output_path, text);
    }
    return 0;
  } catch (const Error& e) {
    err << "semirad: error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    if (const char* cond = condition_for(e.code())) err << "  violated condition: " << cond << '\n';
    return is_validation_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "semirad: internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace semirad::cli
