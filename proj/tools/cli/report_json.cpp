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

#include "cli/report_json.hpp"

#include <string>

namespace semirad::cli {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

double real_from_json(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::vector<double> reals_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(real_from_json(v, what));
  return out;
}

}  // namespace

Complex complex_from_json(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  bad(std::string(what) + ": complex entries must be numbers or [re, im] pairs");
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

ComplexMatrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) bad(std::string(what) + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) bad(std::string(what) + ": rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad(std::string(what) + ": ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_from_json(j[i][k], what);
    }
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RadiusReport& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["rank"] = r.rank;
  j["strictly_positive"] = r.strictly_positive;
  j["radius"] = r.radius;
  j["crawford"] = r.crawford;
  j["seminorm"] = r.seminorm;
  j["theta_identity"] = r.theta_identity;
  j["theta_grid"] = r.theta_grid;
  j["mc_samples"] = r.mc_samples;
  j["mc_estimate"] = r.mc_estimate;
  return j;
}

RadiusReport radius_report_from_json(const Json& j) {
  RadiusReport r;
  r.dimension = j.at("dimension").get<std::size_t>();
  r.rank = j.at("rank").get<std::size_t>();
  r.strictly_positive = j.at("strictly_positive").get<bool>();
  r.radius = j.at("radius").get<double>();
  r.crawford = j.at("crawford").get<double>();
  r.seminorm = j.at("seminorm").get<double>();
  r.theta_identity = j.at("theta_identity").get<double>();
  r.theta_grid = j.at("theta_grid").get<std::size_t>();
  r.mc_samples = j.at("mc_samples").get<std::size_t>();
  r.mc_estimate = j.at("mc_estimate").get<double>();
  return r;
}

Json to_json(const RangeEstimate& r) {
  Json j;
  j["radius"] = r.radius;
  j["crawford"] = r.crawford;
  j["theta_grid"] = r.theta_grid;
  j["refined"] = r.refined;
  j["degenerate"] = r.degenerate;
  Json pts = Json::array();
  for (const Complex& p : r.boundary) pts.push_back(complex_to_json(p));
  j["boundary"] = std::move(pts);
  return j;
}

RangeEstimate range_estimate_from_json(const Json& j) {
  RangeEstimate r;
  r.radius = j.at("radius").get<double>();
  r.crawford = j.at("crawford").get<double>();
  r.theta_grid = j.at("theta_grid").get<std::size_t>();
  r.refined = j.at("refined").get<bool>();
  r.degenerate = j.at("degenerate").get<bool>();
  for (const auto& p : j.at("boundary")) r.boundary.push_back(complex_from_json(p, "boundary"));
  return r;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["w_exact"] = r.w_exact;
  j["lower_21"] = r.lower_21;
  j["lower_22"] = r.lower_22;
  j["upper_hphi"] = r.upper_hphi;
  j["phi_star"] = r.phi_star;
  j["sandwich_lower"] = r.sandwich_lower;
  j["sandwich_upper"] = r.sandwich_upper;
  j["re_norm"] = r.re_norm;
  j["im_norm"] = r.im_norm;
  j["theta_grid"] = r.theta_grid;
  j["phi_grid"] = r.phi_grid;
  j["brackets"] = r.brackets();
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.w_exact = j.at("w_exact").get<double>();
  r.lower_21 = j.at("lower_21").get<double>();
  r.lower_22 = j.at("lower_22").get<double>();
  r.upper_hphi = j.at("upper_hphi").get<double>();
  r.phi_star = j.at("phi_star").get<double>();
  r.sandwich_lower = j.at("sandwich_lower").get<double>();
  r.sandwich_upper = j.at("sandwich_upper").get<double>();
  r.re_norm = j.at("re_norm").get<double>();
  r.im_norm = j.at("im_norm").get<double>();
  r.theta_grid = j.at("theta_grid").get<std::size_t>();
  r.phi_grid = j.at("phi_grid").get<std::size_t>();
  return r;
}

Json to_json(const MatrixBoundReport& r) {
  Json j;
  j["w_b_exact"] = r.w_b_exact;
  j["w_b_top_row"] = r.w_b_top_row;
  j["lemma24"] = r.lemma24;
  j["th25"] = r.th25;
  j["th27"] = r.th27;
  j["th28"] = r.th28;
  j["t_star_27"] = r.t_star_27;
  j["t_star_28"] = r.t_star_28;
  j["w11"] = r.ingredients.w11;
  j["w22"] = r.ingredients.w22;
  j["n12"] = r.ingredients.n12;
  j["n21"] = r.ingredients.n21;
  j["consistent"] = r.consistent();
  return j;
}

MatrixBoundReport matrix_bound_report_from_json(const Json& j) {
  MatrixBoundReport r;
  r.w_b_exact = j.at("w_b_exact").get<double>();
  r.w_b_top_row = j.at("w_b_top_row").get<double>();
  r.lemma24 = j.at("lemma24").get<double>();
  r.th25 = j.at("th25").get<double>();
  r.th27 = j.at("th27").get<double>();
  r.th28 = j.at("th28").get<double>();
  r.t_star_27 = j.at("t_star_27").get<double>();
  r.t_star_28 = j.at("t_star_28").get<double>();
  r.ingredients.w11 = j.at("w11").get<double>();
  r.ingredients.w22 = j.at("w22").get<double>();
  r.ingredients.n12 = j.at("n12").get<double>();
  r.ingredients.n21 = j.at("n21").get<double>();
  return r;
}

Json to_json(const ZeroBoundReport& r) {
  Json j;
  j["r_c"] = r.r_c;
  j["r_cm"] = r.r_cm;
  j["r_fk"] = r.r_fk;
  j["r_prk"] = r.r_prk;
  j["d_star"] = r.d_star.values();
  j["alphas"] = r.alphas;
  j["r_prk_user"] = r.r_prk_user ? Json(*r.r_prk_user) : Json(nullptr);
  j["root_moduli"] = r.root_moduli;
  j["max_root_modulus"] = r.max_root_modulus;
  j["leading"] = complex_to_json(r.leading);
  return j;
}

ZeroBoundReport zero_bound_report_from_json(const Json& j) {
  ZeroBoundReport r;
  r.r_c = real_from_json(j.at("r_c"), "r_c");
  r.r_cm = real_from_json(j.at("r_cm"), "r_cm");
  r.r_fk = real_from_json(j.at("r_fk"), "r_fk");
  r.r_prk = real_from_json(j.at("r_prk"), "r_prk");
  r.d_star = WeightVector(reals_from_json(j.at("d_star"), "d_star"));
  r.alphas = reals_from_json(j.at("alphas"), "alphas");
  if (!j.at("r_prk_user").is_null()) r.r_prk_user = real_from_json(j.at("r_prk_user"), "r_prk_user");
  r.root_moduli = reals_from_json(j.at("root_moduli"), "root_moduli");
  r.max_root_modulus = real_from_json(j.at("max_root_modulus"), "max_root_modulus");
  r.leading = complex_from_json(j.at("leading"), "leading");
  return r;
}

}  // namespace semirad::cli
