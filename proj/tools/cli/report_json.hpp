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

#ifndef SEMIRAD_CLI_REPORT_JSON_HPP
#define SEMIRAD_CLI_REPORT_JSON_HPP

#include "json.hpp"
#include "semirad/arange.hpp"
#include "semirad/bounds.hpp"
#include "semirad/polyzero.hpp"

namespace semirad::cli {

using Json = nlohmann::ordered_json;

/// Number or [re, im].
Complex complex_from_json(const Json& j, const char* what);
Json complex_to_json(Complex c);

/// Array of rows; entries as complex_from_json.
ComplexMatrix matrix_from_json(const Json& j, const char* what);
Json matrix_to_json(const ComplexMatrix& m);

/// Summary of a single operator: radius, Crawford number, seminorm and the
/// theta-identity cross-check.
struct RadiusReport {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool strictly_positive = false;
  double radius = 0.0;
  double crawford = 0.0;
  double seminorm = 0.0;
  double theta_identity = 0.0;
  std::size_t theta_grid = 0;
  std::size_t mc_samples = 0;
  double mc_estimate = 0.0;

  bool operator==(const RadiusReport&) const = default;
};

Json to_json(const RadiusReport& r);
Json to_json(const RangeEstimate& r);
Json to_json(const BoundReport& r);
Json to_json(const MatrixBoundReport& r);
Json to_json(const ZeroBoundReport& r);

RadiusReport radius_report_from_json(const Json& j);
RangeEstimate range_estimate_from_json(const Json& j);
BoundReport bound_report_from_json(const Json& j);
MatrixBoundReport matrix_bound_report_from_json(const Json& j);
ZeroBoundReport zero_bound_report_from_json(const Json& j);

}  // namespace semirad::cli

#endif  // SEMIRAD_CLI_REPORT_JSON_HPP
