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

#ifndef SEMIRAD_CLI_RENDER_HPP
#define SEMIRAD_CLI_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "semirad/arange.hpp"

namespace semirad::cli {

/// %.6g
std::string fmt6(double v);
std::string fmt6(Complex c);

/// Two-column "name  value" table.
std::string render_table(const std::string& title,
                         const std::vector<std::pair<std::string, std::string>>& rows);

/// 800x800 SVG 1.1: boundary polygon, axes, circles of radius w and m.
std::string render_range_svg(const RangeEstimate& r);

}  // namespace semirad::cli

#endif  // SEMIRAD_CLI_RENDER_HPP
