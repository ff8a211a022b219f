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

#include "cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace semirad::cli {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

std::string fmt6(Complex c) {
  const double im = c.imag();
  std::string s = fmt6(c.real());
  s += im < 0.0 ? " - " : " + ";
  s += fmt6(std::abs(im));
  s += "i";
  return s;
}

std::string render_table(const std::string& title,
                         const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  os << title << '\n';
  for (const auto& [k, v] : rows) {
    os << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return os.str();
}

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return std::string(buf) == "-0.000" ? "0.000" : buf;
}

}  // namespace

std::string render_range_svg(const RangeEstimate& r) {
  double extent = r.radius;
  for (const Complex& p : r.boundary) {
    extent = std::max({extent, std::abs(p.real()), std::abs(p.imag())});
  }
  if (!(extent > 0.0)) extent = 1.0;
  extent *= 1.05;

  const double half = kSize / 2.0;
  const double scale = (half - kMargin) / extent;
  auto sx = [&](double x) { return half + scale * x; };
  auto sy = [&](double y) { return half - scale * y; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\""
     << " viewBox=\"0 0 800 800\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n"
     << "  <g stroke=\"#888888\" stroke-width=\"1\">\n"
     << "    <line x1=\"0\" y1=\"" << num(half) << "\" x2=\"800\" y2=\"" << num(half) << "\"/>\n"
     << "    <line x1=\"" << num(half) << "\" y1=\"0\" x2=\"" << num(half) << "\" y2=\"800\"/>\n"
     << "  </g>\n";

  os << "  <circle cx=\"" << num(half) << "\" cy=\"" << num(half) << "\" r=\""
     << num(scale * r.radius)
     << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-dasharray=\"6 4\"/>\n";
  os << "  <circle cx=\"" << num(half) << "\" cy=\"" << num(half) << "\" r=\""
     << num(scale * r.crawford)
     << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-dasharray=\"2 3\"/>\n";

  if (!r.boundary.empty()) {
    os << "  <polygon fill=\"#d62728\" fill-opacity=\"0.15\" stroke=\"#d62728\" stroke-width=\"1.5\""
       << " points=\"";
    for (std::size_t i = 0; i < r.boundary.size(); ++i) {
      if (i) os << ' ';
      os << num(sx(r.boundary[i].real())) << ',' << num(sy(r.boundary[i].imag()));
    }
    os << "\"/>\n";
  }

  os << "  <text x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"14\">w_A = "
     << fmt6(r.radius) << "   m_A = " << fmt6(r.crawford) << "</text>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace semirad::cli
