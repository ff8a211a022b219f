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

#include "semirad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semirad::geometry {

namespace {

double cross(Point o, Point a, Point b) {
  const Point u = a - o;
  const Point v = b - o;
  return u.real() * v.imag() - u.imag() * v.real();
}

double orientation_slack(std::span<const Point> points) {
  double scale = 0.0;
  for (const Point& p : points) {
    scale = std::max({scale, std::abs(p.real()), std::abs(p.imag())});
  }
  return 1e-14 * std::max(scale * scale, std::numeric_limits<double>::min());
}

}  // namespace

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point l, Point r) {
    return l.real() < r.real() || (l.real() == r.real() && l.imag() < r.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;

  const double slack = orientation_slack(pts);
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= slack) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= slack) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // all points (nearly) coincident or collinear collapse to 1 or 2 vertices
  if (hull.size() == 2 && std::abs(hull[0] - hull[1]) <= std::sqrt(slack)) hull.resize(1);
  return hull;
}

double distance_to_segment(Point q, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(q - a);
  const Point aq = q - a;
  double s = (aq.real() * ab.real() + aq.imag() * ab.imag()) / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(q - (a + s * ab));
}

double distance_to_hull(Point q, std::span<const Point> hull) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(q - hull[0]);
  if (hull.size() == 2) return distance_to_segment(q, hull[0], hull[1]);

  const Point probe[] = {q};
  const double slack = std::max(orientation_slack(hull), orientation_slack(probe));
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % hull.size()];
    if (cross(a, b, q) < -slack) inside = false;
    best = std::min(best, distance_to_segment(q, a, b));
  }
  return inside ? 0.0 : best;
}

}  // namespace semirad::geometry
