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

#ifndef SEMIRAD_GEOMETRY_HPP
#define SEMIRAD_GEOMETRY_HPP

#include <complex>
#include <span>
#include <vector>

namespace semirad::geometry {

using Point = std::complex<double>;

/// Convex hull in counter-clockwise order (monotone chain). Collinear and
/// duplicate points are dropped using an orientation slack of
/// 1e-14 * (coordinate scale)^2, so the result may hold one or two points
/// for degenerate input.
std::vector<Point> convex_hull(std::span<const Point> points);

/// Euclidean distance from q to the segment [a, b].
double distance_to_segment(Point q, Point a, Point b);

/// Distance from q to a hull produced by convex_hull(); 0 when q is inside.
double distance_to_hull(Point q, std::span<const Point> hull);

}  // namespace semirad::geometry

#endif  // SEMIRAD_GEOMETRY_HPP
