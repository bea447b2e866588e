// SPDX-License-Identifier: Apache-2.0

#include "fsolink/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace fsolink {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

Vec2 normalized(Vec2 v)
{
    double n = norm(v);
    if (n == 0.0)
        throw std::invalid_argument("normalized: zero-length vector");
    return {v.x / n, v.y / n};
}

Vec2 dir_from_bearing(double bearing_rad)
{
    return {std::sin(bearing_rad), std::cos(bearing_rad)};
}

double bearing_from_dir(Vec2 v) { return std::atan2(v.x, v.y); }

Vec2 reflect(Vec2 d, Vec2 n)
{
    double p = 2.0 * dot(d, n);
    return {d.x - p * n.x, d.y - p * n.y};
}

double angle_from_normal(Vec2 v, double normal_rad)
{
    Vec2 n = dir_from_bearing(normal_rad);
    Vec2 t{n.y, -n.x}; // tangent, +x for a +y normal
    return std::atan2(dot(v, t), dot(v, n));
}

double incidence_angle(const SceneLayout &scene)
{
    Vec2 u = scene.tx_position - scene.irs_center;
    if (norm(u) == 0.0)
        throw std::invalid_argument("incidence_angle: tx coincides with irs_center");
    // Sign flipped relative to angle_from_normal so that incidence and
    // reflection angles are both positive for a specular pair straddling
    // the normal.
    return -angle_from_normal(u, scene.irs_normal_rad);
}

double reflection_angle_to_target(const SceneLayout &scene, Point2D target)
{
    Vec2 v = target - scene.irs_center;
    if (norm(v) == 0.0)
        throw std::invalid_argument("reflection_angle_to_target: target coincides with irs_center");
    return angle_from_normal(v, scene.irs_normal_rad);
}

std::pair<double, double> path_lengths(const SceneLayout &scene)
{
    double d1 = norm(scene.tx_position - scene.irs_center);
    double d2 = norm(scene.rx_lens_center - scene.irs_center);
    if (d1 == 0.0)
        throw std::invalid_argument("path_lengths: tx coincides with irs_center");
    if (d2 == 0.0)
        throw std::invalid_argument("path_lengths: rx_lens_center coincides with irs_center");
    return {d1, d2};
}

} // namespace fsolink
