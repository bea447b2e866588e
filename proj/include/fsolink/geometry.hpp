// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

namespace fsolink {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

using Vec2 = Point2D;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double norm(Vec2 v);
Vec2 normalized(Vec2 v); // throws std::invalid_argument on zero vector

// Bearing convention used throughout: an angle b measured from the +y axis
// maps to the unit vector (sin b, cos b), i.e. positive angles lean toward +x.
Vec2 dir_from_bearing(double bearing_rad);
double bearing_from_dir(Vec2 v);

// Reflect direction d about the unit normal n.
Vec2 reflect(Vec2 d, Vec2 n);

// 2D scene: transmitter, reflecting surface, receiver lens segment.
// irs_normal_rad and rx_normal_rad are bearings of the respective surface
// normals. The IRS tangent for normal bearing b is (cos b, -sin b), so a
// surface with normal +y lies along the x axis.
struct SceneLayout {
    Point2D tx_position{-200.0, 300.0};
    Point2D irs_center{0.0, 0.0};
    double irs_normal_rad = 0.0;
    Point2D rx_lens_center{0.0, 500.0};
    double rx_lens_length = 0.1;
    // bearing of the lens normal; the default lens sits above the surface
    // and looks straight down at it
    double rx_normal_rad = 3.141592653589793;
};

struct AnglePair {
    double theta_i; // incidence angle, radians
    double theta_r; // reflection angle, radians
};

// Signed angle of direction v relative to the normal with bearing
// normal_rad; positive toward the tangent direction (toward +x when the
// normal is +y).
double angle_from_normal(Vec2 v, double normal_rad);

// Incidence angle of the transmitter seen from the IRS centre. Positive when
// the transmitter sits on the -x side of a +y-normal surface, so that a
// specular bounce toward the +x side has an equal, positive reflection
// angle. Throws std::invalid_argument when tx coincides with the IRS centre.
double incidence_angle(const SceneLayout &scene);

// Signed angle of the IRS-centre -> target direction from the IRS normal,
// positive toward +x for a +y normal.
double reflection_angle_to_target(const SceneLayout &scene, Point2D target);

// (d1, d2) = |tx - irs_center|, |irs_center - rx_lens_center|.
// Throws std::invalid_argument when either pair of points coincides.
std::pair<double, double> path_lengths(const SceneLayout &scene);

} // namespace fsolink
