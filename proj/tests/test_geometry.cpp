#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fsolink/geometry.hpp"

using namespace fsolink;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

Point2D rotate(Point2D p, double a)
{
    return {p.x * std::cos(a) + p.y * std::sin(a), -p.x * std::sin(a) + p.y * std::cos(a)};
}
} // namespace

TEST_CASE("bearing convention maps 0 to +y and pi/2 to +x")
{
    Vec2 up = dir_from_bearing(0.0);
    CHECK(up.x == Approx(0.0).epsilon(1e-12).scale(1));
    CHECK(up.y == Approx(1.0));
    Vec2 right = dir_from_bearing(kPi / 2.0);
    CHECK(right.x == Approx(1.0));
    CHECK(right.y == Approx(0.0).epsilon(1e-12).scale(1));

    for (double b : {-2.0, -0.3, 0.0, 0.7, 2.9})
        CHECK(bearing_from_dir(dir_from_bearing(b)) == Approx(b).epsilon(1e-12));
}

TEST_CASE("normalized rejects the zero vector")
{
    CHECK_THROWS_AS(normalized(Vec2{0.0, 0.0}), std::invalid_argument);
    Vec2 v = normalized(Vec2{3.0, 4.0});
    CHECK(norm(v) == Approx(1.0));
    CHECK(v.x == Approx(0.6));
}

TEST_CASE("reflect about a unit normal")
{
    Vec2 r = reflect(Vec2{0.0, -1.0}, Vec2{0.0, 1.0});
    CHECK(r.x == Approx(0.0).epsilon(1e-12).scale(1));
    CHECK(r.y == Approx(1.0));

    // 45 degree bounce off the x axis
    Vec2 d = normalized(Vec2{1.0, -1.0});
    Vec2 s = reflect(d, Vec2{0.0, 1.0});
    CHECK(s.x == Approx(d.x));
    CHECK(s.y == Approx(-d.y));
}

TEST_CASE("angle_from_normal is signed toward the tangent")
{
    Vec2 v = normalized(Vec2{1.0, 1.0});
    CHECK(angle_from_normal(v, 0.0) == Approx(kPi / 4.0));
    CHECK(angle_from_normal(Vec2{-1.0, 1.0}, 0.0) == Approx(-kPi / 4.0));
    // rotating both the vector and the normal leaves the angle unchanged
    double a = 0.9;
    CHECK(angle_from_normal(rotate(v, a), 0.0 + a) == Approx(kPi / 4.0).epsilon(1e-12));
}

TEST_CASE("incidence and reflection angles of the default scene")
{
    SceneLayout scene; // tx (-200, 300), IRS at origin, rx (0, 500)
    CHECK(incidence_angle(scene) == Approx(0.5880026035475675).epsilon(1e-14));
    CHECK(reflection_angle_to_target(scene, scene.rx_lens_center) ==
          Approx(0.0).epsilon(1e-12).scale(1));
    CHECK(reflection_angle_to_target(scene, Point2D{200.0, 300.0}) ==
          Approx(0.5880026035475675).epsilon(1e-14));

    // mirrored transmitter flips the sign
    SceneLayout flipped = scene;
    flipped.tx_position = {200.0, 300.0};
    CHECK(incidence_angle(flipped) == Approx(-0.5880026035475675).epsilon(1e-14));

    auto [d1, d2] = path_lengths(scene);
    CHECK(d1 == Approx(360.5551275463989).epsilon(1e-14));
    CHECK(d2 == Approx(500.0).epsilon(1e-14));
}

TEST_CASE("scene angles are invariant under a rigid rotation")
{
    SceneLayout scene;
    double a = 0.654;
    SceneLayout rot = scene;
    rot.tx_position = rotate(scene.tx_position, a);
    rot.rx_lens_center = rotate(scene.rx_lens_center, a);
    rot.irs_center = rotate(scene.irs_center, a);
    rot.irs_normal_rad = scene.irs_normal_rad + a;
    rot.rx_normal_rad = scene.rx_normal_rad + a;

    CHECK(incidence_angle(rot) == Approx(incidence_angle(scene)).epsilon(1e-12));
    CHECK(reflection_angle_to_target(rot, rot.rx_lens_center) ==
          Approx(reflection_angle_to_target(scene, scene.rx_lens_center)).epsilon(1e-12));
    auto [d1, d2] = path_lengths(rot);
    auto [e1, e2] = path_lengths(scene);
    CHECK(d1 == Approx(e1).epsilon(1e-12));
    CHECK(d2 == Approx(e2).epsilon(1e-12));
}

TEST_CASE("degenerate scenes throw")
{
    SceneLayout scene;
    scene.tx_position = scene.irs_center;
    CHECK_THROWS_AS(incidence_angle(scene), std::invalid_argument);
    CHECK_THROWS_AS(path_lengths(scene), std::invalid_argument);
}
