#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fsolink/beam.hpp"

using namespace fsolink;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

BeamSource reference_beam()
{
    BeamSource b;
    b.kind = BeamKind::gaussian;
    b.wavelength = 1.55e-6;
    b.waist_radius = 1e-3;
    b.total_power = 1.0;
    return b;
}
} // namespace

TEST_CASE("wavenumber and Rayleigh range")
{
    BeamSource b = reference_beam();
    CHECK(wavenumber(b) == Approx(2.0 * kPi / 1.55e-6).epsilon(1e-15));
    CHECK(rayleigh_range(b) == Approx(2.0268339700579308).epsilon(1e-14));
}

TEST_CASE("width law: waist, sqrt(2) at one Rayleigh range, symmetry")
{
    BeamSource b = reference_beam();
    double zr = rayleigh_range(b);
    CHECK(beam_width(b, 0.0) == Approx(1e-3).epsilon(1e-15));
    CHECK(beam_width(b, zr) == Approx(std::sqrt(2.0) * 1e-3).epsilon(1e-14));
    CHECK(beam_width(b, -5.0) == Approx(beam_width(b, 5.0)).epsilon(1e-15));
    // far field: w -> w0 z / zr
    CHECK(beam_width(b, 360.5551275463989) == Approx(0.17789361618982608).epsilon(1e-12));
}

TEST_CASE("curvature: flat at the waist, 1/(2 zr) one Rayleigh range out")
{
    BeamSource b = reference_beam();
    double zr = rayleigh_range(b);
    CHECK(inv_curvature(b, 0.0) == 0.0);
    CHECK(inv_curvature(b, zr) == Approx(1.0 / (2.0 * zr)).epsilon(1e-14));
    CHECK(inv_curvature(b, -zr) == Approx(-1.0 / (2.0 * zr)).epsilon(1e-14));
}

TEST_CASE("on-axis power density at the waist is P sqrt(2/pi)/w0")
{
    BeamSource b = reference_beam();
    ComplexAmplitude e = gaussian_field_at(b, 0.0, 0.0);
    CHECK(std::norm(e) == Approx(797.8845608028654).epsilon(1e-12));
}

TEST_CASE("transverse line integral of |E|^2 equals total power at any z")
{
    BeamSource b = reference_beam();
    b.total_power = 2.5;
    for (double z : {0.0, 1.0, 40.0}) {
        double w = beam_width(b, z);
        int n = 4000;
        double lo = -6.0 * w, hi = 6.0 * w, dx = (hi - lo) / n;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double x = lo + (i + 0.5) * dx;
            sum += std::norm(gaussian_field_at(b, x, z)) * dx;
        }
        CHECK(sum == Approx(2.5).epsilon(1e-6));
    }
}

TEST_CASE("axial phase carries kz minus half the Gouy term")
{
    BeamSource b = reference_beam();
    double z = 3.7;
    double k = wavenumber(b);
    double zeta = std::atan(z / rayleigh_range(b));
    double expected = -(k * z - 0.5 * zeta);
    double got = std::arg(gaussian_field_at(b, 0.0, z));
    double diff = std::remainder(got - expected, 2.0 * kPi);
    // phase is ~1.5e7 rad before wrapping, so allow k z eps of rounding
    CHECK(diff == Approx(0.0).epsilon(1e-8).scale(1));
}

TEST_CASE("plane source has unit density and phase -kz")
{
    BeamSource b = reference_beam();
    b.kind = BeamKind::plane;
    ComplexAmplitude e = gaussian_field_at(b, 0.4, 2.0);
    CHECK(std::abs(e) == Approx(1.0).epsilon(1e-15));
    double diff = std::remainder(std::arg(e) + wavenumber(b) * 2.0, 2.0 * kPi);
    CHECK(diff == Approx(0.0).epsilon(1e-8).scale(1));
}

TEST_CASE("world-frame evaluation agrees with the beam frame")
{
    BeamSource b = reference_beam();
    b.axis_origin = {2.0, 3.0};
    b.axis_bearing = 0.3;
    Vec2 ax = dir_from_bearing(b.axis_bearing);
    Vec2 tr{ax.y, -ax.x};
    Point2D p = b.axis_origin + 6.0 * ax + 0.002 * tr;
    auto [x, z] = to_beam_frame(b, p);
    ComplexAmplitude via_world = field_at_world(b, p);
    ComplexAmplitude via_frame = gaussian_field_at(b, x, z);
    CHECK(std::abs(via_world - via_frame) == Approx(0.0).epsilon(1e-9).scale(1));

    // frame axes: z along the axis, x along rot(-90) of it
    Vec2 d = dir_from_bearing(b.axis_bearing);
    Point2D q = b.axis_origin + 5.0 * d;
    auto [xq, zq] = to_beam_frame(b, q);
    CHECK(xq == Approx(0.0).epsilon(1e-12).scale(1));
    CHECK(zq == Approx(5.0).epsilon(1e-14));
}

TEST_CASE("transverse coordinate of a surface endpoint seen from the transmitter")
{
    // beam from (-200, 300) aimed at the origin; endpoint (-0.25, 0) of a
    // 0.5 m surface sits 0.25 cos(atan(2/3)) off axis
    BeamSource b = reference_beam();
    b.axis_origin = {-200.0, 300.0};
    aim_at(b, Point2D{0.0, 0.0});
    auto [x, z] = to_beam_frame(b, Point2D{-0.25, 0.0});
    CHECK(x == Approx(0.20801257358445469).epsilon(1e-12));
    CHECK(z == Approx(360.4164524973427).epsilon(1e-12));
}

TEST_CASE("aim_at points the axis at the target")
{
    BeamSource b = reference_beam();
    b.axis_origin = {1.0, 1.0};
    aim_at(b, Point2D{2.0, 2.0});
    CHECK(b.axis_bearing == Approx(kPi / 4.0).epsilon(1e-14));
}

TEST_CASE("gaussian_power_fraction closed forms")
{
    double w = 0.37;
    CHECK(gaussian_power_fraction(w, -1e9, 1e9) == Approx(1.0).epsilon(1e-12));
    CHECK(gaussian_power_fraction(w, 0.0, 1e9) == Approx(0.5).epsilon(1e-12));
    CHECK(gaussian_power_fraction(w, -w, w) == Approx(0.9544997361036416).epsilon(1e-12));
    CHECK(gaussian_power_fraction(w, 0.1, 0.1) == 0.0);
}
