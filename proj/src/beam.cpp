// SPDX-License-Identifier: Apache-2.0

#include "fsolink/beam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fsolink {

double wavenumber(const BeamSource &beam)
{
    if (beam.wavelength <= 0.0)
        throw std::invalid_argument("wavenumber: wavelength must be positive");
    return 2.0 * std::numbers::pi / beam.wavelength;
}

double rayleigh_range(const BeamSource &beam)
{
    if (beam.waist_radius <= 0.0)
        throw std::invalid_argument("rayleigh_range: waist must be positive");
    return std::numbers::pi * beam.waist_radius * beam.waist_radius / beam.wavelength;
}

double beam_width(const BeamSource &beam, double z)
{
    double zr = rayleigh_range(beam);
    return beam.waist_radius * std::sqrt(1.0 + (z / zr) * (z / zr));
}

double inv_curvature(const BeamSource &beam, double z)
{
    double zr = rayleigh_range(beam);
    return z / (z * z + zr * zr);
}

ComplexAmplitude gaussian_field_at(const BeamSource &beam, double x, double z)
{
    double k = wavenumber(beam);
    if (beam.kind == BeamKind::plane)
        return std::polar(1.0, -k * z);

    double zr = rayleigh_range(beam);
    double w0 = beam.waist_radius;
    double w = beam_width(beam, z);
    double inv_r = inv_curvature(beam, z);
    double gouy = std::atan(z / zr);

    // Peak density at the waist P*sqrt(2/pi)/w0 makes the transverse
    // integral of |E|^2 equal total_power at every z.
    double a0 = std::sqrt(beam.total_power * std::sqrt(2.0 / std::numbers::pi) / w0);
    double amp = a0 * std::sqrt(w0 / w) * std::exp(-(x * x) / (w * w));
    double phase = -(k * z + 0.5 * k * x * x * inv_r - 0.5 * gouy);
    return std::polar(amp, phase);
}

std::pair<double, double> to_beam_frame(const BeamSource &beam, Point2D p)
{
    Vec2 d = dir_from_bearing(beam.axis_bearing);
    Vec2 t{d.y, -d.x};
    Vec2 rel = p - beam.axis_origin;
    return {dot(rel, t), dot(rel, d)};
}

ComplexAmplitude field_at_world(const BeamSource &beam, Point2D p)
{
    auto [x, z] = to_beam_frame(beam, p);
    return gaussian_field_at(beam, x, z);
}

void aim_at(BeamSource &beam, Point2D target)
{
    Vec2 d = target - beam.axis_origin;
    if (norm(d) == 0.0)
        throw std::invalid_argument("aim_at: target coincides with beam origin");
    beam.axis_bearing = bearing_from_dir(d);
}

double gaussian_power_fraction(double width, double x_lo, double x_hi)
{
    if (width <= 0.0)
        throw std::invalid_argument("gaussian_power_fraction: width must be positive");
    double s = std::numbers::sqrt2 / width;
    return 0.5 * (std::erf(s * x_hi) - std::erf(s * x_lo));
}

} // namespace fsolink
