// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include "fsolink/geometry.hpp"

namespace fsolink {

using ComplexAmplitude = std::complex<double>;

enum class BeamKind { gaussian, plane };

// 2D scalar source. Power flows along the axis; transverse coordinates are
// measured along rot(-90deg) of the axis direction. For a Gaussian source
// the waist sits at axis_origin, total_power is the transverse line integral
// of |E|^2 (units W/m for |E|^2). For a plane source the field has unit
// transverse spatial power density (1 W/m) everywhere; the aperture is
// whatever surface samples it.
struct BeamSource {
    BeamKind kind = BeamKind::gaussian;
    double wavelength = 1.55e-6; // m
    double waist_radius = 1e-3;  // m, Gaussian only
    double total_power = 1.0;    // W (per unit out-of-plane length)
    Point2D axis_origin{0.0, 0.0};
    double axis_bearing = 0.0; // propagation direction, bearing convention
};

double wavenumber(const BeamSource &beam);

// Rayleigh range pi*w0^2/lambda.
double rayleigh_range(const BeamSource &beam);

// 1/e^2 field radius at axial distance z (signed, waist at z = 0).
double beam_width(const BeamSource &beam, double z);

// Inverse wavefront curvature 1/R(z); zero at the waist.
double inv_curvature(const BeamSource &beam, double z);

// Complex field in beam-local coordinates (x transverse, z along the axis).
// Gaussian: sqrt(P*sqrt(2/pi)/w0) * sqrt(w0/w) * exp(-x^2/w^2)
//           * exp(-i(kz + k x^2/(2R) - zeta/2)), zeta = atan(z/z_R).
// Plane:    exp(-i k z), unit amplitude.
// The transverse line integral of |E|^2 equals total_power at every z for
// the Gaussian case.
ComplexAmplitude gaussian_field_at(const BeamSource &beam, double x, double z);

// Same field evaluated at a world-space point.
ComplexAmplitude field_at_world(const BeamSource &beam, Point2D p);

// Beam-local (x, z) of a world point.
std::pair<double, double> to_beam_frame(const BeamSource &beam, Point2D p);

// Aim the beam axis from its origin at a world-space point.
void aim_at(BeamSource &beam, Point2D target);

// Fraction of a Gaussian beam's power lying between transverse coordinates
// x_lo and x_hi at 1/e^2 radius `width`:
// (erf(sqrt(2) x_hi / w) - erf(sqrt(2) x_lo / w)) / 2.
double gaussian_power_fraction(double width, double x_lo, double x_hi);

} // namespace fsolink
