// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "fsolink/geometry.hpp"
#include "fsolink/grid.hpp"

namespace fsolink {

using ComplexAmplitude = std::complex<double>;

enum class DesignTag { uniform, linear, focusing, quantized, mirror };

// Per-cell phase shifts applied by the surface, plus metadata the geometric
// engine and the coarse-cell scatter model need: the analytic (unwrapped)
// phase slope along the surface, and the design target.
struct PhaseProfile {
    std::vector<double> phases; // rad, in [0, 2pi)
    DesignTag tag = DesignTag::uniform;
    int quant_levels = 0; // set when tag == quantized

    std::vector<double> slope;        // dPhi/dx in rad/m, analytic, unwrapped
    std::optional<double> grating_sin; // sin(theta_i) - sin(theta_r) of a linear law
    std::optional<Point2D> focus;
};

struct MirrorConfig {
    double tilt_rad = 0.0; // rotation of the IRS segment about its centre
};

struct QuantizationSpec {
    int levels = 2; // uniform levels on [0, 2pi)
};

double wrap_two_pi(double phase_rad);

// Uniform all-zero profile (bare specular surface).
PhaseProfile uniform_profile(const UnitCellGrid &grid);

// Phi_n = mod(k (sin theta_i - sin theta_r) x_n, 2pi): reflects a plane wave
// arriving at theta_i into direction theta_r. Angles follow the scene
// convention (incidence positive on the opposite side of the normal from
// positive reflection angles).
PhaseProfile linear_profile(const UnitCellGrid &grid, double wavelength, AnglePair angles);

// Phase conjugation: Phi_n = mod(-arg(E_inc,n) + k |focus - r_n| + c, 2pi)
// with c chosen so the centre cell gets phase 0. Every cell contribution
// then arrives at the focus with identical phase. incident_phase_slope is
// d(arg E_inc)/dx along the surface (rad/m), used for the stored analytic
// slope; a plane wave arriving at theta_i has -k sin(theta_i).
PhaseProfile focusing_profile(const UnitCellGrid &grid, double wavelength,
                              const std::vector<ComplexAmplitude> &incident, Point2D focus,
                              double incident_phase_slope);

// Tilt that makes a passive mirror specular for the given angle pair.
MirrorConfig mirror_tilt_for(AnglePair angles);

// Snap each phase to the nearest of `levels` uniform values on [0, 2pi),
// ties toward the lower level. Idempotent; per-cell error <= pi/levels.
PhaseProfile quantize_profile(const PhaseProfile &profile, const QuantizationSpec &spec);

// Phases negated mod 2pi (swaps source and target of a design).
PhaseProfile conjugate_profile(const PhaseProfile &profile);

// Worst-case path-delay spread of a length-L surface between incidence and
// reflection angles: (L/c) |sin theta_i - sin theta_r|.
double delay_dispersion(double length, AnglePair angles);

// Full symbol periods at `rate_bps` covered by the delay spread (ceiling).
int symbols_affected(double delay_s, double rate_bps);

} // namespace fsolink
