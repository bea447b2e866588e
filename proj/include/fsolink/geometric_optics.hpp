// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fsolink/beam.hpp"
#include "fsolink/geometry.hpp"
#include "fsolink/grid.hpp"
#include "fsolink/phase_profile.hpp"
#include "fsolink/wave_optics.hpp"

namespace fsolink {

// Ray-optics counterpart of the scatter engine. The surface redirects the
// beam axis (specular bounce, grating law of a linear design, or straight
// at a focusing design's focus), the Gaussian envelope keeps diverging with
// its own width law, and the finite apertures only multiply power by the
// enclosed Gaussian fraction. Edge diffraction does not exist here, so a
// small surface clips power linearly instead of re-radiating a widened
// beam.
struct GoBeamState {
    Point2D axis_origin{0.0, 0.0}; // reflection point on the surface
    double axis_bearing = 0.0;     // outgoing propagation direction
    double beam_radius = 0.0;      // 1/e^2 envelope radius at axis_origin
    double inv_curvature = 0.0;    // wavefront 1/R at axis_origin (1/m)
    double wavelength = 0.0;
};

struct GoReflection {
    GoBeamState state;
    double clip_fraction = 0.0; // Gaussian power fraction inside the segment
};

// Reflect the beam axis off the grid. Requires a Gaussian source whose axis
// actually crosses the segment from the front; throws std::invalid_argument
// otherwise (also when a linear design steers past 90 degrees).
GoReflection go_reflect(const BeamSource &beam, const UnitCellGrid &grid,
                        const PhaseProfile &profile);

// Envelope radius after propagating `dist` metres along the outgoing axis.
double go_width_at(const GoBeamState &state, double dist);

// Transmit-power fraction collected by the receive lens (beam power times
// IRS clip times lens clip), in watts.
double go_captured_power(const SceneLayout &scene, const BeamSource &beam,
                         const UnitCellGrid &grid, const PhaseProfile &profile);

// |E|^2 sampled on the horizontal line y = line_y. Gaussian sources map the
// reflected envelope onto the line; plane sources produce the classic
// uniform strip bounded by the edge rays with density set by flux
// conservation.
FieldProfile go_power_density_profile(const BeamSource &beam, const UnitCellGrid &grid,
                                      const PhaseProfile &profile, double line_y, double x_min,
                                      double x_max, int samples);

} // namespace fsolink
