// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "fsolink/beam.hpp"
#include "fsolink/geometry.hpp"
#include "fsolink/grid.hpp"
#include "fsolink/phase_profile.hpp"

namespace fsolink {

// Scalar 2D scattering model. Each cell re-radiates the sampled incident
// field as a cylindrical wavelet:
//
//   E(r) = C sum_n E_inc[n] e^{i Phi_n} g_in,n g_out,n(r)
//              e^{-i k |r - r_n|} / sqrt(|r - r_n|)
//
// with g_in = sqrt(cos of the local incidence angle), g_out = sqrt(cos of
// the angle toward the observation point) and C = spacing / sqrt(lambda).
// The symmetric pair of sqrt(cos) factors keeps the kernel reciprocal and
// makes a full-aperture array conserve power for any steering angle; C is
// the continuous half-plane propagator constant times the cell width, so a
// uniformly illuminated specular grid re-radiates the power it intercepts.
//
// Cells spaced wider than half a wavelength stop behaving like point
// scatterers (grating lobes carry unphysical power). For such grids each
// cell is treated as a flat sub-aperture of width element_width with a
// locally linear total phase, adding a sinc((k s_obs + a_n) w / 2) element
// factor; a_n needs the analytic design slope carried by PhaseProfile.

struct ScatterOptions {
    // Unit propagation direction of the illumination at the grid. Unset
    // means it is taken from the beam when one is supplied, or normal
    // incidence otherwise.
    std::optional<Vec2> incident_dir;
    // Sub-aperture width per cell. Negative = automatic (point cells at
    // spacing <= 0.6 lambda, otherwise the cell spacing). Zero = point.
    double element_width = -1.0;
};

struct FieldProfile {
    std::vector<double> x;             // m, sample abscissae on the line
    std::vector<double> power_density; // |E|^2, W/m
};

class PreparedScatter {
  public:
    PreparedScatter(const UnitCellGrid &grid, double wavelength,
                    const std::vector<ComplexAmplitude> &incident, const PhaseProfile &profile,
                    const ScatterOptions &opts = {});

    // Exact near/far field sum. Throws std::invalid_argument when the
    // observation point lies on (or numerically too close to) the segment.
    ComplexAmplitude field_at(Point2D obs) const;

    // R -> infinity limit of field_at(R u(theta)) * sqrt(R) * e^{+ikR},
    // theta measured from the grid normal, positive toward the tangent.
    ComplexAmplitude pattern_at(double theta) const;

    double wavelength() const { return lambda_; }
    const UnitCellGrid &grid() const { return grid_; }

  private:
    UnitCellGrid grid_;
    double lambda_;
    double k_;
    double calib_;
    double element_width_;
    Vec2 n_, t_;
    std::vector<double> x_;   // cell coordinate along the tangent
    std::vector<double> exr_; // excitation = incident * e^{i Phi} * g_in
    std::vector<double> exi_;
    std::vector<double> a_; // facet phase slope term, rad/m
};

// Incident complex field sampled at every cell position.
std::vector<ComplexAmplitude> incident_field_on_irs(const BeamSource &beam,
                                                    const UnitCellGrid &grid);

// Power the beam delivers through the grid segment (flux, W per unit
// out-of-plane length). Closed form for both source kinds.
double incident_power_on_grid(const BeamSource &beam, const UnitCellGrid &grid);

PreparedScatter prepare_scatter(const BeamSource &beam, const UnitCellGrid &grid,
                                const PhaseProfile &profile, const ScatterOptions &opts = {});

ComplexAmplitude scatter_field(const BeamSource &beam, const UnitCellGrid &grid,
                               const PhaseProfile &profile, Point2D observation,
                               const ScatterOptions &opts = {});

ComplexAmplitude far_field_pattern(const BeamSource &beam, const UnitCellGrid &grid,
                                   const PhaseProfile &profile, double theta,
                                   const ScatterOptions &opts = {});

// |E|^2 sampled on the horizontal line y = line_y, x in [x_min, x_max].
FieldProfile power_density_profile(const BeamSource &beam, const UnitCellGrid &grid,
                                   const PhaseProfile &profile, double line_y, double x_min,
                                   double x_max, int samples, const ScatterOptions &opts = {});

// Number of midpoint samples needed across the receive lens: at least
// per_period samples per local interference period, floor of min_samples.
int lens_quadrature_samples(const SceneLayout &scene, const UnitCellGrid &grid, double wavelength,
                            double per_period = 8.0, int min_samples = 33);

// Power collected by the receive lens segment: midpoint quadrature of
// |E|^2 times the arrival-angle cosine. max_samples bounds the adaptive
// sample count (throws std::invalid_argument beyond it).
double lens_captured_power(const SceneLayout &scene, const BeamSource &beam,
                           const UnitCellGrid &grid, const PhaseProfile &profile,
                           const ScatterOptions &opts = {}, int max_samples = 2000000);

// Total scattered power through a semicircular arc of the given radius
// centred on the grid (midpoint rule in angle, measured from the grid
// normal). radius <= 0 selects 100 L^2 / lambda. samples <= 0 adapts to
// the finest array-factor lobe.
double scattered_power_arc(const BeamSource &beam, const UnitCellGrid &grid,
                           const PhaseProfile &profile, double radius = 0.0, int samples = 0,
                           const ScatterOptions &opts = {});

} // namespace fsolink
