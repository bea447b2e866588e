// SPDX-License-Identifier: Apache-2.0

#include "fsolink/phase_profile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fsolink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSpeedOfLight = 299792458.0; // m/s

} // namespace

double wrap_two_pi(double phase_rad)
{
    double p = std::fmod(phase_rad, kTwoPi);
    if (p < 0.0)
        p += kTwoPi;
    // fmod can land exactly on 2pi after the correction when the input is a
    // tiny negative number
    if (p >= kTwoPi)
        p = 0.0;
    return p;
}

PhaseProfile uniform_profile(const UnitCellGrid &grid)
{
    PhaseProfile p;
    p.tag = DesignTag::uniform;
    p.phases.assign(grid.cell_count, 0.0);
    p.slope.assign(grid.cell_count, 0.0);
    p.grating_sin = 0.0;
    return p;
}

PhaseProfile linear_profile(const UnitCellGrid &grid, double wavelength, AnglePair angles)
{
    if (wavelength <= 0.0)
        throw std::invalid_argument("linear_profile: wavelength must be positive");
    double k = kTwoPi / wavelength;
    double g = std::sin(angles.theta_i) - std::sin(angles.theta_r);

    PhaseProfile p;
    p.tag = DesignTag::linear;
    p.grating_sin = g;
    p.phases.resize(grid.cell_count);
    p.slope.assign(grid.cell_count, k * g);
    for (int i = 0; i < grid.cell_count; ++i)
        p.phases[i] = wrap_two_pi(k * g * grid.cell_coord(i));
    return p;
}

PhaseProfile focusing_profile(const UnitCellGrid &grid, double wavelength,
                              const std::vector<ComplexAmplitude> &incident, Point2D focus,
                              double incident_phase_slope)
{
    if (wavelength <= 0.0)
        throw std::invalid_argument("focusing_profile: wavelength must be positive");
    if (static_cast<int>(incident.size()) != grid.cell_count)
        throw std::invalid_argument("focusing_profile: incident size != cell_count");
    double k = kTwoPi / wavelength;

    PhaseProfile p;
    p.tag = DesignTag::focusing;
    p.focus = focus;
    p.phases.resize(grid.cell_count);
    p.slope.resize(grid.cell_count);

    Vec2 t = grid.tangent();
    int centre = grid.cell_count / 2;
    Point2D rc = grid.cell_position(centre);
    double dc = norm(focus - rc);
    if (dc == 0.0)
        throw std::invalid_argument("focusing_profile: focus lies on the surface");
    double ref = -std::arg(incident[centre]) + k * dc;

    for (int i = 0; i < grid.cell_count; ++i) {
        Point2D r = grid.cell_position(i);
        double dist = norm(focus - r);
        if (dist == 0.0)
            throw std::invalid_argument("focusing_profile: focus lies on the surface");
        p.phases[i] = wrap_two_pi(-std::arg(incident[i]) + k * dist - ref);
        // d/dx of k |focus - r(x)| is -k * (unit(focus - r) . tangent)
        Vec2 to_focus = normalized(focus - r);
        p.slope[i] = -incident_phase_slope - k * dot(to_focus, t);
    }
    return p;
}

MirrorConfig mirror_tilt_for(AnglePair angles)
{
    return {0.5 * (angles.theta_i - angles.theta_r)};
}

PhaseProfile quantize_profile(const PhaseProfile &profile, const QuantizationSpec &spec)
{
    if (spec.levels < 2)
        throw std::invalid_argument("quantize_profile: levels must be >= 2");

    PhaseProfile q = profile;
    q.tag = DesignTag::quantized;
    q.quant_levels = spec.levels;
    double step = kTwoPi / spec.levels;
    for (auto &ph : q.phases) {
        double s = ph / step;
        double lower = std::floor(s);
        double frac = s - lower;
        double level = (frac > 0.5) ? lower + 1.0 : lower; // ties go low
        ph = wrap_two_pi(level * step);
    }
    return q;
}

PhaseProfile conjugate_profile(const PhaseProfile &profile)
{
    PhaseProfile c = profile;
    for (auto &ph : c.phases)
        ph = wrap_two_pi(-ph);
    for (auto &s : c.slope)
        s = -s;
    if (c.grating_sin)
        c.grating_sin = -*c.grating_sin;
    return c;
}

double delay_dispersion(double length, AnglePair angles)
{
    if (length <= 0.0)
        throw std::invalid_argument("delay_dispersion: length must be positive");
    return length / kSpeedOfLight * std::abs(std::sin(angles.theta_i) - std::sin(angles.theta_r));
}

int symbols_affected(double delay_s, double rate_bps)
{
    if (rate_bps <= 0.0)
        throw std::invalid_argument("symbols_affected: rate must be positive");
    return static_cast<int>(std::ceil(delay_s * rate_bps));
}

} // namespace fsolink
