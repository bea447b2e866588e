// SPDX-License-Identifier: Apache-2.0

#include "fsolink/geometric_optics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace fsolink {

namespace {

// Outgoing axis direction for the given design at hit point `hit`.
Vec2 outgoing_dir(const PhaseProfile &profile, const UnitCellGrid &grid, Vec2 din, Point2D hit)
{
    Vec2 n = grid.normal();
    Vec2 t = grid.tangent();

    switch (profile.tag) {
    case DesignTag::focusing:
        if (!profile.focus)
            throw std::invalid_argument("go_reflect: focusing profile without focus metadata");
        return normalized(*profile.focus - hit);
    case DesignTag::linear:
    case DesignTag::quantized: {
        // grating law: the linear phase gradient shifts the tangential
        // direction component by -(sin theta_i,design - sin theta_r,design)
        if (profile.focus)
            return normalized(*profile.focus - hit);
        if (!profile.grating_sin)
            throw std::invalid_argument("go_reflect: linear profile without grating metadata");
        double s_out = dot(din, t) - *profile.grating_sin;
        if (std::abs(s_out) >= 1.0)
            throw std::invalid_argument("go_reflect: design steers the beam past 90 degrees");
        return s_out * t + std::sqrt(1.0 - s_out * s_out) * n;
    }
    case DesignTag::uniform:
    case DesignTag::mirror:
    default:
        return reflect(din, n);
    }
}

std::complex<double> q_parameter(double inv_curv, double width, double lambda)
{
    std::complex<double> inv_q(inv_curv, -lambda / (std::numbers::pi * width * width));
    return 1.0 / inv_q;
}

double width_from_q(std::complex<double> q, double lambda)
{
    double im = (1.0 / q).imag();
    return std::sqrt(-lambda / (std::numbers::pi * im));
}

} // namespace

GoReflection go_reflect(const BeamSource &beam, const UnitCellGrid &grid,
                        const PhaseProfile &profile)
{
    if (beam.kind != BeamKind::gaussian)
        throw std::invalid_argument("go_reflect: requires a gaussian source");

    Vec2 din = dir_from_bearing(beam.axis_bearing);
    Vec2 n = grid.normal();
    Vec2 t = grid.tangent();

    double facing = dot(din, n);
    if (facing >= 0.0)
        throw std::invalid_argument("go_reflect: beam hits the back of the IRS");

    double s_axis = dot(grid.center - beam.axis_origin, n) / facing;
    if (s_axis <= 0.0)
        throw std::invalid_argument("go_reflect: IRS lies behind the beam origin");
    Point2D hit = beam.axis_origin + s_axis * din;
    if (std::abs(dot(hit - grid.center, t)) > 0.5 * grid.length())
        throw std::invalid_argument("go_reflect: beam axis misses the IRS segment");

    // incident envelope at the hit point (axis distance from the waist)
    double w1 = beam_width(beam, s_axis);
    double inv_r1 = inv_curvature(beam, s_axis);

    // clip: Gaussian fraction between the segment end points, measured in
    // beam-transverse coordinates
    double half = 0.5 * grid.length();
    auto [xa, za] = to_beam_frame(beam, grid.center - half * t);
    auto [xb, zb] = to_beam_frame(beam, grid.center + half * t);
    double clip = gaussian_power_fraction(w1, std::min(xa, xb), std::max(xa, xb));

    Vec2 dout = outgoing_dir(profile, grid, din, hit);
    if (dot(dout, n) <= 0.0)
        throw std::invalid_argument("go_reflect: outgoing ray does not leave the surface");

    // anamorphic magnification of an angle-changing bounce
    double m = dot(dout, n) / (-facing);

    GoReflection out;
    out.state.axis_origin = hit;
    out.state.axis_bearing = bearing_from_dir(dout);
    out.state.beam_radius = m * w1;
    out.state.inv_curvature = inv_r1 / (m * m);
    out.state.wavelength = beam.wavelength;
    out.clip_fraction = clip;

    // a focusing design replaces the outgoing curvature by its nominal
    // focal geometry
    if (profile.tag == DesignTag::focusing || (profile.tag == DesignTag::quantized && profile.focus))
        out.state.inv_curvature = -1.0 / norm(*profile.focus - hit);

    return out;
}

double go_width_at(const GoBeamState &state, double dist)
{
    auto q = q_parameter(state.inv_curvature, state.beam_radius, state.wavelength);
    return width_from_q(q + dist, state.wavelength);
}

double go_captured_power(const SceneLayout &scene, const BeamSource &beam,
                         const UnitCellGrid &grid, const PhaseProfile &profile)
{
    GoReflection refl = go_reflect(beam, grid, profile);
    Vec2 dout = dir_from_bearing(refl.state.axis_bearing);

    Vec2 nl = dir_from_bearing(scene.rx_normal_rad);
    Vec2 tl{nl.y, -nl.x};
    double denom = dot(dout, nl);
    if (denom == 0.0)
        throw std::invalid_argument("go_captured_power: reflected beam runs parallel to the lens");
    double s_lens = dot(scene.rx_lens_center - refl.state.axis_origin, nl) / denom;
    if (s_lens <= 0.0)
        throw std::invalid_argument("go_captured_power: reflected beam moves away from the lens");

    double w2 = go_width_at(refl.state, s_lens);

    // lens end points in reflected-beam transverse coordinates
    Vec2 tb{dout.y, -dout.x};
    Point2D e1 = scene.rx_lens_center - (0.5 * scene.rx_lens_length) * tl;
    Point2D e2 = scene.rx_lens_center + (0.5 * scene.rx_lens_length) * tl;
    double x1 = dot(e1 - refl.state.axis_origin, tb);
    double x2 = dot(e2 - refl.state.axis_origin, tb);
    double clip2 = gaussian_power_fraction(w2, std::min(x1, x2), std::max(x1, x2));

    return beam.total_power * refl.clip_fraction * clip2;
}

FieldProfile go_power_density_profile(const BeamSource &beam, const UnitCellGrid &grid,
                                      const PhaseProfile &profile, double line_y, double x_min,
                                      double x_max, int samples)
{
    if (samples < 2)
        throw std::invalid_argument("go_power_density_profile: need at least 2 samples");
    if (!(x_max > x_min))
        throw std::invalid_argument("go_power_density_profile: x_max must exceed x_min");

    FieldProfile prof;
    prof.x.resize(samples);
    prof.power_density.assign(samples, 0.0);
    double step = (x_max - x_min) / (samples - 1);
    for (int j = 0; j < samples; ++j)
        prof.x[j] = x_min + j * step;

    if (beam.kind == BeamKind::gaussian) {
        GoReflection refl = go_reflect(beam, grid, profile);
        Vec2 dout = dir_from_bearing(refl.state.axis_bearing);
        Vec2 tb{dout.y, -dout.x};
        double p_refl = beam.total_power * refl.clip_fraction;
        for (int j = 0; j < samples; ++j) {
            Vec2 rel = Point2D{prof.x[j], line_y} - refl.state.axis_origin;
            double zeta = dot(rel, dout);
            if (zeta <= 0.0)
                continue;
            double xt = dot(rel, tb);
            double w = go_width_at(refl.state, zeta);
            prof.power_density[j] =
                p_refl * std::sqrt(2.0 / std::numbers::pi) / w * std::exp(-2.0 * xt * xt / (w * w));
        }
        return prof;
    }

    // plane source: trace the two edge rays, fill the strip in between with
    // the flux-conserving uniform density
    Vec2 din = dir_from_bearing(beam.axis_bearing);
    Vec2 n = grid.normal();
    Vec2 t = grid.tangent();
    if (dot(din, n) >= 0.0)
        throw std::invalid_argument("go_power_density_profile: beam hits the back of the IRS");

    double cos_in = -dot(din, n);
    double half = 0.5 * grid.length();
    double edge_x[2];
    Vec2 dout_c = outgoing_dir(profile, grid, din, grid.center);
    int i = 0;
    for (double s : {-half, half}) {
        Point2D g = grid.center + s * t;
        Vec2 dout = outgoing_dir(profile, grid, din, g);
        if (dout.y == 0.0)
            throw std::invalid_argument(
                "go_power_density_profile: reflected rays run parallel to the line");
        edge_x[i++] = g.x + dout.x * (line_y - g.y) / dout.y;
    }
    double x_lo = std::min(edge_x[0], edge_x[1]);
    double x_hi = std::max(edge_x[0], edge_x[1]);
    if (x_hi == x_lo)
        throw std::invalid_argument("go_power_density_profile: degenerate strip");

    double total = grid.length() * cos_in; // unit incident density
    double density = total / ((x_hi - x_lo) * std::abs(dout_c.y));
    for (int j = 0; j < samples; ++j)
        if (prof.x[j] >= x_lo && prof.x[j] <= x_hi)
            prof.power_density[j] = density;
    return prof;
}

} // namespace fsolink
