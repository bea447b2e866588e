// SPDX-License-Identifier: Apache-2.0

#include "fsolink/wave_optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fsolink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double sinc(double x)
{
    if (std::abs(x) < 1e-4)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// Illumination direction at the grid centre.
Vec2 illumination_dir(const BeamSource &beam, const UnitCellGrid &grid)
{
    if (beam.kind == BeamKind::gaussian) {
        Vec2 d = grid.center - beam.axis_origin;
        if (norm(d) > 0.0)
            return normalized(d);
    }
    return dir_from_bearing(beam.axis_bearing);
}

} // namespace

PreparedScatter::PreparedScatter(const UnitCellGrid &grid, double wavelength,
                                 const std::vector<ComplexAmplitude> &incident,
                                 const PhaseProfile &profile, const ScatterOptions &opts)
    : grid_(grid), lambda_(wavelength)
{
    if (wavelength <= 0.0)
        throw std::invalid_argument("PreparedScatter: wavelength must be positive");
    if (grid.cell_count < 1 || grid.cell_spacing <= 0.0)
        throw std::invalid_argument("PreparedScatter: empty grid");
    const int n = grid.cell_count;
    if (static_cast<int>(incident.size()) != n)
        throw std::invalid_argument("PreparedScatter: incident size != cell_count");
    if (static_cast<int>(profile.phases.size()) != n)
        throw std::invalid_argument("PreparedScatter: profile size != cell_count");

    k_ = kTwoPi / wavelength;
    calib_ = grid.cell_spacing / std::sqrt(wavelength);
    element_width_ = opts.element_width;
    if (element_width_ < 0.0)
        element_width_ = (grid.cell_spacing > 0.6 * wavelength) ? grid.cell_spacing : 0.0;

    n_ = grid.normal();
    t_ = grid.tangent();

    Vec2 din = opts.incident_dir ? *opts.incident_dir : -1.0 * n_;
    double g_in2 = std::max(0.0, -dot(din, n_));
    double g_in = std::sqrt(g_in2);
    double s_in = dot(din, t_);

    x_.resize(n);
    exr_.resize(n);
    exi_.resize(n);
    a_.resize(n);
    for (int i = 0; i < n; ++i) {
        x_[i] = grid.cell_coord(i);
        ComplexAmplitude e = incident[i] * std::polar(g_in, profile.phases[i]);
        exr_[i] = e.real();
        exi_[i] = e.imag();
        double slope = profile.slope.empty() ? 0.0 : profile.slope[i];
        a_[i] = slope - k_ * s_in;
    }
}

ComplexAmplitude PreparedScatter::field_at(Point2D obs) const
{
    Vec2 rel = obs - grid_.center;
    double u = dot(rel, t_);
    double v = dot(rel, n_);
    double half = 0.5 * grid_.length();

    // reject observation points on or next to the segment itself
    double du = std::max(0.0, std::abs(u) - half);
    double seg_dist = std::hypot(du, v);
    if (seg_dist < 0.5 * grid_.cell_spacing)
        throw std::invalid_argument("scatter_field: observation point lies on the IRS segment");

    if (v <= 0.0)
        return {0.0, 0.0}; // one-sided radiator: nothing behind the surface

    double rc = std::hypot(u, v);
    double acc_re = 0.0, acc_im = 0.0;
    const int n = grid_.cell_count;
    const double k = k_;
    const double ew = element_width_;
    const double *px = x_.data();
    const double *per = exr_.data();
    const double *pei = exi_.data();
    const double *pa = a_.data();

    if (ew > 0.0) {
#pragma omp simd reduction(+ : acc_re, acc_im)
        for (int i = 0; i < n; ++i) {
            double w = u - px[i];
            double r2 = w * w + v * v;
            double r = std::sqrt(r2);
            double ph = k * (px[i] * (px[i] - 2.0 * u)) / (r + rc);
            double el = sinc(0.5 * ew * (pa[i] + k * w / r));
            double amp = el / r;
            double c = std::cos(ph), s = std::sin(ph);
            acc_re += amp * (per[i] * c + pei[i] * s);
            acc_im += amp * (pei[i] * c - per[i] * s);
        }
    } else {
#pragma omp simd reduction(+ : acc_re, acc_im)
        for (int i = 0; i < n; ++i) {
            double w = u - px[i];
            double r2 = w * w + v * v;
            double r = std::sqrt(r2);
            double ph = k * (px[i] * (px[i] - 2.0 * u)) / (r + rc);
            double amp = 1.0 / r;
            double c = std::cos(ph), s = std::sin(ph);
            acc_re += amp * (per[i] * c + pei[i] * s);
            acc_im += amp * (pei[i] * c - per[i] * s);
        }
    }

    ComplexAmplitude sum{acc_re, acc_im};
    return calib_ * std::sqrt(v) * sum * std::polar(1.0, -k_ * rc);
}

ComplexAmplitude PreparedScatter::pattern_at(double theta) const
{
    double ct = std::cos(theta);
    if (ct <= 0.0)
        return {0.0, 0.0};
    double st = std::sin(theta);

    double acc_re = 0.0, acc_im = 0.0;
    const int n = grid_.cell_count;
    const double k = k_;
    const double ew = element_width_;
    const double *px = x_.data();
    const double *per = exr_.data();
    const double *pei = exi_.data();
    const double *pa = a_.data();

#pragma omp simd reduction(+ : acc_re, acc_im)
    for (int i = 0; i < n; ++i) {
        double ph = k * px[i] * st;
        double el = (ew > 0.0) ? sinc(0.5 * ew * (pa[i] + k * st)) : 1.0;
        double c = std::cos(ph), s = std::sin(ph);
        acc_re += el * (per[i] * c - pei[i] * s);
        acc_im += el * (pei[i] * c + per[i] * s);
    }

    return calib_ * std::sqrt(ct) * ComplexAmplitude{acc_re, acc_im};
}

std::vector<ComplexAmplitude> incident_field_on_irs(const BeamSource &beam,
                                                    const UnitCellGrid &grid)
{
    std::vector<ComplexAmplitude> out(grid.cell_count);
    for (int i = 0; i < grid.cell_count; ++i)
        out[i] = field_at_world(beam, grid.cell_position(i));
    return out;
}

double incident_power_on_grid(const BeamSource &beam, const UnitCellGrid &grid)
{
    Vec2 din = illumination_dir(beam, grid);
    double cos_in = std::max(0.0, -dot(din, grid.normal()));
    if (beam.kind == BeamKind::plane)
        return grid.length() * cos_in; // unit density, projected aperture

    Vec2 t = grid.tangent();
    double half = 0.5 * grid.length();
    auto [x1, z1] = to_beam_frame(beam, grid.center - half * t);
    auto [x2, z2] = to_beam_frame(beam, grid.center + half * t);
    double w = beam_width(beam, 0.5 * (z1 + z2));
    return beam.total_power * gaussian_power_fraction(w, std::min(x1, x2), std::max(x1, x2));
}

PreparedScatter prepare_scatter(const BeamSource &beam, const UnitCellGrid &grid,
                                const PhaseProfile &profile, const ScatterOptions &opts)
{
    ScatterOptions o = opts;
    if (!o.incident_dir)
        o.incident_dir = illumination_dir(beam, grid);
    return {grid, beam.wavelength, incident_field_on_irs(beam, grid), profile, o};
}

ComplexAmplitude scatter_field(const BeamSource &beam, const UnitCellGrid &grid,
                               const PhaseProfile &profile, Point2D observation,
                               const ScatterOptions &opts)
{
    return prepare_scatter(beam, grid, profile, opts).field_at(observation);
}

ComplexAmplitude far_field_pattern(const BeamSource &beam, const UnitCellGrid &grid,
                                   const PhaseProfile &profile, double theta,
                                   const ScatterOptions &opts)
{
    return prepare_scatter(beam, grid, profile, opts).pattern_at(theta);
}

FieldProfile power_density_profile(const BeamSource &beam, const UnitCellGrid &grid,
                                   const PhaseProfile &profile, double line_y, double x_min,
                                   double x_max, int samples, const ScatterOptions &opts)
{
    if (samples < 2)
        throw std::invalid_argument("power_density_profile: need at least 2 samples");
    if (!(x_max > x_min))
        throw std::invalid_argument("power_density_profile: x_max must exceed x_min");

    PreparedScatter ps = prepare_scatter(beam, grid, profile, opts);
    FieldProfile prof;
    prof.x.resize(samples);
    prof.power_density.resize(samples);
    double step = (x_max - x_min) / (samples - 1);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < samples; ++j) {
        double x = x_min + j * step;
        ComplexAmplitude e = ps.field_at({x, line_y});
        prof.x[j] = x;
        prof.power_density[j] = std::norm(e);
    }
    return prof;
}

int lens_quadrature_samples(const SceneLayout &scene, const UnitCellGrid &grid, double wavelength,
                            double per_period, int min_samples)
{
    Vec2 nl = dir_from_bearing(scene.rx_normal_rad);
    Vec2 tl{nl.y, -nl.x};
    Vec2 tg = grid.tangent();
    double half_l = 0.5 * scene.rx_lens_length;
    double half_g = 0.5 * grid.length();

    double s_min = 1.0, s_max = -1.0;
    for (double sl : {-half_l, half_l}) {
        Point2D p = scene.rx_lens_center + sl * tl;
        for (double sg : {-half_g, half_g}) {
            Point2D g = grid.center + sg * tg;
            Vec2 d = p - g;
            if (norm(d) == 0.0)
                throw std::invalid_argument("lens_quadrature_samples: lens touches the IRS");
            double s = dot(normalized(d), tl);
            s_min = std::min(s_min, s);
            s_max = std::max(s_max, s);
        }
    }
    double cycles = (s_max - s_min) / wavelength * scene.rx_lens_length;
    int n = static_cast<int>(std::ceil(per_period * cycles));
    return std::max(n, min_samples);
}

double lens_captured_power(const SceneLayout &scene, const BeamSource &beam,
                           const UnitCellGrid &grid, const PhaseProfile &profile,
                           const ScatterOptions &opts, int max_samples)
{
    Vec2 nl = dir_from_bearing(scene.rx_normal_rad);
    Vec2 to_grid = grid.center - scene.rx_lens_center;
    if (norm(to_grid) == 0.0)
        throw std::invalid_argument("lens_captured_power: lens centre coincides with the IRS");
    if (dot(normalized(to_grid), nl) <= 0.0)
        throw std::invalid_argument("lens_captured_power: rx lens faces away from the IRS");

    int n = lens_quadrature_samples(scene, grid, beam.wavelength);
    if (n > max_samples)
        throw std::invalid_argument("lens_captured_power: quadrature would need " +
                                    std::to_string(n) + " samples (limit " +
                                    std::to_string(max_samples) + ")");

    PreparedScatter ps = prepare_scatter(beam, grid, profile, opts);
    Vec2 tl{nl.y, -nl.x};
    double h = scene.rx_lens_length / n;
    Point2D start = scene.rx_lens_center - (0.5 * scene.rx_lens_length) * tl;

    std::vector<double> flux(n);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        Point2D p = start + ((j + 0.5) * h) * tl;
        ComplexAmplitude e = ps.field_at(p);
        Vec2 arr = normalized(p - grid.center);
        double c = std::max(0.0, -dot(arr, nl));
        flux[j] = std::norm(e) * c;
    }
    double acc = 0.0;
    for (double f : flux)
        acc += f;
    return acc * h;
}

double scattered_power_arc(const BeamSource &beam, const UnitCellGrid &grid,
                           const PhaseProfile &profile, double radius, int samples,
                           const ScatterOptions &opts)
{
    double lambda = beam.wavelength;
    double len = grid.length();
    if (radius <= 0.0)
        radius = 100.0 * len * len / lambda;
    if (samples <= 0)
        samples = std::max(4096, static_cast<int>(std::ceil(32.0 * len / lambda)));

    PreparedScatter ps = prepare_scatter(beam, grid, profile, opts);
    Vec2 n = grid.normal();
    Vec2 t = grid.tangent();
    double dth = std::numbers::pi / samples;

    std::vector<double> dens(samples);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < samples; ++j) {
        double th = -0.5 * std::numbers::pi + (j + 0.5) * dth;
        Point2D p = grid.center + (radius * std::sin(th)) * t + (radius * std::cos(th)) * n;
        dens[j] = std::norm(ps.field_at(p));
    }
    double acc = 0.0;
    for (double d : dens)
        acc += d;
    return acc * radius * dth;
}

} // namespace fsolink
