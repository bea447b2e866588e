// SPDX-License-Identifier: Apache-2.0

#include "fsolink/link_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fsolink/geometric_optics.hpp"
#include "fsolink/wave_optics.hpp"

namespace fsolink {

namespace {

constexpr int kPointingTablePoints = 65;
constexpr double kPointingTableSpan = 5.0; // +- in units of sigma

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double lookup_h_g(const IrsChannelStatics &ch, double offset)
{
    const auto &grid = ch.offset_grid;
    if (offset <= grid.front())
        return ch.h_g_table.front();
    if (offset >= grid.back())
        return ch.h_g_table.back();
    double step = grid[1] - grid[0];
    double s = (offset - grid.front()) / step;
    auto i = static_cast<std::size_t>(s);
    double frac = s - static_cast<double>(i);
    return ch.h_g_table[i] + frac * (ch.h_g_table[i + 1] - ch.h_g_table[i]);
}

// Fixed-order Monte-Carlo driver: trials split over `workers` substreams,
// each substream split into ten rounds; outage counts reduce as integers so
// the estimate depends only on (seed, workers, stream_offset). Early exit
// is checked at round boundaries.
template <typename TrialFn>
OutageEstimate run_outage_mc(TrialFn &&trial, long long trials, std::uint64_t seed, int workers,
                             std::uint64_t stream_offset)
{
    if (trials < 1000)
        throw std::invalid_argument("outage Monte-Carlo requires at least 1000 trials");
    if (workers < 1)
        throw std::invalid_argument("outage Monte-Carlo requires at least one worker");

    constexpr int rounds = 10;
    std::vector<RandomStream> streams;
    streams.reserve(workers);
    for (int w = 0; w < workers; ++w)
        streams.emplace_back(seed, stream_offset + static_cast<std::uint64_t>(w));

    std::vector<long long> chunk(workers);
    for (int w = 0; w < workers; ++w)
        chunk[w] = trials / workers + (w < trials % workers ? 1 : 0);

    long long count = 0;
    long long done = 0;
    double p = 0.0;
    double ci = 0.0;
    for (int r = 0; r < rounds; ++r) {
        std::vector<long long> round_count(workers, 0);
        std::vector<long long> round_done(workers, 0);
#pragma omp parallel for schedule(static, 1)
        for (int w = 0; w < workers; ++w) {
            long long slice = chunk[w] / rounds + (r < chunk[w] % rounds ? 1 : 0);
            long long c = 0;
            for (long long t = 0; t < slice; ++t)
                c += trial(streams[w]) ? 1 : 0;
            round_count[w] = c;
            round_done[w] = slice;
        }
        for (int w = 0; w < workers; ++w) {
            count += round_count[w];
            done += round_done[w];
        }
        p = static_cast<double>(count) / static_cast<double>(done);
        ci = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(done));
        if (count > 0 && ci < 0.05 * p)
            break;
    }
    return {p, done, ci};
}

} // namespace

double instantaneous_snr(double gamma_bar, double h)
{
    if (h < 0.0)
        throw std::invalid_argument("instantaneous_snr: h must be >= 0");
    return gamma_bar * h * h;
}

double snr_db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

double snr_linear_to_db(double snr_linear) { return 10.0 * std::log10(snr_linear); }

IrsChannelStatics prepare_irs_channel(const SceneLayout &scene, const BeamSource &beam,
                                      const UnitCellGrid &grid, const PhaseProfile &profile,
                                      const FadingModel &fading)
{
    auto [d1, d2] = path_lengths(scene);

    IrsChannelStatics ch;
    ch.responsivity = fading.responsivity;
    ch.turbulence = fading.turbulence;
    ch.h_l = attenuation_gain(fading.kappa, d1 + d2);
    ch.sigma_r2_total = rytov_variance(fading.cn2, beam.wavelength, d1 + d2);
    ch.sigma_r2_hop1 = rytov_variance(fading.cn2, beam.wavelength, d1);
    ch.sigma_r2_hop2 = rytov_variance(fading.cn2, beam.wavelength, d2);
    ch.pointing_sigma = fading.pointing_sigma;
    ch.h_g = clamp01(lens_captured_power(scene, beam, grid, profile) / beam.total_power);

    if (fading.pointing_sigma > 0.0) {
        ch.offset_grid.resize(kPointingTablePoints);
        ch.h_g_table.resize(kPointingTablePoints);
        Vec2 t = grid.tangent();
        double span = kPointingTableSpan * fading.pointing_sigma;
        for (int i = 0; i < kPointingTablePoints; ++i) {
            double o = -span + 2.0 * span * i / (kPointingTablePoints - 1);
            BeamSource shifted = beam;
            shifted.axis_origin = beam.axis_origin + o * t;
            ch.offset_grid[i] = o;
            ch.h_g_table[i] =
                clamp01(lens_captured_power(scene, shifted, grid, profile) / beam.total_power);
        }
    }
    return ch;
}

RelayChannelStatics prepare_relay_channel(const SceneLayout &scene, const RelayLinkSpec &relay,
                                          const FadingModel &fading)
{
    if (!(relay.power_split > 0.0 && relay.power_split < 1.0))
        throw std::invalid_argument("relay power_split must be in (0, 1)");
    if (relay.relay_lens_length <= 0.0)
        throw std::invalid_argument("relay lens length must be positive");
    if (relay.relay_beam.kind != BeamKind::gaussian)
        throw std::invalid_argument("relay links require a gaussian beam");

    double d1 = norm(relay.relay_position - scene.tx_position);
    double d2 = norm(scene.rx_lens_center - relay.relay_position);
    if (d1 == 0.0 || d2 == 0.0)
        throw std::invalid_argument("relay coincides with an end point");

    RelayChannelStatics ch;
    ch.split1 = relay.power_split;
    ch.split2 = 1.0 - relay.power_split;
    ch.responsivity = fading.responsivity;
    ch.h_l1 = attenuation_gain(fading.kappa, d1);
    ch.h_l2 = attenuation_gain(fading.kappa, d2);
    ch.sigma_r2_hop1 = rytov_variance(fading.cn2, relay.relay_beam.wavelength, d1);
    ch.sigma_r2_hop2 = rytov_variance(fading.cn2, relay.relay_beam.wavelength, d2);

    // lens capture of the Gaussian envelope, lenses broadside to the axis
    double w1 = beam_width(relay.relay_beam, d1);
    double w2 = beam_width(relay.relay_beam, d2);
    ch.h_g1 = gaussian_power_fraction(w1, -0.5 * relay.relay_lens_length,
                                      0.5 * relay.relay_lens_length);
    ch.h_g2 =
        gaussian_power_fraction(w2, -0.5 * scene.rx_lens_length, 0.5 * scene.rx_lens_length);
    return ch;
}

OutageEstimate irs_outage_mc(const IrsChannelStatics &ch, double gamma_bar, double gamma_thr,
                             long long trials, std::uint64_t seed, int workers,
                             std::uint64_t stream_offset)
{
    auto trial = [&](RandomStream &rng) -> bool {
        double h_a = (ch.turbulence == TurbulenceMode::per_hop)
                         ? sample_turbulence(ch.sigma_r2_hop1, rng) *
                               sample_turbulence(ch.sigma_r2_hop2, rng)
                         : sample_turbulence(ch.sigma_r2_total, rng);
        double h_g = ch.h_g;
        if (ch.pointing_sigma > 0.0)
            h_g = lookup_h_g(ch, sample_pointing_offset(ch.pointing_sigma, rng));
        double h = ch.responsivity * ch.h_l * h_a * h_g;
        return gamma_bar * h * h < gamma_thr;
    };
    return run_outage_mc(trial, trials, seed, workers, stream_offset);
}

OutageEstimate irs_outage_mc(const SceneLayout &scene, const BeamSource &beam,
                             const UnitCellGrid &grid, const PhaseProfile &profile,
                             const FadingModel &fading, double gamma_bar, double gamma_thr,
                             long long trials, std::uint64_t seed, int workers)
{
    IrsChannelStatics ch = prepare_irs_channel(scene, beam, grid, profile, fading);
    return irs_outage_mc(ch, gamma_bar, gamma_thr, trials, seed, workers);
}

OutageEstimate relay_outage_mc(const RelayChannelStatics &ch, double gamma_bar, double gamma_thr,
                               long long trials, std::uint64_t seed, int workers,
                               std::uint64_t stream_offset)
{
    auto trial = [&](RandomStream &rng) -> bool {
        double h1 = ch.responsivity * ch.h_l1 * sample_turbulence(ch.sigma_r2_hop1, rng) * ch.h_g1;
        double h2 = ch.responsivity * ch.h_l2 * sample_turbulence(ch.sigma_r2_hop2, rng) * ch.h_g2;
        double g1 = ch.split1 * gamma_bar * h1 * h1;
        double g2 = ch.split2 * gamma_bar * h2 * h2;
        return std::min(g1, g2) < gamma_thr;
    };
    return run_outage_mc(trial, trials, seed, workers, stream_offset);
}

OutageEstimate relay_outage_mc(const SceneLayout &scene, const RelayLinkSpec &relay,
                               const FadingModel &fading, double gamma_bar, double gamma_thr,
                               long long trials, std::uint64_t seed, int workers)
{
    RelayChannelStatics ch = prepare_relay_channel(scene, relay, fading);
    return relay_outage_mc(ch, gamma_bar, gamma_thr, trials, seed, workers);
}

std::vector<SweepPoint> power_scaling_sweep(const SceneLayout &scene, const BeamSource &beam,
                                            DesignFamily design,
                                            const std::vector<double> &lengths, Engine engine,
                                            double spacing)
{
    if (lengths.empty())
        throw std::invalid_argument("power_scaling_sweep: empty length list");
    if (!std::is_sorted(lengths.begin(), lengths.end()))
        throw std::invalid_argument("power_scaling_sweep: lengths must be ascending");
    if (lengths.front() <= 0.0)
        throw std::invalid_argument("power_scaling_sweep: lengths must be positive");

    double theta_i = incidence_angle(scene);
    double theta_r = reflection_angle_to_target(scene, scene.rx_lens_center);
    AnglePair angles{theta_i, theta_r};
    double d = spacing > 0.0 ? spacing : 0.5 * beam.wavelength;
    double k = wavenumber(beam);

    std::vector<SweepPoint> out;
    out.reserve(lengths.size());
    for (double length : lengths) {
        UnitCellGrid grid =
            make_grid_for_length(scene.irs_center, scene.irs_normal_rad, length, d);
        UnitCellGrid used = grid;
        PhaseProfile profile;
        switch (design) {
        case DesignFamily::mirror:
            used = with_tilt(grid, mirror_tilt_for(angles).tilt_rad);
            profile = uniform_profile(used);
            break;
        case DesignFamily::linear:
            profile = linear_profile(grid, beam.wavelength, angles);
            break;
        case DesignFamily::focusing: {
            Vec2 d_inc = beam.kind == BeamKind::gaussian
                             ? normalized(grid.center - beam.axis_origin)
                             : dir_from_bearing(beam.axis_bearing);
            double slope_in = -k * dot(d_inc, grid.tangent());
            profile = focusing_profile(grid, beam.wavelength, incident_field_on_irs(beam, grid),
                                       scene.rx_lens_center, slope_in);
            break;
        }
        }
        double watts = engine == Engine::wave
                           ? lens_captured_power(scene, beam, used, profile)
                           : go_captured_power(scene, beam, used, profile);
        out.push_back({length, used.cell_count, watts / beam.total_power});
    }
    return out;
}

namespace {

// snr_db at which the curve crosses p_target, log-linear interpolation.
double crossing_snr_db(double p_target, const std::vector<OutageCurvePoint> &curve)
{
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        double pa = curve[i].p_out;
        double pb = curve[i + 1].p_out;
        if (pa == p_target)
            return curve[i].snr_db;
        if (pa <= 0.0 || pb <= 0.0)
            continue;
        if ((pa - p_target) * (pb - p_target) < 0.0) {
            double la = std::log10(pa);
            double lb = std::log10(pb);
            double f = (std::log10(p_target) - la) / (lb - la);
            return curve[i].snr_db + f * (curve[i + 1].snr_db - curve[i].snr_db);
        }
    }
    if (!curve.empty() && curve.back().p_out == p_target)
        return curve.back().snr_db;
    throw std::invalid_argument("snr_gain_at: curve does not cross the target outage level");
}

} // namespace

double snr_gain_at(double p_target, const std::vector<OutageCurvePoint> &curve_a,
                   const std::vector<OutageCurvePoint> &curve_b)
{
    if (!(p_target > 0.0 && p_target < 1.0))
        throw std::invalid_argument("snr_gain_at: p_target must be in (0, 1)");
    return crossing_snr_db(p_target, curve_b) - crossing_snr_db(p_target, curve_a);
}

double fit_loglog_slope(const std::vector<SweepPoint> &points, double l_lo, double l_hi)
{
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (const auto &p : points) {
        if (p.length < l_lo || p.length > l_hi || p.fraction <= 0.0)
            continue;
        double x = std::log10(p.length);
        double y = std::log10(p.fraction);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2)
        throw std::invalid_argument("fit_loglog_slope: fewer than two usable points in window");
    double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        throw std::invalid_argument("fit_loglog_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

} // namespace fsolink
