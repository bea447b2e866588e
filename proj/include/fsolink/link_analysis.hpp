// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "fsolink/beam.hpp"
#include "fsolink/channel.hpp"
#include "fsolink/geometry.hpp"
#include "fsolink/grid.hpp"
#include "fsolink/phase_profile.hpp"

namespace fsolink {

enum class Engine { wave, geometric };
enum class DesignFamily { mirror, linear, focusing };

struct OutageEstimate {
    double p_out = 0.0;
    long long trials = 0;          // trials actually performed (early exit may stop short)
    double ci95_halfwidth = 0.0;   // 1.96 sqrt(p(1-p)/trials)
};

// Two-hop decode-and-forward baseline. Hop 1: Tx beam -> lens of
// relay_lens_length at relay_position. Hop 2: a fresh beam with the
// relay_beam parameters -> the scene's Rx lens. Lenses face the incoming
// beam axis. power_split is the Tx share of the total transmit power.
struct RelayLinkSpec {
    Point2D relay_position{0.0, 0.0};
    double power_split = 0.5;
    double relay_lens_length = 0.1;
    BeamSource relay_beam;
};

// gamma = gamma_bar * h^2 (all linear scale)
double instantaneous_snr(double gamma_bar, double h);

double snr_db_to_linear(double snr_db);
double snr_linear_to_db(double snr_linear);

// Deterministic per-configuration channel state reused across every
// Monte-Carlo trial and every gamma_bar grid point.
struct IrsChannelStatics {
    double h_g = 1.0;  // lens capture fraction at zero pointing offset
    double h_l = 1.0;
    double responsivity = 1.0;
    TurbulenceMode turbulence = TurbulenceMode::end_to_end;
    double sigma_r2_total = 0.0;
    double sigma_r2_hop1 = 0.0;
    double sigma_r2_hop2 = 0.0;
    double pointing_sigma = 0.0;
    // h_g lookup over beam-centre offsets, uniform grid on +-5 sigma,
    // populated only when pointing_sigma > 0
    std::vector<double> offset_grid;
    std::vector<double> h_g_table;
};

// Evaluates the wave engine once (65-point offset table when jitter is on)
// and freezes the deterministic factors.
IrsChannelStatics prepare_irs_channel(const SceneLayout &scene, const BeamSource &beam,
                                      const UnitCellGrid &grid, const PhaseProfile &profile,
                                      const FadingModel &fading);

struct RelayChannelStatics {
    double split1 = 0.5, split2 = 0.5;
    double h_g1 = 1.0, h_g2 = 1.0;
    double h_l1 = 1.0, h_l2 = 1.0;
    double sigma_r2_hop1 = 0.0, sigma_r2_hop2 = 0.0;
    double responsivity = 1.0;
};

RelayChannelStatics prepare_relay_channel(const SceneLayout &scene, const RelayLinkSpec &relay,
                                          const FadingModel &fading);

// Monte-Carlo Pr{gamma_bar h^2 < gamma_thr}. Trials are split over
// `workers` logical substreams (RandomStream(seed, stream_offset + w)) in a
// fixed order, so results depend only on (seed, workers, stream_offset).
// Stops early once ci95 < 0.05 p_out, checked at one-tenth-of-run
// boundaries. trials must be >= 1000.
OutageEstimate irs_outage_mc(const IrsChannelStatics &ch, double gamma_bar, double gamma_thr,
                             long long trials, std::uint64_t seed, int workers,
                             std::uint64_t stream_offset = 0);

// Convenience form matching prepare + run.
OutageEstimate irs_outage_mc(const SceneLayout &scene, const BeamSource &beam,
                             const UnitCellGrid &grid, const PhaseProfile &profile,
                             const FadingModel &fading, double gamma_bar, double gamma_thr,
                             long long trials, std::uint64_t seed, int workers);

// Decode-and-forward: outage when min(split_i gamma_bar h_i^2) < gamma_thr,
// independent per-hop turbulence. Same substream/early-exit contract.
OutageEstimate relay_outage_mc(const RelayChannelStatics &ch, double gamma_bar, double gamma_thr,
                               long long trials, std::uint64_t seed, int workers,
                               std::uint64_t stream_offset = 0);

OutageEstimate relay_outage_mc(const SceneLayout &scene, const RelayLinkSpec &relay,
                               const FadingModel &fading, double gamma_bar, double gamma_thr,
                               long long trials, std::uint64_t seed, int workers);

struct SweepPoint {
    double length = 0.0;   // m
    int cells = 0;
    double fraction = 0.0; // captured power / transmit power
};

// Captured-power fraction vs IRS length for one design family and engine.
// spacing = 0 selects half-wavelength cells. lengths must be ascending.
std::vector<SweepPoint> power_scaling_sweep(const SceneLayout &scene, const BeamSource &beam,
                                            DesignFamily design,
                                            const std::vector<double> &lengths, Engine engine,
                                            double spacing = 0.0);

struct OutageCurvePoint {
    double snr_db = 0.0;
    double p_out = 0.0;
};

// Horizontal gap curve_b(p_target) - curve_a(p_target) in dB, log-linear
// interpolation in p. Throws std::invalid_argument when either curve never
// crosses p_target with positive probabilities on both sides.
double snr_gain_at(double p_target, const std::vector<OutageCurvePoint> &curve_a,
                   const std::vector<OutageCurvePoint> &curve_b);

// Least-squares slope of log10(fraction) vs log10(length) over points with
// l_lo <= length <= l_hi and fraction > 0. Needs at least two such points.
double fit_loglog_slope(const std::vector<SweepPoint> &points, double l_lo, double l_hi);

} // namespace fsolink
