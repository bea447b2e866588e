// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fsolink/rng.hpp"

namespace fsolink {

// Whether turbulence for an IRS link is drawn once over the full Tx-IRS-Rx
// distance or independently per hop. Relay links are always per hop.
enum class TurbulenceMode { end_to_end, per_hop };

struct FadingModel {
    double kappa = 0.43e-3;       // 1/m, weather attenuation coefficient
    double cn2 = 1.4e-14;         // m^(-2/3), refractive-index structure parameter
    double pointing_sigma = 0.0;  // m, beam-centre jitter on the IRS plane, 0 = tracked
    double responsivity = 0.5;    // A/W
    TurbulenceMode turbulence = TurbulenceMode::end_to_end;
};

// One realization of the channel coefficient h = rho * h_l * h_a * h_g.
struct ChannelDraw {
    double h_g = 1.0; // geometric + misalignment gain, [0, 1]
    double h_a = 1.0; // turbulence gain, > 0
    double h_l = 1.0; // atmospheric loss, (0, 1]
    double h = 1.0;
};

// exp(-kappa * distance)
double attenuation_gain(double kappa, double distance);

// sigma_R^2 = 1.23 * cn2 * k^(7/6) * distance^(11/6), plane-wave Rytov
// variance with k = 2 pi / wavelength.
double rytov_variance(double cn2, double wavelength, double distance);

// h_a = exp(2X), X ~ Normal(-sigma_X^2, sigma_X^2), sigma_X^2 = sigma_R^2/4,
// so E[h_a] = 1. Consumes exactly one normal draw.
double sample_turbulence(double sigma_r2, RandomStream &rng);

// Zero-mean Gaussian beam-centre displacement along the IRS surface.
// sigma = 0 returns 0 without consuming a draw.
double sample_pointing_offset(double pointing_sigma, RandomStream &rng);

// Validates component ranges and multiplies them into h.
ChannelDraw compose_channel(double h_g, double h_a, double h_l, double responsivity);

} // namespace fsolink
