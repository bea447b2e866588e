// SPDX-License-Identifier: Apache-2.0

#include "fsolink/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fsolink {

double attenuation_gain(double kappa, double distance)
{
    if (kappa < 0.0)
        throw std::invalid_argument("attenuation_gain: kappa must be >= 0");
    if (distance < 0.0)
        throw std::invalid_argument("attenuation_gain: distance must be >= 0");
    return std::exp(-kappa * distance);
}

double rytov_variance(double cn2, double wavelength, double distance)
{
    if (cn2 < 0.0)
        throw std::invalid_argument("rytov_variance: cn2 must be >= 0");
    if (wavelength <= 0.0)
        throw std::invalid_argument("rytov_variance: wavelength must be positive");
    if (distance < 0.0)
        throw std::invalid_argument("rytov_variance: distance must be >= 0");
    double k = 2.0 * std::numbers::pi / wavelength;
    return 1.23 * cn2 * std::pow(k, 7.0 / 6.0) * std::pow(distance, 11.0 / 6.0);
}

double sample_turbulence(double sigma_r2, RandomStream &rng)
{
    if (sigma_r2 < 0.0)
        throw std::invalid_argument("sample_turbulence: sigma_r2 must be >= 0");
    if (sigma_r2 == 0.0)
        return 1.0;
    double sigma_x2 = 0.25 * sigma_r2;
    double x = -sigma_x2 + std::sqrt(sigma_x2) * rng.normal();
    return std::exp(2.0 * x);
}

double sample_pointing_offset(double pointing_sigma, RandomStream &rng)
{
    if (pointing_sigma < 0.0)
        throw std::invalid_argument("sample_pointing_offset: sigma must be >= 0");
    if (pointing_sigma == 0.0)
        return 0.0;
    return pointing_sigma * rng.normal();
}

ChannelDraw compose_channel(double h_g, double h_a, double h_l, double responsivity)
{
    if (!(h_g >= 0.0 && h_g <= 1.0))
        throw std::invalid_argument("compose_channel: h_g must be in [0, 1]");
    if (!(h_a > 0.0))
        throw std::invalid_argument("compose_channel: h_a must be positive");
    if (!(h_l > 0.0 && h_l <= 1.0))
        throw std::invalid_argument("compose_channel: h_l must be in (0, 1]");
    if (!(responsivity > 0.0 && responsivity <= 1.0))
        throw std::invalid_argument("compose_channel: responsivity must be in (0, 1]");
    return {h_g, h_a, h_l, responsivity * h_l * h_a * h_g};
}

} // namespace fsolink
