// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fsolink/config.hpp"
#include "fsolink/result_table.hpp"

namespace fsolink {

// Reflected power density sampled on the horizontal line
// y = fieldmap.line_y_m, one wave-engine and one geometric-engine block per
// requested wavelength. Columns: x_m, power_density_w_per_m, engine,
// wavelength_m.
ResultTable run_field_map(const ExperimentConfig &cfg);

// Captured-power fraction vs IRS length for the mirror, linear, and
// focusing designs under both engines. Columns: L_m, N, fraction, engine,
// design.
ResultTable run_power_sweep(const ExperimentConfig &cfg);

// Outage probability vs transmit SNR for each configured system
// (metasurface = focusing profile, mirror = tilted specular surface,
// relay = two-hop decode-and-forward) and each waist. Columns: snr_db,
// p_out, ci95, system, w0_m.
ResultTable run_outage(const ExperimentConfig &cfg);

// Delay dispersion over the (length, incidence, reflection) grid. Columns:
// L_m, theta_i_deg, theta_r_deg, d_max_s, symbols_affected_at_rate.
ResultTable run_delay(const ExperimentConfig &cfg);

} // namespace fsolink
