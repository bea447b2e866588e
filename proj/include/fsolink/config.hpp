// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsolink/channel.hpp"
#include "fsolink/geometry.hpp"

namespace fsolink {

// Flat key=value experiment description. Every length key carries an
// explicit unit suffix (_m, _deg, _per_m, _bps, _w). Defaults reproduce the
// reference scene: Tx (-200, 300), IRS at the origin along the x axis,
// Rx lens of 10 cm at (0, 500), 1550 nm Gaussian beam with 1 mm waist.
struct ExperimentConfig {
    SceneLayout scene;

    std::string beam_kind = "gaussian"; // gaussian | plane
    double wavelength_m = 1.55e-6;
    double waist_m = 1e-3;
    double power_w = 1.0;

    double irs_length_m = 0.5;
    double irs_spacing_m = 0.0;              // 0 = half a wavelength
    std::string irs_design = "auto";         // auto | focusing | linear | mirror | uniform
    std::string irs_technology = "tunable-meta";
    int irs_quant_levels = 0;                // 0 = continuous phases

    FadingModel fading;
    double snr_threshold_db = 0.0;

    double sweep_snr_db_min = 10.0;
    double sweep_snr_db_max = 26.0;
    double sweep_snr_db_step = 2.0;
    double sweep_length_min_m = 5e-4;
    double sweep_length_max_m = 2.0;
    int sweep_points_per_decade = 12;

    double fieldmap_line_y_m = 200.0;
    double fieldmap_x_min_m = -6.0;
    double fieldmap_x_max_m = 6.0;
    int fieldmap_samples = 4801;
    std::vector<double> fieldmap_wavelengths_m{1.55e-6};

    std::vector<double> delay_lengths_m{0.1};
    std::vector<double> delay_theta_i_deg{0.0};
    std::vector<double> delay_theta_r_deg{60.0};
    double delay_rate_bps = 1e10;

    std::vector<std::string> outage_systems{"metasurface", "mirror", "relay"};
    std::vector<double> outage_waists_m{1e-3, 2.5e-3};

    Point2D relay_position{0.0, 0.0};
    double relay_split = 0.5;
    double relay_lens_length_m = 0.1;

    long long mc_trials = 100000;
    std::uint64_t mc_seed = 12345;
    int mc_workers = 8;
};

// Parses key=value lines ('#' starts a comment, blank lines ignored) on top
// of the defaults, then validates. Throws ConfigError naming the offending
// key on unknown keys, malformed values, or invariant violations.
ExperimentConfig load_config(const std::string &text);

// Reads and parses a config file. Throws IoError when unreadable.
ExperimentConfig load_config_file(const std::string &path);

// Applies one key=value override without validating.
void apply_override(ExperimentConfig &cfg, const std::string &key, const std::string &value);

// Full invariant check; throws ConfigError naming the offending key.
void validate_config(const ExperimentConfig &cfg);

// Canonical form: every key, alphabetical, doubles printed with %.17g.
// Semantically identical configs serialize to identical text.
std::string serialize_config(const ExperimentConfig &cfg);

// FNV-1a 64-bit hash of the canonical serialization.
std::uint64_t config_hash(const ExperimentConfig &cfg);
std::string config_hash_hex(const ExperimentConfig &cfg);

// Design family implied by irs.design, resolving "auto" through the
// technology tag (mirror-like technologies tilt, meta-surfaces focus).
std::string resolved_design(const ExperimentConfig &cfg);

// Human-readable control-resolution note for the output preamble.
std::string technology_note(const ExperimentConfig &cfg);

} // namespace fsolink
