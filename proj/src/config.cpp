// SPDX-License-Identifier: Apache-2.0

#include "fsolink/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fsolink/errors.hpp"
#include "fsolink/grid.hpp"
#include "fsolink/wave_optics.hpp"

namespace fsolink {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr int kMaxLensSamples = 2000000;

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &key, const std::string &value)
{
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    }
}

long long parse_int(const std::string &key, const std::string &value)
{
    try {
        std::size_t pos = 0;
        long long v = std::stoll(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string &key, const std::string &value)
{
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
    }
}

std::vector<std::string> split_list(const std::string &value)
{
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(trim(item));
    return out;
}

std::vector<double> parse_double_list(const std::string &key, const std::string &value)
{
    std::vector<double> out;
    for (const auto &item : split_list(value))
        out.push_back(parse_double(key, item));
    if (out.empty())
        throw ConfigError(key + ": empty list");
    return out;
}

void expect_one_of(const std::string &key, const std::string &value,
                   std::initializer_list<const char *> allowed)
{
    for (const char *a : allowed)
        if (value == a)
            return;
    std::string msg = key + ": '" + value + "' is not one of {";
    bool first = true;
    for (const char *a : allowed) {
        if (!first)
            msg += ", ";
        msg += a;
        first = false;
    }
    throw ConfigError(msg + "}");
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const std::vector<double> &vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ",";
        out += fmt(vs[i]);
    }
    return out;
}

std::string fmt(const std::vector<std::string> &vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ",";
        out += vs[i];
    }
    return out;
}

} // namespace

void apply_override(ExperimentConfig &c, const std::string &key, const std::string &value)
{
    if (key == "scene.tx_x_m")
        c.scene.tx_position.x = parse_double(key, value);
    else if (key == "scene.tx_y_m")
        c.scene.tx_position.y = parse_double(key, value);
    else if (key == "scene.irs_x_m")
        c.scene.irs_center.x = parse_double(key, value);
    else if (key == "scene.irs_y_m")
        c.scene.irs_center.y = parse_double(key, value);
    else if (key == "scene.irs_normal_deg")
        c.scene.irs_normal_rad = parse_double(key, value) * kDegToRad;
    else if (key == "scene.rx_x_m")
        c.scene.rx_lens_center.x = parse_double(key, value);
    else if (key == "scene.rx_y_m")
        c.scene.rx_lens_center.y = parse_double(key, value);
    else if (key == "scene.rx_lens_length_m")
        c.scene.rx_lens_length = parse_double(key, value);
    else if (key == "scene.rx_normal_deg")
        c.scene.rx_normal_rad = parse_double(key, value) * kDegToRad;
    else if (key == "beam.kind") {
        expect_one_of(key, value, {"gaussian", "plane"});
        c.beam_kind = value;
    } else if (key == "beam.wavelength_m")
        c.wavelength_m = parse_double(key, value);
    else if (key == "beam.waist_m")
        c.waist_m = parse_double(key, value);
    else if (key == "beam.power_w")
        c.power_w = parse_double(key, value);
    else if (key == "irs.length_m")
        c.irs_length_m = parse_double(key, value);
    else if (key == "irs.spacing_m")
        c.irs_spacing_m = parse_double(key, value);
    else if (key == "irs.design") {
        expect_one_of(key, value, {"auto", "focusing", "linear", "mirror", "uniform"});
        c.irs_design = value;
    } else if (key == "irs.technology") {
        expect_one_of(key, value, {"mirror", "micro-mirror", "static-meta", "tunable-meta"});
        c.irs_technology = value;
    } else if (key == "irs.quant_levels")
        c.irs_quant_levels = static_cast<int>(parse_int(key, value));
    else if (key == "fading.kappa_per_m")
        c.fading.kappa = parse_double(key, value);
    else if (key == "fading.cn2")
        c.fading.cn2 = parse_double(key, value);
    else if (key == "fading.pointing_sigma_m")
        c.fading.pointing_sigma = parse_double(key, value);
    else if (key == "fading.responsivity")
        c.fading.responsivity = parse_double(key, value);
    else if (key == "fading.turbulence") {
        expect_one_of(key, value, {"end_to_end", "per_hop"});
        c.fading.turbulence =
            value == "per_hop" ? TurbulenceMode::per_hop : TurbulenceMode::end_to_end;
    } else if (key == "snr.threshold_db")
        c.snr_threshold_db = parse_double(key, value);
    else if (key == "sweep.snr_db_min")
        c.sweep_snr_db_min = parse_double(key, value);
    else if (key == "sweep.snr_db_max")
        c.sweep_snr_db_max = parse_double(key, value);
    else if (key == "sweep.snr_db_step")
        c.sweep_snr_db_step = parse_double(key, value);
    else if (key == "sweep.length_min_m")
        c.sweep_length_min_m = parse_double(key, value);
    else if (key == "sweep.length_max_m")
        c.sweep_length_max_m = parse_double(key, value);
    else if (key == "sweep.points_per_decade")
        c.sweep_points_per_decade = static_cast<int>(parse_int(key, value));
    else if (key == "fieldmap.line_y_m")
        c.fieldmap_line_y_m = parse_double(key, value);
    else if (key == "fieldmap.x_min_m")
        c.fieldmap_x_min_m = parse_double(key, value);
    else if (key == "fieldmap.x_max_m")
        c.fieldmap_x_max_m = parse_double(key, value);
    else if (key == "fieldmap.samples")
        c.fieldmap_samples = static_cast<int>(parse_int(key, value));
    else if (key == "fieldmap.wavelengths_m")
        c.fieldmap_wavelengths_m = parse_double_list(key, value);
    else if (key == "delay.lengths_m")
        c.delay_lengths_m = parse_double_list(key, value);
    else if (key == "delay.theta_i_deg")
        c.delay_theta_i_deg = parse_double_list(key, value);
    else if (key == "delay.theta_r_deg")
        c.delay_theta_r_deg = parse_double_list(key, value);
    else if (key == "delay.rate_bps")
        c.delay_rate_bps = parse_double(key, value);
    else if (key == "outage.systems") {
        auto items = split_list(value);
        if (items.empty())
            throw ConfigError(key + ": empty list");
        for (const auto &s : items)
            expect_one_of(key, s, {"metasurface", "mirror", "relay"});
        c.outage_systems = items;
    } else if (key == "outage.waists_m")
        c.outage_waists_m = parse_double_list(key, value);
    else if (key == "relay.x_m")
        c.relay_position.x = parse_double(key, value);
    else if (key == "relay.y_m")
        c.relay_position.y = parse_double(key, value);
    else if (key == "relay.split")
        c.relay_split = parse_double(key, value);
    else if (key == "relay.lens_length_m")
        c.relay_lens_length_m = parse_double(key, value);
    else if (key == "mc.trials")
        c.mc_trials = parse_int(key, value);
    else if (key == "mc.seed")
        c.mc_seed = parse_u64(key, value);
    else if (key == "mc.workers")
        c.mc_workers = static_cast<int>(parse_int(key, value));
    else
        throw ConfigError("unknown config key: " + key);
}

ExperimentConfig load_config(const std::string &text)
{
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value, got '" +
                              line + "'");
        try {
            apply_override(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError &e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

void validate_config(const ExperimentConfig &c)
{
    auto require = [](bool ok, const std::string &msg) {
        if (!ok)
            throw ConfigError(msg);
    };

    require(c.wavelength_m > 0.0, "beam.wavelength_m: must be positive");
    require(c.beam_kind != "gaussian" || c.waist_m > 0.0, "beam.waist_m: must be positive");
    require(c.power_w > 0.0, "beam.power_w: must be positive");

    require(c.scene.rx_lens_length > 0.0, "scene.rx_lens_length_m: must be positive");
    Vec2 tx_rel = c.scene.tx_position - c.scene.irs_center;
    Vec2 rx_rel = c.scene.rx_lens_center - c.scene.irs_center;
    require(norm(tx_rel) > 0.0, "scene.tx_x_m/tx_y_m: Tx coincides with the IRS centre");
    require(norm(rx_rel) > 0.0, "scene.rx_x_m/rx_y_m: Rx coincides with the IRS centre");
    Vec2 n = dir_from_bearing(c.scene.irs_normal_rad);
    require(dot(tx_rel, n) > 0.0 && dot(rx_rel, n) > 0.0,
            "scene: Tx and Rx must lie on the front (normal) side of the IRS line");

    require(c.irs_length_m > 0.0, "irs.length_m: must be positive");
    require(c.irs_spacing_m >= 0.0, "irs.spacing_m: must be >= 0 (0 = half wavelength)");
    require(c.irs_quant_levels == 0 || c.irs_quant_levels >= 2,
            "irs.quant_levels: must be 0 (continuous) or >= 2");

    require(c.fading.kappa >= 0.0, "fading.kappa_per_m: must be >= 0");
    require(c.fading.cn2 >= 0.0, "fading.cn2: must be >= 0");
    require(c.fading.pointing_sigma >= 0.0, "fading.pointing_sigma_m: must be >= 0");
    require(c.fading.responsivity > 0.0 && c.fading.responsivity <= 1.0,
            "fading.responsivity: must be in (0, 1]");

    require(c.sweep_snr_db_max >= c.sweep_snr_db_min,
            "sweep.snr_db_max: must be >= sweep.snr_db_min");
    require(c.sweep_snr_db_step > 0.0, "sweep.snr_db_step: must be positive");
    require(c.sweep_length_min_m > 0.0, "sweep.length_min_m: must be positive");
    require(c.sweep_length_max_m > c.sweep_length_min_m,
            "sweep.length_max_m: must exceed sweep.length_min_m");
    require(c.sweep_points_per_decade >= 1, "sweep.points_per_decade: must be >= 1");

    require(c.fieldmap_samples >= 2, "fieldmap.samples: must be >= 2");
    require(c.fieldmap_x_max_m > c.fieldmap_x_min_m,
            "fieldmap.x_max_m: must exceed fieldmap.x_min_m");
    for (double w : c.fieldmap_wavelengths_m)
        require(w > 0.0, "fieldmap.wavelengths_m: wavelengths must be positive");

    for (double l : c.delay_lengths_m)
        require(l > 0.0, "delay.lengths_m: lengths must be positive");
    for (double t : c.delay_theta_i_deg)
        require(std::abs(t) < 90.0, "delay.theta_i_deg: angles must satisfy |theta| < 90");
    for (double t : c.delay_theta_r_deg)
        require(std::abs(t) < 90.0, "delay.theta_r_deg: angles must satisfy |theta| < 90");
    require(c.delay_rate_bps > 0.0, "delay.rate_bps: must be positive");

    for (double w : c.outage_waists_m)
        require(w > 0.0, "outage.waists_m: waists must be positive");

    require(c.relay_split > 0.0 && c.relay_split < 1.0, "relay.split: must be in (0, 1)");
    require(c.relay_lens_length_m > 0.0, "relay.lens_length_m: must be positive");

    require(c.mc_trials >= 1000, "mc.trials: must be >= 1000");
    require(c.mc_workers >= 1, "mc.workers: must be >= 1");

    // wave-engine feasibility: the adaptive lens quadrature must stay within
    // its sample budget for the largest surface this config can request
    double longest = std::max(c.irs_length_m, c.sweep_length_max_m);
    double spacing = c.irs_spacing_m > 0.0 ? c.irs_spacing_m : 0.5 * c.wavelength_m;
    UnitCellGrid probe =
        make_grid_for_length(c.scene.irs_center, c.scene.irs_normal_rad, longest, spacing);
    int needed = lens_quadrature_samples(c.scene, probe, c.wavelength_m);
    require(needed <= kMaxLensSamples,
            "scene.rx_lens_length_m: lens quadrature would need " + std::to_string(needed) +
                " samples (cap " + std::to_string(kMaxLensSamples) +
                "); the field across the lens is undersampled");
}

std::string serialize_config(const ExperimentConfig &c)
{
    std::string s;
    auto put = [&s](const std::string &key, const std::string &value) {
        s += key;
        s += " = ";
        s += value;
        s += "\n";
    };
    put("beam.kind", c.beam_kind);
    put("beam.power_w", fmt(c.power_w));
    put("beam.waist_m", fmt(c.waist_m));
    put("beam.wavelength_m", fmt(c.wavelength_m));
    put("delay.lengths_m", fmt(c.delay_lengths_m));
    put("delay.rate_bps", fmt(c.delay_rate_bps));
    put("delay.theta_i_deg", fmt(c.delay_theta_i_deg));
    put("delay.theta_r_deg", fmt(c.delay_theta_r_deg));
    put("fading.cn2", fmt(c.fading.cn2));
    put("fading.kappa_per_m", fmt(c.fading.kappa));
    put("fading.pointing_sigma_m", fmt(c.fading.pointing_sigma));
    put("fading.responsivity", fmt(c.fading.responsivity));
    put("fading.turbulence",
        c.fading.turbulence == TurbulenceMode::per_hop ? "per_hop" : "end_to_end");
    put("fieldmap.line_y_m", fmt(c.fieldmap_line_y_m));
    put("fieldmap.samples", std::to_string(c.fieldmap_samples));
    put("fieldmap.wavelengths_m", fmt(c.fieldmap_wavelengths_m));
    put("fieldmap.x_max_m", fmt(c.fieldmap_x_max_m));
    put("fieldmap.x_min_m", fmt(c.fieldmap_x_min_m));
    put("irs.design", c.irs_design);
    put("irs.length_m", fmt(c.irs_length_m));
    put("irs.quant_levels", std::to_string(c.irs_quant_levels));
    put("irs.spacing_m", fmt(c.irs_spacing_m));
    put("irs.technology", c.irs_technology);
    put("mc.seed", std::to_string(c.mc_seed));
    put("mc.trials", std::to_string(c.mc_trials));
    put("mc.workers", std::to_string(c.mc_workers));
    put("outage.systems", fmt(c.outage_systems));
    put("outage.waists_m", fmt(c.outage_waists_m));
    put("relay.lens_length_m", fmt(c.relay_lens_length_m));
    put("relay.split", fmt(c.relay_split));
    put("relay.x_m", fmt(c.relay_position.x));
    put("relay.y_m", fmt(c.relay_position.y));
    put("scene.irs_normal_deg", fmt(c.scene.irs_normal_rad * kRadToDeg));
    put("scene.irs_x_m", fmt(c.scene.irs_center.x));
    put("scene.irs_y_m", fmt(c.scene.irs_center.y));
    put("scene.rx_lens_length_m", fmt(c.scene.rx_lens_length));
    put("scene.rx_normal_deg", fmt(c.scene.rx_normal_rad * kRadToDeg));
    put("scene.rx_x_m", fmt(c.scene.rx_lens_center.x));
    put("scene.rx_y_m", fmt(c.scene.rx_lens_center.y));
    put("scene.tx_x_m", fmt(c.scene.tx_position.x));
    put("scene.tx_y_m", fmt(c.scene.tx_position.y));
    put("snr.threshold_db", fmt(c.snr_threshold_db));
    put("sweep.length_max_m", fmt(c.sweep_length_max_m));
    put("sweep.length_min_m", fmt(c.sweep_length_min_m));
    put("sweep.points_per_decade", std::to_string(c.sweep_points_per_decade));
    put("sweep.snr_db_max", fmt(c.sweep_snr_db_max));
    put("sweep.snr_db_min", fmt(c.sweep_snr_db_min));
    put("sweep.snr_db_step", fmt(c.sweep_snr_db_step));
    return s;
}

std::uint64_t config_hash(const ExperimentConfig &cfg)
{
    std::string s = serialize_config(cfg);
    std::uint64_t h = 1469598103934665603ull; // FNV offset basis
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull; // FNV prime
    }
    return h;
}

std::string config_hash_hex(const ExperimentConfig &cfg)
{
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    return buf;
}

std::string resolved_design(const ExperimentConfig &cfg)
{
    if (cfg.irs_design != "auto")
        return cfg.irs_design;
    if (cfg.irs_technology == "mirror" || cfg.irs_technology == "micro-mirror")
        return "mirror";
    return "focusing";
}

std::string technology_note(const ExperimentConfig &cfg)
{
    if (cfg.irs_technology == "mirror")
        return "mirror (control: single fixed tilt)";
    if (cfg.irs_technology == "micro-mirror")
        return "micro-mirror (control: per-element continuous tilt)";
    if (cfg.irs_technology == "static-meta")
        return "static-meta (control: fixed fabricated phase pattern)";
    return "tunable-meta (control: continuous per-cell phase)";
}

} // namespace fsolink
