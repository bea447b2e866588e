// SPDX-License-Identifier: Apache-2.0

#include "fsolink/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fsolink/errors.hpp"
#include "fsolink/geometric_optics.hpp"
#include "fsolink/link_analysis.hpp"
#include "fsolink/wave_optics.hpp"

namespace fsolink {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

BeamSource make_beam(const ExperimentConfig &cfg, double wavelength, double waist)
{
    BeamSource beam;
    beam.kind = cfg.beam_kind == "plane" ? BeamKind::plane : BeamKind::gaussian;
    beam.wavelength = wavelength;
    beam.waist_radius = waist;
    beam.total_power = cfg.power_w;
    beam.axis_origin = cfg.scene.tx_position;
    aim_at(beam, cfg.scene.irs_center);
    return beam;
}

UnitCellGrid build_grid(const ExperimentConfig &cfg, double wavelength, double length)
{
    double spacing = cfg.irs_spacing_m > 0.0 ? cfg.irs_spacing_m : 0.5 * wavelength;
    return make_grid_for_length(cfg.scene.irs_center, cfg.scene.irs_normal_rad, length, spacing);
}

struct BuiltDesign {
    UnitCellGrid grid;
    PhaseProfile profile;
};

BuiltDesign build_design(const ExperimentConfig &cfg, const std::string &design,
                         const BeamSource &beam, const UnitCellGrid &grid)
{
    double theta_i = incidence_angle(cfg.scene);
    double theta_r = reflection_angle_to_target(cfg.scene, cfg.scene.rx_lens_center);
    AnglePair angles{theta_i, theta_r};

    BuiltDesign out{grid, {}};
    if (design == "mirror") {
        out.grid = with_tilt(grid, mirror_tilt_for(angles).tilt_rad);
        out.profile = uniform_profile(out.grid);
        return out; // a mirror has no phase pattern to quantize
    }
    if (design == "uniform") {
        out.profile = uniform_profile(grid);
    } else if (design == "linear") {
        out.profile = linear_profile(grid, beam.wavelength, angles);
    } else if (design == "focusing") {
        Vec2 d_inc = beam.kind == BeamKind::gaussian ? normalized(grid.center - beam.axis_origin)
                                                     : dir_from_bearing(beam.axis_bearing);
        double slope_in = -wavenumber(beam) * dot(d_inc, grid.tangent());
        out.profile = focusing_profile(grid, beam.wavelength, incident_field_on_irs(beam, grid),
                                       cfg.scene.rx_lens_center, slope_in);
    } else {
        throw ConfigError("irs.design: '" + design + "' is not usable here");
    }
    if (cfg.irs_quant_levels > 0)
        out.profile = quantize_profile(out.profile, {cfg.irs_quant_levels});
    return out;
}

ResultTable table_shell(const ExperimentConfig &cfg, const std::string &subcommand)
{
    ResultTable t;
    t.subcommand = subcommand;
    t.config_hash = config_hash_hex(cfg);
    t.seed = cfg.mc_seed;
    t.workers = cfg.mc_workers;
    t.irs_note = technology_note(cfg);
    return t;
}

void require_finite(double v, const char *what)
{
    if (!std::isfinite(v))
        throw NumericalError(std::string("non-finite ") + what);
}

} // namespace

ResultTable run_field_map(const ExperimentConfig &cfg)
{
    ResultTable t = table_shell(cfg, "field-map");
    t.columns = {"x_m", "power_density_w_per_m", "engine", "wavelength_m"};
    t.units = {"m", "W/m", "-", "m"};

    std::string design = resolved_design(cfg);
    for (double lambda : cfg.fieldmap_wavelengths_m) {
        BeamSource beam = make_beam(cfg, lambda, cfg.waist_m);
        UnitCellGrid grid = build_grid(cfg, lambda, cfg.irs_length_m);
        BuiltDesign built = build_design(cfg, design, beam, grid);

        FieldProfile wave =
            power_density_profile(beam, built.grid, built.profile, cfg.fieldmap_line_y_m,
                                  cfg.fieldmap_x_min_m, cfg.fieldmap_x_max_m,
                                  cfg.fieldmap_samples);
        for (std::size_t i = 0; i < wave.x.size(); ++i) {
            require_finite(wave.power_density[i], "wave power density");
            add_row(t, {format_number(wave.x[i]), format_number(wave.power_density[i]), "wave",
                        format_number(lambda)});
        }

        FieldProfile go =
            go_power_density_profile(beam, built.grid, built.profile, cfg.fieldmap_line_y_m,
                                     cfg.fieldmap_x_min_m, cfg.fieldmap_x_max_m,
                                     cfg.fieldmap_samples);
        for (std::size_t i = 0; i < go.x.size(); ++i) {
            require_finite(go.power_density[i], "geometric power density");
            add_row(t, {format_number(go.x[i]), format_number(go.power_density[i]), "geometric",
                        format_number(lambda)});
        }
    }
    return t;
}

ResultTable run_power_sweep(const ExperimentConfig &cfg)
{
    if (cfg.beam_kind != "gaussian")
        throw ConfigError("beam.kind: the power sweep requires a gaussian beam");

    ResultTable t = table_shell(cfg, "power-sweep");
    t.columns = {"L_m", "N", "fraction", "engine", "design"};
    t.units = {"m", "1", "1", "-", "-"};

    double decades = std::log10(cfg.sweep_length_max_m / cfg.sweep_length_min_m);
    int count = static_cast<int>(std::lround(decades * cfg.sweep_points_per_decade)) + 1;
    if (count < 2)
        count = 2;
    std::vector<double> lengths(count);
    for (int i = 0; i < count; ++i)
        lengths[i] = cfg.sweep_length_min_m *
                     std::pow(10.0, decades * static_cast<double>(i) / (count - 1));

    BeamSource beam = make_beam(cfg, cfg.wavelength_m, cfg.waist_m);
    const std::pair<DesignFamily, const char *> designs[] = {
        {DesignFamily::mirror, "mirror"},
        {DesignFamily::linear, "linear"},
        {DesignFamily::focusing, "focusing"},
    };
    const std::pair<Engine, const char *> engines[] = {
        {Engine::wave, "wave"},
        {Engine::geometric, "geometric"},
    };
    for (const auto &[family, design_name] : designs) {
        for (const auto &[engine, engine_name] : engines) {
            auto points = power_scaling_sweep(cfg.scene, beam, family, lengths, engine,
                                              cfg.irs_spacing_m);
            for (const auto &p : points) {
                require_finite(p.fraction, "captured power fraction");
                add_row(t, {format_number(p.length), std::to_string(p.cells),
                            format_number(p.fraction), engine_name, design_name});
            }
        }
    }
    return t;
}

ResultTable run_outage(const ExperimentConfig &cfg)
{
    if (cfg.beam_kind != "gaussian")
        throw ConfigError("beam.kind: the outage analysis requires a gaussian beam");

    ResultTable t = table_shell(cfg, "outage");
    t.columns = {"snr_db", "p_out", "ci95", "system", "w0_m"};
    t.units = {"dB", "1", "1", "-", "m"};

    int grid_points = static_cast<int>(std::floor(
                          (cfg.sweep_snr_db_max - cfg.sweep_snr_db_min) / cfg.sweep_snr_db_step +
                          1e-9)) +
                      1;
    double gamma_thr = snr_db_to_linear(cfg.snr_threshold_db);

    std::uint64_t point_index = 0;
    for (double w0 : cfg.outage_waists_m) {
        BeamSource beam = make_beam(cfg, cfg.wavelength_m, w0);
        for (const auto &system : cfg.outage_systems) {
            IrsChannelStatics irs_ch;
            RelayChannelStatics relay_ch;
            if (system == "relay") {
                RelayLinkSpec spec;
                spec.relay_position = cfg.relay_position;
                spec.power_split = cfg.relay_split;
                spec.relay_lens_length = cfg.relay_lens_length_m;
                spec.relay_beam = beam;
                relay_ch = prepare_relay_channel(cfg.scene, spec, cfg.fading);
                require_finite(relay_ch.h_g1, "relay hop-1 capture");
                require_finite(relay_ch.h_g2, "relay hop-2 capture");
            } else {
                UnitCellGrid grid = build_grid(cfg, cfg.wavelength_m, cfg.irs_length_m);
                std::string design = system == "mirror" ? "mirror" : "focusing";
                BuiltDesign built = build_design(cfg, design, beam, grid);
                irs_ch = prepare_irs_channel(cfg.scene, beam, built.grid, built.profile,
                                             cfg.fading);
                require_finite(irs_ch.h_g, "lens capture fraction");
            }
            for (int i = 0; i < grid_points; ++i) {
                double snr_db = cfg.sweep_snr_db_min + i * cfg.sweep_snr_db_step;
                double gamma_bar = snr_db_to_linear(snr_db);
                std::uint64_t stream = point_index * static_cast<std::uint64_t>(cfg.mc_workers);
                OutageEstimate est =
                    system == "relay"
                        ? relay_outage_mc(relay_ch, gamma_bar, gamma_thr, cfg.mc_trials,
                                          cfg.mc_seed, cfg.mc_workers, stream)
                        : irs_outage_mc(irs_ch, gamma_bar, gamma_thr, cfg.mc_trials, cfg.mc_seed,
                                        cfg.mc_workers, stream);
                ++point_index;
                add_row(t, {format_number(snr_db), format_number(est.p_out),
                            format_number(est.ci95_halfwidth), system, format_number(w0)});
            }
        }
    }
    return t;
}

ResultTable run_delay(const ExperimentConfig &cfg)
{
    ResultTable t = table_shell(cfg, "delay");
    t.columns = {"L_m", "theta_i_deg", "theta_r_deg", "d_max_s", "symbols_affected_at_rate"};
    t.units = {"m", "deg", "deg", "s", "1"};

    for (double length : cfg.delay_lengths_m)
        for (double ti : cfg.delay_theta_i_deg)
            for (double tr : cfg.delay_theta_r_deg) {
                double d = delay_dispersion(length, {ti * kDegToRad, tr * kDegToRad});
                require_finite(d, "delay dispersion");
                add_row(t, {format_number(length), format_number(ti), format_number(tr),
                            format_number(d),
                            std::to_string(symbols_affected(d, cfg.delay_rate_bps))});
            }
    return t;
}

} // namespace fsolink
