// heliumq: command-line surface over the cavity/transmon toolkit.
//
// Every run prints one JSON document to stdout with the resolved
// configuration embedded; exit codes are 0 (success), 1 (domain error),
// 2 (usage error). Physical scalars require unit suffixes; all frequencies
// are linear (f = omega/2pi).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "heliumq/csv_io.hpp"
#include "heliumq/decoherence.hpp"
#include "heliumq/dielectric.hpp"
#include "heliumq/estimation.hpp"
#include "heliumq/jaynes_cummings.hpp"
#include "heliumq/trace_analysis.hpp"
#include "heliumq/trace_synth.hpp"
#include "heliumq/units.hpp"
#include "heliumq/version.hpp"

namespace hq = heliumq;
using json = nlohmann::ordered_json;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Unit-suffix conversion wrappers; bad units are usage errors (exit 2).
double freq_hz(const std::string& text, const std::string& flag) {
    try {
        return hq::parse_frequency_hz(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

double time_s(const std::string& text, const std::string& flag) {
    try {
        return hq::parse_time_s(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

double temp_k(const std::string& text, const std::string& flag) {
    try {
        return hq::parse_temperature_k(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

double energy_j(const std::string& text, const std::string& flag) {
    try {
        return hq::parse_energy_j(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

double rate_per_s(const std::string& text, const std::string& flag) {
    try {
        return hq::parse_rate_per_s(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

double plain(const std::string& text, const std::string& flag) {
    try {
        return hq::parse_dimensionless(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

void emit(const std::string& command, json config, json result) {
    json doc;
    doc["tool"] = "heliumq";
    doc["version"] = hq::version;
    doc["command"] = command;
    doc["config"] = std::move(config);
    doc["result"] = std::move(result);
    std::cout << doc.dump(2) << "\n";
}

json fit_result_json(const hq::FitResult& fit) {
    json out;
    json params = json::object();
    for (const auto& p : fit.params) {
        params[p.name] = {{"value", p.value},
                          {"initial", p.initial},
                          {"lower", p.lower},
                          {"upper", p.upper},
                          {"at_bound", p.at_bound}};
    }
    out["params"] = params;
    out["residual_norm"] = fit.residual_norm;
    out["residuals"] = fit.residuals;
    out["n_iterations"] = fit.n_iterations;
    out["converged"] = fit.converged;
    out["notes"] = fit.notes;
    return out;
}

json observables_json(const hq::SpectroObservables& obs) {
    return {{"omega_c_bare_ghz", hq::angular_to_linear(obs.omega_c_bare) / 1e9},
            {"delta_omega_mhz", hq::angular_to_linear(obs.delta_omega) / 1e6},
            {"omega01_ghz", hq::angular_to_linear(obs.omega01) / 1e9},
            {"omega12_ghz", hq::angular_to_linear(obs.omega12) / 1e9}};
}

struct SpectroArgs {
    std::string ej, ec, g01, omega_c, delta_omega, omega01, omega12;
    int transmon_levels = 4;
    int photons = 12;
    std::string ladder = "sqrt";
    bool check_convergence = false;
};

hq::CouplingLadder ladder_from_name(const std::string& name) {
    if (name == "sqrt") return hq::CouplingLadder::SqrtHarmonic;
    if (name == "exact") return hq::CouplingLadder::ExactRatios;
    throw CLI::ValidationError("--ladder", "must be 'sqrt' or 'exact'");
}

void add_spectro(CLI::App& app, SpectroArgs& args) {
    auto* spectro = app.add_subcommand("spectro", "Dressed-state spectroscopy model");
    spectro->require_subcommand(1);

    auto add_truncations = [&](CLI::App* cmd) {
        cmd->add_option("--transmon-levels", args.transmon_levels, "Transmon levels kept");
        cmd->add_option("--photons", args.photons, "Photon Fock states kept");
        cmd->add_option("--ladder", args.ladder, "Coupling ladder: sqrt | exact");
    };

    auto* predict = spectro->add_subcommand(
        "predict", "Observables from EJ, EC, g01 and the bare cavity frequency");
    predict->add_option("--ej", args.ej, "EJ/h, e.g. 13.887GHz")->required();
    predict->add_option("--ec", args.ec, "EC/h, e.g. 0.2710GHz")->required();
    predict->add_option("--g01", args.g01, "g01/2pi, e.g. 0.1235GHz")->required();
    predict->add_option("--omega-c", args.omega_c, "Bare cavity frequency")->required();
    predict->add_flag("--check-convergence", args.check_convergence,
                      "Also report the truncation drift");
    add_truncations(predict);
    predict->callback([&args] {
        hq::JchSystem sys;
        sys.transmon = hq::TransmonParams::from_ghz(freq_hz(args.ej, "--ej") / 1e9,
                                                    freq_hz(args.ec, "--ec") / 1e9);
        sys.omega_c_bare = hq::linear_to_angular(freq_hz(args.omega_c, "--omega-c"));
        sys.g01 = hq::linear_to_angular(freq_hz(args.g01, "--g01"));
        sys.n_transmon_levels = args.transmon_levels;
        sys.n_photons = args.photons;
        sys.ladder = ladder_from_name(args.ladder);

        json config{{"ej_over_h_ghz", freq_hz(args.ej, "--ej") / 1e9},
                    {"ec_over_h_ghz", freq_hz(args.ec, "--ec") / 1e9},
                    {"g01_over_2pi_ghz", freq_hz(args.g01, "--g01") / 1e9},
                    {"omega_c_ghz", freq_hz(args.omega_c, "--omega-c") / 1e9},
                    {"transmon_levels", args.transmon_levels},
                    {"photons", args.photons},
                    {"ladder", args.ladder}};

        const hq::SpectroObservables obs = hq::dressed_observables(sys);
        json result = observables_json(obs);
        result["two_photon_ghz"] = hq::angular_to_linear(hq::two_photon_frequency(obs)) / 1e9;
        result["chi_mhz"] = hq::angular_to_linear(hq::dispersive_chi(sys)) / 1e6;
        result["dispersive_delta_omega_mhz"] =
            hq::angular_to_linear(
                hq::dispersive_shift_approx(sys.g01, sys.omega_c_bare, obs.omega01)) /
            1e6;
        if (args.check_convergence) {
            result["truncation_drift_hz"] = hq::dressed_observables_drift_hz(sys);
        }
        emit("spectro predict", std::move(config), std::move(result));
    });

    auto* fit = spectro->add_subcommand(
        "fit", "Recover EJ, EC, g01 from measured omega_c, delta-omega, omega01, omega12");
    fit->add_option("--omega-c", args.omega_c, "Measured bare cavity frequency")->required();
    fit->add_option("--delta-omega", args.delta_omega, "Measured ground-state cavity pull")
        ->required();
    fit->add_option("--omega01", args.omega01, "Measured 0-1 transition")->required();
    fit->add_option("--omega12", args.omega12, "Measured 1-2 transition")->required();
    add_truncations(fit);
    fit->callback([&args] {
        hq::SpectroObservables measured;
        measured.omega_c_bare = hq::linear_to_angular(freq_hz(args.omega_c, "--omega-c"));
        measured.delta_omega = hq::linear_to_angular(freq_hz(args.delta_omega, "--delta-omega"));
        measured.omega01 = hq::linear_to_angular(freq_hz(args.omega01, "--omega01"));
        measured.omega12 = hq::linear_to_angular(freq_hz(args.omega12, "--omega12"));

        hq::SpectroscopyFitOptions options;
        options.n_transmon_levels = args.transmon_levels;
        options.n_photons = args.photons;
        options.ladder = ladder_from_name(args.ladder);

        json config = observables_json(measured);
        config["transmon_levels"] = args.transmon_levels;
        config["photons"] = args.photons;
        config["ladder"] = args.ladder;

        const hq::FitResult fit_result = hq::fit_spectroscopy(measured, options);
        json result = fit_result_json(fit_result);
        result["ej_over_h_ghz"] = fit_result.value("ej_over_h_hz") / 1e9;
        result["ec_over_h_ghz"] = fit_result.value("ec_over_h_hz") / 1e9;
        result["g01_over_2pi_ghz"] = fit_result.value("g01_over_2pi_hz") / 1e9;
        emit("spectro fit", std::move(config), std::move(result));
    });
}

struct DielectricArgs {
    std::string f_empty, f_full, f_bare;
    std::string epsilon = "1.057";
    std::string delta_cq = "0", delta_cg = "0", cg_over_cq;
};

void add_dielectric(CLI::App& app, DielectricArgs& args) {
    auto* dielectric = app.add_subcommand("dielectric", "Dielectric-immersion models");
    dielectric->require_subcommand(1);

    auto* epsilon = dielectric->add_subcommand(
        "epsilon", "Effective dielectric constant from the cavity frequency pair");
    epsilon->add_option("--f-empty", args.f_empty, "Empty-cavity frequency")->required();
    epsilon->add_option("--f-full", args.f_full, "Filled-cavity frequency")->required();
    epsilon->callback([&args] {
        const double fe = freq_hz(args.f_empty, "--f-empty");
        const double ff = freq_hz(args.f_full, "--f-full");
        json config{{"f_empty_ghz", fe / 1e9}, {"f_full_ghz", ff / 1e9}};
        json result{{"epsilon", hq::epsilon_from_frequencies(fe, ff)}};
        emit("dielectric epsilon", std::move(config), std::move(result));
    });

    auto* shift = dielectric->add_subcommand("shift", "Cavity frequency under a dielectric");
    shift->add_option("--f-bare", args.f_bare, "Bare cavity frequency")->required();
    shift->add_option("--epsilon", args.epsilon, "Relative permittivity")->required();
    shift->callback([&args] {
        const double fb = freq_hz(args.f_bare, "--f-bare");
        const double eps = plain(args.epsilon, "--epsilon");
        json config{{"f_bare_ghz", fb / 1e9}, {"epsilon", eps}};
        json result{{"f_shifted_ghz", hq::shifted_cavity_frequency(fb, eps) / 1e9}};
        emit("dielectric shift", std::move(config), std::move(result));
    });

    auto* g01_shift = dielectric->add_subcommand(
        "g01-shift", "Predicted fractional change of the vacuum Rabi coupling");
    g01_shift->add_option("--epsilon", args.epsilon, "Relative permittivity")->required();
    g01_shift->add_option("--delta-cq", args.delta_cq, "Fractional Cq change (e.g. 0.78%)")
        ->required();
    g01_shift->add_option("--delta-cg", args.delta_cg, "Fractional Cg change (e.g. 1.65%)")
        ->required();
    g01_shift->add_option("--cg-over-cq", args.cg_over_cq,
                          "Cg/Cq ratio; omit for the small-Cg limit");
    g01_shift->callback([&args] {
        hq::DielectricInputs inputs;
        inputs.epsilon = plain(args.epsilon, "--epsilon");
        inputs.delta_cq = plain(args.delta_cq, "--delta-cq");
        inputs.delta_cg = plain(args.delta_cg, "--delta-cg");
        if (!args.cg_over_cq.empty()) {
            inputs.cg_over_cq = plain(args.cg_over_cq, "--cg-over-cq");
        }
        json config{{"epsilon", inputs.epsilon},
                    {"delta_cq", inputs.delta_cq},
                    {"delta_cg", inputs.delta_cg},
                    {"cg_over_cq", inputs.cg_over_cq ? json(*inputs.cg_over_cq) : json(nullptr)},
                    {"beta_treatment", inputs.cg_over_cq ? "general" : "small-cg-limit"}};
        json result;
        result["delta_g01"] = hq::delta_g01_model(inputs);
        result["delta_g01_percent"] = hq::delta_g01_model(inputs) * 100.0;
        result["vzpf_factor"] = hq::vzpf_scale(inputs.epsilon);
        result["ec_shift"] = hq::ec_shift_from_cq(inputs.delta_cq);
        result["ec_shift_percent"] = hq::ec_shift_from_cq(inputs.delta_cq) * 100.0;
        emit("dielectric g01-shift", std::move(config), std::move(result));
    });
}

struct DecoherenceArgs {
    std::string gap = "160ueV", x_neq = "0", temperature;
    std::string omega01, omega_c, g01, kappa = "120kHz", chi, gamma_phi;
    std::string t1, t2, input, t_min = "60mK";
};

void add_decoherence(CLI::App& app, DecoherenceArgs& args) {
    auto* deco = app.add_subcommand("decoherence", "Relaxation and dephasing models");
    deco->require_subcommand(1);

    auto* qp = deco->add_subcommand("qp", "Quasiparticle rate and frequency shift");
    qp->add_option("--gap", args.gap, "Superconducting gap, e.g. 160ueV");
    qp->add_option("--omega01", args.omega01, "Qubit frequency")->required();
    qp->add_option("--x-neq", args.x_neq, "Nonequilibrium quasiparticle density")->required();
    qp->add_option("--temperature", args.temperature,
                   "Adds the thermal quasiparticle density at this temperature");
    qp->callback([&args] {
        hq::QuasiparticleParams params;
        params.gap = energy_j(args.gap, "--gap");
        params.omega01 = hq::linear_to_angular(freq_hz(args.omega01, "--omega01"));
        params.x_neq = plain(args.x_neq, "--x-neq");
        json config{{"gap_uev", params.gap / (1e-6 * hq::constants.e_charge)},
                    {"omega01_ghz", hq::angular_to_linear(params.omega01) / 1e9},
                    {"x_neq", params.x_neq}};
        double x_total = params.x_neq;
        json result;
        if (!args.temperature.empty()) {
            const double t_k = temp_k(args.temperature, "--temperature");
            config["temperature_mk"] = t_k * 1e3;
            result["x_thermal"] = hq::x_qp_thermal(params.gap, t_k);
            x_total += hq::x_qp_thermal(params.gap, t_k);
        }
        const double rate = hq::gamma_qp(params, x_total);
        result["x_total"] = x_total;
        result["gamma_qp_per_s"] = rate;
        result["t1_us"] = rate > 0.0 ? json(1e6 / rate) : json(nullptr);
        result["delta_omega01_khz"] =
            hq::angular_to_linear(hq::delta_omega01_qp(params, x_total)) / 1e3;
        emit("decoherence qp", std::move(config), std::move(result));
    });

    auto* t1fit = deco->add_subcommand("t1-fit", "Fit gap and x_neq to T1-vs-temperature data");
    t1fit->add_option("--input", args.input, "CSV: temperature_k,t1_s,t1_err_s")->required();
    t1fit->add_option("--omega01", args.omega01, "Qubit frequency")->required();
    t1fit->add_option("--t-min", args.t_min, "Fit floor temperature (default 60mK)");
    t1fit->callback([&args] {
        const auto data = hq::load_t1_vs_temperature_csv(args.input);
        const double omega01 = hq::linear_to_angular(freq_hz(args.omega01, "--omega01"));
        hq::T1FitOptions options;
        options.t_min_fit_k = temp_k(args.t_min, "--t-min");
        json config{{"input", args.input},
                    {"omega01_ghz", hq::angular_to_linear(omega01) / 1e9},
                    {"t_min_mk", options.t_min_fit_k * 1e3},
                    {"n_points", data.size()}};
        const hq::FitResult fit = hq::fit_t1_vs_temperature(data, omega01, options);
        json result = fit_result_json(fit);
        result["gap_uev"] = fit.value("gap_uev");
        result["x_neq"] = fit.value("x_neq");
        emit("decoherence t1-fit", std::move(config), std::move(result));
    });

    auto* purcell = deco->add_subcommand("purcell", "Purcell emission through the cavity");
    purcell->add_option("--g01", args.g01, "Coupling g01/2pi")->required();
    purcell->add_option("--omega-c", args.omega_c, "Cavity frequency")->required();
    purcell->add_option("--omega01", args.omega01, "Qubit frequency")->required();
    purcell->add_option("--kappa", args.kappa, "Cavity linewidth (default 120kHz)");
    purcell->callback([&args] {
        const double g01 = hq::linear_to_angular(freq_hz(args.g01, "--g01"));
        const double omega_c = hq::linear_to_angular(freq_hz(args.omega_c, "--omega-c"));
        const double omega01 = hq::linear_to_angular(freq_hz(args.omega01, "--omega01"));
        const double kappa = hq::linear_to_angular(freq_hz(args.kappa, "--kappa"));
        json config{{"g01_over_2pi_ghz", hq::angular_to_linear(g01) / 1e9},
                    {"omega_c_ghz", hq::angular_to_linear(omega_c) / 1e9},
                    {"omega01_ghz", hq::angular_to_linear(omega01) / 1e9},
                    {"kappa_khz", hq::angular_to_linear(kappa) / 1e3}};
        const double rate = hq::gamma_purcell(g01, omega_c - omega01, kappa);
        json result{{"detuning_ghz", hq::angular_to_linear(omega_c - omega01) / 1e9},
                    {"gamma_p_per_s", rate},
                    {"purcell_time_us", rate > 0.0 ? json(1e6 / rate) : json(nullptr)}};
        emit("decoherence purcell", std::move(config), std::move(result));
    });

    auto* photon_temp = deco->add_subcommand(
        "photon-temp", "Photon-bath temperature from a measured dephasing rate");
    photon_temp->add_option("--gamma-phi", args.gamma_phi, "Pure dephasing rate, e.g. 11900/s")
        ->required();
    photon_temp->add_option("--kappa", args.kappa, "Cavity linewidth (default 120kHz)");
    photon_temp->add_option("--chi", args.chi, "Dispersive shift chi/2pi")->required();
    photon_temp->add_option("--omega-c", args.omega_c, "Cavity frequency")->required();
    photon_temp->callback([&args] {
        const double gamma_phi = rate_per_s(args.gamma_phi, "--gamma-phi");
        const double kappa = hq::linear_to_angular(freq_hz(args.kappa, "--kappa"));
        const double chi = hq::linear_to_angular(freq_hz(args.chi, "--chi"));
        const double omega_c = hq::linear_to_angular(freq_hz(args.omega_c, "--omega-c"));
        json config{{"gamma_phi_per_s", gamma_phi},
                    {"kappa_khz", hq::angular_to_linear(kappa) / 1e3},
                    {"chi_mhz", hq::angular_to_linear(chi) / 1e6},
                    {"omega_c_ghz", hq::angular_to_linear(omega_c) / 1e9}};
        const double t_ph = hq::photon_bath_temperature(gamma_phi, kappa, chi, omega_c);
        json result{{"n_th", gamma_phi * (kappa * kappa + chi * chi) / (kappa * chi * chi)},
                    {"t_ph_mk", t_ph * 1e3}};
        emit("decoherence photon-temp", std::move(config), std::move(result));
    });

    auto* tphi = deco->add_subcommand("tphi", "Pure dephasing time from T1 and T2");
    tphi->add_option("--t1", args.t1, "Energy relaxation time, e.g. 20us")->required();
    tphi->add_option("--t2", args.t2, "Total dephasing time, e.g. 15us")->required();
    tphi->callback([&args] {
        const double t1 = time_s(args.t1, "--t1");
        const double t2 = time_s(args.t2, "--t2");
        json config{{"t1_us", t1 * 1e6}, {"t2_us", t2 * 1e6}};
        json result{{"tphi_us", hq::t_phi_from_t1_t2(t1, t2) * 1e6}};
        emit("decoherence tphi", std::move(config), std::move(result));
    });
}

struct PopulationArgs {
    std::string omega01, omega12, omega23, t, t_min, t_max, t_step = "5mK";
    std::string out;
};

void add_population(CLI::App& app, PopulationArgs& args) {
    auto* pop = app.add_subcommand(
        "population", "Residual excited-state populations (4-level truncated partition sum)");
    pop->add_option("--omega01", args.omega01, "0-1 transition")->required();
    pop->add_option("--omega12", args.omega12, "1-2 transition")->required();
    pop->add_option("--omega23", args.omega23,
                    "2-3 transition; Duffing extrapolation when omitted");
    pop->add_option("--t", args.t, "Single temperature, e.g. 100mK");
    pop->add_option("--t-min", args.t_min, "Sweep start temperature");
    pop->add_option("--t-max", args.t_max, "Sweep stop temperature");
    pop->add_option("--t-step", args.t_step, "Sweep step (default 5mK)");
    pop->add_option("--out", args.out, "CSV output path for sweeps");
    pop->callback([&args] {
        const double omega01 = hq::linear_to_angular(freq_hz(args.omega01, "--omega01"));
        const double omega12 = hq::linear_to_angular(freq_hz(args.omega12, "--omega12"));
        std::array<double, 4> ladder = hq::mb_level_ladder(omega01, omega12);
        if (!args.omega23.empty()) {
            const double omega23 = hq::linear_to_angular(freq_hz(args.omega23, "--omega23"));
            ladder[3] = ladder[2] + omega23;
        }
        json config{{"omega01_ghz", hq::angular_to_linear(omega01) / 1e9},
                    {"omega12_ghz", hq::angular_to_linear(omega12) / 1e9},
                    {"level_ghz",
                     {hq::angular_to_linear(ladder[0]) / 1e9, hq::angular_to_linear(ladder[1]) / 1e9,
                      hq::angular_to_linear(ladder[2]) / 1e9,
                      hq::angular_to_linear(ladder[3]) / 1e9}}};

        if (!args.t.empty()) {
            const double t_k = temp_k(args.t, "--t");
            config["temperature_mk"] = t_k * 1e3;
            json result;
            for (int level = 0; level < 4; ++level) {
                result["p" + std::to_string(level)] = hq::mb_population(ladder, t_k, level);
            }
            emit("population", std::move(config), std::move(result));
            return;
        }
        if (args.t_min.empty() || args.t_max.empty()) {
            throw CLI::ValidationError("population",
                                       "provide --t or a sweep via --t-min and --t-max");
        }
        const double t_lo = temp_k(args.t_min, "--t-min");
        const double t_hi = temp_k(args.t_max, "--t-max");
        const double t_step = temp_k(args.t_step, "--t-step");
        if (!(t_step > 0.0) || !(t_hi >= t_lo)) {
            throw CLI::ValidationError("population", "need t-max >= t-min and a positive t-step");
        }
        config["t_min_mk"] = t_lo * 1e3;
        config["t_max_mk"] = t_hi * 1e3;
        config["t_step_mk"] = t_step * 1e3;

        std::vector<std::array<double, 5>> rows;
        for (double t_k = t_lo; t_k <= t_hi + 1e-12; t_k += t_step) {
            std::array<double, 5> row{t_k, 0, 0, 0, 0};
            for (int level = 0; level < 4; ++level) {
                row[static_cast<std::size_t>(level) + 1] = hq::mb_population(ladder, t_k, level);
            }
            rows.push_back(row);
        }
        json result{{"n_rows", rows.size()}};
        if (!args.out.empty()) {
            std::ofstream out(args.out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write '" + args.out + "'");
            out << "temperature_k,p0,p1,p2,p3\n";
            for (const auto& row : rows) {
                out << hq::format_double(row[0]);
                for (int k = 1; k < 5; ++k) out << ',' << hq::format_double(row[static_cast<std::size_t>(k)]);
                out << '\n';
            }
            result["out"] = args.out;
        } else {
            json table = json::array();
            for (const auto& row : rows) {
                table.push_back({{"temperature_k", row[0]},
                                 {"p0", row[1]},
                                 {"p1", row[2]},
                                 {"p2", row[3]},
                                 {"p3", row[4]}});
            }
            result["rows"] = table;
        }
        emit("population", std::move(config), std::move(result));
    });
}

struct TracesArgs {
    std::string kind, input, out, trace_id;
    std::string t1 = "20us", t2 = "15us", detuning = "300kHz";
    std::string amplitude = "", offset = "";
    std::string phase = "0";
    std::string t_max = "";
    int points = 0;
    int shots = 1000;
    int count = 1;
    bool noiseless = false;
    std::uint64_t seed = 0;
    // frequency-series knobs
    std::string f0 = "5.1914GHz", jump_amplitude = "40kHz", jitter = "1kHz";
    double dwell_steady = 45.0, dwell_jumped = 5.0;
    // t1-vs-temperature knobs
    std::string gap = "160ueV", x_neq = "5.25e-6", omega01 = "5.1914GHz";
    std::string temp_min = "60mK", temp_max = "220mK";
    std::string noise = "0.05";
};

void add_traces(CLI::App& app, TracesArgs& args) {
    auto* traces = app.add_subcommand("traces", "Synthesize and analyze measurement records");
    traces->require_subcommand(1);

    auto* synth = traces->add_subcommand("synth", "Deterministic seeded synthetic data");
    synth->add_option("--kind", args.kind, "t1 | ramsey | freq-series | t1-vs-t")->required();
    synth->add_option("--seed", args.seed, "64-bit generator seed");
    synth->add_option("--out", args.out, "Output CSV path")->required();
    synth->add_option("--t1", args.t1, "Decay time (t1 kind)");
    synth->add_option("--t2", args.t2, "Envelope time (ramsey kind)");
    synth->add_option("--detuning", args.detuning, "Fringe detuning (ramsey kind)");
    synth->add_option("--amplitude", args.amplitude, "Curve amplitude (default 0.95 t1 / 0.5 ramsey)");
    synth->add_option("--offset", args.offset, "Curve offset (default 0.03 t1 / 0.5 ramsey)");
    synth->add_option("--phase", args.phase, "Fringe phase in rad (ramsey kind)");
    synth->add_option("--t-max", args.t_max, "Trace duration (default 100us t1 / 60us ramsey)");
    synth->add_option("--points", args.points, "Points per trace (default 50 t1 / 200 ramsey)");
    synth->add_option("--shots", args.shots, "Shots per point");
    synth->add_option("--count", args.count, "Number of traces (seed advances per trace)");
    synth->add_flag("--noiseless", args.noiseless, "Emit the exact curve (infinite-shot limit)");
    synth->add_option("--trace-id", args.trace_id, "Base trace identifier");
    synth->add_option("--f0", args.f0, "Base frequency (freq-series kind)");
    synth->add_option("--jump-amplitude", args.jump_amplitude, "Telegraph amplitude");
    synth->add_option("--jitter", args.jitter, "White jitter sigma");
    synth->add_option("--dwell-steady", args.dwell_steady, "Mean steady dwell, samples");
    synth->add_option("--dwell-jumped", args.dwell_jumped, "Mean jumped dwell, samples");
    synth->add_option("--gap", args.gap, "Gap (t1-vs-t kind)");
    synth->add_option("--x-neq", args.x_neq, "Floor density (t1-vs-t kind)");
    synth->add_option("--omega01", args.omega01, "Qubit frequency (t1-vs-t kind)");
    synth->add_option("--temp-min", args.temp_min, "Lowest temperature (t1-vs-t kind)");
    synth->add_option("--temp-max", args.temp_max, "Highest temperature (t1-vs-t kind)");
    synth->add_option("--noise", args.noise, "Relative scatter (t1-vs-t kind)");
    synth->callback([&args] {
        json config{{"kind", args.kind}, {"seed", args.seed}, {"out", args.out}};
        json result;
        if (args.kind == "t1" || args.kind == "ramsey") {
            const int points = args.points > 0 ? args.points : (args.kind == "t1" ? 50 : 200);
            config["points"] = points;
            config["shots"] = args.shots;
            config["noiseless"] = args.noiseless;
            config["count"] = args.count;
            std::vector<hq::TraceRecord> records;
            for (int i = 0; i < args.count; ++i) {
                const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
                std::string id = args.trace_id.empty() ? args.kind : args.trace_id;
                if (args.count > 1) id += "-" + std::to_string(i);
                if (args.kind == "t1") {
                    hq::T1TraceSpec spec;
                    spec.t1_s = time_s(args.t1, "--t1");
                    spec.amplitude = args.amplitude.empty() ? 0.95 : plain(args.amplitude, "--amplitude");
                    spec.offset = args.offset.empty() ? 0.03 : plain(args.offset, "--offset");
                    spec.t_max_s = args.t_max.empty() ? 100e-6 : time_s(args.t_max, "--t-max");
                    spec.n_points = points;
                    spec.n_shots = args.shots;
                    spec.noiseless = args.noiseless;
                    spec.seed = seed;
                    spec.trace_id = id;
                    if (i == 0) {
                        config["t1_us"] = spec.t1_s * 1e6;
                        config["amplitude"] = spec.amplitude;
                        config["offset"] = spec.offset;
                        config["t_max_us"] = spec.t_max_s * 1e6;
                    }
                    records.push_back(hq::gen_t1_trace(spec));
                } else {
                    hq::RamseyTraceSpec spec;
                    spec.t2_s = time_s(args.t2, "--t2");
                    spec.detuning_hz = freq_hz(args.detuning, "--detuning");
                    spec.phase_rad = plain(args.phase, "--phase");
                    spec.amplitude = args.amplitude.empty() ? 0.5 : plain(args.amplitude, "--amplitude");
                    spec.offset = args.offset.empty() ? 0.5 : plain(args.offset, "--offset");
                    spec.t_max_s = args.t_max.empty() ? 60e-6 : time_s(args.t_max, "--t-max");
                    spec.n_points = points;
                    spec.n_shots = args.shots;
                    spec.noiseless = args.noiseless;
                    spec.seed = seed;
                    spec.trace_id = id;
                    if (i == 0) {
                        config["t2_us"] = spec.t2_s * 1e6;
                        config["detuning_khz"] = spec.detuning_hz / 1e3;
                        config["phase_rad"] = spec.phase_rad;
                        config["amplitude"] = spec.amplitude;
                        config["offset"] = spec.offset;
                        config["t_max_us"] = spec.t_max_s * 1e6;
                    }
                    records.push_back(hq::gen_ramsey_trace(spec));
                }
            }
            hq::write_traces_csv(args.out, records);
            result["n_traces"] = records.size();
            result["n_rows"] = records.size() * records.front().times.size();
        } else if (args.kind == "freq-series") {
            hq::FrequencySeriesSpec spec;
            spec.base_freq_hz = freq_hz(args.f0, "--f0");
            spec.jump_amplitude_hz = freq_hz(args.jump_amplitude, "--jump-amplitude");
            spec.jitter_sigma_hz = freq_hz(args.jitter, "--jitter");
            spec.mean_dwell_steady = args.dwell_steady;
            spec.mean_dwell_jumped = args.dwell_jumped;
            spec.n_points = args.points > 0 ? args.points : 200;
            spec.seed = args.seed;
            config["f0_ghz"] = spec.base_freq_hz / 1e9;
            config["jump_amplitude_khz"] = spec.jump_amplitude_hz / 1e3;
            config["jitter_khz"] = spec.jitter_sigma_hz / 1e3;
            config["dwell_steady"] = spec.mean_dwell_steady;
            config["dwell_jumped"] = spec.mean_dwell_jumped;
            config["points"] = spec.n_points;
            const hq::FrequencySeries series = hq::gen_frequency_series(spec);
            hq::write_frequency_series_csv(args.out, series.omega01_hz);
            json labels = json::array();
            for (bool b : series.jumped) labels.push_back(b ? 1 : 0);
            result["n_rows"] = series.omega01_hz.size();
            result["ground_truth_jumped"] = labels;
        } else if (args.kind == "t1-vs-t") {
            hq::T1VsTemperatureSpec spec;
            spec.gap_j = energy_j(args.gap, "--gap");
            spec.x_neq = plain(args.x_neq, "--x-neq");
            spec.omega01 = hq::linear_to_angular(freq_hz(args.omega01, "--omega01"));
            spec.t_min_k = temp_k(args.temp_min, "--temp-min");
            spec.t_max_k = temp_k(args.temp_max, "--temp-max");
            spec.n_points = args.points > 0 ? args.points : 17;
            spec.noise_fraction = plain(args.noise, "--noise");
            spec.seed = args.seed;
            config["gap_uev"] = spec.gap_j / (1e-6 * hq::constants.e_charge);
            config["x_neq"] = spec.x_neq;
            config["omega01_ghz"] = hq::angular_to_linear(spec.omega01) / 1e9;
            config["temp_min_mk"] = spec.t_min_k * 1e3;
            config["temp_max_mk"] = spec.t_max_k * 1e3;
            config["points"] = spec.n_points;
            config["noise"] = spec.noise_fraction;
            const auto points = hq::gen_t1_vs_temperature(spec);
            hq::write_t1_vs_temperature_csv(args.out, points);
            result["n_rows"] = points.size();
        } else {
            throw CLI::ValidationError("--kind",
                                       "must be one of: t1, ramsey, freq-series, t1-vs-t");
        }
        emit("traces synth", std::move(config), std::move(result));
    });

    auto* analyze = traces->add_subcommand("analyze", "Fit decay or fringe models per trace");
    analyze->add_option("--kind", args.kind, "t1 | ramsey")->required();
    analyze->add_option("--input", args.input, "CSV: trace_id,time_s,p_excited,n_shots")
        ->required();
    analyze->callback([&args] {
        json config{{"kind", args.kind}, {"input", args.input}};
        const auto records = hq::load_traces_csv(args.input);
        json fits = json::array();
        for (const auto& rec : records) {
            if (args.kind == "t1") {
                const hq::T1TraceFit fit = hq::fit_t1_trace(rec);
                fits.push_back({{"trace_id", rec.trace_id},
                                {"t1_us", fit.t1_s * 1e6},
                                {"amplitude", fit.amplitude},
                                {"offset", fit.offset},
                                {"residual_norm", fit.residual_norm},
                                {"converged", fit.converged}});
            } else if (args.kind == "ramsey") {
                const hq::RamseyTraceFit fit = hq::fit_ramsey_trace(rec);
                fits.push_back({{"trace_id", rec.trace_id},
                                {"t2_us", fit.t2_s * 1e6},
                                {"detuning_khz", fit.detuning_hz / 1e3},
                                {"phase_rad", fit.phase_rad},
                                {"amplitude", fit.amplitude},
                                {"offset", fit.offset},
                                {"residual_norm", fit.residual_norm},
                                {"converged", fit.converged}});
            } else {
                throw CLI::ValidationError("--kind", "must be 't1' or 'ramsey'");
            }
        }
        json result{{"n_traces", fits.size()}, {"fits", fits}};
        emit("traces analyze", std::move(config), std::move(result));
    });

    auto* jumps = traces->add_subcommand("jumps", "Flag discrete frequency jumps");
    jumps->add_option("--input", args.input, "CSV: index,omega01_hz")->required();
    jumps->callback([&args] {
        json config{{"input", args.input}};
        const auto freqs = hq::load_frequency_series_csv(args.input);
        const hq::JumpDetection detection = hq::detect_jumps(freqs);
        json mask = json::array();
        int flagged = 0;
        for (bool b : detection.jump_mask) {
            mask.push_back(b ? 1 : 0);
            flagged += b;
        }
        json result{{"steady_state_freq_hz", detection.steady_state_freq_hz},
                    {"n_samples", freqs.size()},
                    {"n_flagged", flagged},
                    {"center_hz", detection.center_hz},
                    {"scale_hz", detection.scale_hz},
                    {"used_two_means", detection.used_two_means},
                    {"ambiguous_split", detection.ambiguous_split},
                    {"jump_mask", mask}};
        emit("traces jumps", std::move(config), std::move(result));
    });

    auto* stats = traces->add_subcommand(
        "stats", "Pure-dephasing composition and series statistics of paired T1/T2 samples");
    stats->add_option("--input", args.input, "CSV: index,t1_s,t2_s")->required();
    stats->callback([&args] {
        json config{{"input", args.input}};
        const auto pairs = hq::load_coherence_pairs_csv(args.input);
        std::vector<double> t1s, tphis;
        t1s.reserve(pairs.size());
        tphis.reserve(pairs.size());
        for (const auto& pair : pairs) {
            t1s.push_back(pair.t1_s);
            tphis.push_back(hq::t_phi_from_t1_t2(pair.t1_s, pair.t2_s));
        }
        const hq::SeriesStats stats_out = hq::series_statistics(t1s, tphis);
        json result{{"n", pairs.size()},
                    {"mean_t1_us", stats_out.mean_t1_s * 1e6},
                    {"std_t1_us", stats_out.std_t1_s * 1e6},
                    {"mean_tphi_us", stats_out.mean_tphi_s * 1e6},
                    {"std_tphi_us", stats_out.std_tphi_s * 1e6},
                    {"rho_defined", stats_out.rho.has_value()},
                    {"rho", stats_out.rho ? json(*stats_out.rho) : json(nullptr)}};
        emit("traces stats", std::move(config), std::move(result));
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cavity/transmon spectroscopy, dielectric-shift and decoherence toolkit"};
    app.set_version_flag("--version", hq::version);
    app.require_subcommand(1);

    SpectroArgs spectro_args;
    DielectricArgs dielectric_args;
    DecoherenceArgs decoherence_args;
    PopulationArgs population_args;
    TracesArgs traces_args;

    add_spectro(app, spectro_args);
    add_dielectric(app, dielectric_args);
    add_decoherence(app, decoherence_args);
    add_population(app, population_args);
    add_traces(app, traces_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
