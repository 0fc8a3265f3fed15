#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heliumq/csv_io.hpp"
#include "heliumq/decoherence.hpp"
#include "heliumq/dielectric.hpp"
#include "heliumq/estimation.hpp"
#include "heliumq/jaynes_cummings.hpp"
#include "heliumq/trace_analysis.hpp"
#include "heliumq/trace_synth.hpp"
#include "heliumq/units.hpp"
#include "heliumq/version.hpp"

namespace py = pybind11;
using namespace heliumq;

namespace {

py::dict fit_result_dict(const FitResult& fit) {
    py::dict params;
    for (const auto& p : fit.params) {
        py::dict entry;
        entry["value"] = p.value;
        entry["initial"] = p.initial;
        entry["lower"] = p.lower;
        entry["upper"] = p.upper;
        entry["at_bound"] = p.at_bound;
        params[p.name.c_str()] = entry;
    }
    py::dict out;
    out["params"] = params;
    out["residual_norm"] = fit.residual_norm;
    out["residuals"] = fit.residuals;
    out["n_iterations"] = fit.n_iterations;
    out["converged"] = fit.converged;
    out["notes"] = fit.notes;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cavity/transmon spectroscopy, dielectric-shift and decoherence toolkit";
    m.attr("__version__") = version;
    m.attr("h") = constants.h;
    m.attr("hbar") = constants.hbar;
    m.attr("kB") = constants.kB;
    m.attr("e_charge") = constants.e_charge;

    m.def("linear_to_angular", py::overload_cast<double>(&linear_to_angular), py::arg("f_hz"));
    m.def("angular_to_linear", py::overload_cast<double>(&angular_to_linear),
          py::arg("omega_rad_s"));
    m.def("frequency_to_energy", py::overload_cast<double>(&frequency_to_energy), py::arg("f_hz"));
    m.def("temperature_to_energy", py::overload_cast<double>(&temperature_to_energy),
          py::arg("t_k"));

    py::class_<TransmonParams>(m, "TransmonParams")
        .def(py::init<>())
        .def_static("from_ghz", &TransmonParams::from_ghz, py::arg("ej_over_h_ghz"),
                    py::arg("ec_over_h_ghz"), py::arg("ng") = 0.0,
                    py::arg("n_charge_cutoff") = 15)
        .def_readwrite("ej", &TransmonParams::ej)
        .def_readwrite("ec", &TransmonParams::ec)
        .def_readwrite("ng", &TransmonParams::ng)
        .def_readwrite("n_charge_cutoff", &TransmonParams::n_charge_cutoff)
        .def("validate", &TransmonParams::validate);

    py::class_<TransmonSpectrum>(m, "TransmonSpectrum")
        .def_readonly("levels", &TransmonSpectrum::levels)
        .def_readonly("n_matrix", &TransmonSpectrum::n_matrix)
        .def_readonly("convergence_drift_hz", &TransmonSpectrum::convergence_drift_hz)
        .def("level_angular_frequency", &TransmonSpectrum::level_angular_frequency, py::arg("i"));

    m.def("build_charge_hamiltonian", &build_charge_hamiltonian, py::arg("params"));
    m.def("diagonalize_transmon", &diagonalize_transmon, py::arg("params"), py::arg("n_levels"));
    m.def("charge_matrix_element_asymptotic", &charge_matrix_element_asymptotic,
          py::arg("params"), py::arg("j"));

    py::enum_<CouplingLadder>(m, "CouplingLadder")
        .value("SqrtHarmonic", CouplingLadder::SqrtHarmonic)
        .value("ExactRatios", CouplingLadder::ExactRatios);

    py::class_<JchSystem>(m, "JchSystem")
        .def(py::init<>())
        .def_static("from_ghz", &JchSystem::from_ghz, py::arg("ej_over_h_ghz"),
                    py::arg("ec_over_h_ghz"), py::arg("g01_over_2pi_ghz"), py::arg("cavity_ghz"))
        .def_readwrite("transmon", &JchSystem::transmon)
        .def_readwrite("omega_c_bare", &JchSystem::omega_c_bare)
        .def_readwrite("g01", &JchSystem::g01)
        .def_readwrite("n_transmon_levels", &JchSystem::n_transmon_levels)
        .def_readwrite("n_photons", &JchSystem::n_photons)
        .def_readwrite("ladder", &JchSystem::ladder);

    py::class_<SpectroObservables>(m, "SpectroObservables")
        .def(py::init<>())
        .def_readwrite("omega_c_bare", &SpectroObservables::omega_c_bare)
        .def_readwrite("delta_omega", &SpectroObservables::delta_omega)
        .def_readwrite("omega01", &SpectroObservables::omega01)
        .def_readwrite("omega12", &SpectroObservables::omega12)
        .def("validate", &SpectroObservables::validate);

    m.def("build_jch", &build_jch, py::arg("system"));
    m.def("dressed_observables", &dressed_observables, py::arg("system"));
    m.def("dressed_observables_drift_hz", &dressed_observables_drift_hz, py::arg("system"));
    m.def("dispersive_shift_approx", &dispersive_shift_approx, py::arg("g01"), py::arg("omega_c"),
          py::arg("omega01"));
    m.def("dispersive_chi", &dispersive_chi, py::arg("system"));
    m.def("two_photon_frequency", &two_photon_frequency, py::arg("observables"));

    py::class_<DielectricInputs>(m, "DielectricInputs")
        .def(py::init([](double epsilon, double delta_cq, double delta_cg,
                         std::optional<double> cg_over_cq) {
                 DielectricInputs inputs{epsilon, delta_cq, delta_cg, cg_over_cq};
                 inputs.validate();
                 return inputs;
             }),
             py::arg("epsilon"), py::arg("delta_cq") = 0.0, py::arg("delta_cg") = 0.0,
             py::arg("cg_over_cq") = std::nullopt)
        .def_readwrite("epsilon", &DielectricInputs::epsilon)
        .def_readwrite("delta_cq", &DielectricInputs::delta_cq)
        .def_readwrite("delta_cg", &DielectricInputs::delta_cg)
        .def_readwrite("cg_over_cq", &DielectricInputs::cg_over_cq);

    m.def("epsilon_from_frequencies", &epsilon_from_frequencies, py::arg("f_empty_hz"),
          py::arg("f_full_hz"));
    m.def("shifted_cavity_frequency", &shifted_cavity_frequency, py::arg("f_bare_hz"),
          py::arg("epsilon"));
    m.def("vzpf_scale", &vzpf_scale, py::arg("epsilon"));
    m.def("beta", &beta, py::arg("cg"), py::arg("cq"));
    m.def("ec_shift_from_cq", &ec_shift_from_cq, py::arg("delta_cq"));
    m.def("delta_g01_model", &delta_g01_model, py::arg("inputs"));

    py::class_<QuasiparticleParams>(m, "QuasiparticleParams")
        .def(py::init([](double gap, double x_neq, double omega01) {
                 QuasiparticleParams p{gap, x_neq, omega01};
                 p.validate();
                 return p;
             }),
             py::arg("gap"), py::arg("x_neq"), py::arg("omega01"))
        .def_readwrite("gap", &QuasiparticleParams::gap)
        .def_readwrite("x_neq", &QuasiparticleParams::x_neq)
        .def_readwrite("omega01", &QuasiparticleParams::omega01);

    m.attr("default_kappa_rad_s") = default_kappa_rad_s;
    m.def("x_qp_thermal", &x_qp_thermal, py::arg("gap_j"), py::arg("t_k"));
    m.def("gamma_qp", &gamma_qp, py::arg("params"), py::arg("x_total"));
    m.def("delta_omega01_qp", &delta_omega01_qp, py::arg("params"), py::arg("x_total"));
    m.def("t1_model_vs_temperature", &t1_model_vs_temperature, py::arg("params"), py::arg("t_k"));
    m.def("gamma_purcell", &gamma_purcell, py::arg("g01"), py::arg("detuning"), py::arg("kappa"));
    m.def("n_th", &n_th, py::arg("omega_c"), py::arg("t_k"));
    m.def(
        "gamma_phi_photon",
        [](double kappa, double chi, double omega_c, double n_th_value) {
            const auto out =
                gamma_phi_photon(PhotonDephasingParams::from_photon_number(kappa, chi, omega_c,
                                                                           n_th_value));
            return py::make_tuple(out.rate, out.outside_kappa_chi_limit);
        },
        py::arg("kappa"), py::arg("chi"), py::arg("omega_c"), py::arg("n_th"),
        "Returns (rate, outside_kappa_chi_limit)");
    m.def("photon_bath_temperature", &photon_bath_temperature, py::arg("gamma_phi"),
          py::arg("kappa"), py::arg("chi"), py::arg("omega_c"));
    m.def("t_phi_from_t1_t2", &t_phi_from_t1_t2, py::arg("t1_s"), py::arg("t2_s"));
    m.def(
        "mb_population",
        [](const std::vector<double>& level_freqs, double t_k, int level) {
            return mb_population(level_freqs, t_k, level);
        },
        py::arg("level_freqs"), py::arg("t_k"), py::arg("level"));
    m.def("mb_level_ladder", &mb_level_ladder, py::arg("omega01"), py::arg("omega12"));

    m.def(
        "fit_spectroscopy",
        [](const SpectroObservables& measured, int n_transmon_levels, int n_photons) {
            SpectroscopyFitOptions options;
            options.n_transmon_levels = n_transmon_levels;
            options.n_photons = n_photons;
            return fit_result_dict(fit_spectroscopy(measured, options));
        },
        py::arg("measured"), py::arg("n_transmon_levels") = 4, py::arg("n_photons") = 12);

    py::class_<T1VsTemperaturePoint>(m, "T1VsTemperaturePoint")
        .def(py::init<double, double, double>(), py::arg("temperature_k"), py::arg("t1_s"),
             py::arg("sigma_t1_s"))
        .def_readwrite("temperature_k", &T1VsTemperaturePoint::temperature_k)
        .def_readwrite("t1_s", &T1VsTemperaturePoint::t1_s)
        .def_readwrite("sigma_t1_s", &T1VsTemperaturePoint::sigma_t1_s);

    m.def(
        "fit_t1_vs_temperature",
        [](const std::vector<T1VsTemperaturePoint>& data, double omega01, double t_min_fit_k) {
            T1FitOptions options;
            options.t_min_fit_k = t_min_fit_k;
            return fit_result_dict(fit_t1_vs_temperature(data, omega01, options));
        },
        py::arg("data"), py::arg("omega01"), py::arg("t_min_fit_k") = 0.060);

    py::class_<TraceRecord>(m, "TraceRecord")
        .def(py::init<>())
        .def_readwrite("trace_id", &TraceRecord::trace_id)
        .def_readwrite("times", &TraceRecord::times)
        .def_readwrite("p_excited", &TraceRecord::p_excited)
        .def_readwrite("n_shots", &TraceRecord::n_shots)
        .def("validate", &TraceRecord::validate);

    py::class_<T1TraceSpec>(m, "T1TraceSpec")
        .def(py::init<>())
        .def_readwrite("t1_s", &T1TraceSpec::t1_s)
        .def_readwrite("amplitude", &T1TraceSpec::amplitude)
        .def_readwrite("offset", &T1TraceSpec::offset)
        .def_readwrite("t_max_s", &T1TraceSpec::t_max_s)
        .def_readwrite("n_points", &T1TraceSpec::n_points)
        .def_readwrite("n_shots", &T1TraceSpec::n_shots)
        .def_readwrite("noiseless", &T1TraceSpec::noiseless)
        .def_readwrite("seed", &T1TraceSpec::seed)
        .def_readwrite("trace_id", &T1TraceSpec::trace_id);

    py::class_<RamseyTraceSpec>(m, "RamseyTraceSpec")
        .def(py::init<>())
        .def_readwrite("t2_s", &RamseyTraceSpec::t2_s)
        .def_readwrite("detuning_hz", &RamseyTraceSpec::detuning_hz)
        .def_readwrite("phase_rad", &RamseyTraceSpec::phase_rad)
        .def_readwrite("amplitude", &RamseyTraceSpec::amplitude)
        .def_readwrite("offset", &RamseyTraceSpec::offset)
        .def_readwrite("t_max_s", &RamseyTraceSpec::t_max_s)
        .def_readwrite("n_points", &RamseyTraceSpec::n_points)
        .def_readwrite("n_shots", &RamseyTraceSpec::n_shots)
        .def_readwrite("noiseless", &RamseyTraceSpec::noiseless)
        .def_readwrite("seed", &RamseyTraceSpec::seed)
        .def_readwrite("trace_id", &RamseyTraceSpec::trace_id);

    py::class_<FrequencySeriesSpec>(m, "FrequencySeriesSpec")
        .def(py::init<>())
        .def_readwrite("base_freq_hz", &FrequencySeriesSpec::base_freq_hz)
        .def_readwrite("jump_amplitude_hz", &FrequencySeriesSpec::jump_amplitude_hz)
        .def_readwrite("jitter_sigma_hz", &FrequencySeriesSpec::jitter_sigma_hz)
        .def_readwrite("mean_dwell_steady", &FrequencySeriesSpec::mean_dwell_steady)
        .def_readwrite("mean_dwell_jumped", &FrequencySeriesSpec::mean_dwell_jumped)
        .def_readwrite("n_points", &FrequencySeriesSpec::n_points)
        .def_readwrite("seed", &FrequencySeriesSpec::seed);

    py::class_<FrequencySeries>(m, "FrequencySeries")
        .def_readonly("omega01_hz", &FrequencySeries::omega01_hz)
        .def_readonly("jumped", &FrequencySeries::jumped);

    py::class_<T1VsTemperatureSpec>(m, "T1VsTemperatureSpec")
        .def(py::init<>())
        .def_readwrite("gap_j", &T1VsTemperatureSpec::gap_j)
        .def_readwrite("x_neq", &T1VsTemperatureSpec::x_neq)
        .def_readwrite("omega01", &T1VsTemperatureSpec::omega01)
        .def_readwrite("t_min_k", &T1VsTemperatureSpec::t_min_k)
        .def_readwrite("t_max_k", &T1VsTemperatureSpec::t_max_k)
        .def_readwrite("n_points", &T1VsTemperatureSpec::n_points)
        .def_readwrite("noise_fraction", &T1VsTemperatureSpec::noise_fraction)
        .def_readwrite("seed", &T1VsTemperatureSpec::seed);

    m.def("gen_t1_trace", &gen_t1_trace, py::arg("spec"));
    m.def("gen_ramsey_trace", &gen_ramsey_trace, py::arg("spec"));
    m.def("gen_frequency_series", &gen_frequency_series, py::arg("spec"));
    m.def("gen_t1_vs_temperature", &gen_t1_vs_temperature, py::arg("spec"));

    py::class_<T1TraceFit>(m, "T1TraceFit")
        .def_readonly("t1_s", &T1TraceFit::t1_s)
        .def_readonly("amplitude", &T1TraceFit::amplitude)
        .def_readonly("offset", &T1TraceFit::offset)
        .def_readonly("residual_norm", &T1TraceFit::residual_norm)
        .def_readonly("converged", &T1TraceFit::converged);

    py::class_<RamseyTraceFit>(m, "RamseyTraceFit")
        .def_readonly("t2_s", &RamseyTraceFit::t2_s)
        .def_readonly("detuning_hz", &RamseyTraceFit::detuning_hz)
        .def_readonly("phase_rad", &RamseyTraceFit::phase_rad)
        .def_readonly("amplitude", &RamseyTraceFit::amplitude)
        .def_readonly("offset", &RamseyTraceFit::offset)
        .def_readonly("residual_norm", &RamseyTraceFit::residual_norm)
        .def_readonly("converged", &RamseyTraceFit::converged);

    py::class_<JumpDetection>(m, "JumpDetection")
        .def_readonly("jump_mask", &JumpDetection::jump_mask)
        .def_readonly("steady_state_freq_hz", &JumpDetection::steady_state_freq_hz)
        .def_readonly("center_hz", &JumpDetection::center_hz)
        .def_readonly("scale_hz", &JumpDetection::scale_hz)
        .def_readonly("used_two_means", &JumpDetection::used_two_means)
        .def_readonly("ambiguous_split", &JumpDetection::ambiguous_split);

    py::class_<SeriesStats>(m, "SeriesStats")
        .def_readonly("mean_t1_s", &SeriesStats::mean_t1_s)
        .def_readonly("std_t1_s", &SeriesStats::std_t1_s)
        .def_readonly("mean_tphi_s", &SeriesStats::mean_tphi_s)
        .def_readonly("std_tphi_s", &SeriesStats::std_tphi_s)
        .def_readonly("rho", &SeriesStats::rho);

    m.def("fit_t1_trace", &fit_t1_trace, py::arg("record"));
    m.def("fit_ramsey_trace", &fit_ramsey_trace, py::arg("record"));
    m.def(
        "detect_jumps",
        [](const std::vector<double>& freqs) { return detect_jumps(freqs); }, py::arg("freqs_hz"));
    m.def(
        "series_statistics",
        [](const std::vector<double>& t1s, const std::vector<double>& tphis) {
            return series_statistics(t1s, tphis);
        },
        py::arg("t1s"), py::arg("tphis"));

    m.def("load_traces_csv", &load_traces_csv, py::arg("path"));
    m.def(
        "write_traces_csv",
        [](const std::string& path, const std::vector<TraceRecord>& records) {
            write_traces_csv(path, records);
        },
        py::arg("path"), py::arg("records"));
    m.def("load_frequency_series_csv", &load_frequency_series_csv, py::arg("path"));
    m.def(
        "write_frequency_series_csv",
        [](const std::string& path, const std::vector<double>& freqs) {
            write_frequency_series_csv(path, freqs);
        },
        py::arg("path"), py::arg("freqs_hz"));
    m.def("load_t1_vs_temperature_csv", &load_t1_vs_temperature_csv, py::arg("path"));
    m.def(
        "write_t1_vs_temperature_csv",
        [](const std::string& path, const std::vector<T1VsTemperaturePoint>& points) {
            write_t1_vs_temperature_csv(path, points);
        },
        py::arg("path"), py::arg("points"));
}
