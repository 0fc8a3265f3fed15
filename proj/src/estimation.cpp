#include "heliumq/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "heliumq/decoherence.hpp"

namespace heliumq {

FitResult fit_spectroscopy(const SpectroObservables& measured,
                           const SpectroscopyFitOptions& options) {
    measured.validate();

    const double f01 = angular_to_linear(measured.omega01);
    const double f12 = angular_to_linear(measured.omega12);
    const double fc = angular_to_linear(measured.omega_c_bare);
    const double df_pull = angular_to_linear(measured.delta_omega);

    // Initial guesses from the asymptotic transmon relations.
    const double ec0 = f01 - f12;
    const double ej0 = (f01 + ec0) * (f01 + ec0) / (8.0 * ec0);
    const double g0 = std::sqrt(df_pull * std::abs(fc - f01));

    const std::vector<double> x0{ej0, ec0, g0};
    const std::vector<std::pair<double, double>> bounds{
        {1e9, 100e9}, {0.05e9, 2e9}, {1e6, 1e9}};
    const std::vector<std::string> names{"ej_over_h_hz", "ec_over_h_hz", "g01_over_2pi_hz"};

    const ResidualFn objective = [&](std::span<const double> x) {
        JchSystem sys;
        sys.transmon = TransmonParams::from_ghz(x[0] / 1e9, x[1] / 1e9);
        sys.omega_c_bare = measured.omega_c_bare;
        sys.g01 = linear_to_angular(x[2]);
        sys.n_transmon_levels = options.n_transmon_levels;
        sys.n_photons = options.n_photons;
        sys.ladder = options.ladder;
        const SpectroObservables model = dressed_observables(sys);
        return std::vector<double>{angular_to_linear(model.omega01) - f01,
                                   angular_to_linear(model.omega12) - f12,
                                   angular_to_linear(model.delta_omega) - df_pull};
    };

    FitResult result = minimize_least_squares(objective, x0, bounds, names, options.lsq);
    if (result.residual_norm > 100e3) {
        result.notes.push_back("residual norm exceeds 100 kHz: model mismatch suspected");
    }
    return result;
}

FitResult fit_t1_vs_temperature(std::span<const T1VsTemperaturePoint> data, double omega01,
                                const T1FitOptions& options) {
    std::vector<T1VsTemperaturePoint> kept;
    for (const auto& pt : data) {
        if (pt.temperature_k >= options.t_min_fit_k) kept.push_back(pt);
    }
    if (kept.size() < 4) {
        throw std::invalid_argument("need at least 4 points at or above the fit floor of " +
                                    std::to_string(options.t_min_fit_k * 1e3) + " mK");
    }
    for (const auto& pt : kept) {
        if (!(pt.t1_s > 0.0)) throw std::invalid_argument("T1 values must be positive");
        if (!(pt.sigma_t1_s > 0.0)) {
            throw std::invalid_argument("degenerate weights: every sigma_T1 must be positive");
        }
    }

    const double uev = 1e-6 * constants.e_charge;
    // Floor density from the slowest decay, mid-bound gap as the start.
    const double gap0_uev = 175.0;
    double t1_max = 0.0;
    for (const auto& pt : kept) t1_max = std::max(t1_max, pt.t1_s);
    QuasiparticleParams probe{gap0_uev * uev, 0.0, omega01};
    const double x0_guess = std::clamp(
        std::numbers::pi / (t1_max * std::sqrt(2.0 * probe.gap * omega01 / constants.hbar)), 1e-9,
        9e-5);

    const std::vector<double> x0{gap0_uev, x0_guess};
    const std::vector<std::pair<double, double>> bounds{{100.0, 250.0}, {0.0, 1e-4}};
    const std::vector<std::string> names{"gap_uev", "x_neq"};

    const ResidualFn objective = [&](std::span<const double> x) {
        QuasiparticleParams qp{x[0] * uev, x[1], omega01};
        std::vector<double> r;
        r.reserve(kept.size());
        for (const auto& pt : kept) {
            const double model_rate = gamma_qp(qp, qp.x_neq + x_qp_thermal(qp.gap, pt.temperature_k));
            const double sigma_rate = pt.sigma_t1_s / (pt.t1_s * pt.t1_s);
            r.push_back((1.0 / pt.t1_s - model_rate) / sigma_rate);
        }
        return r;
    };

    return minimize_least_squares(objective, x0, bounds, names, options.lsq);
}

}  // namespace heliumq
