#include "heliumq/jaynes_cummings.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <vector>

namespace heliumq {

JchSystem JchSystem::from_ghz(double ej_over_h_ghz, double ec_over_h_ghz, double g01_over_2pi_ghz,
                              double cavity_ghz) {
    JchSystem sys;
    sys.transmon = TransmonParams::from_ghz(ej_over_h_ghz, ec_over_h_ghz);
    sys.omega_c_bare = linear_to_angular(cavity_ghz * 1e9);
    sys.g01 = linear_to_angular(g01_over_2pi_ghz * 1e9);
    return sys;
}

void SpectroObservables::validate() const {
    if (!(omega_c_bare > 0.0) || !(delta_omega > 0.0) || !(omega01 > 0.0) || !(omega12 > 0.0)) {
        throw std::invalid_argument("spectroscopy observables must all be positive");
    }
    if (!(omega12 < omega01)) {
        throw std::invalid_argument("expected omega12 < omega01 (negative anharmonicity)");
    }
}

namespace {

void check_truncations(const JchSystem& sys, bool for_observables) {
    if (sys.n_transmon_levels < 2 || sys.n_photons < 1) {
        throw std::invalid_argument("need at least 2 transmon levels and 1 photon state");
    }
    if (for_observables && (sys.n_transmon_levels < 4 || sys.n_photons < 5)) {
        throw std::invalid_argument("observables need n_transmon_levels >= 4 and n_photons >= 5");
    }
    if (!std::isfinite(sys.g01) || !std::isfinite(sys.omega_c_bare) || sys.omega_c_bare <= 0.0) {
        throw std::invalid_argument("invalid cavity frequency or coupling");
    }
}

inline int basis_index(const JchSystem& sys, int i, int n) { return i * sys.n_photons + n; }

}  // namespace

Eigen::MatrixXd build_jch(const JchSystem& sys) {
    check_truncations(sys, false);
    const TransmonSpectrum tr = diagonalize_transmon(sys.transmon, sys.n_transmon_levels);

    std::vector<double> g(sys.n_transmon_levels - 1);
    for (int i = 0; i + 1 < sys.n_transmon_levels; ++i) {
        if (sys.ladder == CouplingLadder::SqrtHarmonic) {
            g[i] = sys.g01 * std::sqrt(i + 1.0);
        } else {
            g[i] = sys.g01 * tr.n_matrix(i + 1, i) / tr.n_matrix(1, 0);
        }
    }

    const int dim = sys.n_transmon_levels * sys.n_photons;
    Eigen::MatrixXd ham = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < sys.n_transmon_levels; ++i) {
        for (int n = 0; n < sys.n_photons; ++n) {
            ham(basis_index(sys, i, n), basis_index(sys, i, n)) =
                tr.levels[static_cast<std::size_t>(i)] + n * constants.hbar * sys.omega_c_bare;
        }
    }
    for (int i = 0; i + 1 < sys.n_transmon_levels; ++i) {
        for (int n = 1; n < sys.n_photons; ++n) {
            const double coupling = constants.hbar * g[static_cast<std::size_t>(i)] * std::sqrt(n);
            ham(basis_index(sys, i, n), basis_index(sys, i + 1, n - 1)) = coupling;
            ham(basis_index(sys, i + 1, n - 1), basis_index(sys, i, n)) = coupling;
        }
    }
    return ham;
}

DressedSpectrum diagonalize_jch(const JchSystem& sys) {
    const Eigen::MatrixXd ham = build_jch(sys);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ham);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Jaynes-Cummings eigensolver failed");
    }
    const Eigen::VectorXd& energies = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();

    DressedSpectrum spec;
    spec.system_echo = sys;
    for (int i = 0; i < sys.n_transmon_levels; ++i) {
        for (int n = 0; n < sys.n_photons; ++n) {
            const int row = basis_index(sys, i, n);
            // Best squared overlap; ties broken toward the lower-energy state
            // by the ascending eigenvalue order of the scan.
            int best = 0;
            double best_overlap = -1.0;
            for (int k = 0; k < energies.size(); ++k) {
                const double ovl = vectors(row, k) * vectors(row, k);
                if (ovl > best_overlap) {
                    best_overlap = ovl;
                    best = k;
                }
            }
            spec.states[BareLabel{i, n}] = DressedState{energies(best), best_overlap};
        }
    }
    return spec;
}

bool DressedSpectrum::resolved(BareLabel label) const {
    auto it = states.find(label);
    return it != states.end() && it->second.overlap > 0.5;
}

double DressedSpectrum::energy(BareLabel label) const {
    auto it = states.find(label);
    if (it == states.end()) {
        throw std::invalid_argument("bare label (" + std::to_string(label.qubit) + "," +
                                    std::to_string(label.photon) + ") outside the truncated basis");
    }
    if (!(it->second.overlap > 0.5)) {
        throw std::runtime_error("strong mixing: bare state |i=" + std::to_string(label.qubit) +
                                 ",n=" + std::to_string(label.photon) +
                                 "> has max squared overlap " + std::to_string(it->second.overlap) +
                                 " <= 0.5, dressed labels are ambiguous");
    }
    return it->second.energy;
}

SpectroObservables dressed_observables(const JchSystem& sys) {
    check_truncations(sys, true);
    if (sys.g01 < 0.0) {
        throw std::invalid_argument("g01 must be >= 0 for dressed observables");
    }
    const DressedSpectrum spec = diagonalize_jch(sys);
    const double e00 = spec.energy({0, 0});
    SpectroObservables obs;
    obs.omega_c_bare = sys.omega_c_bare;
    obs.omega01 = (spec.energy({1, 0}) - e00) / constants.hbar;
    obs.omega12 = (spec.energy({2, 0}) - spec.energy({1, 0})) / constants.hbar;
    obs.delta_omega = (spec.energy({0, 1}) - e00) / constants.hbar - sys.omega_c_bare;
    return obs;
}

double dressed_observables_drift_hz(const JchSystem& sys) {
    const SpectroObservables base = dressed_observables(sys);
    JchSystem bigger = sys;
    bigger.n_transmon_levels += 2;
    bigger.n_photons += 2;
    const SpectroObservables refined = dressed_observables(bigger);
    double drift = std::abs(base.omega01 - refined.omega01);
    drift = std::max(drift, std::abs(base.omega12 - refined.omega12));
    drift = std::max(drift, std::abs(base.delta_omega - refined.delta_omega));
    return angular_to_linear(drift);
}

double dispersive_shift_approx(double g01, double omega_c, double omega01) {
    const double detuning = omega_c - omega01;
    if (detuning == 0.0) {
        throw std::invalid_argument("dispersive approximation undefined at zero detuning");
    }
    return g01 * g01 / detuning;
}

double dispersive_chi(const JchSystem& sys) {
    check_truncations(sys, true);
    const DressedSpectrum spec = diagonalize_jch(sys);
    return (spec.energy({1, 1}) - spec.energy({1, 0}) - spec.energy({0, 1}) +
            spec.energy({0, 0})) /
           constants.hbar;
}

double two_photon_frequency(const SpectroObservables& obs) {
    // No strict-ordering check: the degenerate harmonic case omega01 ==
    // omega12 is a legitimate limit here.
    if (!(obs.omega01 > 0.0) || !(obs.omega12 > 0.0)) {
        throw std::invalid_argument("transition frequencies must be positive");
    }
    return 0.5 * (obs.omega01 + obs.omega12);
}

}  // namespace heliumq
