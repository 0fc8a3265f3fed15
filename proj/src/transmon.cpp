#include "heliumq/transmon.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace heliumq {

TransmonParams TransmonParams::from_ghz(double ej_over_h_ghz, double ec_over_h_ghz, double ng,
                                        int n_charge_cutoff) {
    return TransmonParams{frequency_to_energy(ej_over_h_ghz * 1e9),
                          frequency_to_energy(ec_over_h_ghz * 1e9), ng, n_charge_cutoff};
}

void TransmonParams::validate() const {
    if (!(ej > 0.0) || !(ec > 0.0)) {
        throw std::invalid_argument("transmon requires EJ > 0 and EC > 0");
    }
    if (!(ej / ec > 1.0)) {
        throw std::invalid_argument("transmon regime requires EJ/EC > 1, got " +
                                    std::to_string(ej / ec));
    }
    if (n_charge_cutoff < 10) {
        throw std::invalid_argument("charge cutoff too small: need N >= 10, got " +
                                    std::to_string(n_charge_cutoff));
    }
}

Eigen::MatrixXd build_charge_hamiltonian(const TransmonParams& p) {
    if (p.ej < 0.0 || !(p.ec > 0.0)) {
        throw std::invalid_argument("charge Hamiltonian requires EJ >= 0 and EC > 0");
    }
    if (p.n_charge_cutoff < 1) {
        throw std::invalid_argument("charge cutoff must be >= 1");
    }
    const int dim = 2 * p.n_charge_cutoff + 1;
    Eigen::MatrixXd ham = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const double n = static_cast<double>(k - p.n_charge_cutoff);
        ham(k, k) = 4.0 * p.ec * (n - p.ng) * (n - p.ng);
        if (k + 1 < dim) {
            ham(k, k + 1) = -0.5 * p.ej;
            ham(k + 1, k) = -0.5 * p.ej;
        }
    }
    return ham;
}

namespace {

struct ChargeSolution {
    Eigen::VectorXd energies;   // ascending, offset removed
    Eigen::MatrixXd n_abs;      // |<i|n|j>| over the first n_levels
};

ChargeSolution solve_charge_basis(const TransmonParams& p, int n_levels) {
    const Eigen::MatrixXd ham = build_charge_hamiltonian(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ham);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("charge-basis eigensolver failed");
    }
    const int dim = ham.rows();
    Eigen::VectorXd charge(dim);
    for (int k = 0; k < dim; ++k) charge(k) = static_cast<double>(k - p.n_charge_cutoff);

    ChargeSolution out;
    out.energies = solver.eigenvalues().head(n_levels).array() - solver.eigenvalues()(0);
    const Eigen::MatrixXd vecs = solver.eigenvectors().leftCols(n_levels);
    out.n_abs = (vecs.transpose() * charge.asDiagonal() * vecs).cwiseAbs();
    return out;
}

}  // namespace

TransmonSpectrum diagonalize_transmon(const TransmonParams& p, int n_levels) {
    p.validate();
    if (n_levels < 1) throw std::invalid_argument("n_levels must be >= 1");
    if (n_levels > 2 * p.n_charge_cutoff - 3) {
        throw std::invalid_argument("n_levels exceeds 2*N - 3 for charge cutoff N = " +
                                    std::to_string(p.n_charge_cutoff));
    }

    const ChargeSolution base = solve_charge_basis(p, n_levels);

    TransmonParams doubled = p;
    doubled.n_charge_cutoff = 2 * p.n_charge_cutoff;
    const ChargeSolution check = solve_charge_basis(doubled, n_levels);

    double drift_hz = 0.0;
    for (int i = 0; i < n_levels; ++i) {
        drift_hz = std::max(drift_hz, std::abs(base.energies(i) - check.energies(i)) / constants.h);
    }
    if (drift_hz >= 1e3) {
        throw std::runtime_error("transmon spectrum not converged: doubling the charge cutoff "
                                 "moves levels by " + std::to_string(drift_hz) + " Hz");
    }

    TransmonSpectrum spec;
    spec.levels.assign(base.energies.data(), base.energies.data() + n_levels);
    spec.n_matrix = base.n_abs;
    spec.params_echo = p;
    spec.convergence_drift_hz = drift_hz;
    return spec;
}

double TransmonSpectrum::level_angular_frequency(int i) const {
    if (i < 0 || i >= static_cast<int>(levels.size())) {
        throw std::invalid_argument("level index out of range");
    }
    return levels[static_cast<std::size_t>(i)] / constants.hbar;
}

double charge_matrix_element_asymptotic(const TransmonParams& p, int j) {
    if (j < 0) throw std::invalid_argument("level index must be >= 0");
    if (!(p.ej > 0.0) || !(p.ec > 0.0)) {
        throw std::invalid_argument("asymptotic matrix element requires EJ, EC > 0");
    }
    return std::sqrt(0.5 * (j + 1.0)) * std::pow(p.ej / (8.0 * p.ec), 0.25);
}

}  // namespace heliumq
