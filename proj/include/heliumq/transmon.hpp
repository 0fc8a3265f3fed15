#pragma once

#include <Eigen/Dense>

#include "heliumq/units.hpp"

namespace heliumq {

// Single-junction transmon in the Cooper-pair charge basis {-N..N}.
struct TransmonParams {
    double ej = 0.0;  // Josephson energy, J
    double ec = 0.0;  // charging energy, J
    double ng = 0.0;  // offset charge, Cooper pairs
    int n_charge_cutoff = 15;

    static TransmonParams from_ghz(double ej_over_h_ghz, double ec_over_h_ghz,
                                   double ng = 0.0, int n_charge_cutoff = 15);

    // Transmon-regime validity (EJ, EC > 0, EJ/EC > 1, cutoff >= 10).
    void validate() const;
};

struct TransmonSpectrum {
    std::vector<double> levels;  // J, sorted ascending, levels[0] == 0
    Eigen::MatrixXd n_matrix;    // |<i|n|j>|, n_levels x n_levels
    TransmonParams params_echo;
    double convergence_drift_hz = 0.0;  // max level drift when doubling the cutoff

    // omega_i of the uncoupled qubit, rad/s.
    double level_angular_frequency(int i) const;
};

// (2N+1)x(2N+1) real symmetric charge-basis Hamiltonian in J:
// diagonal 4*EC*(n - ng)^2, first off-diagonals -EJ/2. Accepts EJ = 0 and
// small cutoffs so the decoupled limit stays constructible.
Eigen::MatrixXd build_charge_hamiltonian(const TransmonParams& p);

// Dense diagonalization; levels shifted so E0 = 0. Throws if the spectrum has
// not converged to < 1 kHz against a doubled charge cutoff.
TransmonSpectrum diagonalize_transmon(const TransmonParams& p, int n_levels);

// Nearly-harmonic estimate sqrt((j+1)/2) * (EJ/8EC)^(1/4) of |<j+1|n|j>|.
double charge_matrix_element_asymptotic(const TransmonParams& p, int j);

}  // namespace heliumq
