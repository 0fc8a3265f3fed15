#pragma once

#include <Eigen/Dense>

#include <compare>
#include <map>

#include "heliumq/transmon.hpp"

namespace heliumq {

// How the coupling ladder g_{i,i+1} is built from g01.
enum class CouplingLadder {
    SqrtHarmonic,  // g01 * sqrt(i+1), the declared model
    ExactRatios,   // g01 * |<i+1|n|i>| / |<1|n|0>| from the charge-basis solution
};

// Coupled cavity/multilevel-transmon system on the product basis |i> x |n>.
struct JchSystem {
    TransmonParams transmon;
    double omega_c_bare = 0.0;  // rad/s
    double g01 = 0.0;           // rad/s
    int n_transmon_levels = 4;
    int n_photons = 12;
    CouplingLadder ladder = CouplingLadder::SqrtHarmonic;

    static JchSystem from_ghz(double ej_over_h_ghz, double ec_over_h_ghz, double g01_over_2pi_ghz,
                              double cavity_ghz);
};

struct BareLabel {
    int qubit = 0;
    int photon = 0;
    auto operator<=>(const BareLabel&) const = default;
};

struct DressedState {
    double energy = 0.0;   // J
    double overlap = 0.0;  // squared overlap with the bare label
};

struct DressedSpectrum {
    // Best-overlap dressed state for every bare label, including ambiguous
    // ones (overlap <= 0.5); energy() refuses to return those.
    std::map<BareLabel, DressedState> states;
    JchSystem system_echo;

    bool resolved(BareLabel label) const;
    double energy(BareLabel label) const;  // throws on strong mixing
};

// The measured quartet of Table-style spectroscopy, all rad/s.
struct SpectroObservables {
    double omega_c_bare = 0.0;
    double delta_omega = 0.0;  // ground-state cavity pull
    double omega01 = 0.0;
    double omega12 = 0.0;

    void validate() const;
};

// Product-basis Hamiltonian (J): diagonal hbar*omega_i + n*hbar*omega_c,
// couplings hbar*g_{i,i+1}*sqrt(n) between (i,n) and (i+1,n-1).
Eigen::MatrixXd build_jch(const JchSystem& sys);

DressedSpectrum diagonalize_jch(const JchSystem& sys);

// omega01, omega12 and the ground-state cavity pull from the dressed ladder.
SpectroObservables dressed_observables(const JchSystem& sys);

// Max change (Hz, linear) of the three observables when both truncations are
// raised by 2; the convergence figure of merit.
double dressed_observables_drift_hz(const JchSystem& sys);

// Two-level dispersive estimate g01^2 / (omega_c - omega01), rad/s.
double dispersive_shift_approx(double g01, double omega_c, double omega01);

// Qubit frequency change per added cavity photon:
// [E(1,1) - E(1,0) - E(0,1) + E(0,0)] / hbar, rad/s, sign preserved.
double dispersive_chi(const JchSystem& sys);

// (omega01 + omega12) / 2, the two-photon 0->2 drive frequency, rad/s.
double two_photon_frequency(const SpectroObservables& obs);

}  // namespace heliumq
