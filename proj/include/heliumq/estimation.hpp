#pragma once

#include <span>

#include "heliumq/jaynes_cummings.hpp"
#include "heliumq/least_squares.hpp"

namespace heliumq {

struct SpectroscopyFitOptions {
    int n_transmon_levels = 4;
    int n_photons = 12;
    CouplingLadder ladder = CouplingLadder::SqrtHarmonic;
    LsqOptions lsq;
};

// Inverse problem of the dressed-state model: recover EJ, EC, g01 from the
// measured (omega_c, delta_omega, omega01, omega12) quartet. omega_c stays
// fixed at its measured value; the three residuals are equally weighted in
// Hz, which lets the MHz-scale cavity pull pin g01. Fitted parameters are
// named ej_over_h_hz, ec_over_h_hz, g01_over_2pi_hz.
FitResult fit_spectroscopy(const SpectroObservables& measured,
                           const SpectroscopyFitOptions& options = {});

struct T1VsTemperaturePoint {
    double temperature_k = 0.0;
    double t1_s = 0.0;
    double sigma_t1_s = 0.0;
};

struct T1FitOptions {
    double t_min_fit_k = 0.060;  // points below this temperature are excluded
    LsqOptions lsq;
};

// Weighted fit of 1/T1 against the quasiparticle rate model; parameters are
// gap_uev in [100, 250] and x_neq in [0, 1e-4]. Residuals are rate
// mismatches scaled by the per-point rate uncertainty sigma_T1/T1^2.
FitResult fit_t1_vs_temperature(std::span<const T1VsTemperaturePoint> data, double omega01,
                                const T1FitOptions& options = {});

}  // namespace heliumq
