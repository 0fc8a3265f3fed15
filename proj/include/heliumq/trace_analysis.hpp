#pragma once

#include <optional>
#include <span>
#include <vector>

#include "heliumq/traces.hpp"

namespace heliumq {

struct T1TraceFit {
    double t1_s = 0.0;
    double amplitude = 0.0;
    double offset = 0.0;
    double residual_norm = 0.0;
    bool converged = false;
    int n_iterations = 0;
};

struct RamseyTraceFit {
    double t2_s = 0.0;
    double detuning_hz = 0.0;
    double phase_rad = 0.0;
    double amplitude = 0.0;
    double offset = 0.0;
    double residual_norm = 0.0;
    bool converged = false;
    int n_iterations = 0;
};

struct JumpDetection {
    std::vector<bool> jump_mask;  // true = sample taken during a jump
    double steady_state_freq_hz = 0.0;
    double center_hz = 0.0;
    double scale_hz = 0.0;
    bool used_two_means = false;
    bool ambiguous_split = false;  // 50/50 tie resolved toward the first sample
};

struct SeriesStats {
    double mean_t1_s = 0.0;
    double std_t1_s = 0.0;
    double mean_tphi_s = 0.0;
    double std_tphi_s = 0.0;
    // Normalized covariance; empty when either variance vanishes (never
    // silently zero).
    std::optional<double> rho;
};

// Weighted least-squares fit of A*exp(-t/T1) + B. Weights are the inverse
// binomial shot-noise per point; the initial guess comes from a log-linear
// regression on baseline-subtracted data.
T1TraceFit fit_t1_trace(const TraceRecord& rec);

// Weighted least-squares fit of A*exp(-t/T2)*cos(2 pi df t + phi) + B with
// the initial detuning taken from a dense periodogram scan.
RamseyTraceFit fit_ramsey_trace(const TraceRecord& rec);

// Median/MAD thresholding at 5 scaled deviations with a deterministic
// two-means fallback when the scale collapses to zero.
JumpDetection detect_jumps(std::span<const double> freqs_hz);

// Population means, standard deviations and the normalized covariance of
// paired coherence-time series.
SeriesStats series_statistics(std::span<const double> t1s, std::span<const double> tphis);

}  // namespace heliumq
