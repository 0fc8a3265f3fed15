#pragma once

#include <cstdint>
#include <vector>

#include "heliumq/estimation.hpp"
#include "heliumq/traces.hpp"

namespace heliumq {

// Seeded generators with known ground truth. The random core is SplitMix64
// (see rng.hpp); a spec plus seed fully determines the output bytes.

struct T1TraceSpec {
    double t1_s = 20e-6;
    double amplitude = 0.95;
    double offset = 0.03;
    double t_max_s = 100e-6;
    int n_points = 50;
    int n_shots = 1000;
    bool noiseless = false;  // infinite-shot limit: emit the exact curve
    std::uint64_t seed = 0;
    std::string trace_id = "t1";
};

struct RamseyTraceSpec {
    double t2_s = 15e-6;
    double detuning_hz = 300e3;
    double phase_rad = 0.0;
    double amplitude = 0.5;
    double offset = 0.5;
    double t_max_s = 60e-6;
    int n_points = 200;
    int n_shots = 1000;
    bool noiseless = false;
    std::uint64_t seed = 0;
    std::string trace_id = "ramsey";
};

struct FrequencySeriesSpec {
    double base_freq_hz = 5.1914e9;
    double jump_amplitude_hz = 40e3;
    double jitter_sigma_hz = 1e3;
    double mean_dwell_steady = 45.0;  // samples
    double mean_dwell_jumped = 5.0;   // samples
    int n_points = 200;
    std::uint64_t seed = 0;
};

struct FrequencySeries {
    std::vector<double> omega01_hz;
    std::vector<bool> jumped;  // ground-truth state labels
};

struct T1VsTemperatureSpec {
    double gap_j = 0.0;
    double x_neq = 0.0;
    double omega01 = 0.0;
    double t_min_k = 0.060;
    double t_max_k = 0.220;
    int n_points = 17;
    double noise_fraction = 0.05;  // relative Gaussian scatter; also sigma_T1
    std::uint64_t seed = 0;
};

TraceRecord gen_t1_trace(const T1TraceSpec& spec);
TraceRecord gen_ramsey_trace(const RamseyTraceSpec& spec);
FrequencySeries gen_frequency_series(const FrequencySeriesSpec& spec);
std::vector<T1VsTemperaturePoint> gen_t1_vs_temperature(const T1VsTemperatureSpec& spec);

}  // namespace heliumq
