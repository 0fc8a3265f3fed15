#include "heliumq/trace_synth.hpp"

#include <cmath>
#include <stdexcept>

#include "heliumq/decoherence.hpp"
#include "heliumq/rng.hpp"

namespace heliumq {

namespace {

std::vector<double> time_grid(double t_max, int n_points) {
    if (n_points < 2) throw std::invalid_argument("need at least 2 points");
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
    std::vector<double> t(static_cast<std::size_t>(n_points));
    for (int j = 0; j < n_points; ++j) {
        t[static_cast<std::size_t>(j)] = t_max * j / (n_points - 1.0);
    }
    return t;
}

TraceRecord sample_curve(const std::vector<double>& times, const std::vector<double>& curve,
                         int n_shots, bool noiseless, std::uint64_t seed,
                         const std::string& trace_id) {
    for (double p : curve) {
        if (p < 0.0 || p > 1.0) {
            throw std::invalid_argument("trace model leaves [0,1]: unphysical amplitude/offset");
        }
    }
    if (n_shots < 1) throw std::invalid_argument("n_shots must be >= 1");

    TraceRecord rec;
    rec.trace_id = trace_id;
    rec.times = times;
    rec.n_shots = n_shots;
    if (noiseless) {
        rec.p_excited = curve;
    } else {
        SplitMix64 rng(seed);
        rec.p_excited.reserve(curve.size());
        for (double p : curve) {
            rec.p_excited.push_back(static_cast<double>(rng.binomial(n_shots, p)) / n_shots);
        }
    }
    rec.validate();
    return rec;
}

}  // namespace

TraceRecord gen_t1_trace(const T1TraceSpec& spec) {
    if (!(spec.t1_s > 0.0)) throw std::invalid_argument("T1 must be positive");
    const auto t = time_grid(spec.t_max_s, spec.n_points);
    std::vector<double> curve(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        curve[j] = spec.amplitude * std::exp(-t[j] / spec.t1_s) + spec.offset;
    }
    return sample_curve(t, curve, spec.n_shots, spec.noiseless, spec.seed, spec.trace_id);
}

TraceRecord gen_ramsey_trace(const RamseyTraceSpec& spec) {
    if (!(spec.t2_s > 0.0)) throw std::invalid_argument("T2 must be positive");
    if (!(spec.detuning_hz > 0.0)) throw std::invalid_argument("detuning must be positive");
    const auto t = time_grid(spec.t_max_s, spec.n_points);
    std::vector<double> curve(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        curve[j] = spec.amplitude * std::exp(-t[j] / spec.t2_s) *
                       std::cos(2.0 * std::numbers::pi * spec.detuning_hz * t[j] + spec.phase_rad) +
                   spec.offset;
    }
    return sample_curve(t, curve, spec.n_shots, spec.noiseless, spec.seed, spec.trace_id);
}

FrequencySeries gen_frequency_series(const FrequencySeriesSpec& spec) {
    if (spec.n_points < 1) throw std::invalid_argument("need at least 1 point");
    if (!(spec.mean_dwell_steady > 0.0) || !(spec.mean_dwell_jumped > 0.0)) {
        throw std::invalid_argument("mean dwell times must be positive");
    }
    if (spec.jitter_sigma_hz < 0.0) throw std::invalid_argument("jitter sigma must be >= 0");

    SplitMix64 rng(spec.seed);
    FrequencySeries out;
    out.omega01_hz.reserve(static_cast<std::size_t>(spec.n_points));
    out.jumped.reserve(static_cast<std::size_t>(spec.n_points));

    bool jumped = false;  // the series starts in the steady state
    int filled = 0;
    while (filled < spec.n_points) {
        const double mean = jumped ? spec.mean_dwell_jumped : spec.mean_dwell_steady;
        const double drawn = std::ceil(rng.exponential(mean));
        // Cap before the int cast: huge draws must saturate, not wrap.
        const int dwell =
            drawn >= static_cast<double>(spec.n_points)
                ? spec.n_points
                : std::max(1, static_cast<int>(drawn));
        for (int k = 0; k < dwell && filled < spec.n_points; ++k, ++filled) {
            double f = spec.base_freq_hz + (jumped ? spec.jump_amplitude_hz : 0.0);
            if (spec.jitter_sigma_hz > 0.0) f += spec.jitter_sigma_hz * rng.normal();
            out.omega01_hz.push_back(f);
            out.jumped.push_back(jumped);
        }
        jumped = !jumped;
    }
    return out;
}

std::vector<T1VsTemperaturePoint> gen_t1_vs_temperature(const T1VsTemperatureSpec& spec) {
    if (spec.n_points < 2) throw std::invalid_argument("need at least 2 points");
    if (!(spec.t_max_k > spec.t_min_k) || !(spec.t_min_k > 0.0)) {
        throw std::invalid_argument("need 0 < t_min < t_max");
    }
    if (spec.noise_fraction < 0.0 || spec.noise_fraction >= 1.0) {
        throw std::invalid_argument("noise fraction must be in [0, 1)");
    }

    QuasiparticleParams qp{spec.gap_j, spec.x_neq, spec.omega01};
    qp.validate();

    SplitMix64 rng(spec.seed);
    std::vector<T1VsTemperaturePoint> out;
    out.reserve(static_cast<std::size_t>(spec.n_points));
    for (int j = 0; j < spec.n_points; ++j) {
        const double t_k =
            spec.t_min_k + (spec.t_max_k - spec.t_min_k) * j / (spec.n_points - 1.0);
        const double t1_true = t1_model_vs_temperature(qp, t_k);
        double t1 = t1_true;
        if (spec.noise_fraction > 0.0) {
            t1 *= 1.0 + spec.noise_fraction * rng.normal();
            if (t1 <= 0.0) t1 = 0.05 * t1_true;  // clip pathological draws
        }
        out.push_back({t_k, t1, std::max(spec.noise_fraction, 1e-6) * t1});
    }
    return out;
}

}  // namespace heliumq
