#include "heliumq/trace_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "heliumq/least_squares.hpp"

namespace heliumq {

namespace {

// Inverse shot-noise weights with add-half smoothing so exact 0/1 samples
// keep a finite variance.
std::vector<double> binomial_weights(const TraceRecord& rec) {
    std::vector<double> w(rec.p_excited.size());
    const double n = rec.n_shots;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double k = std::round(rec.p_excited[i] * n);
        const double p = (k + 0.5) / (n + 1.0);
        w[i] = 1.0 / std::sqrt(p * (1.0 - p) / n);
    }
    return w;
}

double shot_noise_estimate(const TraceRecord& rec) {
    double mean = 0.0;
    for (double p : rec.p_excited) mean += p;
    mean /= static_cast<double>(rec.p_excited.size());
    const double n = rec.n_shots;
    const double p = std::clamp(mean, 0.5 / n, 1.0 - 0.5 / n);
    return std::sqrt(p * (1.0 - p) / n);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double median_dt(const std::vector<double>& times) {
    std::vector<double> dt;
    dt.reserve(times.size() - 1);
    for (std::size_t i = 1; i < times.size(); ++i) dt.push_back(times[i] - times[i - 1]);
    return median(std::move(dt));
}

double unweighted_rms(const std::vector<double>& model, const std::vector<double>& data) {
    double ss = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        ss += (model[i] - data[i]) * (model[i] - data[i]);
    }
    return std::sqrt(ss / static_cast<double>(data.size()));
}

}  // namespace

T1TraceFit fit_t1_trace(const TraceRecord& rec) {
    rec.validate();
    if (rec.times.size() < 8) {
        throw std::invalid_argument("T1 fit needs at least 8 points");
    }
    const auto [min_it, max_it] = std::minmax_element(rec.p_excited.begin(), rec.p_excited.end());
    const double range = *max_it - *min_it;
    const double noise = shot_noise_estimate(rec);
    if (!(range > 5.0 * noise)) {
        throw std::invalid_argument("insufficient dynamic range: trace swing " +
                                    std::to_string(range) + " is below 5x shot noise " +
                                    std::to_string(5.0 * noise));
    }

    const std::size_t n = rec.times.size();
    const double t_span = rec.times.back() - rec.times.front();

    // Baseline from the tail, then a log-linear slope for the decay constant.
    const std::size_t tail = std::max<std::size_t>(3, n / 10);
    double b0 = 0.0;
    for (std::size_t i = n - tail; i < n; ++i) b0 += rec.p_excited[i];
    b0 /= static_cast<double>(tail);

    double a0 = range;
    double t1_0 = t_span / 3.0;
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = rec.p_excited[i] - b0;
            if (z > std::max(0.02, 2.0 * noise)) {
                const double ly = std::log(z);
                sx += rec.times[i];
                sy += ly;
                sxx += rec.times[i] * rec.times[i];
                sxy += rec.times[i] * ly;
                ++count;
            }
        }
        if (count >= 3) {
            const double denom = count * sxx - sx * sx;
            if (denom > 0.0) {
                const double slope = (count * sxy - sx * sy) / denom;
                const double intercept = (sy - slope * sx) / count;
                if (slope < 0.0) {
                    t1_0 = -1.0 / slope;
                    a0 = std::exp(intercept);
                }
            }
        }
    }

    const auto weights = binomial_weights(rec);
    const ResidualFn objective = [&](std::span<const double> x) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double model = x[0] * std::exp(-rec.times[i] / x[1]) + x[2];
            r[i] = (model - rec.p_excited[i]) * weights[i];
        }
        return r;
    };

    const double dt = median_dt(rec.times);
    const std::vector<double> x0{std::clamp(a0, 0.0, 2.0),
                                 std::clamp(t1_0, dt / 10.0, 1e3 * t_span),
                                 std::clamp(b0, -0.5, 1.5)};
    const std::vector<std::pair<double, double>> bounds{
        {0.0, 2.0}, {dt / 10.0, 1e3 * t_span}, {-0.5, 1.5}};
    const std::vector<std::string> names{"amplitude", "t1_s", "offset"};

    const FitResult fit = minimize_least_squares(objective, x0, bounds, names);
    if (!fit.converged) {
        throw std::runtime_error("T1 trace fit did not converge");
    }

    T1TraceFit out;
    out.amplitude = fit.value("amplitude");
    out.t1_s = fit.value("t1_s");
    out.offset = fit.value("offset");
    out.converged = fit.converged;
    out.n_iterations = fit.n_iterations;
    std::vector<double> model(n);
    for (std::size_t i = 0; i < n; ++i) {
        model[i] = out.amplitude * std::exp(-rec.times[i] / out.t1_s) + out.offset;
    }
    out.residual_norm = unweighted_rms(model, rec.p_excited);
    return out;
}

RamseyTraceFit fit_ramsey_trace(const TraceRecord& rec) {
    rec.validate();
    const std::size_t n = rec.times.size();
    if (n < 20) {
        throw std::invalid_argument("Ramsey fit needs at least 20 points");
    }

    double mean = 0.0;
    for (double p : rec.p_excited) mean += p;
    mean /= static_cast<double>(n);

    // Dense periodogram of the mean-subtracted trace for the detuning seed.
    const double t_span = rec.times.back() - rec.times.front();
    const double dt = median_dt(rec.times);
    const double f_lo = 0.5 / t_span;
    const double f_hi = 0.5 / dt;  // Nyquist for the median spacing
    const double df_grid = 0.25 / t_span;
    std::vector<double> grid, power;
    for (double f = f_lo; f <= f_hi; f += df_grid) grid.push_back(f);
    power.resize(grid.size());
    std::vector<std::complex<double>> spectrum(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            const double theta = -2.0 * std::numbers::pi * grid[k] * rec.times[i];
            acc += (rec.p_excited[i] - mean) * std::complex<double>(std::cos(theta), std::sin(theta));
        }
        spectrum[k] = acc;
        power[k] = std::abs(acc);
    }
    const std::size_t peak =
        static_cast<std::size_t>(std::max_element(power.begin(), power.end()) - power.begin());
    const double peak_power = power[peak];
    const double floor_power = median(power);
    if (!(peak_power > 4.0 * floor_power) || !(peak_power > 1e-12 * static_cast<double>(n))) {
        throw std::invalid_argument("no resolvable spectral peak in the Ramsey trace");
    }

    // Parabolic refinement of the peak position.
    double f0 = grid[peak];
    if (peak > 0 && peak + 1 < grid.size()) {
        const double y0 = power[peak - 1], y1 = power[peak], y2 = power[peak + 1];
        const double denom = y0 - 2.0 * y1 + y2;
        if (denom < 0.0) f0 += 0.5 * df_grid * (y0 - y2) / denom;
    }
    if (f0 > 1.0 / (4.0 * dt)) {
        throw std::invalid_argument("detuning undersampled: need >= 4 samples per period, "
                                    "estimated " + std::to_string(1.0 / (f0 * dt)));
    }
    const double phi0 = std::atan2(spectrum[peak].imag(), spectrum[peak].real());

    const auto [min_it, max_it] = std::minmax_element(rec.p_excited.begin(), rec.p_excited.end());
    const double a0 = 0.5 * (*max_it - *min_it);

    const auto weights = binomial_weights(rec);
    const ResidualFn objective = [&](std::span<const double> x) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double model =
                x[0] * std::exp(-rec.times[i] / x[1]) *
                    std::cos(2.0 * std::numbers::pi * x[2] * rec.times[i] + x[3]) +
                x[4];
            r[i] = (model - rec.p_excited[i]) * weights[i];
        }
        return r;
    };

    const std::vector<std::pair<double, double>> bounds{{0.0, 2.0},
                                                        {dt / 10.0, 1e3 * t_span},
                                                        {0.5 * f0, std::min(2.0 * f0, f_hi)},
                                                        {-7.0, 7.0},
                                                        {-0.5, 1.5}};
    const std::vector<std::string> names{"amplitude", "t2_s", "detuning_hz", "phase", "offset"};

    FitResult best;
    bool have_best = false;
    for (const double t2_0 : {t_span / 6.0, t_span / 2.0}) {
        const std::vector<double> x0{std::clamp(a0, 0.0, 2.0),
                                     std::clamp(t2_0, bounds[1].first, bounds[1].second), f0,
                                     std::clamp(phi0, -7.0, 7.0), std::clamp(mean, -0.5, 1.5)};
        FitResult fit = minimize_least_squares(objective, x0, bounds, names);
        if (!have_best || fit.residual_norm < best.residual_norm) {
            best = std::move(fit);
            have_best = true;
        }
    }
    if (!best.converged) {
        throw std::runtime_error("Ramsey trace fit did not converge");
    }

    RamseyTraceFit out;
    out.amplitude = best.value("amplitude");
    out.t2_s = best.value("t2_s");
    out.detuning_hz = best.value("detuning_hz");
    out.phase_rad = std::remainder(best.value("phase"), 2.0 * std::numbers::pi);
    out.offset = best.value("offset");
    out.converged = best.converged;
    out.n_iterations = best.n_iterations;
    std::vector<double> model(n);
    for (std::size_t i = 0; i < n; ++i) {
        model[i] = out.amplitude * std::exp(-rec.times[i] / out.t2_s) *
                       std::cos(2.0 * std::numbers::pi * out.detuning_hz * rec.times[i] +
                                out.phase_rad) +
                   out.offset;
    }
    out.residual_norm = unweighted_rms(model, rec.p_excited);
    return out;
}

namespace {

// Two-cluster 1-d means split seeded at the extremes. Accepted as a jump
// partition only when the clusters separate by more than 5x their internal
// spread, so unimodal jitter is left alone.
void two_means_split(const std::vector<double>& values, JumpDetection& out) {
    double c0 = *std::min_element(values.begin(), values.end());
    double c1 = *std::max_element(values.begin(), values.end());
    if (c0 == c1) {
        out.steady_state_freq_hz = c0;
        return;  // constant series, nothing to split
    }
    out.used_two_means = true;

    std::vector<bool> in_upper(values.size(), false);
    for (int pass = 0; pass < 100; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const bool upper = std::abs(values[i] - c1) < std::abs(values[i] - c0);
            if (upper != in_upper[i]) {
                in_upper[i] = upper;
                changed = true;
            }
        }
        double s0 = 0, s1 = 0;
        int n0 = 0, n1 = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (in_upper[i]) {
                s1 += values[i];
                ++n1;
            } else {
                s0 += values[i];
                ++n0;
            }
        }
        if (n0 > 0) c0 = s0 / n0;
        if (n1 > 0) c1 = s1 / n1;
        if (!changed) break;
    }

    double ss0 = 0, ss1 = 0;
    int n0 = 0, n1 = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (in_upper[i]) {
            ss1 += (values[i] - c1) * (values[i] - c1);
            ++n1;
        } else {
            ss0 += (values[i] - c0) * (values[i] - c0);
            ++n0;
        }
    }
    const double spread0 = n0 > 0 ? std::sqrt(ss0 / n0) : 0.0;
    const double spread1 = n1 > 0 ? std::sqrt(ss1 / n1) : 0.0;
    const double separation = c1 - c0;
    if (n0 == 0 || n1 == 0 || !(separation > 5.0 * std::max(spread0, spread1))) {
        // No credible second level; treat the whole series as steady.
        out.used_two_means = false;
        double sum = 0.0;
        for (double f : values) sum += f;
        out.steady_state_freq_hz = sum / static_cast<double>(values.size());
        return;
    }

    bool steady_is_upper = n1 > n0;
    if (n1 == n0) {
        out.ambiguous_split = true;
        steady_is_upper = in_upper[0];  // tie-break toward the first-observed level
    }
    double steady_sum = 0.0;
    int steady_count = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const bool steady = in_upper[i] == steady_is_upper;
        out.jump_mask[i] = !steady;
        if (steady) {
            steady_sum += values[i];
            ++steady_count;
        }
    }
    out.steady_state_freq_hz = steady_sum / steady_count;
    out.center_hz = out.steady_state_freq_hz;
}

}  // namespace

JumpDetection detect_jumps(std::span<const double> freqs_hz) {
    if (freqs_hz.size() < 20) {
        throw std::invalid_argument("jump detection needs at least 20 samples");
    }
    const std::vector<double> values(freqs_hz.begin(), freqs_hz.end());

    JumpDetection out;
    out.jump_mask.assign(values.size(), false);
    out.center_hz = median(values);

    std::vector<double> deviations;
    deviations.reserve(values.size());
    for (double f : values) deviations.push_back(std::abs(f - out.center_hz));
    out.scale_hz = 1.4826 * median(deviations);

    if (out.scale_hz > 0.0) {
        double steady_sum = 0.0;
        int steady_count = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            out.jump_mask[i] = std::abs(values[i] - out.center_hz) > 5.0 * out.scale_hz;
            if (!out.jump_mask[i]) {
                steady_sum += values[i];
                ++steady_count;
            }
        }
        if (steady_count < static_cast<int>(values.size())) {
            out.steady_state_freq_hz = steady_sum / steady_count;
            return out;
        }
    }

    // Either the MAD scale collapsed (majority of samples identical) or the
    // threshold flagged nothing: look for an even two-level split.
    two_means_split(values, out);
    return out;
}

SeriesStats series_statistics(std::span<const double> t1s, std::span<const double> tphis) {
    if (t1s.size() != tphis.size()) {
        throw std::invalid_argument("T1 and Tphi series must have equal length");
    }
    if (t1s.size() < 3) {
        throw std::invalid_argument("series statistics need at least 3 samples");
    }
    const double n = static_cast<double>(t1s.size());

    SeriesStats out;
    for (double v : t1s) out.mean_t1_s += v;
    for (double v : tphis) out.mean_tphi_s += v;
    out.mean_t1_s /= n;
    out.mean_tphi_s /= n;

    double var_a = 0.0, var_b = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < t1s.size(); ++i) {
        const double da = t1s[i] - out.mean_t1_s;
        const double db = tphis[i] - out.mean_tphi_s;
        var_a += da * da;
        var_b += db * db;
        cov += da * db;
    }
    var_a /= n;  // population statistics: the set is the full 5-hour record
    var_b /= n;
    cov /= n;
    out.std_t1_s = std::sqrt(var_a);
    out.std_tphi_s = std::sqrt(var_b);
    if (var_a > 0.0 && var_b > 0.0) {
        out.rho = cov / std::sqrt(var_a * var_b);
    }
    return out;
}

}  // namespace heliumq
