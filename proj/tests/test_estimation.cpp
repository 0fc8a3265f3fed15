#include <doctest.h>

#include <cmath>

#include "heliumq/estimation.hpp"
#include "heliumq/trace_synth.hpp"

using namespace heliumq;

namespace {

SpectroObservables table1_empty_measured() {
    SpectroObservables obs;
    obs.omega_c_bare = linear_to_angular(6.9348e9);
    obs.delta_omega = linear_to_angular(8.75e6);
    obs.omega01 = linear_to_angular(5.1914e9);
    obs.omega12 = linear_to_angular(4.8834e9);
    return obs;
}

SpectroObservables table1_full_measured() {
    SpectroObservables obs;
    obs.omega_c_bare = linear_to_angular(6.7540e9);
    obs.delta_omega = linear_to_angular(9.13e6);
    obs.omega01 = linear_to_angular(5.1747e9);
    obs.omega12 = linear_to_angular(4.8695e9);
    return obs;
}

}  // namespace

TEST_SUITE("estimation") {

TEST_CASE("Table-1 empty column inverse fit within 2%") {
    const FitResult fit = fit_spectroscopy(table1_empty_measured());
    CHECK(fit.converged);
    CHECK(fit.value("ej_over_h_hz") / 1e9 == doctest::Approx(13.887).epsilon(0.02));
    CHECK(fit.value("ec_over_h_hz") / 1e9 == doctest::Approx(0.2710).epsilon(0.02));
    CHECK(fit.value("g01_over_2pi_hz") / 1e9 == doctest::Approx(0.1235).epsilon(0.02));
}

TEST_CASE("Table-1 full column inverse fit within 2%") {
    const FitResult fit = fit_spectroscopy(table1_full_measured());
    CHECK(fit.value("ej_over_h_hz") / 1e9 == doctest::Approx(13.895).epsilon(0.02));
    CHECK(fit.value("ec_over_h_hz") / 1e9 == doctest::Approx(0.2690).epsilon(0.02));
    CHECK(fit.value("g01_over_2pi_hz") / 1e9 == doctest::Approx(0.1201).epsilon(0.02));
}

TEST_CASE("round trip on self-generated observables recovers to 1e-6") {
    const JchSystem truth = JchSystem::from_ghz(13.887, 0.2710, 0.1235, 6.9348);
    const SpectroObservables synthetic = dressed_observables(truth);
    const FitResult fit = fit_spectroscopy(synthetic);
    CHECK(fit.value("ej_over_h_hz") == doctest::Approx(13.887e9).epsilon(1e-6));
    CHECK(fit.value("ec_over_h_hz") == doctest::Approx(0.2710e9).epsilon(1e-6));
    CHECK(fit.value("g01_over_2pi_hz") == doctest::Approx(0.1235e9).epsilon(1e-6));

    // Forward model at the fitted point reproduces the observables to < 10 Hz.
    const JchSystem fitted = JchSystem::from_ghz(fit.value("ej_over_h_hz") / 1e9,
                                                 fit.value("ec_over_h_hz") / 1e9,
                                                 fit.value("g01_over_2pi_hz") / 1e9, 6.9348);
    const SpectroObservables forward = dressed_observables(fitted);
    CHECK(std::abs(angular_to_linear(forward.omega01 - synthetic.omega01)) < 10.0);
    CHECK(std::abs(angular_to_linear(forward.omega12 - synthetic.omega12)) < 10.0);
    CHECK(std::abs(angular_to_linear(forward.delta_omega - synthetic.delta_omega)) < 10.0);
}

TEST_CASE("spectroscopy fit is deterministic") {
    const FitResult a = fit_spectroscopy(table1_empty_measured());
    const FitResult b = fit_spectroscopy(table1_empty_measured());
    CHECK(a.value("ej_over_h_hz") == b.value("ej_over_h_hz"));
    CHECK(a.value("ec_over_h_hz") == b.value("ec_over_h_hz"));
    CHECK(a.value("g01_over_2pi_hz") == b.value("g01_over_2pi_hz"));
    CHECK(a.n_iterations == b.n_iterations);
}

TEST_CASE("T1-vs-temperature fit recovers synthetic ground truth") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        T1VsTemperatureSpec spec;
        spec.gap_j = 160e-6 * constants.e_charge;
        spec.x_neq = 5.25e-6;
        spec.omega01 = linear_to_angular(5.1914e9);
        spec.t_min_k = 0.060;
        spec.t_max_k = 0.220;
        spec.n_points = 17;
        spec.noise_fraction = 0.05;
        spec.seed = seed;
        const auto data = gen_t1_vs_temperature(spec);

        const FitResult fit = fit_t1_vs_temperature(data, spec.omega01);
        CHECK(std::abs(fit.value("gap_uev") - 160.0) < 10.0);
        CHECK(std::abs(fit.value("x_neq") / 5.25e-6 - 1.0) < 0.15);
    }
}

TEST_CASE("points below the fit floor are excluded") {
    T1VsTemperatureSpec spec;
    spec.gap_j = 160e-6 * constants.e_charge;
    spec.x_neq = 5.25e-6;
    spec.omega01 = linear_to_angular(5.1914e9);
    spec.seed = 4;
    const auto clean = gen_t1_vs_temperature(spec);

    auto polluted = clean;
    // Nonsense points below 60 mK must not influence the fit.
    polluted.insert(polluted.begin(), {0.020, 1.0, 0.05});
    polluted.insert(polluted.begin(), {0.040, 2.0, 0.10});

    const FitResult a = fit_t1_vs_temperature(clean, spec.omega01);
    const FitResult b = fit_t1_vs_temperature(polluted, spec.omega01);
    CHECK(a.value("gap_uev") == b.value("gap_uev"));
    CHECK(a.value("x_neq") == b.value("x_neq"));
}

TEST_CASE("temperature-independent data pegs the gap at its upper bound") {
    std::vector<T1VsTemperaturePoint> flat;
    for (int i = 0; i < 9; ++i) {
        flat.push_back({0.060 + 0.020 * i, 20e-6, 1e-6});
    }
    const FitResult fit = fit_t1_vs_temperature(flat, linear_to_angular(5.1914e9));
    const auto& gap = fit.params[0];
    REQUIRE(gap.name == "gap_uev");
    CHECK(gap.at_bound);
    CHECK(gap.value == doctest::Approx(250.0).epsilon(1e-6));
    bool flagged = false;
    for (const auto& note : fit.notes) flagged |= note.find("pegged") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("input validation") {
    std::vector<T1VsTemperaturePoint> too_few{{0.100, 20e-6, 1e-6}, {0.120, 19e-6, 1e-6},
                                              {0.140, 17e-6, 1e-6}};
    CHECK_THROWS_AS(fit_t1_vs_temperature(too_few, linear_to_angular(5.1914e9)),
                    std::invalid_argument);

    std::vector<T1VsTemperaturePoint> bad_sigma;
    for (int i = 0; i < 6; ++i) bad_sigma.push_back({0.060 + 0.020 * i, 20e-6, 0.0});
    CHECK_THROWS_AS(fit_t1_vs_temperature(bad_sigma, linear_to_angular(5.1914e9)),
                    std::invalid_argument);
}

}  // TEST_SUITE
