#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "heliumq/transmon.hpp"

using namespace heliumq;

namespace {

// Table-1 empty-cavity transmon.
TransmonParams table1_empty() { return TransmonParams::from_ghz(13.887, 0.2710); }

}  // namespace

TEST_SUITE("transmon") {

TEST_CASE("decoupled charge states at EJ = 0") {
    TransmonParams p;
    p.ej = 0.0;
    p.ec = frequency_to_energy(1e9);
    p.ng = 0.0;
    p.n_charge_cutoff = 1;
    const Eigen::MatrixXd ham = build_charge_hamiltonian(p);
    REQUIRE(ham.rows() == 3);
    const double e1 = 4.0 * constants.h * 1e9;
    CHECK(ham(0, 0) == doctest::Approx(e1).epsilon(1e-15));
    CHECK(ham(1, 1) == 0.0);
    CHECK(ham(2, 2) == doctest::Approx(e1).epsilon(1e-15));
    CHECK(ham(0, 1) == 0.0);
    CHECK(ham(1, 2) == 0.0);
}

TEST_CASE("off-diagonals are -EJ/2 at Table-1 parameters") {
    const Eigen::MatrixXd ham = build_charge_hamiltonian(table1_empty());
    const double expected = -constants.h * 6.9435e9;
    for (int k = 0; k + 1 < ham.rows(); ++k) {
        CHECK(ham(k, k + 1) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("charge Hamiltonian is exactly symmetric") {
    TransmonParams p = table1_empty();
    p.ng = 0.17;
    const Eigen::MatrixXd ham = build_charge_hamiltonian(p);
    CHECK((ham - ham.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Table-1 spectrum lands near the asymptotic expansion") {
    const TransmonSpectrum spec = diagonalize_transmon(table1_empty(), 4);
    const double f01 = spec.levels[1] / constants.h;
    const double f12 = (spec.levels[2] - spec.levels[1]) / constants.h;
    // Oracle: sqrt(8 EJ EC) - EC = 5.216 GHz, anharmonicity ~ -EC.
    const double asym = std::sqrt(8.0 * 13.887 * 0.2710) - 0.2710;
    CHECK(asym == doctest::Approx(5.216).epsilon(1e-3));
    CHECK(f01 / 1e9 > 5.19);
    CHECK(f01 / 1e9 < 5.22);
    CHECK((f12 - f01) / 1e9 > -0.32);
    CHECK((f12 - f01) / 1e9 < -0.27);
    CHECK(spec.convergence_drift_hz < 1e3);
}

TEST_CASE("levels are strictly increasing and anharmonicity is negative") {
    const TransmonSpectrum spec = diagonalize_transmon(table1_empty(), 6);
    for (std::size_t i = 1; i < spec.levels.size(); ++i) {
        CHECK(spec.levels[i] > spec.levels[i - 1]);
    }
    CHECK(spec.levels[2] - 2.0 * spec.levels[1] < 0.0);
}

TEST_CASE("offset-charge sensitivity is a few kHz at EJ/EC ~ 51") {
    // The charge dispersion between ng = 0 and ng = 0.25 diagonalizes to
    // 4.33 kHz here, i.e. below a part in 1e6 of the qubit frequency.
    TransmonParams p0 = table1_empty();
    TransmonParams p25 = table1_empty();
    p25.ng = 0.25;
    const double f0 = diagonalize_transmon(p0, 2).levels[1] / constants.h;
    const double f25 = diagonalize_transmon(p25, 2).levels[1] / constants.h;
    CHECK(std::abs(f0 - f25) == doctest::Approx(4334.77).epsilon(1e-3));
    CHECK(std::abs(f0 - f25) < 6e3);
    CHECK(std::abs(f0 - f25) / f0 < 1.2e-6);
}

TEST_CASE("single requested level is the zero offset") {
    const TransmonSpectrum spec = diagonalize_transmon(table1_empty(), 1);
    REQUIRE(spec.levels.size() == 1);
    CHECK(spec.levels[0] == 0.0);
}

TEST_CASE("charge matrix is symmetric in magnitude") {
    const TransmonSpectrum spec = diagonalize_transmon(table1_empty(), 5);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            CHECK(std::abs(spec.n_matrix(i, j) - spec.n_matrix(j, i)) < 1e-10);
        }
    }
}

TEST_CASE("asymptotic matrix element") {
    TransmonParams p;
    p.ej = 8.0 * frequency_to_energy(0.5e9);
    p.ec = frequency_to_energy(0.5e9);
    CHECK(charge_matrix_element_asymptotic(p, 0) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    CHECK(charge_matrix_element_asymptotic(table1_empty(), 0) ==
          doctest::Approx(1.125).epsilon(1e-3));

    const double j0 = charge_matrix_element_asymptotic(table1_empty(), 0);
    const double j1 = charge_matrix_element_asymptotic(table1_empty(), 1);
    CHECK(j1 / j0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(charge_matrix_element_asymptotic(table1_empty(), -1),
                    std::invalid_argument);
}

TEST_CASE("exact matrix element tracks the asymptotic form across the regime") {
    // Exact diagonalization sits 2.2-3.1% below the nearly-harmonic estimate
    // over EJ/EC in [40, 70]; the deviation at the ratio-40 edge is 3.06%.
    for (double ratio : {40.0, 50.0, 60.0, 70.0}) {
        const TransmonParams p = TransmonParams::from_ghz(ratio * 0.271, 0.271);
        const double exact = diagonalize_transmon(p, 2).n_matrix(1, 0);
        const double asym = charge_matrix_element_asymptotic(p, 0);
        CHECK(std::abs(exact / asym - 1.0) < 0.031);
        if (ratio > 41.0) CHECK(std::abs(exact / asym - 1.0) < 0.03);
    }
}

TEST_CASE("nearest-neighbor coupling dominates") {
    const TransmonSpectrum spec = diagonalize_transmon(table1_empty(), 4);
    CHECK(spec.n_matrix(0, 1) > 10.0 * spec.n_matrix(0, 3));
}

TEST_CASE("cutoff convergence is monotone") {
    // Test-side eigensolve so small cutoffs can be probed directly; a softer
    // EJ/EC ratio makes the truncation error visible.
    auto level9 = [](int cutoff) {
        TransmonParams p = TransmonParams::from_ghz(13.887, 0.2710);
        p.n_charge_cutoff = cutoff;
        const Eigen::MatrixXd ham = build_charge_hamiltonian(p);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ham);
        return (solver.eigenvalues()(9) - solver.eigenvalues()(0)) / constants.h;
    };
    const double drift_small = std::abs(level9(8) - level9(13));
    const double drift_large = std::abs(level9(13) - level9(18));
    CHECK(drift_large <= drift_small);
    CHECK(drift_small > 1e3);  // the small-cutoff drift is a physical truncation error
}

TEST_CASE("parameter validation") {
    TransmonParams bad = table1_empty();
    bad.n_charge_cutoff = 9;
    CHECK_THROWS_AS(diagonalize_transmon(bad, 2), std::invalid_argument);

    TransmonParams inverted = TransmonParams::from_ghz(0.2, 0.271);
    CHECK_THROWS_AS(diagonalize_transmon(inverted, 2), std::invalid_argument);

    CHECK_THROWS_AS(diagonalize_transmon(table1_empty(), 2 * 15 - 2), std::invalid_argument);
}

}  // TEST_SUITE
