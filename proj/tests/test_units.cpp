#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heliumq/units.hpp"

using namespace heliumq;

TEST_SUITE("units") {

TEST_CASE("hbar is h over two pi") {
    CHECK(constants.hbar == constants.h / (2.0 * std::numbers::pi));
    CHECK(constants.h == 6.62607015e-34);
    CHECK(constants.kB == 1.380649e-23);
    CHECK(constants.e_charge == 1.602176634e-19);
}

TEST_CASE("linear to angular") {
    CHECK(linear_to_angular(0.0) == 0.0);
    CHECK(linear_to_angular(1.0) == doctest::Approx(6.283185307).epsilon(1e-9));
    // Independent high-precision route through long double.
    const long double ref = 2.0L * 3.141592653589793238L * 5.1914e9L;
    CHECK(linear_to_angular(5.1914e9) ==
          doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
    CHECK(linear_to_angular(5.1914e9) == doctest::Approx(3.26185e10).epsilon(1e-5));
    CHECK_THROWS_AS(linear_to_angular(std::nan("")), std::invalid_argument);
}

TEST_CASE("frequency to energy") {
    CHECK(frequency_to_energy(0.0) == 0.0);
    CHECK(frequency_to_energy(1.0) == 6.62607015e-34);
    CHECK(frequency_to_energy(5.1914e9) == doctest::Approx(3.4399e-24).epsilon(1e-4));
}

TEST_CASE("temperature to energy") {
    CHECK(temperature_to_energy(0.0) == 0.0);
    CHECK(temperature_to_energy(1.0) == 1.380649e-23);
    CHECK(temperature_to_energy(0.080) == doctest::Approx(1.1045e-24).epsilon(1e-4));
    CHECK_THROWS_AS(temperature_to_energy(-0.1), std::invalid_argument);
}

TEST_CASE("round trip angular <-> linear to 1e-12 over nine decades") {
    for (double f = 1e3; f <= 1e12; f *= 10.0) {
        CHECK(angular_to_linear(linear_to_angular(f)) == doctest::Approx(f).epsilon(1e-12));
    }
}

TEST_CASE("hf over kBT ratio matches direct evaluation to 1e-12") {
    for (double f : {1e6, 5.1914e9, 3e11}) {
        for (double t : {0.010, 0.080, 1.0}) {
            const double via_ops = frequency_to_energy(f) / temperature_to_energy(t);
            const double direct = (constants.h * f) / (constants.kB * t);
            CHECK(via_ops == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("quantity kinds are checked") {
    const Quantity f{5.1914e9, Kind::LinearFrequency};
    CHECK(f.as(Kind::LinearFrequency) == 5.1914e9);
    CHECK_THROWS_AS(f.as(Kind::AngularFrequency), std::invalid_argument);

    const Quantity w = linear_to_angular(f);
    CHECK(w.kind == Kind::AngularFrequency);
    CHECK_THROWS_AS(linear_to_angular(w), std::invalid_argument);  // double conversion
    CHECK(angular_to_linear(w).as(Kind::LinearFrequency) ==
          doctest::Approx(5.1914e9).epsilon(1e-12));

    const Quantity t{0.080, Kind::Temperature};
    CHECK(temperature_to_energy(t).kind == Kind::Energy);
    CHECK_THROWS_AS(frequency_to_energy(t), std::invalid_argument);
}

TEST_CASE("unit-suffixed parsing") {
    CHECK(parse_frequency_hz("6.9348GHz") == doctest::Approx(6.9348e9).epsilon(1e-12));
    CHECK(parse_frequency_hz("8.75MHz") == doctest::Approx(8.75e6).epsilon(1e-12));
    CHECK(parse_frequency_hz("120kHz") == doctest::Approx(120e3).epsilon(1e-12));
    CHECK(parse_frequency_hz("42Hz") == 42.0);
    CHECK(parse_time_s("20us") == doctest::Approx(20e-6).epsilon(1e-12));
    CHECK(parse_temperature_k("80mK") == doctest::Approx(0.080).epsilon(1e-12));
    CHECK(parse_energy_j("160ueV") ==
          doctest::Approx(160e-6 * constants.e_charge).epsilon(1e-12));
    CHECK(parse_rate_per_s("1.19e4/s") == doctest::Approx(1.19e4).epsilon(1e-12));
    CHECK(parse_dimensionless("4e-6") == 4e-6);
    CHECK(parse_dimensionless("0.78%") == doctest::Approx(0.0078).epsilon(1e-12));

    CHECK_THROWS_AS(parse_frequency_hz("6.9348"), std::invalid_argument);   // missing unit
    CHECK_THROWS_AS(parse_frequency_hz("6.9348THz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_time_s("20"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimensionless("4e-6GHz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_frequency_hz("GHz"), std::invalid_argument);
}

}  // TEST_SUITE
