#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace heliumq {

// CODATA-2018 exact SI defining constants.
struct PhysConstants {
    double h = 6.62607015e-34;        // Planck constant, J*s
    double hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);
    double kB = 1.380649e-23;         // Boltzmann constant, J/K
    double e_charge = 1.602176634e-19;  // elementary charge, C
};

inline constexpr PhysConstants constants{};

enum class Kind {
    LinearFrequency,   // Hz
    AngularFrequency,  // rad/s
    Energy,            // J
    Temperature,       // K
    Rate,              // 1/s
    Time,              // s
    Dimensionless,
};

const char* kind_name(Kind k);

// A scalar tagged with its physical kind. Mixing kinds without an explicit
// conversion throws, which is how unit bugs surface in tests instead of in
// results.
struct Quantity {
    double value = 0.0;
    Kind kind = Kind::Dimensionless;

    // Checked accessor: returns value iff the kind matches.
    double as(Kind expected) const;
};

// Conversions on raw doubles (canonical SI units throughout).
double linear_to_angular(double f_hz);
double angular_to_linear(double omega_rad_s);
double frequency_to_energy(double f_hz);
double temperature_to_energy(double t_k);

// Checked Quantity-level conversions.
Quantity linear_to_angular(const Quantity& f);
Quantity angular_to_linear(const Quantity& omega);
Quantity frequency_to_energy(const Quantity& f);
Quantity temperature_to_energy(const Quantity& t);

// CLI-facing parsing of unit-suffixed scalars ("6.9348GHz", "20us", "80mK").
// Suffixes are mandatory for physical quantities and rejected for
// dimensionless ones (a trailing '%' divides by 100).
double parse_frequency_hz(const std::string& text);
double parse_time_s(const std::string& text);
double parse_temperature_k(const std::string& text);
double parse_energy_j(const std::string& text);   // eV-family suffixes
double parse_rate_per_s(const std::string& text); // "/s" suffix
double parse_dimensionless(const std::string& text);

}  // namespace heliumq
