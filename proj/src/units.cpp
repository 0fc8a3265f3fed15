#include "heliumq/units.hpp"

#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

namespace heliumq {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::LinearFrequency: return "linear frequency (Hz)";
        case Kind::AngularFrequency: return "angular frequency (rad/s)";
        case Kind::Energy: return "energy (J)";
        case Kind::Temperature: return "temperature (K)";
        case Kind::Rate: return "rate (1/s)";
        case Kind::Time: return "time (s)";
        case Kind::Dimensionless: return "dimensionless";
    }
    return "unknown";
}

double Quantity::as(Kind expected) const {
    if (kind != expected) {
        throw std::invalid_argument(std::string("quantity kind mismatch: have ") +
                                    kind_name(kind) + ", need " + kind_name(expected));
    }
    return value;
}

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

}  // namespace

double linear_to_angular(double f_hz) {
    require_finite(f_hz, "frequency");
    return 2.0 * std::numbers::pi * f_hz;
}

double angular_to_linear(double omega_rad_s) {
    require_finite(omega_rad_s, "angular frequency");
    return omega_rad_s / (2.0 * std::numbers::pi);
}

double frequency_to_energy(double f_hz) {
    require_finite(f_hz, "frequency");
    return constants.h * f_hz;
}

double temperature_to_energy(double t_k) {
    require_finite(t_k, "temperature");
    if (t_k < 0.0) {
        throw std::invalid_argument("temperature must be non-negative");
    }
    return constants.kB * t_k;
}

Quantity linear_to_angular(const Quantity& f) {
    return {linear_to_angular(f.as(Kind::LinearFrequency)), Kind::AngularFrequency};
}

Quantity angular_to_linear(const Quantity& omega) {
    return {angular_to_linear(omega.as(Kind::AngularFrequency)), Kind::LinearFrequency};
}

Quantity frequency_to_energy(const Quantity& f) {
    return {frequency_to_energy(f.as(Kind::LinearFrequency)), Kind::Energy};
}

Quantity temperature_to_energy(const Quantity& t) {
    return {temperature_to_energy(t.as(Kind::Temperature)), Kind::Energy};
}

namespace {

// Splits "6.9348GHz" into the numeric part and its suffix. The numeric part
// is parsed with from_chars, so the decimal separator is always '.'.
std::pair<double, std::string> split_number_suffix(const std::string& text) {
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
        throw std::invalid_argument("cannot parse number from '" + text + "'");
    }
    return {value, std::string(ptr, end)};
}

double parse_suffixed(const std::string& text, const char* what,
                      const std::vector<std::pair<std::string, double>>& units) {
    auto [value, suffix] = split_number_suffix(text);
    for (const auto& [name, factor] : units) {
        if (suffix == name) return value * factor;
    }
    std::string known;
    for (const auto& [name, factor] : units) {
        if (!known.empty()) known += ", ";
        known += name;
    }
    if (suffix.empty()) {
        throw std::invalid_argument(std::string("missing ") + what + " unit on '" + text +
                                    "' (expected one of: " + known + ")");
    }
    throw std::invalid_argument("unknown " + std::string(what) + " unit '" + suffix +
                                "' in '" + text + "' (expected one of: " + known + ")");
}

}  // namespace

double parse_frequency_hz(const std::string& text) {
    return parse_suffixed(text, "frequency",
                          {{"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}});
}

double parse_time_s(const std::string& text) {
    return parse_suffixed(text, "time", {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}});
}

double parse_temperature_k(const std::string& text) {
    return parse_suffixed(text, "temperature", {{"K", 1.0}, {"mK", 1e-3}});
}

double parse_energy_j(const std::string& text) {
    const double ev = constants.e_charge;
    return parse_suffixed(text, "energy", {{"eV", ev}, {"meV", 1e-3 * ev}, {"ueV", 1e-6 * ev}});
}

double parse_rate_per_s(const std::string& text) {
    return parse_suffixed(text, "rate", {{"/s", 1.0}});
}

double parse_dimensionless(const std::string& text) {
    auto [value, suffix] = split_number_suffix(text);
    if (suffix == "%") return value / 100.0;
    if (!suffix.empty()) {
        throw std::invalid_argument("dimensionless value '" + text +
                                    "' must not carry a unit (only '%' is accepted)");
    }
    return value;
}

}  // namespace heliumq
