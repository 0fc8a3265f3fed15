#include "heliumq/dielectric.hpp"

#include <cmath>
#include <stdexcept>

namespace heliumq {

void DielectricInputs::validate() const {
    if (!(epsilon >= 1.0)) {
        throw std::invalid_argument("relative permittivity must be >= 1");
    }
    if (std::abs(delta_cq) >= 0.2 || std::abs(delta_cg) >= 0.2) {
        throw std::invalid_argument("capacitance changes outside the perturbative regime (|d| < 0.2)");
    }
    if (cg_over_cq && !(*cg_over_cq > 0.0)) {
        throw std::invalid_argument("Cg/Cq must be positive");
    }
}

double epsilon_from_frequencies(double f_empty_hz, double f_full_hz) {
    if (!(f_full_hz > 0.0) || !(f_empty_hz > f_full_hz)) {
        throw std::invalid_argument("need f_empty > f_full > 0 to extract a dielectric constant");
    }
    const double ratio = f_empty_hz / f_full_hz;
    return ratio * ratio;
}

double shifted_cavity_frequency(double f_bare_hz, double epsilon) {
    if (!(epsilon >= 1.0)) {
        throw std::invalid_argument("relative permittivity must be >= 1");
    }
    return f_bare_hz / std::sqrt(epsilon);
}

double vzpf_scale(double epsilon) {
    if (!(epsilon >= 1.0)) {
        throw std::invalid_argument("relative permittivity must be >= 1");
    }
    return std::pow(epsilon, -0.75);
}

double beta(double cg, double cq) {
    if (!(cg > 0.0) || !(cq > 0.0)) {
        throw std::invalid_argument("capacitances must be positive");
    }
    return cg / (cg + 2.0 * cq);
}

double ec_shift_from_cq(double delta_cq) {
    if (!(delta_cq > -1.0)) {
        throw std::invalid_argument("fractional Cq change must exceed -1");
    }
    return 1.0 / (1.0 + delta_cq) - 1.0;
}

double delta_g01_model(const DielectricInputs& inp) {
    inp.validate();
    const double vzpf_factor = vzpf_scale(inp.epsilon);

    double beta_factor = 0.0;
    if (inp.cg_over_cq) {
        const double r = *inp.cg_over_cq;
        beta_factor = beta(r * (1.0 + inp.delta_cg), 1.0 + inp.delta_cq) / beta(r, 1.0);
    } else {
        // Small-Cg limit: beta ~ Cg / (2 Cq).
        beta_factor = (1.0 + inp.delta_cg) / (1.0 + inp.delta_cq);
    }

    // Matrix element scales as Cq^(1/4).
    const double element_factor = std::pow(1.0 + inp.delta_cq, 0.25);

    return vzpf_factor * beta_factor * element_factor - 1.0;
}

}  // namespace heliumq
