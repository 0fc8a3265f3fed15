#pragma once

#include <optional>

namespace heliumq {

// Inputs of the dielectric-immersion perturbation model for the coupling.
struct DielectricInputs {
    double epsilon = 1.0;   // relative permittivity of the cavity medium
    double delta_cq = 0.0;  // fractional qubit-capacitance change
    double delta_cg = 0.0;  // fractional coupling-capacitance change
    // Cg/Cq; absent selects the small-Cg limit of the divider ratio.
    std::optional<double> cg_over_cq;

    void validate() const;
};

// (f_empty / f_full)^2 from the measured cavity pair.
double epsilon_from_frequencies(double f_empty_hz, double f_full_hz);

// f_bare / sqrt(epsilon).
double shifted_cavity_frequency(double f_bare_hz, double epsilon);

// Multiplicative change of the zero-point voltage, epsilon^(-3/4).
double vzpf_scale(double epsilon);

// Divider ratio beta = Cg^2 / (Cg^2 + 2 Cq Cg) = Cg / (Cg + 2 Cq).
double beta(double cg, double cq);

// Fractional EC change from a fractional Cq change: 1/(1+dCq) - 1.
double ec_shift_from_cq(double delta_cq);

// Fractional g01 change: the product of the V_ZPF, beta-ratio and
// matrix-element factors, minus 1.
double delta_g01_model(const DielectricInputs& inp);

}  // namespace heliumq
