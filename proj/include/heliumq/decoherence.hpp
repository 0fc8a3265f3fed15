#pragma once

#include <array>
#include <numbers>
#include <span>

#include "heliumq/units.hpp"

namespace heliumq {

// Quasiparticle environment of the junction.
struct QuasiparticleParams {
    double gap = 0.0;      // superconducting gap, J
    double x_neq = 0.0;    // nonequilibrium normalized quasiparticle density
    double omega01 = 0.0;  // qubit angular frequency, rad/s

    void validate() const;
};

struct PhotonDephasingParams {
    double kappa = 0.0;    // cavity linewidth, rad/s
    double chi = 0.0;      // qubit shift per cavity photon, rad/s
    double omega_c = 0.0;  // cavity angular frequency, rad/s
    double n_th = 0.0;     // mean thermal photon number

    static PhotonDephasingParams from_photon_number(double kappa, double chi, double omega_c,
                                                    double n_th);
    static PhotonDephasingParams from_bath_temperature(double kappa, double chi, double omega_c,
                                                       double t_ph_k);
    void validate() const;
};

struct PhotonDephasingRate {
    double rate = 0.0;            // 1/s
    bool outside_kappa_chi_limit = false;  // kappa >= |chi|: formula evaluated, validity warned
};

// Cavity linewidth kappa/2pi = 120 kHz, obtained by inverting the Purcell
// relation against the empty-cavity emission time; a documented default,
// never an implicit constant.
inline constexpr double default_kappa_rad_s = 2.0 * std::numbers::pi * 120e3;

// Thermal BCS quasiparticle density sqrt(2 pi kB T / gap) * exp(-gap / kB T).
double x_qp_thermal(double gap_j, double t_k);

// Quasiparticle relaxation rate (x/pi) * sqrt(2 gap omega01 / hbar), 1/s.
double gamma_qp(const QuasiparticleParams& p, double x_total);

// Reactive counterpart -gamma_qp/2, rad/s.
double delta_omega01_qp(const QuasiparticleParams& p, double x_total);

// 1 / gamma_qp(x_neq + x_thermal(T)); monotone non-increasing in T.
double t1_model_vs_temperature(const QuasiparticleParams& p, double t_k);

// Purcell emission rate (g01/detuning)^2 * kappa, 1/s.
double gamma_purcell(double g01, double detuning, double kappa);

// Bose-Einstein occupation 1 / (exp(hbar omega_c / kB T) - 1).
double n_th(double omega_c, double t_k);

// Thermal-photon dephasing rate n_th * kappa * chi^2 / (kappa^2 + chi^2).
PhotonDephasingRate gamma_phi_photon(const PhotonDephasingParams& p);

// Inverts gamma_phi_photon for the bath temperature, K.
double photon_bath_temperature(double gamma_phi, double kappa, double chi, double omega_c);

// Pure dephasing time (1/T2 - 1/2T1)^(-1); rejects T2 >= 2 T1.
double t_phi_from_t1_t2(double t1_s, double t2_s);

// Maxwell-Boltzmann occupation of `level` with the partition function
// truncated to exactly four levels. level_freqs are cumulative angular
// frequencies with level_freqs[0] == 0.
double mb_population(std::span<const double> level_freqs, double t_k, int level);

// The four-level ladder from measured omega01 and omega12, completing
// omega23 by the Duffing extrapolation omega01 + 2(omega12 - omega01).
std::array<double, 4> mb_level_ladder(double omega01, double omega12);

}  // namespace heliumq
