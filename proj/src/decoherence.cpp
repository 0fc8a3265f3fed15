#include "heliumq/decoherence.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace heliumq {

void QuasiparticleParams::validate() const {
    if (!(omega01 > 0.0)) {
        throw std::invalid_argument("qubit frequency must be positive");
    }
    if (!(gap > constants.hbar * omega01)) {
        throw std::invalid_argument("superconducting gap must exceed hbar*omega01");
    }
    if (x_neq < 0.0) {
        throw std::invalid_argument("quasiparticle density must be >= 0");
    }
}

PhotonDephasingParams PhotonDephasingParams::from_photon_number(double kappa, double chi,
                                                                double omega_c, double n_th) {
    PhotonDephasingParams p{kappa, chi, omega_c, n_th};
    p.validate();
    return p;
}

PhotonDephasingParams PhotonDephasingParams::from_bath_temperature(double kappa, double chi,
                                                                   double omega_c, double t_ph_k) {
    PhotonDephasingParams p{kappa, chi, omega_c, heliumq::n_th(omega_c, t_ph_k)};
    p.validate();
    return p;
}

void PhotonDephasingParams::validate() const {
    if (!(kappa > 0.0)) throw std::invalid_argument("cavity linewidth must be positive");
    if (chi == 0.0) throw std::invalid_argument("dispersive shift must be nonzero");
    if (n_th < 0.0) throw std::invalid_argument("thermal photon number must be >= 0");
}

double x_qp_thermal(double gap_j, double t_k) {
    if (!(t_k > 0.0)) throw std::invalid_argument("temperature must be positive");
    if (!(gap_j > 0.0)) throw std::invalid_argument("gap must be positive");
    const double ratio = constants.kB * t_k / gap_j;
    return std::sqrt(2.0 * std::numbers::pi * ratio) * std::exp(-1.0 / ratio);
}

double gamma_qp(const QuasiparticleParams& p, double x_total) {
    p.validate();
    if (x_total < 0.0) throw std::invalid_argument("quasiparticle density must be >= 0");
    return (x_total / std::numbers::pi) * std::sqrt(2.0 * p.gap * p.omega01 / constants.hbar);
}

double delta_omega01_qp(const QuasiparticleParams& p, double x_total) {
    return -0.5 * gamma_qp(p, x_total);
}

double t1_model_vs_temperature(const QuasiparticleParams& p, double t_k) {
    const double rate = gamma_qp(p, p.x_neq + x_qp_thermal(p.gap, t_k));
    if (!(rate > 0.0)) {
        throw std::invalid_argument("zero total quasiparticle density: T1 diverges");
    }
    return 1.0 / rate;
}

double gamma_purcell(double g01, double detuning, double kappa) {
    if (detuning == 0.0) {
        throw std::invalid_argument("Purcell rate undefined at zero detuning");
    }
    const double ratio = g01 / detuning;
    return ratio * ratio * kappa;
}

double n_th(double omega_c, double t_k) {
    if (!(t_k > 0.0)) throw std::invalid_argument("temperature must be positive");
    if (!(omega_c > 0.0)) throw std::invalid_argument("cavity frequency must be positive");
    return 1.0 / std::expm1(constants.hbar * omega_c / (constants.kB * t_k));
}

PhotonDephasingRate gamma_phi_photon(const PhotonDephasingParams& p) {
    p.validate();
    const double chi2 = p.chi * p.chi;
    PhotonDephasingRate out;
    out.rate = p.n_th * p.kappa * chi2 / (p.kappa * p.kappa + chi2);
    out.outside_kappa_chi_limit = !(p.kappa < std::abs(p.chi));
    return out;
}

double photon_bath_temperature(double gamma_phi, double kappa, double chi, double omega_c) {
    if (!(gamma_phi > 0.0)) {
        throw std::invalid_argument("dephasing rate must be positive to invert");
    }
    if (!(kappa > 0.0) || chi == 0.0 || !(omega_c > 0.0)) {
        throw std::invalid_argument("invalid kappa, chi or cavity frequency");
    }
    const double chi2 = chi * chi;
    const double nbar = gamma_phi * (kappa * kappa + chi2) / (kappa * chi2);
    if (!(nbar > 0.0)) {
        throw std::invalid_argument("dephasing rate implies a non-positive photon number");
    }
    return (constants.hbar * omega_c / constants.kB) / std::log1p(1.0 / nbar);
}

double t_phi_from_t1_t2(double t1_s, double t2_s) {
    if (!(t1_s > 0.0) || !(t2_s > 0.0)) {
        throw std::invalid_argument("T1 and T2 must be positive");
    }
    const double inv = 1.0 / t2_s - 0.5 / t1_s;
    if (!(inv > 0.0)) {
        throw std::invalid_argument("unphysical input: T2 >= 2*T1, pure dephasing time diverges");
    }
    return 1.0 / inv;
}

double mb_population(std::span<const double> level_freqs, double t_k, int level) {
    if (level_freqs.size() != 4) {
        throw std::invalid_argument("the truncated partition function takes exactly 4 levels");
    }
    if (!(t_k > 0.0)) throw std::invalid_argument("temperature must be positive");
    if (level < 0 || level >= 4) throw std::invalid_argument("level index must be 0..3");
    if (level_freqs[0] != 0.0) {
        throw std::invalid_argument("level frequencies must be cumulative with level 0 at zero");
    }
    for (int i = 1; i < 4; ++i) {
        if (!(level_freqs[i] > level_freqs[i - 1])) {
            throw std::invalid_argument("level frequencies must be strictly increasing");
        }
    }
    const double scale = constants.hbar / (constants.kB * t_k);
    double z = 0.0;
    for (double w : level_freqs) z += std::exp(-w * scale);
    return std::exp(-level_freqs[static_cast<std::size_t>(level)] * scale) / z;
}

std::array<double, 4> mb_level_ladder(double omega01, double omega12) {
    if (!(omega01 > 0.0) || !(omega12 > 0.0)) {
        throw std::invalid_argument("transition frequencies must be positive");
    }
    const double omega23 = omega01 + 2.0 * (omega12 - omega01);
    if (!(omega23 > 0.0)) {
        throw std::invalid_argument("Duffing extrapolation gives a non-positive omega23");
    }
    return {0.0, omega01, omega01 + omega12, omega01 + omega12 + omega23};
}

}  // namespace heliumq
