#pragma once

#include <array>

// Asymptotic secure key rate for Gaussian-modulated coherent-state CV-QKD:
// homodyne detection, reverse reconciliation, collective attacks, untrusted
// receiver (detection loss and noise attributed to the channel).
//
// Quadrature variances are in shot-noise units throughout; V = V_mod + 1.

namespace qkdrx {

struct ChannelParams {
    double length_km = 0.0;
    double attenuation_db_per_km = 0.23;
    double extra_loss_db = 0.0;

    void validate() const;
};

struct DetectorParams {
    double coupling_loss_db = 3.0;    // optical coupling into the receiver
    double responsivity_a_w = 0.7;    // acts as a photon-to-electron efficiency
    double xi_det_snu = 0.0;          // detection noise at the detector, SNU

    // 10^(-coupling/10) * responsivity, must lie in (0, 1].
    double efficiency() const;
    void validate() const;
};

struct ProtocolParams {
    double v_mod_snu = 6.0;       // modulation variance
    double beta_rec = 0.96;       // reconciliation efficiency
    double symbol_rate_bd = 250e6;

    void validate() const;
};

struct QkdScenario {
    ChannelParams channel;
    DetectorParams detector;
    ProtocolParams protocol;
    double xi_rx_snu = 0.0;  // channel excess noise referred to receiver input

    void validate() const;
};

/// 10^(-(attenuation*length + extra_loss)/10).
double channel_transmittance(const ChannelParams& channel);

struct EffectiveChannel {
    double t_channel = 1.0;  // fiber alone
    double t_total = 1.0;    // fiber * detector efficiency
    double xi_in_snu = 0.0;  // all excess noise referred to channel input
};

/// Folds detector loss and noise into the channel (untrusted receiver):
/// T = T_ch * eta_det, xi_in = (xi_rx + xi_det/eta_det) / T_ch.
EffectiveChannel effective_channel(const QkdScenario& scenario);

/// I_AB = 1/2 * log2((V + chi_line)/(1 + chi_line)) bits/symbol,
/// with chi_line = (1-T)/T + xi_in.
double mutual_information(double v_snu, double chi_line);

/// Von Neumann entropy of a thermal mode with symplectic eigenvalue nu:
/// g(nu) = ((nu+1)/2)log2((nu+1)/2) - ((nu-1)/2)log2((nu-1)/2); g(1) = 0.
double entropy_g(double nu);

struct HolevoResult {
    double chi_be_bits = 0.0;
    std::array<double, 4> nu{1.0, 1.0, 1.0, 1.0};
};

/// Holevo bound on Eve's information about Bob's homodyne outcome.
///
/// Two-mode covariance matrix of the entanglement-based picture:
///   gamma_A = V*I, gamma_B = T(V+chi)*I, off-diagonal sqrt(T(V^2-1))*sigma_z.
/// S(E) from its symplectic spectrum:
///   A = V^2(1-2T) + 2T + T^2(V+chi)^2, B = T^2(V chi + 1)^2,
///   nu_{1,2}^2 = (A +- sqrt(A^2-4B))/2.
/// S(E|x_B): Eve purifies, so this equals the entropy of Alice's mode after
/// a perfect x-homodyne on B (chi_hom = 0 for the untrusted receiver):
///   C = (V sqrt(B) + T(V+chi)) / (T(V+chi)), D = V sqrt(B) / (T(V+chi)),
///   nu_{3,4}^2 = (C +- sqrt(C^2-4D))/2, i.e. nu_3^2 = V(V chi+1)/(V+chi)
/// and nu_4 = 1 exactly.
/// chi_BE = g(nu1)+g(nu2)-g(nu3)-g(nu4). Eigenvalues below 1 by at most
/// 1e-6 are clamped to 1; anything lower throws ModelError ("unphysical
/// covariance"), as does A^2-4B < -1e-9.
HolevoResult holevo_bound(double v_snu, double t_total, double chi_line);

struct KeyRateResult {
    double t_channel = 1.0;
    double t_total = 1.0;
    double xi_in_snu = 0.0;
    double chi_line = 0.0;
    double i_ab_bits = 0.0;
    double chi_be_bits = 0.0;
    double key_fraction_bits = 0.0;  // max(0, beta_rec*I_AB - chi_BE)
    double skr_bits_per_s = 0.0;     // symbol_rate * key_fraction
    std::array<double, 4> nu{1.0, 1.0, 1.0, 1.0};
};

KeyRateResult secure_key_rate(const QkdScenario& scenario);

} // namespace qkdrx
