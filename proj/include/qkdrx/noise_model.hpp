#pragma once

#include <optional>
#include <string>

// Input-referred noise model of a shunt-feedback TIA with bipolar input
// transistor, its band integration, and bias/sizing optimization.
//
// The noise current PSD has four terms:
//
//   S(f) = 4kT/R_F                               feedback resistor
//        + 2q*I_C/beta                           base shot noise
//        + 2q*I_C*(2*pi*C_T)^2/g_m^2 * f^2       input-referred collector shot
//        + 4kT*r_b*(2*pi*C_ext)^2 * f^2          base resistance noise
//
// with g_m = I_C/V_T and C_T the total input capacitance. C_ext is the
// capacitance hanging off the input node in front of the transistor
// (photodiode plus bond pads); with strict_photodiode_cd set it is reduced
// to the photodiode junction capacitance alone.

namespace qkdrx {

enum class IntegrationKind { kMonolithic, kHeterogeneous };

/// Capacitance budget of the photodiode/TIA interface.
struct InterfaceModel {
    IntegrationKind kind = IntegrationKind::kMonolithic;
    double c_pd_f = 10e-15;    // photodiode junction capacitance
    double c_pad_f = 100e-15;  // per-pad bond capacitance
    int n_pads = 0;            // pads on the signal path (0 when monolithic)

    double external_capacitance() const { return c_pd_f + n_pads * c_pad_f; }
    void validate() const;  // throws ModelError naming the violated field

    static InterfaceModel monolithic();
    static InterfaceModel heterogeneous();  // two 100 fF pads
};

struct TransistorParams {
    double beta_dc = 100.0;  // DC current gain
    double f_t_hz = 210e9;   // transit frequency
    double r_b_ohm = 0.0;    // base resistance
    double c_tr_f = 0.0;     // total input transistor capacitance
    double i_c_a = 0.0;      // collector current

    double gm(double temperature_k) const;
    void validate(double temperature_k) const;
};

struct TiaNoiseDesign {
    double r_f_ohm = 0.0;
    TransistorParams transistor;
    InterfaceModel interface;
    double temperature_k = 300.0;
    double bandwidth_hz = 0.0;  // target -3 dB bandwidth
    bool strict_photodiode_cd = false;  // r_b term uses c_pd only
    std::string label = "custom";

    double total_capacitance() const {
        return interface.external_capacitance() + transistor.c_tr_f;
    }
    // Capacitance entering the base-resistance noise term.
    double rb_capacitance() const {
        return strict_photodiode_cd ? interface.c_pd_f
                                    : interface.external_capacitance();
    }
    void validate() const;
};

/// PSD(f) = white + quadratic * f^2, split per physical source.
struct NoiseBreakdown {
    double feedback_a2hz = 0.0;        // 4kT/R_F
    double base_shot_a2hz = 0.0;       // 2q I_C / beta
    double collector_shot_a2hz3 = 0.0; // 2q I_C (2 pi C_T)^2 / g_m^2
    double base_res_a2hz3 = 0.0;       // 4kT r_b (2 pi C_ext)^2

    double white() const { return feedback_a2hz + base_shot_a2hz; }
    double quadratic() const { return collector_shot_a2hz3 + base_res_a2hz3; }
    double psd(double f_hz) const { return white() + quadratic() * f_hz * f_hz; }
};

NoiseBreakdown noise_breakdown(const TiaNoiseDesign& design);

/// Total input-referred noise current PSD at frequency f (A^2/Hz).
double noise_psd(const TiaNoiseDesign& design, double f_hz);

/// Brick-wall integrated rms noise current over [0, upper]:
/// sqrt(a*U + b*U^3/3) with a, b from the breakdown.
double integrate_rms(const TiaNoiseDesign& design, double upper_hz);

/// (1/U) * integral of sqrt(PSD(f)) over [0, U], by adaptive quadrature
/// to 1e-6 relative or better.
double mean_rsd(const TiaNoiseDesign& design, double upper_hz);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct BiasSweepSettings {
    int coarse_points = 96;    // per axis, log-spaced
    double refine_tol = 1e-4;  // stop when relative grid step < this
};

struct BiasOptimum {
    TransistorParams transistor;  // chosen i_c, c_tr, r_b
    double scale = 1.0;           // chosen transistor scale factor
    double rms_a = 0.0;           // achieved integrated rms over the bandwidth
    // c_tr / C_ext, reported for the noise-matching rule of thumb
    // (informational only; not an optimality condition of this model).
    std::optional<double> match_ratio;
};

/// Grid sweep over collector current and transistor scale s, where the
/// design's transistor supplies the s = 1 reference: c_tr = s * c_tr_unit,
/// r_b = r_b_unit / s. Points violating the transit-frequency constraint
/// c_tr >= g_m/(2 pi f_T) are infeasible. Returns the feasible point of
/// minimum integrated rms over the design bandwidth, tie-broken toward
/// smaller i_c, then smaller s. Deterministic; grid refinement below
/// refine_tol does not move the optimum.
/// Throws ModelError if no feasible point exists.
BiasOptimum optimize_bias(const TiaNoiseDesign& design, Interval i_c_range,
                          Interval scale_range,
                          const BiasSweepSettings& settings = {});

} // namespace qkdrx
