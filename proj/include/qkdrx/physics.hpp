#pragma once

// Physical constants and unit conventions shared by all modules.
//
// Unit conventions: all public interfaces take and return SI base units —
// currents in A, noise PSD in A^2/Hz, root spectral density in A/sqrt(Hz),
// power in W, capacitance in F, frequency in Hz, temperature in K, noise
// variances in shot-noise units (SNU). Decibel conversions are explicit
// operations, never implicit; dB values are power-style (10*log10) with the
// single exception of CMRR, which is defined on a current ratio and uses
// 20*log10 (see receiver_metrics).

namespace qkdrx {

namespace constants {
// CODATA/SI exact values.
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kBoltzmann = 1.380649e-23;            // J/K
inline constexpr double kPlanck = 6.62607015e-34;             // J*s
inline constexpr double kSpeedOfLight = 2.99792458e8;         // m/s
} // namespace constants

// Design temperature used wherever a configuration does not say otherwise.
inline constexpr double kDefaultTemperatureK = 300.0;

/// kT/q, about 25.85 mV at 300 K.
double thermal_voltage(double temperature_k);

/// 10*log10(ratio). Throws ModelError for ratio <= 0.
double db_from_ratio(double ratio);

/// 10^(db/10). Inverse of db_from_ratio to 1e-12 relative.
double ratio_from_db(double db);

/// Unity-quantum-efficiency responsivity q*lambda/(h*c) in A/W.
/// Throws ModelError for wavelength <= 0.
double ideal_responsivity(double wavelength_m);

} // namespace qkdrx
