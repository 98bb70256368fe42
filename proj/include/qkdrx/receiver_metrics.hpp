#pragma once

#include <optional>
#include <string>
#include <vector>

// Balanced-receiver figures of merit: LO shot noise, quantum-to-classical
// clearance (QCNR), NEP, CMRR, detection noise in shot-noise units, and
// comparison against the bundled commercial detector table.

namespace qkdrx {

struct ReceiverSpec {
    double responsivity_a_w = 0.7;
    double lo_power_w = 10e-3;        // at the fiber input of the receiver
    double lo_path_loss_db = 3.0;     // coupling + splitting losses before the PDs
    double wavelength_m = 1550e-9;
    double electronic_psd_a2hz = 0.0; // flat-equivalent electronic noise (mean RSD squared)
    double bandwidth_hz = 0.0;

    void validate() const;
};

/// Semiclassical LO shot noise PSD 2*q*R*P (A^2/Hz).
double shot_noise_psd(double responsivity_a_w, double optical_power_w);

// The quantum (vacuum-referenced) clearance divides the shot noise by the
// quantum efficiency eta = R/R_ideal once more, making it scale with R^2;
// the semiclassical variant is plain 2qRP/S_elec and scales with R.
enum class ClearanceVariant { kVacuum, kSemiclassical };

/// Quantum-to-classical clearance in dB, or nullopt ("no clearance")
/// when the LO power is zero.
std::optional<double> clearance_db(const ReceiverSpec& spec,
                                   ClearanceVariant variant = ClearanceVariant::kVacuum);

/// Noise equivalent power: rsd / responsivity (W/sqrt(Hz)).
double nep_w_sqrthz(double rsd_a_sqrthz, double responsivity_a_w);

struct CmrrResult {
    double db = 0.0;
    bool capped = false;  // i1 == i2: report ">= cap" rather than infinity
};

/// -20*log10(|i1-i2|/(i1+i2)), positive-is-better convention, saturated at
/// cap_db for perfectly balanced currents. Throws ModelError when both
/// currents are zero.
CmrrResult cmrr_db(double i1_a, double i2_a, double cap_db = 120.0);

/// Electronic noise variance in shot-noise units: 10^(-clearance/10).
double xi_det_snu(double clearance_db);

struct RequirementCheck {
    bool pass = false;
    bool qcnr_ok = false;  // clearance >= 10 dB
    bool cmrr_ok = false;  // CMRR > 30 dB (strict)
    std::string reasons;   // empty when passing
};

RequirementCheck meets_cvqkd_requirements(double clearance_db, double cmrr_db);

struct DatasheetEntry {
    std::string name;
    double bandwidth_mhz = 0.0;
    double nep_pw_sqrthz = 0.0;
    double cmrr_db = 0.0;
};

/// The bundled commercial balanced detector table.
std::vector<DatasheetEntry> bundled_detectors();

/// Merges the candidate (if any) with the bundled table and ranks
/// ascending by NEP, bandwidth descending as tiebreak, then name.
std::vector<DatasheetEntry> compare_datasheets(
    const std::optional<DatasheetEntry>& candidate);

} // namespace qkdrx
