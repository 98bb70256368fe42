#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkdrx/keyrate.hpp"
#include "qkdrx/noise_model.hpp"
#include "qkdrx/receiver_metrics.hpp"

// INI-style run configuration: [section] headers with key = value lines,
// '#' or ';' comments. Sections: tia, interface, receiver, channel,
// detector, protocol, sweep, reference. Unknown sections or keys are
// rejected with the offending line number. Defaults reproduce the baseline
// scenario, so an empty file is a valid configuration.

namespace qkdrx {

struct SweepConfig {
    double length_min_km = 0.0;
    double length_max_km = 30.0;
    int length_points = 301;
    std::vector<double> xi_values_snu{0.01, 0.02, 0.03, 0.04};
    // Default RSD axis: the reference mean RSD values of the six bundled
    // designs, ascending.
    std::vector<double> rsd_values_a{0.89e-12, 1.85e-12, 3.2e-12,
                                     3.5e-12, 7.05e-12, 19.68e-12};
    std::int64_t max_points = 1000000;
    bool refine_cutoff = false;

    bool operator==(const SweepConfig&) const = default;
};

struct ReferenceValues {
    std::optional<double> irms_a;
    std::optional<double> mean_rsd_a;

    bool operator==(const ReferenceValues&) const = default;
};

struct RunConfig {
    TiaNoiseDesign tia;          // includes interface
    ReceiverSpec receiver;
    ClearanceVariant clearance_variant = ClearanceVariant::kVacuum;
    double receiver_cmrr_db = 40.0;  // assumed CMRR of the candidate receiver
    ChannelParams channel;
    double xi_rx_snu = 0.03;
    DetectorParams detector;     // xi_det_snu resolved, see below
    bool xi_det_explicit = false;
    ProtocolParams protocol;
    SweepConfig sweep;
    ReferenceValues reference;

    QkdScenario scenario() const;

    bool operator==(const RunConfig&) const;
};

/// The built-in defaults (the baseline scenario with the monolithic
/// 1.48 GHz design).
RunConfig default_config();

/// Parses and validates configuration text layered on top of `base`.
/// Unset detector.xi_det_snu is derived from the receiver spec via
/// xi_det_snu(clearance_db(receiver)). Throws ConfigError.
RunConfig parse_config(const std::string& text, const RunConfig& base,
                       const std::string& origin = "<config>");

RunConfig parse_config_file(const std::string& path, const RunConfig& base);

/// Canonical INI rendering of every resolved parameter; parse_config of the
/// result reproduces the identical RunConfig.
std::string render(const RunConfig& config);

/// The same resolved parameters as "sec.key=value" tokens, for provenance
/// headers.
std::vector<std::string> provenance_tokens(const RunConfig& config);

} // namespace qkdrx
