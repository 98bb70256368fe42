#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qkdrx/keyrate.hpp"
#include "qkdrx/noise_model.hpp"
#include "qkdrx/receiver_metrics.hpp"
#include "qkdrx/table.hpp"

// Deterministic parameter-grid evaluation. Axis iteration order is fixed
// (declaration order, last axis fastest) and re-runs are byte-identical
// regardless of how many worker threads evaluate the grid.

namespace qkdrx {

inline constexpr std::size_t kDefaultSweepPointCap = 1000000;

/// Inclusive linear grid with `points` samples.
std::vector<double> linspace(double lo, double hi, int points);

/// Checks an axis is non-empty and strictly monotone. Throws ModelError.
void validate_axis(const std::vector<double>& values, const char* name);

/// One row per RSD value with the quantum clearance at R = 0.7 and
/// R = 1.0 A/W. Columns: rsd_a_per_sqrthz, clearance_db_r0p7,
/// clearance_db_r1p0.
Table sweep_clearance(const std::vector<double>& rsd_values_a,
                      const ReceiverSpec& spec_template);

struct SkrSweepOptions {
    bool refine_cutoff = false;      // bisect the zero-key crossing to 0.01 km
    std::size_t max_points = kDefaultSweepPointCap;
};

/// Grid over (xi_rx outer, length fastest). Columns: length_km, xi_rx_snu,
/// t_channel, t_total, xi_in_snu, i_ab_bits, chi_be_bits,
/// key_fraction_bits, skr_bits_per_s. The zero-key cutoff per xi (first
/// grid point with zero key fraction) is reported in the footnotes.
Table sweep_skr(const std::vector<double>& lengths_km,
                const std::vector<double>& xi_values_snu,
                const ChannelParams& channel_template,
                const DetectorParams& detector,
                const ProtocolParams& protocol,
                const SkrSweepOptions& options = {});

struct PresetDesign {
    TiaNoiseDesign design;
    std::optional<double> ref_irms_a;      // reference integrated rms
    std::optional<double> ref_mean_rsd_a;  // reference mean RSD
};

/// Per design: bandwidth, modeled mean RSD and integrated rms, reference
/// values, relative deviations, and ordering-check booleans
/// (noise grows with bandwidth within a kind; monolithic beats
/// heterogeneous at matched bandwidth).
Table compare_designs(const std::vector<PresetDesign>& presets);

namespace detail {
/// Deterministic parallel evaluation: fn(i) writes only to index i of a
/// preallocated buffer. Thread count via QKDRX_THREADS (default: hardware).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);
} // namespace detail

} // namespace qkdrx
