#ifndef QOT_PHY_HPP
#define QOT_PHY_HPP

#include <span>

#include "qot/spectrum.hpp"
#include "qot/topology.hpp"

namespace qot {

// Analytic ground-truth BER model: per-span EDFAs with gain compensating span
// loss, accumulated ASE noise in a reference bandwidth, a length-proportional
// nonlinear SNR penalty, and format-dependent erfc mapping. The penalty
// coefficient default is calibrated so BER spans all slice thresholds on the
// bundled topology (see configs/default.conf).
struct PhyConfig {
    double span_length_km = 80.0;
    double amp_noise_figure_db = 5.0;
    double fiber_loss_db_per_km = 0.2;
    double launch_power_dbm = 0.0;
    double reference_bandwidth_ghz = 12.5;
    double nonlinear_penalty_db_per_1000km = 20.0;

    void validate() const;
};

/// A provisioned connection with its ground-truth BER.
struct Lightpath {
    int id = 0;
    Path path;
    ModulationFormat format;
    SlotRange slots;
    double bit_rate_gbps = 0.0;
    int slice_index = 1;
    double ground_truth_ber = 0.0;  // in (0, 0.5]
};

// One amplifier per span; spans per link = ceil(length / span_length), laid
// out as full spans plus a shorter remainder span.
int edfa_count(std::span<const double> link_lengths_km, const PhyConfig& phy);
int edfa_count(const Topology& topology, const Path& path, const PhyConfig& phy);

// BER clamped to (1e-15, 0.5]; depends only on the link-length multiset and
// the modulation format.
double estimate_ber(std::span<const double> link_lengths_km, const ModulationFormat& format,
                    const PhyConfig& phy);
double estimate_ber(const Topology& topology, const Path& path, const ModulationFormat& format,
                    const PhyConfig& phy);

}  // namespace qot

#endif
