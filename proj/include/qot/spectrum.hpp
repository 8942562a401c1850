#ifndef QOT_SPECTRUM_HPP
#define QOT_SPECTRUM_HPP

#include <array>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qot/topology.hpp"

namespace qot {

struct GridConfig {
    int slots_per_link = 160;
    double slot_width_ghz = 25.0;
    double baud_rate_gbaud = 16.0;

    void validate() const;
};

struct ModulationFormat {
    int code = 1;             // 1 BPSK, 2 QPSK, 3 8-QAM, 4 16-QAM
    int bits_per_symbol = 1;  // equals code
    double reach_km = 0.0;
    std::string_view name = "BPSK";
};

/// Transparent reach per format, indexed by code - 1.
struct ReachTable {
    std::array<double, 4> reach_km{4000.0, 2000.0, 1000.0, 500.0};

    void validate() const;  // positive, strictly decreasing in code
};

struct SlotRange {
    int start_slot = 0;
    int count = 0;
};

// Highest-order format whose reach covers the path; BPSK as fallback beyond
// all reaches.
ModulationFormat select_modulation(double path_length_km, const ReachTable& reach);

// Slots needed for a bit rate: each slot carries 2 * bits_per_symbol * baud
// Gbps (the 2 from polarization multiplexing).
int required_slots(double bit_rate_gbps, const ModulationFormat& format, const GridConfig& grid);

/// Per-link flex-grid occupancy under continuity/contiguity/no-overlap.
class SpectrumState {
public:
    SpectrumState(int link_count, int slots_per_link);

    int link_count() const { return static_cast<int>(occupied_.size()); }
    int slots_per_link() const { return slots_; }

    bool slot_free(int link, int slot) const {
        return !occupied_[static_cast<std::size_t>(link)][static_cast<std::size_t>(slot)];
    }
    int owner(int link, int slot) const {
        return owner_[static_cast<std::size_t>(link)][static_cast<std::size_t>(slot)];
    }

    bool range_free(const Path& path, SlotRange range) const;

    // Smallest start index with n_slots contiguous free slots on every path
    // link; nullopt when blocked. Query only.
    std::optional<SlotRange> first_fit(const Path& path, int n_slots) const;

    void allocate(const Path& path, SlotRange range, int lightpath_id);
    void release(int lightpath_id);

    bool holds(int lightpath_id) const { return allocations_.count(lightpath_id) > 0; }
    std::size_t active_count() const { return allocations_.size(); }

    // Bitmap/ownership cross-check; throws ValidationError on inconsistency.
    void audit() const;

    bool same_occupancy(const SpectrumState& other) const;

private:
    int slots_ = 0;
    std::vector<std::vector<bool>> occupied_;
    std::vector<std::vector<int>> owner_;  // -1 when free
    struct Allocation {
        std::vector<int> link_ids;
        SlotRange range;
    };
    std::unordered_map<int, Allocation> allocations_;
};

}  // namespace qot

#endif
