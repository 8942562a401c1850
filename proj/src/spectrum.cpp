#include "qot/spectrum.hpp"

#include <cmath>
#include <string>

#include "qot/errors.hpp"

namespace qot {

namespace {

constexpr std::array<std::string_view, 4> kFormatNames{"BPSK", "QPSK", "8-QAM", "16-QAM"};

ModulationFormat make_format(int code, const ReachTable& reach) {
    return ModulationFormat{code, code, reach.reach_km[static_cast<std::size_t>(code - 1)],
                            kFormatNames[static_cast<std::size_t>(code - 1)]};
}

}  // namespace

void GridConfig::validate() const {
    if (slots_per_link <= 0 || !(slot_width_ghz > 0.0) || !(baud_rate_gbaud > 0.0))
        throw ValidationError("grid parameters must be positive");
}

void ReachTable::validate() const {
    for (std::size_t i = 0; i < reach_km.size(); ++i) {
        if (!(reach_km[i] > 0.0)) throw ValidationError("reach table entries must be positive");
        if (i > 0 && reach_km[i] >= reach_km[i - 1])
            throw ValidationError("reach must strictly decrease with modulation order");
    }
}

ModulationFormat select_modulation(double path_length_km, const ReachTable& reach) {
    for (int code = 4; code >= 1; --code) {
        if (reach.reach_km[static_cast<std::size_t>(code - 1)] >= path_length_km)
            return make_format(code, reach);
    }
    return make_format(1, reach);  // beyond all reaches: most robust format
}

int required_slots(double bit_rate_gbps, const ModulationFormat& format, const GridConfig& grid) {
    const double slot_capacity_gbps = 2.0 * format.bits_per_symbol * grid.baud_rate_gbaud;
    return std::max(1, static_cast<int>(std::ceil(bit_rate_gbps / slot_capacity_gbps)));
}

SpectrumState::SpectrumState(int link_count, int slots_per_link) : slots_(slots_per_link) {
    if (link_count < 0 || slots_per_link <= 0)
        throw ValidationError("spectrum state needs positive dimensions");
    occupied_.assign(static_cast<std::size_t>(link_count),
                     std::vector<bool>(static_cast<std::size_t>(slots_per_link), false));
    owner_.assign(static_cast<std::size_t>(link_count),
                  std::vector<int>(static_cast<std::size_t>(slots_per_link), -1));
}

bool SpectrumState::range_free(const Path& path, SlotRange range) const {
    if (range.start_slot < 0 || range.count < 1 || range.start_slot + range.count > slots_)
        return false;
    for (const int link : path.link_ids) {
        const auto& bits = occupied_[static_cast<std::size_t>(link)];
        for (int s = range.start_slot; s < range.start_slot + range.count; ++s)
            if (bits[static_cast<std::size_t>(s)]) return false;
    }
    return true;
}

std::optional<SlotRange> SpectrumState::first_fit(const Path& path, int n_slots) const {
    if (n_slots < 1) throw ValidationError("first_fit needs n_slots >= 1");
    for (int start = 0; start + n_slots <= slots_; ++start) {
        const SlotRange candidate{start, n_slots};
        if (range_free(path, candidate)) return candidate;
    }
    return std::nullopt;
}

void SpectrumState::allocate(const Path& path, SlotRange range, int lightpath_id) {
    if (range.start_slot < 0 || range.count < 1 || range.start_slot + range.count > slots_)
        throw ValidationError("slot range out of grid bounds");
    if (allocations_.count(lightpath_id))
        throw ConflictError("lightpath " + std::to_string(lightpath_id) + " already allocated");
    for (const int link : path.link_ids) {
        for (int s = range.start_slot; s < range.start_slot + range.count; ++s) {
            if (occupied_[static_cast<std::size_t>(link)][static_cast<std::size_t>(s)])
                throw ConflictError("slot " + std::to_string(s) + " on link " + std::to_string(link) +
                                    " already owned by lightpath " +
                                    std::to_string(owner(link, s)));
        }
    }
    for (const int link : path.link_ids) {
        for (int s = range.start_slot; s < range.start_slot + range.count; ++s) {
            occupied_[static_cast<std::size_t>(link)][static_cast<std::size_t>(s)] = true;
            owner_[static_cast<std::size_t>(link)][static_cast<std::size_t>(s)] = lightpath_id;
        }
    }
    allocations_[lightpath_id] = Allocation{path.link_ids, range};
}

void SpectrumState::release(int lightpath_id) {
    const auto it = allocations_.find(lightpath_id);
    if (it == allocations_.end())
        throw NotFoundError("release of unknown lightpath " + std::to_string(lightpath_id));
    const auto& [links, range] = it->second;
    for (const int link : links) {
        for (int s = range.start_slot; s < range.start_slot + range.count; ++s) {
            occupied_[static_cast<std::size_t>(link)][static_cast<std::size_t>(s)] = false;
            owner_[static_cast<std::size_t>(link)][static_cast<std::size_t>(s)] = -1;
        }
    }
    allocations_.erase(it);
}

void SpectrumState::audit() const {
    for (std::size_t link = 0; link < occupied_.size(); ++link) {
        for (std::size_t s = 0; s < static_cast<std::size_t>(slots_); ++s) {
            const bool busy = occupied_[link][s];
            const int own = owner_[link][s];
            if (busy != (own >= 0))
                throw ValidationError("spectrum audit: bitmap/ownership mismatch at link " +
                                      std::to_string(link) + " slot " + std::to_string(s));
            if (own >= 0 && !allocations_.count(own))
                throw ValidationError("spectrum audit: slot owned by unknown lightpath " +
                                      std::to_string(own));
        }
    }
    for (const auto& [id, alloc] : allocations_) {
        for (const int link : alloc.link_ids) {
            for (int s = alloc.range.start_slot; s < alloc.range.start_slot + alloc.range.count; ++s) {
                if (owner(link, s) != id)
                    throw ValidationError("spectrum audit: allocation record for lightpath " +
                                          std::to_string(id) + " not reflected in ownership map");
            }
        }
    }
}

bool SpectrumState::same_occupancy(const SpectrumState& other) const {
    return occupied_ == other.occupied_ && owner_ == other.owner_;
}

}  // namespace qot
