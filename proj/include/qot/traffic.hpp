#ifndef QOT_TRAFFIC_HPP
#define QOT_TRAFFIC_HPP

#include <cstdint>
#include <vector>

#include "qot/rng.hpp"

namespace qot {

/// Ordered set of per-slice BER requirements B_1 < ... < B_K.
struct SliceProfile {
    std::vector<double> thresholds;

    int slice_count() const { return static_cast<int>(thresholds.size()); }
    int class_count() const { return slice_count() + 1; }
    void validate() const;  // strictly increasing, each in (0, 0.5), K >= 1
};

struct ConnectionRequest {
    int id = 0;
    int source = 0;
    int destination = 0;
    int slice_index = 1;  // 1..K
    double bit_rate_gbps = 0.0;
    double arrival_time = 0.0;
    double holding_time = 0.0;
};

enum class EventKind {
    Departure = 0,  // ties resolved departures-first so slots free up before reuse
    Arrival = 1,
};

struct Event {
    double time = 0.0;
    EventKind kind = EventKind::Arrival;
    int request_id = 0;
};

struct EventStream {
    std::vector<ConnectionRequest> requests;  // indexed by request id
    std::vector<Event> events;                // time-ordered
};

struct TrafficConfig {
    int request_count = 20000;
    double load_erlangs = 400.0;
    double bitrate_min_gbps = 10.0;
    double bitrate_max_gbps = 200.0;
    std::uint64_t seed = 42;
};

// One request drawn from the given rng state; draw order is fixed
// (source, destination, slice, bit rate, holding time).
ConnectionRequest sample_request(Rng& rng, const TrafficConfig& config, const SliceProfile& slices,
                                 int node_count, int id, double arrival_time);

// Poisson arrivals at rate load_erlangs, exponential holding times with mean
// one time unit, so offered load equals load_erlangs.
EventStream generate_requests(const TrafficConfig& config, const SliceProfile& slices,
                              int node_count);

}  // namespace qot

#endif
