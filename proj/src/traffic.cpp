#include "qot/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "qot/errors.hpp"

namespace qot {

void SliceProfile::validate() const {
    if (thresholds.empty()) throw ValidationError("slice profile needs at least one BER threshold");
    double prev = 0.0;
    for (const double b : thresholds) {
        if (!(b > 0.0 && b < 0.5) || !std::isfinite(b))
            throw ValidationError("BER threshold out of (0, 0.5)");
        if (b <= prev) throw ValidationError("BER thresholds must be strictly increasing");
        prev = b;
    }
}

ConnectionRequest sample_request(Rng& rng, const TrafficConfig& config, const SliceProfile& slices,
                                 int node_count, int id, double arrival_time) {
    ConnectionRequest r;
    r.id = id;
    r.arrival_time = arrival_time;
    r.source = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(node_count)));
    // Draw the destination from the n-1 remaining nodes; no rejection loop.
    int d = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(node_count - 1)));
    if (d >= r.source) ++d;
    r.destination = d;
    r.slice_index =
        1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(slices.slice_count())));
    r.bit_rate_gbps = uniform_range(rng, config.bitrate_min_gbps, config.bitrate_max_gbps);
    r.holding_time = exponential(rng, 1.0);  // mean holding time fixed at 1 time unit
    return r;
}

EventStream generate_requests(const TrafficConfig& config, const SliceProfile& slices,
                              int node_count) {
    if (config.request_count < 1) throw ValidationError("request_count must be >= 1");
    if (!(config.load_erlangs > 0.0)) throw ValidationError("load_erlangs must be positive");
    if (node_count < 2) throw ValidationError("traffic generation needs at least 2 nodes");
    if (!(config.bitrate_min_gbps > 0.0) || config.bitrate_max_gbps < config.bitrate_min_gbps)
        throw ValidationError("invalid bit-rate interval");
    slices.validate();

    Rng rng(derive_seed(config.seed, "traffic"));
    EventStream stream;
    stream.requests.reserve(static_cast<std::size_t>(config.request_count));
    stream.events.reserve(static_cast<std::size_t>(config.request_count) * 2);

    double clock = 0.0;
    for (int id = 0; id < config.request_count; ++id) {
        clock += exponential(rng, config.load_erlangs);
        ConnectionRequest r = sample_request(rng, config, slices, node_count, id, clock);
        stream.events.push_back({r.arrival_time, EventKind::Arrival, id});
        stream.events.push_back({r.arrival_time + r.holding_time, EventKind::Departure, id});
        stream.requests.push_back(std::move(r));
    }

    std::sort(stream.events.begin(), stream.events.end(), [](const Event& x, const Event& y) {
        return std::tie(x.time, x.kind, x.request_id) < std::tie(y.time, y.kind, y.request_id);
    });
    return stream;
}

}  // namespace qot
