#ifndef QOT_TOPOLOGY_HPP
#define QOT_TOPOLOGY_HPP

#include <string>
#include <utility>
#include <vector>

namespace qot {

struct Link {
    int a = 0;
    int b = 0;
    double length_km = 0.0;
};

/// Immutable weighted undirected graph of nodes and fiber links.
class Topology {
public:
    Topology() = default;
    Topology(int node_count, std::vector<Link> links);

    int node_count() const { return node_count_; }
    int link_count() const { return static_cast<int>(links_.size()); }
    const std::vector<Link>& links() const { return links_; }
    const Link& link(int id) const { return links_[static_cast<std::size_t>(id)]; }

    // (neighbor node, link id) pairs, sorted by neighbor id.
    const std::vector<std::pair<int, int>>& neighbors(int node) const {
        return adjacency_[static_cast<std::size_t>(node)];
    }

private:
    int node_count_ = 0;
    std::vector<Link> links_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

struct Path {
    std::vector<int> nodes;
    std::vector<int> link_ids;

    int hop_count() const { return static_cast<int>(link_ids.size()); }
    int source() const { return nodes.front(); }
    int destination() const { return nodes.back(); }
};

struct PathMetrics {
    double total_length_km = 0.0;
    double max_link_length_km = 0.0;
    int hop_count = 0;
};

// Text format: first line "nodes <N>", then one "<u> <v> <length_km>" per
// link; '#' starts a comment line. Throws ParseError / ValidationError.
Topology load_topology(const std::string& text);

Topology load_topology_file(const std::string& path);

// Minimum-total-length simple path; among equal-length paths returns the
// lexicographically smallest node sequence.
Path shortest_path(const Topology& topology, int source, int destination);

// Throws ValidationError on a path that is not valid in this topology.
PathMetrics path_metrics(const Topology& topology, const Path& path);

std::vector<double> link_lengths(const Topology& topology, const Path& path);

}  // namespace qot

#endif
