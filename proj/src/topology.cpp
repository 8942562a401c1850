#include "qot/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "qot/errors.hpp"

namespace qot {

namespace {

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Topology::Topology(int node_count, std::vector<Link> links)
    : node_count_(node_count), links_(std::move(links)) {
    adjacency_.resize(static_cast<std::size_t>(node_count_));
    for (int id = 0; id < link_count(); ++id) {
        const Link& l = links_[static_cast<std::size_t>(id)];
        adjacency_[static_cast<std::size_t>(l.a)].emplace_back(l.b, id);
        adjacency_[static_cast<std::size_t>(l.b)].emplace_back(l.a, id);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Topology load_topology(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int node_count = -1;
    std::vector<Link> links;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        if (node_count < 0) {
            std::string keyword;
            int n = 0;
            if (!(fields >> keyword >> n) || keyword != "nodes")
                throw ParseError("topology line " + std::to_string(line_no) +
                                 ": expected 'nodes <N>'");
            if (n < 2)
                throw ValidationError("topology needs at least 2 nodes, got " + std::to_string(n));
            node_count = n;
            continue;
        }

        int u = 0, v = 0;
        double length = 0.0;
        if (!(fields >> u >> v >> length))
            throw ParseError("topology line " + std::to_string(line_no) +
                             ": expected '<u> <v> <length_km>'");
        if (u < 0 || u >= node_count || v < 0 || v >= node_count)
            throw ValidationError("topology line " + std::to_string(line_no) +
                                  ": node id out of range [0, " + std::to_string(node_count) + ")");
        if (u == v)
            throw ValidationError("topology line " + std::to_string(line_no) + ": self-loop at node " +
                                  std::to_string(u));
        if (!(length > 0.0) || !std::isfinite(length))
            throw ValidationError("topology line " + std::to_string(line_no) +
                                  ": link length must be strictly positive");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ValidationError("topology line " + std::to_string(line_no) + ": duplicate link " +
                                  std::to_string(u) + "-" + std::to_string(v));
        links.push_back({u, v, length});
    }

    if (node_count < 0) throw ParseError("topology file has no 'nodes <N>' line");

    Topology topo(node_count, std::move(links));

    // Connectivity check (BFS from node 0).
    std::vector<char> reached(static_cast<std::size_t>(node_count), 0);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (const auto& [nbr, link_id] : topo.neighbors(v)) {
            (void)link_id;
            if (!reached[static_cast<std::size_t>(nbr)]) {
                reached[static_cast<std::size_t>(nbr)] = 1;
                ++count;
                frontier.push(nbr);
            }
        }
    }
    if (count != node_count)
        throw ValidationError("topology is disconnected: reached " + std::to_string(count) + " of " +
                              std::to_string(node_count) + " nodes");
    return topo;
}

Topology load_topology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open topology file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_topology(buf.str());
}

Path shortest_path(const Topology& topology, int source, int destination) {
    const int n = topology.node_count();
    if (source < 0 || source >= n || destination < 0 || destination >= n)
        throw ValidationError("shortest_path: node id out of range");
    if (source == destination) throw ValidationError("shortest_path: source equals destination");

    // Dijkstra from the destination, then a greedy walk from the source that
    // always takes the smallest neighbor still on some minimum-length path.
    // The walk yields the lexicographically smallest shortest node sequence.
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    dist[static_cast<std::size_t>(destination)] = 0.0;
    using QEntry = std::pair<double, int>;
    std::priority_queue<QEntry, std::vector<QEntry>, std::greater<>> queue;
    queue.push({0.0, destination});
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (d > dist[static_cast<std::size_t>(v)]) continue;
        for (const auto& [nbr, link_id] : topology.neighbors(v)) {
            const double nd = d + topology.link(link_id).length_km;
            if (nd < dist[static_cast<std::size_t>(nbr)]) {
                dist[static_cast<std::size_t>(nbr)] = nd;
                queue.push({nd, nbr});
            }
        }
    }
    if (dist[static_cast<std::size_t>(source)] == kInf)
        throw NoPathError("no path between node " + std::to_string(source) + " and node " +
                          std::to_string(destination));

    Path path;
    path.nodes.push_back(source);
    int current = source;
    while (current != destination) {
        int next = -1, via = -1;
        for (const auto& [nbr, link_id] : topology.neighbors(current)) {
            const double through = topology.link(link_id).length_km + dist[static_cast<std::size_t>(nbr)];
            if (nearly_equal(through, dist[static_cast<std::size_t>(current)])) {
                next = nbr;
                via = link_id;
                break;  // neighbors sorted by id, first hit is the smallest
            }
        }
        if (next < 0) throw NoPathError("shortest-path reconstruction failed");
        path.nodes.push_back(next);
        path.link_ids.push_back(via);
        current = next;
    }
    return path;
}

namespace {

void require_valid_path(const Topology& topology, const Path& path) {
    if (path.link_ids.empty() || path.nodes.size() != path.link_ids.size() + 1)
        throw ValidationError("invalid path: empty or inconsistent node/link sequences");
    std::set<int> visited;
    for (std::size_t i = 0; i < path.link_ids.size(); ++i) {
        const int id = path.link_ids[i];
        if (id < 0 || id >= topology.link_count())
            throw ValidationError("invalid path: unknown link id " + std::to_string(id));
        const Link& l = topology.link(id);
        const int from = path.nodes[i];
        const int to = path.nodes[i + 1];
        const bool joins = (l.a == from && l.b == to) || (l.a == to && l.b == from);
        if (!joins)
            throw ValidationError("invalid path: link " + std::to_string(id) +
                                  " does not join consecutive nodes");
        if (!visited.insert(from).second)
            throw ValidationError("invalid path: repeated node " + std::to_string(from));
    }
    if (!visited.insert(path.nodes.back()).second)
        throw ValidationError("invalid path: repeated node " + std::to_string(path.nodes.back()));
}

}  // namespace

PathMetrics path_metrics(const Topology& topology, const Path& path) {
    require_valid_path(topology, path);
    PathMetrics m;
    m.hop_count = path.hop_count();
    for (const int id : path.link_ids) {
        const double len = topology.link(id).length_km;
        m.total_length_km += len;
        m.max_link_length_km = std::max(m.max_link_length_km, len);
    }
    return m;
}

std::vector<double> link_lengths(const Topology& topology, const Path& path) {
    std::vector<double> lengths;
    lengths.reserve(path.link_ids.size());
    for (const int id : path.link_ids) lengths.push_back(topology.link(id).length_km);
    return lengths;
}

}  // namespace qot
