#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnotopt/errors.hpp"

namespace cnotopt {

/// Undirected coupling graph of a device. Vertices are 0-based internally;
/// the text format and all CLI output are 1-based.
struct ArchitectureGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;    // normalized u < v, sorted
    std::vector<std::vector<int>> adjacency;   // sorted neighbor lists
    std::string name;

    bool has_edge(int u, int v) const;
    bool connected() const;
};

/// Builds and validates a graph from raw (possibly unordered) edge pairs.
/// Throws IndexOutOfRange, SelfLoop, DuplicateEdge.
ArchitectureGraph make_architecture(int n, std::vector<std::pair<int, int>> edges,
                                    std::string name);

/// Named builtin topologies: "9q-square", "16q-square", "ibm-q20-tokyo",
/// "line-<n>", "grid-<r>x<c>". Squares and grids are numbered row-major
/// starting at 1. The IBM Q20 Tokyo coupling map is loaded from a shipped
/// data file (see data_dir()). Throws UnknownArchitecture.
ArchitectureGraph builtin_architecture(const std::string& name);

/// Text format: "qubits <n>" header then "edge <u> <v>" lines (1-based).
/// Lines starting with '#' are comments. Connectivity is not required here;
/// it is checked at compile time.
ArchitectureGraph parse_architecture(std::string_view text);

/// Canonical serialization of the text format (sorted edges, no comments).
std::string format_architecture(const ArchitectureGraph& g);

ArchitectureGraph load_architecture_file(const std::string& path);

/// Directory with shipped data files; the CNOTOPT_DATA_DIR environment
/// variable overrides the build-time default.
std::string data_dir();

/// All-pairs shortest distances plus deterministic next hops.
/// next_hop(u, v) is the smallest-index neighbor of u on a shortest u-v path.
class DistanceTable {
  public:
    DistanceTable() = default;
    DistanceTable(int n, std::vector<int> dist, std::vector<int> next_hop)
        : n_(n), dist_(std::move(dist)), next_hop_(std::move(next_hop)) {}

    int n() const { return n_; }
    int distance(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    int next_hop(int u, int v) const { return next_hop_[static_cast<std::size_t>(u) * n_ + v]; }

  private:
    int n_ = 0;
    std::vector<int> dist_;
    std::vector<int> next_hop_;
};

/// Breadth-first search from every vertex. Throws DisconnectedGraph.
DistanceTable all_pairs_distances(const ArchitectureGraph& g);

/// The deterministic shortest path u..v (endpoints included) obtained by
/// following next hops. Throws SameVertex when u == v.
std::vector<int> shortest_path(const DistanceTable& t, int u, int v);

}  // namespace cnotopt
