#include "cnotopt/architecture.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

namespace cnotopt {

bool ArchitectureGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool ArchitectureGraph::connected() const {
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

ArchitectureGraph make_architecture(int n, std::vector<std::pair<int, int>> edges,
                                    std::string name) {
    if (n < 1) raise(ErrorCode::InvalidParams, "vertex count must be >= 1");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(ErrorCode::IndexOutOfRange, "edge endpoint outside vertex range");
        if (u == v) raise(ErrorCode::SelfLoop, "self loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        raise(ErrorCode::DuplicateEdge, "edge listed twice");
    ArchitectureGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.name = std::move(name);
    g.adjacency.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : g.edges) {
        g.adjacency[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& neighbors : g.adjacency) std::sort(neighbors.begin(), neighbors.end());
    return g;
}

namespace {

ArchitectureGraph grid_graph(int rows, int cols, std::string name) {
    if (static_cast<long long>(rows) * cols > 1'000'000)
        raise(ErrorCode::InvalidParams, "grid too large");
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    }
    return make_architecture(rows * cols, std::move(edges), std::move(name));
}

bool parse_int(const std::string& text, int& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    const long value = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || value < 1 || value > 1'000'000) return false;
    out = static_cast<int>(value);
    return true;
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("CNOTOPT_DATA_DIR")) return env;
#ifdef CNOTOPT_DATA_DIR_DEFAULT
    return CNOTOPT_DATA_DIR_DEFAULT;
#else
    return "data";
#endif
}

ArchitectureGraph builtin_architecture(const std::string& name) {
    if (name == "9q-square") return grid_graph(3, 3, name);
    if (name == "16q-square") return grid_graph(4, 4, name);
    if (name == "ibm-q20-tokyo") {
        ArchitectureGraph g = load_architecture_file(data_dir() + "/ibm-q20-tokyo.arch");
        g.name = name;
        return g;
    }
    if (name.rfind("line-", 0) == 0) {
        int n = 0;
        if (parse_int(name.substr(5), n) && n >= 1) {
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return make_architecture(n, std::move(edges), name);
        }
    }
    if (name.rfind("grid-", 0) == 0) {
        const std::string dims = name.substr(5);
        const std::size_t cross = dims.find('x');
        int rows = 0, cols = 0;
        if (cross != std::string::npos && parse_int(dims.substr(0, cross), rows) &&
            parse_int(dims.substr(cross + 1), cols)) {
            return grid_graph(rows, cols, name);
        }
    }
    raise(ErrorCode::UnknownArchitecture, name);
}

ArchitectureGraph parse_architecture(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "qubits") {
            if (n >= 0) raise(ErrorCode::ParseError, "duplicate qubits header");
            if (!(ls >> n) || n < 1) raise(ErrorCode::ParseError, "bad qubits count");
        } else if (tag == "edge") {
            if (n < 0) raise(ErrorCode::ParseError, "edge before qubits header");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) raise(ErrorCode::ParseError, "expected 'edge <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                raise(ErrorCode::IndexOutOfRange, "edge endpoint outside 1..n");
            edges.emplace_back(u - 1, v - 1);
        } else {
            raise(ErrorCode::ParseError, "unknown line: " + line);
        }
    }
    if (n < 0) raise(ErrorCode::ParseError, "missing qubits header");
    return make_architecture(n, std::move(edges), "");
}

std::string format_architecture(const ArchitectureGraph& g) {
    std::ostringstream out;
    out << "qubits " << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << "edge " << u + 1 << ' ' << v + 1 << "\n";
    return out.str();
}

ArchitectureGraph load_architecture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot open architecture file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ArchitectureGraph g = parse_architecture(buffer.str());
    g.name = path;
    return g;
}

DistanceTable all_pairs_distances(const ArchitectureGraph& g) {
    if (!g.connected()) raise(ErrorCode::DisconnectedGraph, "architecture must be connected");
    const int n = g.n;
    std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> next(static_cast<std::size_t>(n) * n, -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* d = &dist[static_cast<std::size_t>(s) * n];
        d[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            // smallest-index neighbor of u that lies on some shortest u-v path
            for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w) * n + v] ==
                    dist[static_cast<std::size_t>(u) * n + v] - 1) {
                    next[static_cast<std::size_t>(u) * n + v] = w;
                    break;
                }
            }
        }
    }
    return DistanceTable(n, std::move(dist), std::move(next));
}

std::vector<int> shortest_path(const DistanceTable& t, int u, int v) {
    if (u == v) raise(ErrorCode::SameVertex, "path endpoints must differ");
    if (u < 0 || u >= t.n() || v < 0 || v >= t.n())
        raise(ErrorCode::IndexOutOfRange, "path endpoint outside graph");
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        cur = t.next_hop(cur, v);
        path.push_back(cur);
    }
    return path;
}

}  // namespace cnotopt
