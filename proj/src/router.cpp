#include "cnotopt/router.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cnotopt {

std::vector<CnotGate> expand_long_cnot(std::span<const int> path) {
    if (path.size() < 2) raise(ErrorCode::InvalidPath, "path needs at least two vertices");
    for (std::size_t a = 0; a < path.size(); ++a)
        for (std::size_t b = a + 1; b < path.size(); ++b)
            if (path[a] == path[b]) raise(ErrorCode::InvalidPath, "path revisits a vertex");
    const int d = static_cast<int>(path.size()) - 1;
    std::vector<CnotGate> gates;
    if (d == 1) {
        gates.push_back({path[0], path[1]});
        return gates;
    }
    gates.reserve(static_cast<std::size_t>(4 * d - 4));
    // four ladder sweeps; wire path[0] is the control, path[d] the target
    for (int j = d; j >= 1; --j) gates.push_back({path[static_cast<std::size_t>(j - 1)], path[static_cast<std::size_t>(j)]});
    for (int j = 2; j <= d; ++j) gates.push_back({path[static_cast<std::size_t>(j - 1)], path[static_cast<std::size_t>(j)]});
    for (int j = d - 1; j >= 1; --j) gates.push_back({path[static_cast<std::size_t>(j - 1)], path[static_cast<std::size_t>(j)]});
    for (int j = 2; j <= d - 1; ++j) gates.push_back({path[static_cast<std::size_t>(j - 1)], path[static_cast<std::size_t>(j)]});
    return gates;
}

std::vector<CnotGate> expand_long_cnot(std::span<const int> path, const ArchitectureGraph& g) {
    for (std::size_t s = 0; s + 1 < path.size(); ++s)
        if (!g.has_edge(path[s], path[s + 1]))
            raise(ErrorCode::InvalidPath, "consecutive path vertices are not adjacent");
    return expand_long_cnot(path);
}

namespace {

/// Adjacent-swap realization of the output permutation: routes every wire's
/// content to its destination over a spanning tree, finishing leaves first
/// so settled wires are never disturbed.
void append_relabel_swaps(std::vector<CnotGate>& gates, std::vector<int>& content_of,
                          const std::vector<int>& desired, const ArchitectureGraph& g) {
    const int n = g.n;
    // BFS spanning tree from vertex 0
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int u = order[head];
        for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                parent[static_cast<std::size_t>(v)] = u;
                order.push_back(v);
            }
        }
    }
    std::vector<int> tree_degree(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (parent[static_cast<std::size_t>(v)] >= 0) {
            ++tree_degree[static_cast<std::size_t>(v)];
            ++tree_degree[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        }

    std::vector<int> where(static_cast<std::size_t>(n));  // content -> wire
    for (int w = 0; w < n; ++w) where[static_cast<std::size_t>(content_of[static_cast<std::size_t>(w)])] = w;

    auto swap_adjacent = [&](int u, int v) {
        gates.push_back({u, v});
        gates.push_back({v, u});
        gates.push_back({u, v});
        std::swap(content_of[static_cast<std::size_t>(u)], content_of[static_cast<std::size_t>(v)]);
        where[static_cast<std::size_t>(content_of[static_cast<std::size_t>(u)])] = u;
        where[static_cast<std::size_t>(content_of[static_cast<std::size_t>(v)])] = v;
    };

    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int remaining = n; remaining > 0; --remaining) {
        // deterministic: smallest-index leaf of the remaining tree
        int leaf = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[static_cast<std::size_t>(v)] && tree_degree[static_cast<std::size_t>(v)] <= 1) {
                leaf = v;
                break;
            }
        }
        const int want = desired[static_cast<std::size_t>(leaf)];
        if (content_of[static_cast<std::size_t>(leaf)] != want) {
            // tree path from the wanted content's wire to the leaf: climb both
            // endpoints to their meeting point
            const int src = where[static_cast<std::size_t>(want)];
            std::vector<char> mark(static_cast<std::size_t>(n), 0);
            for (int v = src; v >= 0; v = parent[static_cast<std::size_t>(v)]) mark[static_cast<std::size_t>(v)] = 1;
            int meet = leaf;
            while (!mark[static_cast<std::size_t>(meet)]) meet = parent[static_cast<std::size_t>(meet)];
            std::vector<int> path;
            for (int v = src; v != meet; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
            path.push_back(meet);
            std::vector<int> down;
            for (int v = leaf; v != meet; v = parent[static_cast<std::size_t>(v)]) down.push_back(v);
            for (auto it = down.rbegin(); it != down.rend(); ++it) path.push_back(*it);
            for (std::size_t s = 0; s + 1 < path.size(); ++s) swap_adjacent(path[s], path[s + 1]);
        }
        removed[static_cast<std::size_t>(leaf)] = 1;
        const int p = parent[static_cast<std::size_t>(leaf)];
        --tree_degree[static_cast<std::size_t>(leaf)];
        if (p >= 0 && !removed[static_cast<std::size_t>(p)]) --tree_degree[static_cast<std::size_t>(p)];
    }
}

}  // namespace

RoutedCircuit route_circuit(const Decomposition& d, const Placement& p,
                            const DistanceTable& t) {
    const int m = d.perm.size();
    validate_placement(p, m, t.n());
    RoutedCircuit rc;
    rc.n_physical = t.n();
    rc.placement = p;

    // rightmost factor acts first
    for (auto it = d.seq.rbegin(); it != d.seq.rend(); ++it) {
        if (it->kind != OpKind::RowAdd) raise(ErrorCode::InvalidParams, "sequence must be swap-free");
        const int control = p[it->j];
        const int target = p[it->i];
        if (t.distance(control, target) == 1) {
            rc.gates.push_back({control, target});
        } else {
            const std::vector<int> path = shortest_path(t, control, target);
            const std::vector<CnotGate> expansion = expand_long_cnot(path);
            rc.gates.insert(rc.gates.end(), expansion.begin(), expansion.end());
        }
    }

    rc.output_relabel.resize(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) rc.output_relabel[static_cast<std::size_t>(a)] = p[d.perm.image(a)];
    return rc;
}

RoutedCircuit route_circuit_on(const Decomposition& d, const Placement& p,
                               const DistanceTable& t, const ArchitectureGraph& g,
                               const RouteOptions& options) {
    RoutedCircuit rc = route_circuit(d, p, t);
    if (!options.emit_swaps) return rc;

    // move contents so wire p[a] ends holding output a exactly
    const int n = rc.n_physical;
    std::vector<int> content_of(static_cast<std::size_t>(n));
    std::iota(content_of.begin(), content_of.end(), 0);
    std::vector<int> desired(static_cast<std::size_t>(n));
    std::iota(desired.begin(), desired.end(), 0);
    for (int a = 0; a < d.perm.size(); ++a)
        desired[static_cast<std::size_t>(p[a])] = rc.output_relabel[static_cast<std::size_t>(a)];
    append_relabel_swaps(rc.gates, content_of, desired, g);
    for (int a = 0; a < d.perm.size(); ++a) rc.output_relabel[static_cast<std::size_t>(a)] = p[a];
    return rc;
}

bool verify_routed(const RoutedCircuit& rc, const BitMatrix& a, const ArchitectureGraph& g) {
    if (a.n() != rc.placement.n_logical() || g.n != rc.n_physical)
        raise(ErrorCode::DimensionMismatch, "circuit, matrix and graph sizes disagree");
    for (const CnotGate& gate : rc.gates)
        if (!g.has_edge(gate.control, gate.target)) return false;

    const BitMatrix simulated = circuit_matrix(rc.gates, rc.n_physical);
    BitMatrix expected(rc.n_physical);
    std::vector<char> placed_row(static_cast<std::size_t>(rc.n_physical), 0);
    for (int l = 0; l < a.n(); ++l) {
        const int wire = rc.output_relabel[static_cast<std::size_t>(l)];
        placed_row[static_cast<std::size_t>(wire)] = 1;
        for (int c = 0; c < a.n(); ++c)
            expected.set(wire, rc.placement[c], a.get(l, c));
    }
    for (int w = 0; w < rc.n_physical; ++w)
        if (!placed_row[static_cast<std::size_t>(w)]) expected.set(w, w, true);
    return simulated == expected;
}

int circuit_depth(std::span<const CnotGate> gates) {
    int max_wire = -1;
    for (const CnotGate& g : gates) max_wire = std::max({max_wire, g.control, g.target});
    std::vector<int> level(static_cast<std::size_t>(max_wire + 1), 0);
    int depth = 0;
    for (const CnotGate& g : gates) {
        const int layer = std::max(level[static_cast<std::size_t>(g.control)],
                                   level[static_cast<std::size_t>(g.target)]) + 1;
        level[static_cast<std::size_t>(g.control)] = layer;
        level[static_cast<std::size_t>(g.target)] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

std::string format_circuit(const RoutedCircuit& rc) {
    std::ostringstream out;
    out << "qubits " << rc.n_physical << "\n";
    for (const CnotGate& g : rc.gates)
        out << "cnot " << g.control + 1 << ' ' << g.target + 1 << "\n";
    if (!rc.output_relabel.empty()) {
        out << "relabel";
        for (int wire : rc.output_relabel) out << ' ' << wire + 1;
        out << "\n";
    }
    return out.str();
}

ParsedCircuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    ParsedCircuit circuit;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "qubits") {
            if (have_header) raise(ErrorCode::ParseError, "duplicate qubits header");
            if (!(ls >> circuit.n) || circuit.n < 1)
                raise(ErrorCode::ParseError, "bad qubits count");
            have_header = true;
        } else if (tag == "cnot") {
            if (!have_header) raise(ErrorCode::ParseError, "cnot before qubits header");
            int c = 0, t = 0;
            if (!(ls >> c >> t)) raise(ErrorCode::ParseError, "expected 'cnot <control> <target>'");
            if (c < 1 || c > circuit.n || t < 1 || t > circuit.n)
                raise(ErrorCode::IndexOutOfRange, "gate qubit outside 1..n");
            if (c == t) raise(ErrorCode::ParseError, "control equals target");
            circuit.gates.push_back({c - 1, t - 1});
        } else if (tag == "relabel") {
            if (!have_header) raise(ErrorCode::ParseError, "relabel before qubits header");
            std::vector<int> relabel;
            int w = 0;
            while (ls >> w) {
                if (w < 1 || w > circuit.n)
                    raise(ErrorCode::IndexOutOfRange, "relabel wire outside 1..n");
                relabel.push_back(w - 1);
            }
            circuit.relabel = std::move(relabel);
        } else {
            raise(ErrorCode::ParseError, "unknown line: " + line);
        }
    }
    if (!have_header) raise(ErrorCode::ParseError, "missing qubits header");
    return circuit;
}

}  // namespace cnotopt
