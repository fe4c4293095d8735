#include "cnotopt/placement.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "cnotopt/rng.hpp"

namespace cnotopt {

std::int64_t InteractionGraph::total_weight() const {
    std::int64_t total = 0;
    for (const Edge& e : edges) total += e.weight;
    return total;
}

InteractionGraph interaction_graph(const Decomposition& d) {
    std::map<std::pair<int, int>, std::int64_t> weights;
    for (const ElementaryOp& op : d.seq) {
        if (op.kind != OpKind::RowAdd)
            raise(ErrorCode::InvalidParams, "sequence must be swap-free");
        weights[{std::min(op.i, op.j), std::max(op.i, op.j)}] += 1;
    }
    InteractionGraph ig;
    ig.n = d.perm.size();
    ig.edges.reserve(weights.size());
    for (const auto& [pair, weight] : weights)
        ig.edges.push_back({pair.first, pair.second, weight});
    return ig;
}

std::int64_t cost_s(int distance) {
    if (distance < 1) raise(ErrorCode::InvalidDistance, "distance must be >= 1");
    return distance == 1 ? 1 : 4LL * distance - 4;
}

void validate_placement(const Placement& p, int n_logical, int n_physical) {
    if (p.n_logical() != n_logical)
        raise(ErrorCode::InvalidPlacement, "placement size differs from qubit count");
    std::vector<char> used(static_cast<std::size_t>(n_physical), 0);
    for (int v : p.assign) {
        if (v < 0 || v >= n_physical)
            raise(ErrorCode::InvalidPlacement, "physical vertex outside graph");
        if (used[static_cast<std::size_t>(v)])
            raise(ErrorCode::InvalidPlacement, "two logical qubits on one vertex");
        used[static_cast<std::size_t>(v)] = 1;
    }
}

std::int64_t objective(const Placement& p, const InteractionGraph& ig, const DistanceTable& t) {
    if (ig.n > t.n()) raise(ErrorCode::TooManyQubits, "more logical than physical qubits");
    validate_placement(p, ig.n, t.n());
    std::int64_t total = 0;
    for (const auto& e : ig.edges)
        total += e.weight * cost_s(t.distance(p[e.u], p[e.v]));
    return total;
}

namespace {

/// Shared search state for one local-search run.
struct SearchState {
    const InteractionGraph& ig;
    const DistanceTable& table;
    std::vector<std::vector<int>> incident;  // logical -> edge indices
    std::vector<int> assign;                 // logical -> physical
    std::vector<int> occupant;               // physical -> logical or -1
    std::vector<std::uint32_t> edge_stamp;
    std::uint32_t edge_gen = 0;
    std::int64_t current = 0;

    SearchState(const InteractionGraph& graph, const DistanceTable& t)
        : ig(graph), table(t), incident(static_cast<std::size_t>(graph.n)),
          edge_stamp(graph.edges.size(), 0) {
        for (std::size_t e = 0; e < graph.edges.size(); ++e) {
            incident[static_cast<std::size_t>(graph.edges[e].u)].push_back(static_cast<int>(e));
            incident[static_cast<std::size_t>(graph.edges[e].v)].push_back(static_cast<int>(e));
        }
    }

    void reset(const std::vector<int>& start) {
        assign = start;
        occupant.assign(static_cast<std::size_t>(table.n()), -1);
        for (int l = 0; l < ig.n; ++l) occupant[static_cast<std::size_t>(assign[static_cast<std::size_t>(l)])] = l;
        current = 0;
        for (const auto& e : ig.edges)
            current += e.weight * cost_s(table.distance(assign[static_cast<std::size_t>(e.u)],
                                                        assign[static_cast<std::size_t>(e.v)]));
    }

    std::int64_t cost_around(const std::vector<int>& moved) {
        ++edge_gen;
        std::int64_t total = 0;
        for (int l : moved) {
            if (l < 0) continue;
            for (int e : incident[static_cast<std::size_t>(l)]) {
                if (edge_stamp[static_cast<std::size_t>(e)] == edge_gen) continue;
                edge_stamp[static_cast<std::size_t>(e)] = edge_gen;
                const auto& edge = ig.edges[static_cast<std::size_t>(e)];
                total += edge.weight * cost_s(table.distance(assign[static_cast<std::size_t>(edge.u)],
                                                             assign[static_cast<std::size_t>(edge.v)]));
            }
        }
        return total;
    }

    /// Sweeps every size-k subset of physical vertices and every non-identity
    /// permutation of its occupants; strict improvements are kept. Returns
    /// true when at least one move was accepted.
    bool sweep(int k) {
        const int n_phys = table.n();
        if (k < 2 || k > n_phys) return false;
        bool improved = false;
        std::vector<int> subset(static_cast<std::size_t>(k));
        std::iota(subset.begin(), subset.end(), 0);
        std::vector<int> order(static_cast<std::size_t>(k));
        std::vector<int> occupants(static_cast<std::size_t>(k));
        std::vector<int> moved(static_cast<std::size_t>(k));
        while (true) {
            bool any_occupied = false;
            for (int t = 0; t < k; ++t) {
                occupants[static_cast<std::size_t>(t)] =
                    occupant[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])];
                any_occupied |= occupants[static_cast<std::size_t>(t)] >= 0;
            }
            if (any_occupied) {
                std::iota(order.begin(), order.end(), 0);
                while (std::next_permutation(order.begin(), order.end())) {
                    for (int t = 0; t < k; ++t)
                        moved[static_cast<std::size_t>(t)] = occupants[static_cast<std::size_t>(t)];
                    const std::int64_t before = cost_around(moved);
                    // slot subset[t] receives the occupant of subset[order[t]]
                    for (int t = 0; t < k; ++t) {
                        const int l = occupants[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
                        if (l >= 0) assign[static_cast<std::size_t>(l)] = subset[static_cast<std::size_t>(t)];
                    }
                    const std::int64_t after = cost_around(moved);
                    if (after < before) {
                        for (int t = 0; t < k; ++t) {
                            const int slot = subset[static_cast<std::size_t>(t)];
                            occupant[static_cast<std::size_t>(slot)] =
                                occupants[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
                        }
                        for (int t = 0; t < k; ++t)
                            occupants[static_cast<std::size_t>(t)] =
                                occupant[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])];
                        current += after - before;
                        improved = true;
                    } else {
                        for (int t = 0; t < k; ++t) {
                            const int l = occupants[static_cast<std::size_t>(t)];
                            if (l >= 0) assign[static_cast<std::size_t>(l)] = subset[static_cast<std::size_t>(t)];
                        }
                    }
                }
            }
            // next lexicographic k-combination of {0..n_phys-1}
            int t = k - 1;
            while (t >= 0 && subset[static_cast<std::size_t>(t)] == n_phys - k + t) --t;
            if (t < 0) break;
            ++subset[static_cast<std::size_t>(t)];
            for (int s = t + 1; s < k; ++s)
                subset[static_cast<std::size_t>(s)] = subset[static_cast<std::size_t>(s - 1)] + 1;
        }
        return improved;
    }
};

}  // namespace

Placement local_search_place(const InteractionGraph& ig, const DistanceTable& t,
                             const PlacementParams& params) {
    if (ig.n > t.n()) raise(ErrorCode::TooManyQubits, "more logical than physical qubits");
    if (params.subset_size < 2) raise(ErrorCode::InvalidParams, "subset size must be >= 2");

    std::vector<int> start(static_cast<std::size_t>(ig.n));
    if (params.warm_start) {
        validate_placement(*params.warm_start, ig.n, t.n());
        start = params.warm_start->assign;
    } else {
        std::iota(start.begin(), start.end(), 0);
    }

    SearchState state(ig, t);
    std::vector<int> best;
    std::int64_t best_objective = std::numeric_limits<std::int64_t>::max();

    for (int attempt = 0; attempt <= std::max(0, params.restarts); ++attempt) {
        if (attempt == 0) {
            state.reset(start);
        } else {
            Rng rng(Rng::mix(params.seed, static_cast<std::uint64_t>(attempt)));
            std::vector<int> slots(static_cast<std::size_t>(t.n()));
            std::iota(slots.begin(), slots.end(), 0);
            rng.shuffle(slots);
            slots.resize(static_cast<std::size_t>(ig.n));
            state.reset(slots);
        }
        int rounds = 0;
        while (state.sweep(params.subset_size) && ++rounds < params.max_rounds) {}
        if (params.polish_subset_size > params.subset_size &&
            state.sweep(params.polish_subset_size)) {
            rounds = 0;
            while (state.sweep(params.subset_size) && ++rounds < params.max_rounds) {}
        }
        if (state.current < best_objective) {
            best_objective = state.current;
            best = state.assign;
        }
    }
    return Placement{std::move(best)};
}

ExhaustiveResult exhaustive_place(const InteractionGraph& ig, const DistanceTable& t,
                                  std::uint64_t max_placements) {
    if (ig.n > t.n()) raise(ErrorCode::TooManyQubits, "more logical than physical qubits");
    const int m = ig.n;
    const int n_phys = t.n();

    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) {
        count *= static_cast<std::uint64_t>(n_phys - i);
        if (count > max_placements)
            raise(ErrorCode::InstanceTooLarge, "placement count exceeds bound");
    }

    // edges grouped by their larger endpoint so partial cost grows as the
    // assignment is extended
    std::vector<std::vector<std::pair<int, std::int64_t>>> back_edges(static_cast<std::size_t>(m));
    for (const auto& e : ig.edges)
        back_edges[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);

    std::vector<int> assign(static_cast<std::size_t>(m), -1);
    std::vector<char> used(static_cast<std::size_t>(n_phys), 0);
    std::vector<int> best;
    std::int64_t best_objective = std::numeric_limits<std::int64_t>::max();

    auto dfs = [&](auto&& self, int l, std::int64_t partial) -> void {
        if (l == m) {
            if (partial < best_objective) {
                best_objective = partial;
                best = assign;
            }
            return;
        }
        for (int p = 0; p < n_phys; ++p) {
            if (used[static_cast<std::size_t>(p)]) continue;
            std::int64_t added = 0;
            for (const auto& [other, weight] : back_edges[static_cast<std::size_t>(l)])
                added += weight * cost_s(t.distance(assign[static_cast<std::size_t>(other)], p));
            if (partial + added >= best_objective) continue;
            assign[static_cast<std::size_t>(l)] = p;
            used[static_cast<std::size_t>(p)] = 1;
            self(self, l + 1, partial + added);
            used[static_cast<std::size_t>(p)] = 0;
            assign[static_cast<std::size_t>(l)] = -1;
        }
    };
    dfs(dfs, 0, 0);
    return {Placement{std::move(best)}, best_objective};
}

Placement import_solution(std::string_view text, const InteractionGraph& ig,
                          const DistanceTable& t) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<int> assign(static_cast<std::size_t>(ig.n), -1);
    auto record = [&](int v, int p) {
        if (v < 1 || v > ig.n) raise(ErrorCode::ParseError, "logical index outside 1..m");
        if (p < 1 || p > t.n()) raise(ErrorCode::InvalidPlacement, "physical index outside 1..n");
        if (assign[static_cast<std::size_t>(v - 1)] >= 0)
            raise(ErrorCode::InvalidPlacement, "logical qubit assigned twice");
        assign[static_cast<std::size_t>(v - 1)] = p - 1;
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#' || head[0] == '\\') continue;
        if (head == "assign") {
            int v = 0, p = 0;
            if (!(ls >> v >> p)) raise(ErrorCode::ParseError, "expected 'assign <v> <p>'");
            record(v, p);
        } else if (head.rfind("y_", 0) == 0) {
            int v = 0, p = 0;
            if (std::sscanf(head.c_str(), "y_%d_%d", &v, &p) != 2)
                raise(ErrorCode::ParseError, "malformed variable name: " + head);
            double value = 0;
            if (!(ls >> value)) raise(ErrorCode::ParseError, "missing variable value: " + line);
            if (value > 0.5) record(v, p);
        } else if (head.rfind("z_", 0) == 0) {
            continue;  // linking variables carry no assignment information
        } else {
            raise(ErrorCode::ParseError, "unknown line: " + line);
        }
    }
    for (int v = 0; v < ig.n; ++v)
        if (assign[static_cast<std::size_t>(v)] < 0)
            raise(ErrorCode::ParseError, "missing assignment for logical qubit " +
                                             std::to_string(v + 1));
    Placement placement{std::move(assign)};
    validate_placement(placement, ig.n, t.n());
    return placement;
}

}  // namespace cnotopt
