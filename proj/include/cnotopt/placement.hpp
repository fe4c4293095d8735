#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnotopt/architecture.hpp"
#include "cnotopt/rewriter.hpp"

namespace cnotopt {

/// Weighted interaction multigraph of a decomposition: one weight unit per
/// RowAdd(i, j) on the unordered pair {i, j}.
struct InteractionGraph {
    struct Edge {
        int u = 0;  // u < v
        int v = 0;
        std::int64_t weight = 0;
    };

    int n = 0;                // logical qubit count
    std::vector<Edge> edges;  // sorted by (u, v)

    std::int64_t total_weight() const;
};

InteractionGraph interaction_graph(const Decomposition& d);

/// CNOT gate count at graph distance d: 1 when d == 1, else 4d - 4.
/// Throws InvalidDistance when d < 1.
std::int64_t cost_s(int distance);

/// Injective map logical qubit -> physical vertex.
struct Placement {
    std::vector<int> assign;

    int n_logical() const { return static_cast<int>(assign.size()); }
    int operator[](int logical) const { return assign[static_cast<std::size_t>(logical)]; }
};

/// Throws InvalidPlacement when assign is not injective or out of range.
void validate_placement(const Placement& p, int n_logical, int n_physical);

/// Sum over weighted pairs of weight * cost_s(distance between images).
std::int64_t objective(const Placement& p, const InteractionGraph& ig, const DistanceTable& t);

struct PlacementParams {
    int subset_size = 2;         // k: size of the vertex subsets swept
    int polish_subset_size = 3;  // one extra sweep at this size after the
                                 // k-sweeps reach a fixpoint (0 disables)
    int restarts = 0;            // extra randomized starts beyond the first
    std::uint64_t seed = 0;
    int max_rounds = 100000;
    std::optional<Placement> warm_start;
};

/// Local search over placements: sweeps all size-k subsets of physical
/// vertices and all permutations of their occupants, accepting strict
/// improvements, repeating sweeps until one passes without improvement.
/// Unoccupied vertices take part as empty slots. The objective never
/// increases during a run; the best placement over all starts is returned.
/// Throws TooManyQubits when ig.n exceeds the table size.
Placement local_search_place(const InteractionGraph& ig, const DistanceTable& t,
                             const PlacementParams& params);

struct ExhaustiveResult {
    Placement placement;
    std::int64_t objective = 0;
};

/// Enumerates every injective assignment and returns the global minimum,
/// tie-broken by the lexicographically smallest assignment vector. Throws
/// InstanceTooLarge when n!/(n-m)! exceeds max_placements.
ExhaustiveResult exhaustive_place(const InteractionGraph& ig, const DistanceTable& t,
                                  std::uint64_t max_placements = 10'000'000);

/// Parses "assign <v> <p>" lines or solver variable listings ("y_<v>_<p>
/// <value>" with value > 0.5). 1-based indices. Throws ParseError /
/// InvalidPlacement.
Placement import_solution(std::string_view text, const InteractionGraph& ig,
                          const DistanceTable& t);

}  // namespace cnotopt
