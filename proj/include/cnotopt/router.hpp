#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnotopt/placement.hpp"

namespace cnotopt {

/// A hardware-executable CNOT circuit. Every gate's (control, target) pair
/// is an edge of the architecture; the residual permutation factor is
/// realized by output relabeling, not gates.
struct RoutedCircuit {
    int n_physical = 0;
    std::vector<CnotGate> gates;      // time order, physical wire indices
    std::vector<int> output_relabel;  // logical output -> physical wire
    Placement placement;              // logical qubit -> physical wire
};

/// Expands a CNOT from path.front() (control) to path.back() (target) along
/// a path of adjacent vertices into 1 gate (distance 1) or 4d - 4 gates via
/// the four ladder sweeps; every interior wire is restored. Throws
/// InvalidPath for paths shorter than 2 vertices or with repeated vertices.
std::vector<CnotGate> expand_long_cnot(std::span<const int> path);

/// Same, but also checks consecutive vertices against the graph's edges.
std::vector<CnotGate> expand_long_cnot(std::span<const int> path, const ArchitectureGraph& g);

/// Emits the decomposition in execution order (rightmost factor first); each
/// RowAdd(i, j) becomes an expansion along the shortest path from the image
/// of j (control) to the image of i (target). The gate count equals
/// objective(p, interaction_graph(d), t).
RoutedCircuit route_circuit(const Decomposition& d, const Placement& p,
                            const DistanceTable& t);

struct RouteOptions {
    /// Materialize the output permutation as routed swap chains so wires end
    /// exactly in place; default keeps it as free relabeling.
    bool emit_swaps = false;
};

/// route_circuit plus optional swap materialization on the given graph.
RoutedCircuit route_circuit_on(const Decomposition& d, const Placement& p,
                               const DistanceTable& t, const ArchitectureGraph& g,
                               const RouteOptions& options);

/// Oracle check: simulates the gates, applies the output relabeling and
/// compares against `a` embedded on the placed wires (identity elsewhere);
/// also requires every gate to be architecture-adjacent.
bool verify_routed(const RoutedCircuit& rc, const BitMatrix& a, const ArchitectureGraph& g);

/// Greedy ASAP layering depth.
int circuit_depth(std::span<const CnotGate> gates);

/// Circuit text: "qubits <n>", "cnot <control> <target>" lines in time
/// order, optional "relabel <image list>" trailer. 1-based.
std::string format_circuit(const RoutedCircuit& rc);

struct ParsedCircuit {
    int n = 0;
    std::vector<CnotGate> gates;
    std::optional<std::vector<int>> relabel;
};
ParsedCircuit parse_circuit(std::string_view text);

}  // namespace cnotopt
