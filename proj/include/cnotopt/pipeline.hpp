#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnotopt/milp.hpp"
#include "cnotopt/router.hpp"

namespace cnotopt {

/// n_gates uniform CNOT gates with control != target; fully determined by
/// the seed. Throws InvalidParams.
std::vector<CnotGate> random_circuit(int n_qubits, int n_gates, std::uint64_t seed);

enum class PlaceMode { Local, Exhaustive, Import };

struct CompileOptions {
    PlaceMode place = PlaceMode::Local;
    int subset_size = 2;
    int polish_subset_size = 3;
    /// Randomized restarts; unset picks the default budget (10 when the
    /// architecture has 16 or more vertices, otherwise 0).
    std::optional<int> restarts;
    std::uint64_t seed = 0;
    std::optional<Placement> warm_start;     // start for Local, answer for Import
    bool emit_swaps = false;
    bool want_milp_text = false;
    std::uint64_t exhaustive_bound = 10'000'000;
};

struct CompileResult {
    RoutedCircuit circuit;
    Decomposition decomposition;
    InteractionGraph interactions;
    std::int64_t objective = 0;
    int depth = 0;
    double wall_ms = 0.0;
    std::string milp_text;  // filled when want_milp_text is set
};

/// matrix -> decompose -> interaction graph -> placement -> route; the
/// routed circuit must pass the GF(2) oracle before it is returned
/// (VerificationFailed otherwise — an internal bug guard, always fatal).
CompileResult compile_pipeline(const BitMatrix& input, const ArchitectureGraph& arch,
                               const CompileOptions& options = {});

/// Circuit front end: simulates the gates into a matrix first.
CompileResult compile_pipeline(std::span<const CnotGate> gates, int n_qubits,
                               const ArchitectureGraph& arch,
                               const CompileOptions& options = {});

/// Reference columns keyed by (architecture, gate count), joined into bench
/// reports.
struct ReferenceTable {
    std::vector<std::string> columns;
    std::map<std::pair<std::string, int>, std::vector<double>> rows;
};
ReferenceTable parse_reference_csv(std::string_view text);

struct BenchConfig {
    std::string architecture = "9q-square";
    std::vector<int> gate_counts;
    int circuits_per_count = 20;
    std::uint64_t seed = 0;
    CompileOptions compile;
    int jobs = 1;
    std::optional<ReferenceTable> reference;
};

struct BenchRow {
    std::string architecture;
    int gates = 0;
    double mean = 0.0;
    std::int64_t min = 0;
    std::int64_t max = 0;
    double mean_runtime_ms = 0.0;
    std::vector<double> reference;       // joined columns, if any
    std::optional<double> vs_steiner_pct;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<std::string> reference_columns;
};

/// Generates, compiles and verifies every circuit; aggregation is an ordered
/// reduction by (gate count, circuit index), so --jobs never changes the
/// numbers. Compile failures abort with the failing seed in the message.
BenchReport bench_table(const BenchConfig& config);

std::string report_csv(const BenchReport& report);

}  // namespace cnotopt
