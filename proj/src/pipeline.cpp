#include "cnotopt/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <sstream>
#include <thread>

#include "cnotopt/rng.hpp"

namespace cnotopt {

std::vector<CnotGate> random_circuit(int n_qubits, int n_gates, std::uint64_t seed) {
    if (n_qubits < 2) raise(ErrorCode::InvalidParams, "need at least two qubits");
    if (n_gates < 0) raise(ErrorCode::InvalidParams, "gate count must be >= 0");
    Rng rng(seed);
    std::vector<CnotGate> gates;
    gates.reserve(static_cast<std::size_t>(n_gates));
    for (int g = 0; g < n_gates; ++g) {
        const int control = rng.below_int(n_qubits);
        int target = rng.below_int(n_qubits - 1);
        if (target >= control) ++target;
        gates.push_back({control, target});
    }
    return gates;
}

CompileResult compile_pipeline(const BitMatrix& input, const ArchitectureGraph& arch,
                               const CompileOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (input.n() > arch.n) raise(ErrorCode::TooManyQubits, "circuit larger than device");
    if (!arch.connected()) raise(ErrorCode::DisconnectedGraph, "architecture must be connected");

    const DistanceTable table = all_pairs_distances(arch);
    CompileResult result;
    result.decomposition = decompose(input);
    result.interactions = interaction_graph(result.decomposition);

    if (options.want_milp_text)
        result.milp_text = write_lp(export_milp(result.interactions, table));

    Placement placement;
    switch (options.place) {
        case PlaceMode::Exhaustive:
            placement = exhaustive_place(result.interactions, table, options.exhaustive_bound)
                            .placement;
            break;
        case PlaceMode::Import:
            if (!options.warm_start)
                raise(ErrorCode::InvalidParams, "import placement needs a solution");
            validate_placement(*options.warm_start, input.n(), arch.n);
            placement = *options.warm_start;
            break;
        case PlaceMode::Local: {
            PlacementParams params;
            params.subset_size = options.subset_size;
            params.polish_subset_size = options.polish_subset_size;
            params.restarts = options.restarts.value_or(arch.n >= 16 ? 10 : 0);
            params.seed = options.seed;
            params.warm_start = options.warm_start;
            placement = local_search_place(result.interactions, table, params);
            break;
        }
    }

    result.objective = objective(placement, result.interactions, table);
    result.circuit = route_circuit_on(result.decomposition, placement, table, arch,
                                      RouteOptions{options.emit_swaps});
    result.depth = circuit_depth(result.circuit.gates);

    if (!verify_routed(result.circuit, input, arch))
        raise(ErrorCode::VerificationFailed, "routed circuit does not match input");

    result.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
}

CompileResult compile_pipeline(std::span<const CnotGate> gates, int n_qubits,
                               const ArchitectureGraph& arch, const CompileOptions& options) {
    return compile_pipeline(circuit_matrix(gates, n_qubits), arch, options);
}

ReferenceTable parse_reference_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) raise(ErrorCode::ParseError, "empty reference csv");
    auto split = [](const std::string& row) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream rs(row);
        while (std::getline(rs, cell, ',')) cells.push_back(cell);
        return cells;
    };
    const std::vector<std::string> header = split(line);
    if (header.size() < 3 || header[0] != "architecture" || header[1] != "gates")
        raise(ErrorCode::ParseError, "reference csv must start 'architecture,gates,...'");
    ReferenceTable table;
    table.columns.assign(header.begin() + 2, header.end());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> cells = split(line);
        if (cells.size() != header.size())
            raise(ErrorCode::ParseError, "reference row width mismatch: " + line);
        std::vector<double> values;
        for (std::size_t c = 2; c < cells.size(); ++c) values.push_back(std::stod(cells[c]));
        table.rows[{cells[0], std::stoi(cells[1])}] = std::move(values);
    }
    return table;
}

BenchReport bench_table(const BenchConfig& config) {
    if (config.circuits_per_count < 1)
        raise(ErrorCode::InvalidParams, "need at least one circuit per count");
    for (int count : config.gate_counts)
        if (count < 0) raise(ErrorCode::InvalidParams, "gate counts must be >= 0");

    const ArchitectureGraph arch = builtin_architecture(config.architecture);
    BenchReport report;
    if (config.reference) report.reference_columns = config.reference->columns;

    struct Job {
        int count_index;
        int circuit_index;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (int ci = 0; ci < static_cast<int>(config.gate_counts.size()); ++ci)
        for (int i = 0; i < config.circuits_per_count; ++i)
            jobs.push_back({ci, i,
                            Rng::mix(config.seed,
                                     static_cast<std::uint64_t>(ci) * 1'000'003ULL +
                                         static_cast<std::uint64_t>(i))});

    struct Outcome {
        std::int64_t gates = 0;
        double wall_ms = 0.0;
        std::string error;
    };
    std::vector<Outcome> outcomes(jobs.size());

    auto run_job = [&](std::size_t index) {
        const Job& job = jobs[index];
        try {
            CompileOptions options = config.compile;
            options.seed = job.seed;
            const std::vector<CnotGate> gates = random_circuit(
                arch.n, config.gate_counts[static_cast<std::size_t>(job.count_index)], job.seed);
            const CompileResult compiled = compile_pipeline(gates, arch.n, arch, options);
            outcomes[index].gates = static_cast<std::int64_t>(compiled.circuit.gates.size());
            outcomes[index].wall_ms = compiled.wall_ms;
        } catch (const std::exception& e) {
            outcomes[index].error = e.what();
        }
    };

    const int jobs_n = std::max(1, config.jobs);
    if (jobs_n == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> cursor{0};
        for (int w = 0; w < jobs_n; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < jobs.size();
                     i = cursor.fetch_add(1))
                    run_job(i);
            });
        }
        for (auto& worker : workers) worker.join();
    }

    for (std::size_t i = 0; i < jobs.size(); ++i)
        if (!outcomes[i].error.empty())
            raise(ErrorCode::VerificationFailed,
                  "circuit seed " + std::to_string(jobs[i].seed) + ": " + outcomes[i].error);

    std::size_t cursor = 0;
    for (int ci = 0; ci < static_cast<int>(config.gate_counts.size()); ++ci) {
        BenchRow row;
        row.architecture = config.architecture;
        row.gates = config.gate_counts[static_cast<std::size_t>(ci)];
        std::int64_t total = 0;
        double total_ms = 0.0;
        row.min = std::numeric_limits<std::int64_t>::max();
        row.max = 0;
        for (int i = 0; i < config.circuits_per_count; ++i, ++cursor) {
            const Outcome& out = outcomes[cursor];
            total += out.gates;
            total_ms += out.wall_ms;
            row.min = std::min(row.min, out.gates);
            row.max = std::max(row.max, out.gates);
        }
        row.mean = static_cast<double>(total) / config.circuits_per_count;
        row.mean_runtime_ms = total_ms / config.circuits_per_count;
        if (config.reference) {
            const auto it = config.reference->rows.find({row.architecture, row.gates});
            if (it != config.reference->rows.end()) {
                row.reference = it->second;
                for (std::size_t c = 0; c < report.reference_columns.size(); ++c) {
                    if (report.reference_columns[c] == "steiner" && it->second[c] > 0)
                        row.vs_steiner_pct = (it->second[c] - row.mean) / it->second[c] * 100.0;
                }
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string report_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "architecture,gates,mean,min,max,runtime_ms";
    for (const auto& column : report.reference_columns) out << ',' << column;
    if (!report.reference_columns.empty()) out << ",vs_steiner_pct";
    out << "\n";
    for (const auto& row : report.rows) {
        out << row.architecture << ',' << row.gates << ',' << row.mean << ',' << row.min << ','
            << row.max << ',' << row.mean_runtime_ms;
        for (std::size_t c = 0; c < report.reference_columns.size(); ++c) {
            out << ',';
            if (c < row.reference.size()) out << row.reference[c];
        }
        if (!report.reference_columns.empty()) {
            out << ',';
            if (row.vs_steiner_pct) out << *row.vs_steiner_pct;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cnotopt
