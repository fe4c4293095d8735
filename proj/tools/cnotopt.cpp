// Command-line front end: compile matrices/circuits onto coupling graphs,
// benchmark random circuits, and generate seeded test circuits.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cnotopt/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) cnotopt::raise(cnotopt::ErrorCode::ParseError, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) cnotopt::raise(cnotopt::ErrorCode::ParseError, "cannot write file: " + path);
    out << content;
}

cnotopt::ArchitectureGraph resolve_architecture(const std::string& name,
                                                const std::string& file) {
    if (!file.empty()) return cnotopt::load_architecture_file(file);
    if (!name.empty()) return cnotopt::builtin_architecture(name);
    cnotopt::raise(cnotopt::ErrorCode::InvalidParams, "need --arch or --arch-file");
}

int run_compile(const std::string& arch_name, const std::string& arch_file,
                const std::string& input_path, const std::string& place_mode, int k, int polish,
                std::uint64_t seed, int restarts, const std::string& warm_start_path,
                bool emit_swaps, const std::string& export_milp_path,
                const std::string& output_path) {
    using namespace cnotopt;
    const ArchitectureGraph arch = resolve_architecture(arch_name, arch_file);
    const std::string input_text = read_file(input_path);

    BitMatrix matrix(1);
    int n_qubits = 0;
    std::istringstream sniff(input_text);
    std::string head;
    sniff >> head;
    if (head == "matrix") {
        matrix = parse_matrix(input_text);
        n_qubits = matrix.n();
    } else if (head == "qubits") {
        const ParsedCircuit parsed = parse_circuit(input_text);
        if (parsed.relabel)
            raise(ErrorCode::ParseError, "input circuits must not carry a relabel trailer");
        matrix = circuit_matrix(parsed.gates, parsed.n);
        n_qubits = parsed.n;
    } else {
        raise(ErrorCode::ParseError, "input must start with 'matrix' or 'qubits'");
    }

    CompileOptions options;
    options.subset_size = k;
    options.polish_subset_size = polish;
    if (restarts >= 0) options.restarts = restarts;
    options.seed = seed;
    options.emit_swaps = emit_swaps;
    options.want_milp_text = !export_milp_path.empty();
    if (place_mode == "local") options.place = PlaceMode::Local;
    else if (place_mode == "exhaustive") options.place = PlaceMode::Exhaustive;
    else if (place_mode == "import") options.place = PlaceMode::Import;
    else raise(ErrorCode::InvalidParams, "--place must be local, exhaustive or import");

    const DistanceTable table = all_pairs_distances(arch);
    if (!warm_start_path.empty()) {
        Decomposition d = decompose(matrix);
        options.warm_start =
            import_solution(read_file(warm_start_path), interaction_graph(d), table);
    } else if (options.place == PlaceMode::Import) {
        raise(ErrorCode::InvalidParams, "--place import needs --warm-start <file>");
    }

    const CompileResult result = compile_pipeline(matrix, arch, options);
    if (!export_milp_path.empty()) write_file(export_milp_path, result.milp_text);

    std::ostringstream stats;
    stats << "qubits " << n_qubits << "\n";
    stats << "physical " << arch.n << "\n";
    stats << "decomposition_ops " << result.decomposition.seq.size() << "\n";
    stats << "objective " << result.objective << "\n";
    stats << "gates " << result.circuit.gates.size() << "\n";
    stats << "depth " << result.depth << "\n";
    stats << "wall_ms " << result.wall_ms << "\n";
    stats << "placement";
    for (int l = 0; l < n_qubits; ++l) stats << ' ' << result.circuit.placement[l] + 1;
    stats << "\n";

    const std::string circuit_text = format_circuit(result.circuit);
    if (!output_path.empty()) {
        write_file(output_path, circuit_text);
        std::cout << stats.str();
    } else {
        std::cerr << stats.str();
        std::cout << circuit_text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CNOT circuit compiler for topology-constrained devices"};
    app.require_subcommand(1);

    // compile
    auto* compile = app.add_subcommand("compile", "Compile a matrix or circuit onto a device");
    std::string arch_name, arch_file, input_path, warm_start_path, export_milp_path, output_path;
    std::string place_mode = "local";
    int k = 2, polish = 3, restarts = -1;
    std::uint64_t seed = 0;
    bool emit_swaps = false;
    compile->add_option("--arch", arch_name, "builtin architecture name");
    compile->add_option("--arch-file", arch_file, "architecture file");
    compile->add_option("--input", input_path, "matrix or circuit file")->required();
    compile->add_option("--place", place_mode, "local | exhaustive | import");
    compile->add_option("--k", k, "local search subset size");
    compile->add_option("--polish", polish, "polishing subset size (0 = off)");
    compile->add_option("--seed", seed, "placement seed");
    compile->add_option("--restarts", restarts, "random restarts (-1 = auto)");
    compile->add_option("--warm-start", warm_start_path, "placement/solution file");
    compile->add_flag("--emit-swaps", emit_swaps, "realize the output permutation with gates");
    compile->add_option("--export-milp", export_milp_path, "write the placement model (.lp)");
    compile->add_option("-o,--output", output_path, "routed circuit file");

    // bench
    auto* bench = app.add_subcommand("bench", "Compile random circuits and report means");
    std::string bench_arch = "9q-square", counts_text = "4", reference_path, report_path;
    int per_count = 20, jobs = 1, bench_restarts = -1;
    std::uint64_t bench_seed = 0;
    bench->add_option("--arch", bench_arch, "builtin architecture name");
    bench->add_option("--counts", counts_text, "comma-separated gate counts");
    bench->add_option("--per-count", per_count, "circuits per gate count");
    bench->add_option("--seed", bench_seed, "benchmark seed");
    bench->add_option("--jobs", jobs, "parallel compile jobs");
    bench->add_option("--restarts", bench_restarts, "random restarts (-1 = auto)");
    bench->add_option("--reference", reference_path, "reference csv to join");
    bench->add_option("-o,--output", report_path, "report csv file");

    // random
    auto* random = app.add_subcommand("random", "Generate a seeded random CNOT circuit");
    int rand_qubits = 0, rand_gates = 0;
    std::uint64_t rand_seed = 0;
    std::string rand_output;
    random->add_option("--qubits", rand_qubits, "qubit count")->required();
    random->add_option("--gates", rand_gates, "gate count")->required();
    random->add_option("--seed", rand_seed, "generator seed");
    random->add_option("-o,--output", rand_output, "circuit file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (compile->parsed()) {
            return run_compile(arch_name, arch_file, input_path, place_mode, k, polish, seed,
                               restarts, warm_start_path, emit_swaps, export_milp_path,
                               output_path);
        }
        if (bench->parsed()) {
            cnotopt::BenchConfig config;
            config.architecture = bench_arch;
            config.circuits_per_count = per_count;
            config.seed = bench_seed;
            config.jobs = jobs;
            if (bench_restarts >= 0) config.compile.restarts = bench_restarts;
            std::istringstream cs(counts_text);
            std::string token;
            while (std::getline(cs, token, ','))
                if (!token.empty()) config.gate_counts.push_back(std::stoi(token));
            if (config.gate_counts.empty())
                cnotopt::raise(cnotopt::ErrorCode::InvalidParams, "--counts is empty");
            if (!reference_path.empty())
                config.reference = cnotopt::parse_reference_csv(read_file(reference_path));
            const cnotopt::BenchReport report = cnotopt::bench_table(config);
            const std::string csv = cnotopt::report_csv(report);
            if (!report_path.empty()) write_file(report_path, csv);
            else std::cout << csv;
            return 0;
        }
        if (random->parsed()) {
            const std::vector<cnotopt::CnotGate> gates =
                cnotopt::random_circuit(rand_qubits, rand_gates, rand_seed);
            std::ostringstream out;
            out << "qubits " << rand_qubits << "\n";
            for (const auto& gate : gates)
                out << "cnot " << gate.control + 1 << ' ' << gate.target + 1 << "\n";
            if (!rand_output.empty()) write_file(rand_output, out.str());
            else std::cout << out.str();
            return 0;
        }
    } catch (const cnotopt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == cnotopt::ErrorCode::VerificationFailed ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
