#include <doctest.h>

#include "helpers.hpp"

using namespace cnotopt;
using testutil::dense5;
using testutil::t_graph;

TEST_CASE("random_circuit") {
    const std::vector<CnotGate> gates = random_circuit(9, 3, 1);
    CHECK(gates.size() == 3);
    for (const CnotGate& g : gates) {
        CHECK(g.control != g.target);
        CHECK(g.control >= 0);
        CHECK(g.control < 9);
        CHECK(g.target >= 0);
        CHECK(g.target < 9);
    }
    CHECK(random_circuit(5, 0, 3).empty());
    CHECK(random_circuit(5, 100, 7) == random_circuit(5, 100, 7));
    CHECK(random_circuit(5, 100, 7) != random_circuit(5, 100, 8));
    CHECK_THROWS_AS(random_circuit(1, 3, 0), Error);
    CHECK_THROWS_AS(random_circuit(4, -1, 0), Error);
}

TEST_CASE("compile_pipeline on the 5x5 example") {
    CompileOptions options;
    options.place = PlaceMode::Exhaustive;
    const CompileResult result = compile_pipeline(dense5(), t_graph(), options);
    CHECK(result.circuit.gates.size() == 16);
    CHECK(result.objective == 16);
    CHECK(result.decomposition.seq.size() == 7);
    CHECK(result.depth > 0);
    CHECK(verify_routed(result.circuit, dense5(), t_graph()));
}

TEST_CASE("compile_pipeline edge cases") {
    SUBCASE("identity compiles to nothing") {
        const CompileResult result = compile_pipeline(BitMatrix::identity(5), t_graph(), {});
        CHECK(result.circuit.gates.empty());
        CHECK(result.objective == 0);
    }
    SUBCASE("swap circuit becomes pure relabeling") {
        const std::vector<CnotGate> swap_gates = {{0, 1}, {1, 0}, {0, 1}};
        const CompileResult result =
            compile_pipeline(swap_gates, 2, builtin_architecture("line-2"), {});
        CHECK(result.circuit.gates.empty());
        CHECK(result.circuit.output_relabel == std::vector<int>{1, 0});
    }
    SUBCASE("oversized input") {
        CHECK_THROWS_AS(compile_pipeline(BitMatrix::identity(6), t_graph(), {}), Error);
    }
    SUBCASE("singular input") {
        CHECK_THROWS_AS(compile_pipeline(BitMatrix(5), t_graph(), {}), Error);
        try {
            compile_pipeline(BitMatrix(5), t_graph(), {});
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SingularMatrix);
        }
    }
    SUBCASE("disconnected architecture") {
        const ArchitectureGraph split = parse_architecture("qubits 4\nedge 1 2\nedge 3 4\n");
        CHECK_THROWS_AS(compile_pipeline(BitMatrix::identity(2), split, {}), Error);
    }
    SUBCASE("milp text on request") {
        CompileOptions options;
        options.want_milp_text = true;
        const CompileResult result = compile_pipeline(dense5(), t_graph(), options);
        CHECK(result.milp_text.find("Minimize") != std::string::npos);
    }
    SUBCASE("smaller circuit on a larger device") {
        const CompileResult result =
            compile_pipeline(dense5(), builtin_architecture("9q-square"), {});
        CHECK(verify_routed(result.circuit, dense5(), builtin_architecture("9q-square")));
    }
}

TEST_CASE("warm start and import placements") {
    const DistanceTable table = all_pairs_distances(t_graph());
    CompileOptions options;
    options.place = PlaceMode::Import;
    options.warm_start = testutil::t_graph_best_placement();
    const CompileResult result = compile_pipeline(dense5(), t_graph(), options);
    // the imported placement is used verbatim, whatever its quality
    CHECK(result.circuit.placement.assign == options.warm_start->assign);
    CHECK(result.objective == objective(*options.warm_start, result.interactions, table));
    CHECK(verify_routed(result.circuit, dense5(), t_graph()));
}

TEST_CASE("bench_table") {
    SUBCASE("zero-gate row has mean zero") {
        BenchConfig config;
        config.architecture = "9q-square";
        config.gate_counts = {0};
        config.circuits_per_count = 1;
        const BenchReport report = bench_table(config);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0].mean == 0.0);
    }
    SUBCASE("reports are reproducible and job-count independent") {
        BenchConfig config;
        config.architecture = "9q-square";
        config.gate_counts = {2, 5};
        config.circuits_per_count = 6;
        config.seed = 42;
        const BenchReport a = bench_table(config);
        config.jobs = 4;
        const BenchReport b = bench_table(config);
        REQUIRE(a.rows.size() == b.rows.size());
        for (std::size_t r = 0; r < a.rows.size(); ++r) {
            CHECK(a.rows[r].mean == b.rows[r].mean);
            CHECK(a.rows[r].min == b.rows[r].min);
            CHECK(a.rows[r].max == b.rows[r].max);
        }
        CHECK(report_csv(a).substr(0, 40) == report_csv(b).substr(0, 40));
    }
    SUBCASE("means grow with the input gate count") {
        BenchConfig config;
        config.architecture = "9q-square";
        config.gate_counts = {2, 8, 32};
        config.circuits_per_count = 20;
        config.seed = 7;
        const BenchReport report = bench_table(config);
        REQUIRE(report.rows.size() == 3);
        CHECK(report.rows[0].mean < report.rows[1].mean);
        CHECK(report.rows[1].mean < report.rows[2].mean);
    }
    SUBCASE("reference join computes the steiner delta") {
        BenchConfig config;
        config.architecture = "9q-square";
        config.gate_counts = {3};
        config.circuits_per_count = 5;
        config.reference = parse_reference_csv(
            "architecture,gates,quilc,tket,steiner,published\n9q-square,3,3.8,3.6,3,2.95\n");
        const BenchReport report = bench_table(config);
        REQUIRE(report.rows.size() == 1);
        REQUIRE(report.rows[0].reference.size() == 4);
        REQUIRE(report.rows[0].vs_steiner_pct.has_value());
        const double expected = (3.0 - report.rows[0].mean) / 3.0 * 100.0;
        CHECK(*report.rows[0].vs_steiner_pct == doctest::Approx(expected));
        const std::string csv = report_csv(report);
        CHECK(csv.find("architecture,gates,mean,min,max,runtime_ms,quilc,tket,steiner,published,"
                       "vs_steiner_pct") == 0);
    }
}

TEST_CASE("every benchmarked circuit passes verification implicitly") {
    // bench_table aborts on any oracle failure, so a completed run is the check
    BenchConfig config;
    config.architecture = "16q-square";
    config.gate_counts = {6};
    config.circuits_per_count = 8;
    config.seed = 99;
    CHECK_NOTHROW(bench_table(config));
}

TEST_CASE("reference csv parsing") {
    CHECK_THROWS_AS(parse_reference_csv(""), Error);
    CHECK_THROWS_AS(parse_reference_csv("foo,bar\n"), Error);
    CHECK_THROWS_AS(parse_reference_csv("architecture,gates,x\n9q-square,3\n"), Error);
    const ReferenceTable table =
        parse_reference_csv("architecture,gates,steiner\n9q-square,3,3\n");
    CHECK(table.columns == std::vector<std::string>{"steiner"});
    CHECK(table.rows.at({"9q-square", 3}) == std::vector<double>{3.0});
}
