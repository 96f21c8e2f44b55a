// factorkit: matching-theory toolkit for small graphs.
//
// Subcommands: enumerate (isomorph-free graph6 stream), describe (full check
// set for one graph), check (run one suite on one inline graph), suite (run a
// suite over an enumerated or ingested stream).
//
// Exit codes: 0 all checks pass, 1 at least one verification failure,
// 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "factorkit/enumerate.hpp"
#include "factorkit/graph6.hpp"
#include "factorkit/harness.hpp"

namespace {

using namespace factorkit;

struct OutputFlags {
    bool tsv = false;
    bool json = false;
    bool certificates = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
    cmd->add_flag("--json", flags.json, "JSON lines output (default)");
    cmd->add_flag("--tsv", flags.tsv, "flat tab-separated table instead of JSON");
    cmd->add_flag("--certificates", flags.certificates, "include witnesses in the output");
}

int emit_suite_run(const SuiteRun& run, const OutputFlags& flags) {
    if (flags.tsv)
        std::cout << render_tsv(run);
    else
        std::cout << render_json(run, flags.certificates);
    std::fprintf(stderr, "# %ld graphs, %zu with failures, %.2fs\n", run.summary.total_graphs,
                 run.summary.failures.size(), run.summary.wall_seconds);
    return run.summary.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching-theory verification toolkit for small graphs"};
    app.require_subcommand(1);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "emit one graph6 line per isomorphism class");
    int enum_n = 0;
    enumerate_cmd->add_option("-n", enum_n, "vertex count (1..8)")->required();

    auto* describe_cmd = app.add_subcommand("describe", "degree, connectivity, planarity and criticality of graphs");
    std::vector<std::string> describe_graphs;
    std::string describe_input;
    describe_cmd->add_option("graph6", describe_graphs, "graph6 strings");
    describe_cmd->add_option("--input", describe_input, "graph6 file, one graph per line");

    auto* check_cmd = app.add_subcommand("check", "run one suite on a single inline graph");
    std::string check_graph;
    std::string check_suite;
    int check_k = 3;
    OutputFlags check_flags;
    check_cmd->add_option("graph6", check_graph, "graph6 string")->required();
    check_cmd->add_option("--suite", check_suite, "suite name")->required();
    check_cmd->add_option("-k", check_k, "criticality parameter (conjecture suite)");
    check_cmd->add_flag("--certificates", check_flags.certificates, "include witnesses in the output");

    auto* suite_cmd = app.add_subcommand("suite", "run a verification suite over a graph stream");
    std::string suite_name_arg;
    int suite_n = 0;
    std::string suite_input;
    int suite_k = 3;
    int suite_jobs = 1;
    OutputFlags suite_flags;
    suite_cmd->add_option("--suite", suite_name_arg, "conjecture | lemmas | tutte-crosscheck | property-p | planarity-crosscheck")->required();
    suite_cmd->add_option("-n", suite_n, "built-in enumeration size (1..8)");
    suite_cmd->add_option("--input", suite_input, "graph6 file, one graph per line");
    suite_cmd->add_option("-k", suite_k, "criticality parameter (conjecture suite)");
    suite_cmd->add_option("--jobs", suite_jobs, "worker count (output is identical for any value)");
    add_output_flags(suite_cmd, suite_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate_cmd->parsed()) {
            for (const Graph& g : enumerate_graphs(enum_n)) std::cout << encode_graph6(g) << '\n';
            return 0;
        }

        if (describe_cmd->parsed()) {
            std::vector<std::string> lines = describe_graphs;
            if (!describe_input.empty())
                for (const Graph& g : load_source(GraphSource{describe_input}))
                    lines.push_back(encode_graph6(g));
            if (lines.empty()) {
                std::fprintf(stderr, "describe needs graph6 arguments or --input\n");
                return 2;
            }
            for (const std::string& line : lines) {
                VerificationRecord rec = describe_graph(line);
                std::cout << render_record_json(rec, true) << '\n';
            }
            return 0;
        }

        if (check_cmd->parsed()) {
            Suite suite = parse_suite(check_suite);
            SuiteOptions opts;
            opts.k = check_k;
            opts.certificates = check_flags.certificates;
            VerificationRecord rec = run_checks(decode_graph6(check_graph), suite, opts);
            std::cout << render_record_json(rec, check_flags.certificates) << '\n';
            return rec.has_fail() ? 1 : 0;
        }

        // suite
        if ((suite_n == 0) == suite_input.empty()) {
            std::fprintf(stderr, "suite needs exactly one source: -n or --input\n");
            return 2;
        }
        Suite suite = parse_suite(suite_name_arg);
        SuiteOptions opts;
        opts.k = suite_k;
        opts.jobs = suite_jobs;
        opts.certificates = suite_flags.certificates;
        GraphSource source = suite_n > 0 ? GraphSource{suite_n} : GraphSource{suite_input};
        return emit_suite_run(run_suite(source, suite, opts), suite_flags);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const CapabilityError& e) {
        std::fprintf(stderr, "unsupported: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
