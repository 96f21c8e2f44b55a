#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "factorkit/graph.hpp"

namespace factorkit {

// Verification front end: stream graphs from the built-in enumerator or a
// graph6 file, run a named check suite over every graph, and render
// machine-readable reports with deterministic ordering.

enum class CheckResult { pass, fail, not_applicable };

const char* to_string(CheckResult r);

struct VerificationRecord {
    std::string graph_id;  // graph6
    int n = 0;
    int m = 0;
    std::vector<std::pair<std::string, CheckResult>> checks;
    nlohmann::json values = nlohmann::json::object();        // numeric facts (describe)
    nlohmann::json certificates = nlohmann::json::object();  // witnesses and counterexamples

    bool has_fail() const {
        for (const auto& [name, r] : checks)
            if (r == CheckResult::fail) return true;
        return false;
    }
};

struct RunSummary {
    long total_graphs = 0;
    std::vector<std::string> check_names;  // suite order
    std::vector<long> pass_counts;
    std::vector<long> fail_counts;
    std::vector<long> na_counts;
    std::vector<VerificationRecord> failures;
    double wall_seconds = 0;  // reported out of band, never in the byte-compared stream
};

enum class Suite { conjecture, lemmas, tutte_crosscheck, property_p, planarity_crosscheck };

Suite parse_suite(const std::string& name);  // InputError on unknown names
const char* suite_name(Suite s);

// Inline enumeration size, or a path to a graph6 file (one graph per line,
// lines starting with '>' skipped).
using GraphSource = std::variant<int, std::string>;

std::vector<Graph> load_source(const GraphSource& source);

struct SuiteOptions {
    int k = 3;                  // conjecture suite parameter
    int jobs = 1;
    bool certificates = false;  // attach witnesses to records
};

VerificationRecord run_checks(const Graph& g, Suite suite, const SuiteOptions& opts);

struct SuiteRun {
    std::vector<VerificationRecord> records;  // sorted by graph6 id
    RunSummary summary;
};

SuiteRun run_suite(const GraphSource& source, Suite suite, const SuiteOptions& opts);

// Full default check set for one graph: degree, connectivity, planarity with
// certificate, factor-criticality for k = 0..3 where parity permits,
// minimality where criticality holds.
VerificationRecord describe_graph(const std::string& graph6_line);

// One JSON object per graph plus a final summary object; wall time excluded so
// reruns and different worker counts are byte-identical.
std::string render_json(const SuiteRun& run, bool include_certificates);
std::string render_tsv(const SuiteRun& run);
std::string render_record_json(const VerificationRecord& rec, bool include_certificates);

}  // namespace factorkit
