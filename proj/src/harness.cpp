#include "factorkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "factorkit/canonical.hpp"
#include "factorkit/connectivity.hpp"
#include "factorkit/criticality.hpp"
#include "factorkit/enumerate.hpp"
#include "factorkit/graph6.hpp"
#include "factorkit/matching.hpp"
#include "factorkit/planarity.hpp"

namespace factorkit {

namespace {

using nlohmann::json;

json to_json(const VertexSet& s) { return json(s.members()); }

json to_json(const std::vector<VertexSet>& sets) {
    json arr = json::array();
    for (const VertexSet& s : sets) arr.push_back(to_json(s));
    return arr;
}

json to_json(const MinorEmbedding& emb) {
    return {{"target", emb.target == MinorTarget::K5 ? "K5" : "K3,3"},
            {"branchSets", to_json(emb.branch_sets)}};
}

json to_json(const BarrierCertificate& b) {
    return {{"set", to_json(b.set)},
            {"oddComponents", to_json(b.odd_components)},
            {"deficiency", b.deficiency}};
}

json to_json(const PropertyPCut& p) {
    return {{"edge", {p.edge_u, p.edge_v}},
            {"cut", to_json(p.cut)},
            {"oddComponent", to_json(p.odd_component)}};
}

json to_json(const DeficiencyStructure& d) {
    return {{"edge", {d.u, d.v}},
            {"removedSet", to_json(d.removed_set)},
            {"barrier", to_json(d.barrier)},
            {"oddComponents", to_json(d.odd_components)},
            {"uComponent", d.u_component},
            {"vComponent", d.v_component}};
}

struct CheckSink {
    VerificationRecord& rec;
    void emit(const std::string& name, CheckResult r) { rec.checks.emplace_back(name, r); }
    void cert(const std::string& name, json j) { rec.certificates[name] = std::move(j); }
};

bool parity_allows(int n, int k) { return k >= 0 && k < n && (n - k) % 2 == 0; }

// Every minimal k-factor-critical graph is asserted to have delta = k + 1;
// planarity is recorded alongside. A failure with k in {1,2}, or with k = 3 on
// a planar graph, contradicts a proven statement and is labeled a toolkit
// defect; a failure elsewhere would be a genuine counterexample to the open
// conjecture and is labeled as such.
void run_conjecture(const Graph& g, int k, CheckSink& sink) {
    std::string name = "conjecture-k" + std::to_string(k);
    if (!parity_allows(g.vertex_count(), k) || !is_minimal_k_factor_critical(g, k)) {
        sink.emit(name, CheckResult::not_applicable);
        return;
    }
    std::optional<bool> planar;
    try {
        planar = is_planar(g).planar;
    } catch (const CapabilityError&) {
    }
    if (planar) sink.rec.values["planar"] = *planar;
    int delta = min_degree(g);
    if (delta == k + 1) {
        sink.emit(name, CheckResult::pass);
        return;
    }
    sink.emit(name, CheckResult::fail);
    json cert = {{"delta", delta}, {"expected", k + 1}};
    if ((k >= 1 && k <= 2) || (k == 3 && planar && *planar))
        cert["flag"] = "this configuration is proven impossible; indicates a toolkit defect";
    else
        cert["flag"] = "candidate counterexample to the minimum-degree conjecture; verify by hand";
    sink.cert(name, cert);
}

void run_connectivity_bound(const Graph& g, int k, CheckSink& sink) {
    std::string name = "connectivity-k" + std::to_string(k);
    if (!parity_allows(g.vertex_count(), k) || !is_k_factor_critical(g, k)) {
        sink.emit(name, CheckResult::not_applicable);
        return;
    }
    int kappa = vertex_connectivity(g);
    int lambda = edge_connectivity(g);
    if (kappa >= k && lambda >= k + 1) {
        sink.emit(name, CheckResult::pass);
    } else {
        sink.emit(name, CheckResult::fail);
        sink.cert(name, {{"kappa", kappa}, {"lambda", lambda}, {"k", k}});
    }
}

void run_planar_min_degree(const Graph& g, CheckSink& sink) {
    if (g.vertex_count() == 0) {
        sink.emit("planar-min-degree", CheckResult::not_applicable);
        return;
    }
    bool planar;
    try {
        planar = is_planar(g).planar;
    } catch (const CapabilityError&) {
        sink.emit("planar-min-degree", CheckResult::not_applicable);
        return;
    }
    if (!planar) {
        sink.emit("planar-min-degree", CheckResult::not_applicable);
        return;
    }
    int delta = min_degree(g);
    sink.emit("planar-min-degree", delta <= 5 ? CheckResult::pass : CheckResult::fail);
    if (delta > 5) sink.cert("planar-min-degree", {{"delta", delta}});
}

void run_bipartite_edge_bound(const Graph& g, CheckSink& sink) {
    int n = g.vertex_count();
    bool applicable = n >= 3 && is_bipartite(g);
    if (applicable) {
        try {
            applicable = is_planar(g).planar;
        } catch (const CapabilityError&) {
            applicable = false;
        }
    }
    if (!applicable) {
        sink.emit("bipartite-edge-bound", CheckResult::not_applicable);
        return;
    }
    int m = g.edge_count();
    sink.emit("bipartite-edge-bound", m <= 2 * n - 4 ? CheckResult::pass : CheckResult::fail);
    if (m > 2 * n - 4) sink.cert("bipartite-edge-bound", {{"m", m}, {"bound", 2 * n - 4}});
}

void run_even_components(const Graph& g, CheckSink& sink) {
    int n = g.vertex_count();
    if (n < 4 || !parity_allows(n, 3) || !is_k_factor_critical(g, 3)) {
        sink.emit("even-components", CheckResult::not_applicable);
        return;
    }
    std::optional<json> counterexample;
    for_each_subset_of_size(n, 3, [&](Mask s) {
        if (counterexample) return;
        ComponentDecomposition rest = components_within(g, g.full_mask() & ~s);
        if (rest.odd_count != 0)
            counterexample = json{{"set", to_json(VertexSet(s))}, {"oddComponents", rest.odd_count}};
    });
    sink.emit("even-components", counterexample ? CheckResult::fail : CheckResult::pass);
    if (counterexample) sink.cert("even-components", *counterexample);
}

void run_neighborhood_size(const Graph& g, CheckSink& sink) {
    int n = g.vertex_count();
    // sweeps every odd vertex subset, so it shares the desk-scale cap
    if (n < 4 || n > 12 || !parity_allows(n, 3) || !is_k_factor_critical(g, 3)) {
        sink.emit("neighborhood-size", CheckResult::not_applicable);
        return;
    }
    int base_components = static_cast<int>(components_of(g).components.size());
    bool any_applicable = false;
    std::optional<json> counterexample;
    for (Mask h = 1; h < (Mask{1} << n) && !counterexample; ++h) {
        if (popcount(h) % 2 == 0) continue;
        VertexSet nb = neighborhood(g, VertexSet(h));
        if ((g.full_mask() & ~h & ~nb.bits()) == 0) continue;
        ComponentDecomposition rest = components_within(g, g.full_mask() & ~nb.bits());
        if (static_cast<int>(rest.components.size()) <= base_components) continue;
        any_applicable = true;
        if (nb.size() < 4)
            counterexample = json{{"subgraph", to_json(VertexSet(h))}, {"neighborhood", to_json(nb)}};
    }
    if (counterexample) {
        sink.emit("neighborhood-size", CheckResult::fail);
        sink.cert("neighborhood-size", *counterexample);
    } else {
        sink.emit("neighborhood-size", any_applicable ? CheckResult::pass : CheckResult::not_applicable);
    }
}

void run_tutte(const Graph& g, CheckSink& sink) {
    try {
        bool ok = tutte_cross_check(g);
        sink.emit("tutte-crosscheck", ok ? CheckResult::pass : CheckResult::fail);
        if (!ok) sink.cert("tutte-crosscheck", {{"matchingDecision", has_perfect_matching(g)}});
    } catch (const CapabilityError&) {
        sink.emit("tutte-crosscheck", CheckResult::not_applicable);
    }
}

void run_property_p(const Graph& g, const SuiteOptions& opts, CheckSink& sink) {
    int n = g.vertex_count();
    if (n < 4 || !parity_allows(n, 3) || !is_minimal_k_factor_critical(g, 3)) {
        sink.emit("deficiency-structure", CheckResult::not_applicable);
        sink.emit("property-p-cuts", CheckResult::not_applicable);
        return;
    }
    bool structures_ok = true;
    bool cuts_ok = true;
    int both_present = 0;
    int edge_total = 0;
    json first_cuts;
    for (auto [u, v] : g.edges()) {
        ++edge_total;
        try {
            DeficiencyStructure d = find_deficiency_structure(g, u, v, 3);
            auto [pu, pv] = extract_property_p_cuts(g, d);
            for (const auto& side : {pu, pv}) {
                if (side && !verify_property_p_cut(g, *side) && cuts_ok) {
                    cuts_ok = false;
                    sink.cert("property-p-cuts", {{"invalidCut", to_json(*side)}});
                }
            }
            if (pu && pv) ++both_present;
            if (opts.certificates && first_cuts.is_null()) {
                first_cuts = {{"structure", to_json(d)}};
                if (pu) first_cuts["uCut"] = to_json(*pu);
                if (pv) first_cuts["vCut"] = to_json(*pv);
            }
        } catch (const ContractViolation& e) {
            structures_ok = false;
            sink.cert("deficiency-structure", {{"edge", {u, v}}, {"error", e.what()}});
            break;
        }
    }
    sink.emit("deficiency-structure", structures_ok ? CheckResult::pass : CheckResult::fail);
    sink.emit("property-p-cuts", cuts_ok ? CheckResult::pass : CheckResult::fail);
    sink.rec.values["propertyP"] = {{"edges", edge_total}, {"bothCutsPresent", both_present}};
    if (cuts_ok && !first_cuts.is_null()) sink.cert("property-p-cuts", first_cuts);
}

void run_planarity_crosscheck(const Graph& g, CheckSink& sink) {
    PlanarityResult primary;
    bool secondary;
    try {
        primary = is_planar(g);
        secondary = is_planar_by_contraction(g);
    } catch (const CapabilityError&) {
        sink.emit("planarity-crosscheck", CheckResult::not_applicable);
        return;
    }
    bool ok = primary.planar == secondary;
    if (ok && primary.kuratowski) ok = verify_minor_embedding(g, *primary.kuratowski);
    sink.emit("planarity-crosscheck", ok ? CheckResult::pass : CheckResult::fail);
    if (!ok)
        sink.cert("planarity-crosscheck",
                  {{"minorSearch", primary.planar}, {"contractionOracle", secondary}});
}

}  // namespace

const char* to_string(CheckResult r) {
    switch (r) {
        case CheckResult::pass: return "pass";
        case CheckResult::fail: return "fail";
        default: return "not-applicable";
    }
}

Suite parse_suite(const std::string& name) {
    if (name == "conjecture") return Suite::conjecture;
    if (name == "lemmas") return Suite::lemmas;
    if (name == "tutte-crosscheck") return Suite::tutte_crosscheck;
    if (name == "property-p") return Suite::property_p;
    if (name == "planarity-crosscheck") return Suite::planarity_crosscheck;
    throw InputError("unknown suite: " + name);
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::conjecture: return "conjecture";
        case Suite::lemmas: return "lemmas";
        case Suite::tutte_crosscheck: return "tutte-crosscheck";
        case Suite::property_p: return "property-p";
        default: return "planarity-crosscheck";
    }
}

std::vector<Graph> load_source(const GraphSource& source) {
    if (std::holds_alternative<int>(source)) return enumerate_graphs(std::get<int>(source));
    const std::string& path = std::get<std::string>(source);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph6 file: " + path);
    std::vector<Graph> graphs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;  // header or comment
        try {
            graphs.push_back(decode_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + " line " + std::to_string(line_no) + ": " + e.what(), e.offset());
        }
    }
    return graphs;
}

VerificationRecord run_checks(const Graph& g, Suite suite, const SuiteOptions& opts) {
    VerificationRecord rec;
    rec.graph_id = encode_graph6(g);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    CheckSink sink{rec};
    switch (suite) {
        case Suite::conjecture:
            run_conjecture(g, opts.k, sink);
            break;
        case Suite::lemmas:
            for (int k = 1; k <= 3; ++k) run_connectivity_bound(g, k, sink);
            run_planar_min_degree(g, sink);
            run_bipartite_edge_bound(g, sink);
            run_even_components(g, sink);
            run_neighborhood_size(g, sink);
            break;
        case Suite::tutte_crosscheck:
            run_tutte(g, sink);
            break;
        case Suite::property_p:
            run_property_p(g, opts, sink);
            break;
        case Suite::planarity_crosscheck:
            run_planarity_crosscheck(g, sink);
            break;
    }
    return rec;
}

SuiteRun run_suite(const GraphSource& source, Suite suite, const SuiteOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Graph> graphs = load_source(source);
    std::vector<VerificationRecord> records(graphs.size());

    int jobs = std::max(1, opts.jobs);
    if (size_t(jobs) > graphs.size()) jobs = std::max<int>(1, static_cast<int>(graphs.size()));
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) records[i] = run_checks(graphs[i], suite, opts);
    };
    if (jobs == 1) {
        worker(0, graphs.size());
    } else {
        // Static chunking by index range; the merge order below is canonical,
        // so worker count never changes the report.
        std::vector<std::thread> pool;
        std::size_t chunk = (graphs.size() + size_t(jobs) - 1) / size_t(jobs);
        for (int t = 0; t < jobs; ++t) {
            std::size_t begin = size_t(t) * chunk;
            std::size_t end = std::min(graphs.size(), begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    SuiteRun run;
    run.records = std::move(records);
    std::stable_sort(run.records.begin(), run.records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         return a.graph_id < b.graph_id;
                     });

    RunSummary& sum = run.summary;
    sum.total_graphs = static_cast<long>(run.records.size());
    if (!run.records.empty()) {
        for (const auto& [name, r] : run.records.front().checks) sum.check_names.push_back(name);
        sum.pass_counts.assign(sum.check_names.size(), 0);
        sum.fail_counts.assign(sum.check_names.size(), 0);
        sum.na_counts.assign(sum.check_names.size(), 0);
        for (const VerificationRecord& rec : run.records) {
            for (std::size_t i = 0; i < rec.checks.size(); ++i) {
                switch (rec.checks[i].second) {
                    case CheckResult::pass: ++sum.pass_counts[i]; break;
                    case CheckResult::fail: ++sum.fail_counts[i]; break;
                    default: ++sum.na_counts[i]; break;
                }
            }
            if (rec.has_fail()) sum.failures.push_back(rec);
        }
    }
    sum.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

VerificationRecord describe_graph(const std::string& graph6_line) {
    Graph g = decode_graph6(graph6_line);
    VerificationRecord rec;
    rec.graph_id = encode_graph6(g);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    CheckSink sink{rec};
    if (g.vertex_count() >= 1) rec.values["delta"] = min_degree(g);
    rec.values["kappa"] = vertex_connectivity(g);
    rec.values["lambda"] = edge_connectivity(g);
    try {
        PlanarityResult pr = is_planar(g);
        rec.values["planar"] = pr.planar;
        if (pr.kuratowski) rec.certificates["kuratowski"] = to_json(*pr.kuratowski);
    } catch (const CapabilityError&) {
        rec.values["planar"] = nullptr;
    }
    rec.values["perfectMatching"] = has_perfect_matching(g);
    if (auto barrier = find_barrier(g)) rec.certificates["barrier"] = to_json(*barrier);
    for (int k = 0; k <= 3; ++k) {
        std::string name = "kfc-k" + std::to_string(k);
        if (!parity_allows(g.vertex_count(), k)) {
            sink.emit(name, CheckResult::not_applicable);
            sink.emit("minimal-k" + std::to_string(k), CheckResult::not_applicable);
            continue;
        }
        bool kfc = is_k_factor_critical(g, k);
        sink.emit(name, kfc ? CheckResult::pass : CheckResult::fail);
        if (kfc)
            sink.emit("minimal-k" + std::to_string(k),
                      is_minimal_k_factor_critical(g, k) ? CheckResult::pass : CheckResult::fail);
        else
            sink.emit("minimal-k" + std::to_string(k), CheckResult::not_applicable);
    }
    return rec;
}

std::string render_record_json(const VerificationRecord& rec, bool include_certificates) {
    json j;
    j["graph"] = rec.graph_id;
    j["n"] = rec.n;
    j["m"] = rec.m;
    json checks = json::object();
    for (const auto& [name, r] : rec.checks) checks[name] = to_string(r);
    j["checks"] = std::move(checks);
    if (!rec.values.empty()) j["values"] = rec.values;
    if (include_certificates && !rec.certificates.empty()) j["certificates"] = rec.certificates;
    return j.dump();
}

std::string render_json(const SuiteRun& run, bool include_certificates) {
    std::ostringstream out;
    for (const VerificationRecord& rec : run.records)
        out << render_record_json(rec, include_certificates) << '\n';
    const RunSummary& s = run.summary;
    json checks = json::object();
    for (std::size_t i = 0; i < s.check_names.size(); ++i)
        checks[s.check_names[i]] = {{"pass", s.pass_counts[i]},
                                    {"fail", s.fail_counts[i]},
                                    {"notApplicable", s.na_counts[i]}};
    json summary = {{"summary", true},
                    {"graphs", s.total_graphs},
                    {"checks", std::move(checks)},
                    {"failures", static_cast<long>(s.failures.size())}};
    out << summary.dump() << '\n';
    return out.str();
}

std::string render_tsv(const SuiteRun& run) {
    std::ostringstream out;
    out << "graph\tn\tm";
    for (const std::string& name : run.summary.check_names) out << '\t' << name;
    out << '\n';
    for (const VerificationRecord& rec : run.records) {
        out << rec.graph_id << '\t' << rec.n << '\t' << rec.m;
        for (const auto& [name, r] : rec.checks) out << '\t' << to_string(r);
        out << '\n';
    }
    return out.str();
}

}  // namespace factorkit
