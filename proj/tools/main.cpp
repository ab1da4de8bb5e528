// chorded-spectra: spectral radii, chorded-cycle detection, and extremal
// verification for fixed-size graphs. See --help for the family grammar.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chorded/canonical.hpp"
#include "chorded/cycles.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"
#include "chorded/graph6.hpp"
#include "chorded/spectral.hpp"
#include "chorded/verify.hpp"

using nlohmann::json;
using namespace chorded;

namespace {

// Exit codes: 0 ok/pass/found, 1 verification fail / not found,
// 2 usage or parse error, 3 resource/convergence error.
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pin every float to 12 significant digits so identical inputs produce
// byte-identical payloads regardless of accumulated rounding noise.
void canonicalize_numbers(json& j) {
    if (j.is_object() || j.is_array()) {
        for (auto& child : j) canonicalize_numbers(child);
    } else if (j.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
        j = std::stod(buf);
    }
}

std::string dump(json j) {
    canonicalize_numbers(j);
    return j.dump();  // object keys are already sorted (std::map storage)
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open edge list file: " + path);
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int u, v;
        if (!(ss >> u >> v) || u < 0 || v < 0)
            throw UsageError("bad edge list line: " + line);
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    return build_graph(max_vertex + 1, edges);
}

struct GraphInput {
    std::string family_spec, g6, edges_path;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--family", family_spec,
                        "family spec, e.g. star:9, book_star:2,3, fixture:H1");
        cmd->add_option("--g6", g6, "graph6 string");
        cmd->add_option("--edges", edges_path, "edge list file ('u v' per line)");
    }

    Graph build() const {
        int given = !family_spec.empty() + !g6.empty() + !edges_path.empty();
        if (given != 1)
            throw UsageError("exactly one of --family, --g6, --edges is required");
        try {
            if (!family_spec.empty()) return family(parse_family_spec(family_spec));
            if (!g6.empty()) return graph6_decode(g6);
            return read_edge_list(edges_path);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

json witness_json(const CycleWitness& w) {
    json chords = json::array();
    for (auto [a, b] : w.chords) chords.push_back({a, b});
    return {{"cycle", w.cycle}, {"chords", chords}};
}

int cmd_rho(const GraphInput& input, std::optional<int> k_opt, bool as_json) {
    Graph g = input.build();
    SpectralResult r;
    try {
        r = spectral_radius(g);
    } catch (const std::runtime_error& e) {
        throw ResourceError(e.what());
    }
    json out = {{"n", g.order()}, {"m", g.size()}, {"rho", r.rho},
                {"residual", r.residual}, {"iterations", r.iterations}};
    if (r.perron) out["perron"] = *r.perron;
    json thresholds = json::object();
    if (g.size() >= 4)
        thresholds["chorded"] = threshold(ThresholdKind::chorded, g.size());
    if (k_opt && 4 * g.size() >= static_cast<long long>(*k_opt) * *k_opt - 1)
        thresholds["k_chorded"] = threshold(ThresholdKind::k_chorded, g.size(), *k_opt);
    out["thresholds"] = thresholds;
    if (as_json) {
        std::cout << dump(out) << "\n";
    } else {
        std::printf("n=%d m=%lld rho=%.12g residual=%.3g\n", g.order(), g.size(),
                    r.rho, r.residual);
        for (auto& [name, value] : thresholds.items())
            std::printf("threshold %s=%.12g\n", name.c_str(), value.get<double>());
        if (r.perron) {
            std::printf("perron=");
            for (size_t i = 0; i < r.perron->size(); ++i)
                std::printf("%s%.12g", i ? "," : "", (*r.perron)[i]);
            std::printf("\n");
        }
    }
    return kExitOk;
}

int cmd_detect(const GraphInput& input, int s, std::optional<int> k_opt, bool as_json) {
    if (s < 1) throw UsageError("--s must be >= 1");
    Graph g = input.build();
    std::optional<CycleWitness> w;
    if (k_opt) {
        if (*k_opt < 4) throw UsageError("--k must be >= 4");
        w = find_s_chorded_k_cycle(g, s, *k_opt);
    } else {
        w = find_s_chorded_cycle(g, s);
    }
    if (!w) {
        std::cout << (as_json ? "{\"witness\":null}" : "none") << "\n";
        return kExitFail;
    }
    if (!validate_witness(g, *w, s)) throw ResourceError("internal: witness failed validation");
    std::cout << dump(witness_json(*w)) << "\n";
    return kExitOk;
}

void print_extremal_tsv(const ExtremalReport& r) {
    std::printf("%d\t%s\t%lld\t%.12g", r.m, r.class_name.c_str(), r.graph_count, r.max_rho);
    for (const auto& g6 : r.argmax) std::printf("\t%s", g6.c_str());
    std::printf("\n");
}

int cmd_verify(const std::string& claim, std::optional<int> m, std::optional<int> n,
               std::optional<int> k, int jobs, unsigned seed, bool as_json, bool as_tsv) {
    try {
        if (claim == "extremal") {
            if (!m) throw UsageError("extremal requires --m");
            ExtremalReport report = extremal_spectral(*m, "chorded_cycle_free", jobs);
            if (as_tsv)
                print_extremal_tsv(report);
            else
                std::cout << dump(report.to_json()) << "\n";
            return kExitOk;
        }
        VerdictReport v;
        if (claim == "thm-chorded") {
            if (!m) throw UsageError("thm-chorded requires --m");
            v = verify_theorem_chorded(*m, jobs);
        } else if (claim == "eg-path") {
            if (!n || !k) throw UsageError("eg-path requires --n and --k");
            v = verify_lemma(LemmaClaim::eg_path, *n, *k);
        } else if (claim == "cycle-bound") {
            if (!n || !k) throw UsageError("cycle-bound requires --n and --k");
            v = verify_lemma(LemmaClaim::cycle_bound, *n, *k);
        } else if (claim == "ore-bound") {
            if (!n) throw UsageError("ore-bound requires --n");
            v = verify_lemma(LemmaClaim::ore_bound, *n);
        } else if (claim == "prop-doubly") {
            if (!n) throw UsageError("prop-doubly requires --n");
            v = verify_lemma(LemmaClaim::prop_doubly_chorded, *n);
        } else if (claim == "k-chorded-extremal") {
            if (!k || !m) throw UsageError("k-chorded-extremal requires --k and --m");
            v = check_k_chorded_extremal(*k, *m, seed);
        } else {
            throw UsageError("unknown claim: " + claim +
                             " (expected thm-chorded, eg-path, cycle-bound, ore-bound, "
                             "prop-doubly, k-chorded-extremal, extremal)");
        }
        if (as_tsv)
            std::printf("%s\t%s\n", v.claim_id.c_str(), v.pass ? "pass" : "fail");
        else
            std::cout << dump(v.to_json()) << "\n";
        (void)as_json;
        return v.pass ? kExitOk : kExitFail;
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral thresholds, chorded-cycle detection and exhaustive "
                 "extremal verification for graphs of fixed size"};
    app.require_subcommand(1);

    bool as_json = false, as_tsv = false;
    app.add_flag("--json", as_json, "machine-readable JSON output")->configurable(false);
    app.add_flag("--tsv", as_tsv, "TSV summary output (verify/extremal)");

    GraphInput rho_input, detect_input;
    std::optional<int> rho_k;
    auto* rho_cmd = app.add_subcommand("rho", "spectral radius, Perron vector, thresholds");
    rho_input.add_flags(rho_cmd);
    rho_cmd->add_option("--k", rho_k, "also print the k-chorded threshold for this k");

    int detect_s = 1;
    std::optional<int> detect_k;
    auto* detect_cmd = app.add_subcommand("detect", "find a cycle with at least s chords");
    detect_input.add_flags(detect_cmd);
    detect_cmd->add_option("--s", detect_s, "minimum number of chords (default 1)");
    detect_cmd->add_option("--k", detect_k, "require exactly this cycle length");

    std::string claim;
    std::optional<int> v_m, v_n, v_k;
    int jobs = 1;
    unsigned seed = 1;
    auto* verify_cmd = app.add_subcommand(
        "verify", "run a named verifier: thm-chorded, eg-path, cycle-bound, ore-bound, "
                  "prop-doubly, k-chorded-extremal, extremal");
    verify_cmd->add_option("claim", claim, "claim id")->required();
    verify_cmd->add_option("--m", v_m, "edge count");
    verify_cmd->add_option("--n", v_n, "vertex count");
    verify_cmd->add_option("--k", v_k, "lemma/threshold parameter k");
    verify_cmd->add_option("--jobs", jobs, "worker threads for the spectral sweep");
    verify_cmd->add_option("--seed", seed, "seed for randomized evidence");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rho_cmd->parsed()) return cmd_rho(rho_input, rho_k, as_json);
        if (detect_cmd->parsed()) return cmd_detect(detect_input, detect_s, detect_k, as_json);
        return cmd_verify(claim, v_m, v_n, v_k, jobs, seed, as_json, as_tsv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
}
