// ordpath — generators, pattern tools, solvers, oracles and the
// verification suites behind one reproducible command-line front end.
//
// Conventions: the outcome payload goes to -o FILE when given (stdout
// otherwise); the run record (command, input hashes, parameters, seed,
// payload hash, elapsed time, tool version) is printed as JSON to stdout
// (stderr when the payload itself occupies stdout). Payloads are
// bit-for-bit reproducible for identical inputs, parameters and seed;
// elapsed time lives only in the run record.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ordpath/extremal.hpp"
#include "ordpath/ktt.hpp"
#include "ordpath/oracles.hpp"
#include "ordpath/patterns.hpp"
#include "ordpath/rng.hpp"
#include "ordpath/solvers.hpp"
#include "ordpath/tower.hpp"
#include "ordpath/verify.hpp"

using json = nlohmann::json;
using namespace ordpath;

namespace {

constexpr const char* kToolVersion = "0.1.0";

// FNV-1a, 64 bit
std::string content_hash(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    std::string command;
    json inputs = json::object();
    json parameters = json::object();
    std::optional<std::uint64_t> seed;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    PathGraph load_host(const std::string& path) {
        std::string text = read_file(path);
        inputs[path] = content_hash(text);
        return parse_path_graph(text);
    }
    OrderedGraph load_pattern(const std::string& path) {
        std::string text = read_file(path);
        inputs[path] = content_hash(text);
        return parse_ordered_graph(text);
    }

    // Writes the payload and the run record; returns the exit code.
    int finish(const std::string& payload, const std::string& out_path) {
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        json record{{"command", command},
                    {"version", kToolVersion},
                    {"inputs", inputs},
                    {"parameters", parameters},
                    {"payload_hash", content_hash(payload)},
                    {"elapsed_ms", ms}};
        if (seed) record["seed"] = *seed;
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            out << payload;
            std::cout << record.dump(2) << "\n";
        } else {
            std::cout << payload;
            if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
            std::cerr << record.dump(2) << "\n";
        }
        return 0;
    }
};

json path_json(const InducedPath& p) {
    return json{{"vertices", p.vertices}, {"order", p.order()}, {"increasing", p.increasing}};
}

json embedding_json(const PatternEmbedding& e) {
    json j{{"positions", e.positions}};
    if (e.positions.size() >= 2) j["gap"] = e.gap;
    return j;
}

json outcome_json(const SolveOutcome& out) {
    json j;
    j["provenance"] = out.provenance;
    if (out.is_path()) {
        j["kind"] = "path";
        j["vertices"] = out.path.vertices;
        j["order"] = out.path.order();
        j["increasing"] = out.path.increasing;
        j["guarantee"] = out.guarantee;
    } else {
        j["kind"] = "witness";
        j["positions"] = out.witness.positions;
        if (out.witness.positions.size() >= 2) j["gap"] = out.witness.gap;
        j["pattern"] = serialize(out.witness_pattern);
    }
    return j;
}

json grs_json(const GrsOutcome& out) {
    json j;
    j["p"] = out.p;
    j["provenance"] = out.provenance;
    j["best_clique"] = out.best_clique;
    if (out.kind == GrsOutcome::Kind::path) {
        j["kind"] = "path";
        j["vertices"] = out.path.vertices;
        j["order"] = out.path.order();
    } else if (out.kind == GrsOutcome::Kind::witness) {
        j["kind"] = "witness";
        j["positions"] = out.witness.positions;
        j["pattern"] = serialize(out.witness_pattern);
    } else {
        j["kind"] = "no-clique";
    }
    return j;
}

OrderedGraph catalog_pattern(const std::string& name) {
    if (name == "M") return OrderedGraph(4, {{0, 2}, {1, 3}});
    if (name == "nested") return OrderedGraph(4, {{0, 3}, {1, 2}});
    if (name == "p3") return OrderedGraph(3, {{0, 1}, {1, 2}});
    if (name == "k2") return OrderedGraph(2, {{0, 1}});
    if (name.rfind("Mi", 0) == 0) return gen_Mi(std::stoi(name.substr(2)));
    if (name.rfind("halfgraph", 0) == 0)
        return gen_halfgraph_pattern(std::stoi(name.substr(9)));
    if (name == "piK4")
        return gen_pi(OrderedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    if (name == "piK33")
        return gen_pi(OrderedGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                       {2, 3}, {2, 4}, {2, 5}}));
    if (name == "HhatH") return OrderedGraph(6, {{0, 3}, {1, 4}, {2, 5}});
    if (name == "HhatHhat") return gen_planar_pattern();
    throw std::invalid_argument("unknown catalog pattern: " + name);
}

const std::vector<std::string> kCatalogNames{
    "M",     "nested",     "p3",         "k2",        "Mi1",        "Mi2",
    "Mi3",   "Mi4",        "halfgraph2", "halfgraph3", "halfgraph4", "halfgraph5",
    "piK4",  "piK33",      "HhatH",      "HhatHhat"};

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("ORDPATH_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered-pattern induced-path toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::string format = "json";
    int threads_flag = 0;
    app.add_option("-o,--output", out_path, "payload output file")->capture_default_str();
    app.add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads_flag, "worker threads (env ORDPATH_THREADS)");

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "emit a generated host or pattern");
    std::string gen_kind;
    int gen_n = 10, gen_i = 1, gen_m = 2, gen_k = 0;
    double gen_density = 0.2;
    std::uint64_t gen_seed = 1;
    std::string gen_input;
    gen->add_option("kind", gen_kind,
                    "example1|example2|halfgraph|Mi|pi|planar|genus|random-host")
        ->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--i", gen_i, "recursion depth");
    gen->add_option("--m", gen_m, "half-graph size");
    gen->add_option("--k", gen_k, "genus");
    gen->add_option("--density", gen_density, "chord probability");
    gen->add_option("--seed", gen_seed, "SplitMix64 seed");
    gen->add_option("--input", gen_input, "plain-graph pattern file (pi)");

    // --- pattern ---
    auto* pattern = app.add_subcommand("pattern", "emit a catalog pattern");
    std::string pattern_name;
    bool pattern_list = false;
    pattern->add_option("--name", pattern_name, "catalog name");
    pattern->add_flag("--list", pattern_list, "list catalog names");

    // --- classify ---
    auto* classify_cmd = app.add_subcommand("classify", "growth class of a pattern");
    std::string classify_in;
    classify_cmd->add_option("-i,--input", classify_in, "pattern file")->required();

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "run a constructive solver");
    std::string solve_algo, solve_host, solve_pattern;
    int solve_m = 3, solve_t = 2, solve_a = 0, solve_b = 1, solve_p = 4;
    solve->add_option("algorithm", solve_algo,
                      "span|shortest|noncrossing|crossing-free|gap-or-path|matching|grs")
        ->required();
    solve->add_option("-i,--input", solve_host, "host file")->required();
    solve->add_option("--pattern", solve_pattern, "pattern file");
    solve->add_option("--m", solve_m, "block count");
    solve->add_option("--t", solve_t, "path-order target");
    solve->add_option("--a", solve_a, "start vertex");
    solve->add_option("--b", solve_b, "end vertex");
    solve->add_option("--p", solve_p, "grs target order");

    // --- oracle ---
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    std::string oracle_which, oracle_host;
    int oracle_t = 2, oracle_cap = 30;
    oracle->add_option("which", oracle_which, "longest|longest-increasing|ktt")->required();
    oracle->add_option("-i,--input", oracle_host, "host file")->required();
    oracle->add_option("--t", oracle_t, "K_{t,t} side size");
    oracle->add_option("--cap", oracle_cap, "branch-and-bound vertex cap");

    // --- ghn ---
    auto* ghn = app.add_subcommand("ghn", "exact g_H(n) by enumeration");
    std::string ghn_pattern, ghn_range = "4";
    ghn->add_option("--pattern", ghn_pattern, "pattern file")->required();
    ghn->add_option("--n", ghn_range, "n or a..b range");

    // --- grs ---
    auto* grs = app.add_subcommand("grs", "4-subset Ramsey search");
    std::string grs_host;
    int grs_p = 4;
    grs->add_option("-i,--input", grs_host, "host file")->required();
    grs->add_option("--p", grs_p, "target order (multiple of 4)");

    // --- main-thm ---
    auto* mainthm = app.add_subcommand("main-thm", "K_{t,t}-vs-path pipeline");
    std::string mainthm_host;
    int mainthm_t = 1;
    int mainthm_force_s = -1;
    mainthm->add_option("-i,--input", mainthm_host, "host file")->required();
    mainthm->add_option("--t", mainthm_t, "forbidden K_{t,t} side size");
    mainthm->add_option("--force-s", mainthm_force_s, "override s_from_n");

    // --- ramsey ---
    auto* ramsey = app.add_subcommand("ramsey", "Erdos-Rado tower bound");
    long long ramsey_q = 1, ramsey_n = 4;
    int ramsey_k = 3;
    bool ramsey_printed_k3 = false;
    ramsey->add_option("--q", ramsey_q, "colors")->required();
    ramsey->add_option("--N", ramsey_n, "clique order")->required();
    ramsey->add_option("--k", ramsey_k, "uniformity");
    ramsey->add_flag("--printed-k3", ramsey_printed_k3, "use the printed k=3 form");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    std::string verify_suite = "all";
    bool verify_quick = false;
    verify_cmd->add_option("suite", verify_suite, "core|patterns|extremal|solvers|ktt|oracles|all");
    verify_cmd->add_flag("--quick", verify_quick, "reduced sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Run run;
        if (*gen) {
            run.command = "gen " + gen_kind;
            std::string payload;
            if (gen_kind == "example1") {
                run.parameters["n"] = gen_n;
                payload = serialize(gen_example1(gen_n));
            } else if (gen_kind == "example2") {
                run.parameters["i"] = gen_i;
                payload = serialize(gen_example2(gen_i));
            } else if (gen_kind == "halfgraph") {
                run.parameters["m"] = gen_m;
                payload = serialize(gen_halfgraph_pattern(gen_m));
            } else if (gen_kind == "Mi") {
                run.parameters["i"] = gen_i;
                payload = serialize(gen_Mi(gen_i));
            } else if (gen_kind == "pi") {
                if (gen_input.empty())
                    throw std::invalid_argument("gen pi: --input required");
                payload = serialize(gen_pi(run.load_pattern(gen_input)));
            } else if (gen_kind == "planar") {
                payload = serialize(gen_planar_pattern());
            } else if (gen_kind == "genus") {
                run.parameters["k"] = gen_k;
                payload = serialize(gen_genus_pattern(gen_k));
            } else if (gen_kind == "random-host") {
                run.parameters["n"] = gen_n;
                run.parameters["density"] = gen_density;
                run.seed = gen_seed;
                payload = serialize(random_host(gen_n, gen_density, gen_seed));
            } else {
                throw std::invalid_argument("unknown gen kind: " + gen_kind);
            }
            return run.finish(payload, out_path);
        }

        if (*pattern) {
            run.command = "pattern";
            if (pattern_list) {
                std::string payload;
                for (const auto& n : kCatalogNames) payload += n + "\n";
                return run.finish(payload, out_path);
            }
            if (pattern_name.empty())
                throw std::invalid_argument("pattern: --name or --list required");
            run.parameters["name"] = pattern_name;
            return run.finish(serialize(catalog_pattern(pattern_name)), out_path);
        }

        if (*classify_cmd) {
            run.command = "classify";
            OrderedGraph h = run.load_pattern(classify_in);
            GrowthClass cls = classify(h);
            json j;
            j["lower"] = to_string(cls.lower);
            if (cls.d) j["d"] = *cls.d;
            if (cls.upper) j["upper"] = to_string(*cls.upper);
            j["matching"] = is_matching(h);
            j["perfect_matching"] = is_perfect_matching(h);
            j["crossing"] = has_crossing_pair(h);
            j["noncrossing"] = is_noncrossing(h);
            if (is_perfect_matching(h) && is_noncrossing(h)) j["depth"] = depth(h);
            j["one_sided"] = one_sided(h);
            if (auto sp = split_point(h)) j["split_point"] = *sp;
            if (auto hg = halfgraph_index(h)) j["halfgraph_index"] = *hg;
            return run.finish(j.dump(2) + "\n", out_path);
        }

        if (*solve) {
            run.command = "solve " + solve_algo;
            PathGraph host = run.load_host(solve_host);
            json j;
            if (solve_algo == "span") {
                j = outcome_json(SolveOutcome::make_path(span_path(host), 0, "span"));
                j["guarantee"] =
                    (host.n() + max_span(host) - 1) / std::max(1, max_span(host));
            } else if (solve_algo == "shortest") {
                run.parameters["a"] = solve_a;
                run.parameters["b"] = solve_b;
                j = path_json(shortest_increasing_path(host, solve_a, solve_b));
                j["kind"] = "path";
            } else if (solve_algo == "noncrossing") {
                OrderedGraph h = run.load_pattern(solve_pattern);
                j = outcome_json(solve_noncrossing(host, h));
            } else if (solve_algo == "crossing-free") {
                auto [l, r] = solve_crossing_free(host);
                j["kind"] = "pair";
                j["L"] = path_json(l);
                j["R"] = path_json(r);
                long long need = 0;
                while ((1ll << need) < host.n()) ++need;
                j["guarantee"] = need;
            } else if (solve_algo == "gap-or-path") {
                OrderedGraph h = run.load_pattern(solve_pattern);
                run.parameters["m"] = solve_m;
                run.parameters["t"] = solve_t;
                j = outcome_json(find_gap_or_path(host, h, solve_m, solve_t));
            } else if (solve_algo == "matching") {
                OrderedGraph h = run.load_pattern(solve_pattern);
                j = outcome_json(solve_matching(host, h));
            } else if (solve_algo == "grs") {
                run.parameters["p"] = solve_p;
                j = grs_json(grs_search(host, solve_p));
            } else {
                throw std::invalid_argument("unknown solve algorithm: " + solve_algo);
            }
            return run.finish(j.dump(2) + "\n", out_path);
        }

        if (*oracle) {
            run.command = "oracle " + oracle_which;
            PathGraph host = run.load_host(oracle_host);
            json j;
            if (oracle_which == "longest") {
                j = path_json(longest_induced_path_exact(host, oracle_cap));
                j["kind"] = "path";
            } else if (oracle_which == "longest-increasing") {
                j = path_json(longest_increasing_induced_path_exact(host, oracle_cap));
                j["kind"] = "path";
            } else if (oracle_which == "ktt") {
                run.parameters["t"] = oracle_t;
                auto w = contains_ktt(host, oracle_t);
                if (w) {
                    j["kind"] = "ktt";
                    j["side_a"] = w->side_a;
                    j["side_b"] = w->side_b;
                } else {
                    j["kind"] = "absent";
                }
            } else {
                throw std::invalid_argument("unknown oracle: " + oracle_which);
            }
            return run.finish(j.dump(2) + "\n", out_path);
        }

        if (*ghn) {
            run.command = "ghn";
            OrderedGraph h = run.load_pattern(ghn_pattern);
            int lo, hi;
            if (auto dots = ghn_range.find(".."); dots != std::string::npos) {
                lo = std::stoi(ghn_range.substr(0, dots));
                hi = std::stoi(ghn_range.substr(dots + 2));
            } else {
                lo = hi = std::stoi(ghn_range);
            }
            run.parameters["n"] = ghn_range;
            int threads = resolve_threads(threads_flag);
            run.parameters["threads"] = threads;
            std::string payload = "pattern,n,ghn,witness_chords,count_avoiding,elapsed_ms\n";
            for (int n = lo; n <= hi; ++n) {
                auto t0 = std::chrono::steady_clock::now();
                GhnResult r = ghn_exact(h, n, threads);
                long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
                std::string chords;
                for (auto [i, j] : r.witness.chords()) {
                    if (!chords.empty()) chords += ";";
                    chords += std::to_string(i) + "-" + std::to_string(j);
                }
                payload += ghn_pattern + "," + std::to_string(n) + "," +
                           (r.unavoidable ? "unavoidable" : std::to_string(r.value)) + "," +
                           chords + "," + std::to_string(r.count_avoiding) + "," +
                           std::to_string(ms) + "\n";
            }
            return run.finish(payload, out_path);
        }

        if (*grs) {
            run.command = "grs";
            PathGraph host = run.load_host(grs_host);
            run.parameters["p"] = grs_p;
            return run.finish(grs_json(grs_search(host, grs_p)).dump(2) + "\n", out_path);
        }

        if (*mainthm) {
            run.command = "main-thm";
            PathGraph host = run.load_host(mainthm_host);
            run.parameters["t"] = mainthm_t;
            std::optional<int> force_s;
            if (mainthm_force_s >= 0) {
                force_s = mainthm_force_s;
                run.parameters["force_s"] = mainthm_force_s;
            }
            PipelineResult r = main_pipeline(host, mainthm_t, force_s);
            json j;
            j["s"] = r.s;
            j["stage"] = r.stage.empty() ? "done" : r.stage;
            if (r.kind == PipelineResult::Kind::path) {
                j["kind"] = "path";
                j["vertices"] = r.path.vertices;
                j["order"] = r.path.order();
            } else if (r.kind == PipelineResult::Kind::ktt) {
                j["kind"] = "ktt";
                j["side_a"] = r.witness.side_a;
                j["side_b"] = r.witness.side_b;
            } else {
                j["kind"] = "report";
                j["largest_clique"] = r.largest_clique;
            }
            if (r.clique) {
                j["clique"] = r.clique->vertices;
                j["clique_type"] = {r.clique->ell, r.clique->color.d, r.clique->color.drev};
            }
            if (r.clique_report) {
                json checks = json::array();
                for (const auto& c : r.clique_report->checks)
                    checks.push_back({{"name", c.name}, {"pass", c.pass}});
                j["clique_report"] = {{"preconditions_met", r.clique_report->preconditions_met},
                                      {"checks", checks}};
            }
            return run.finish(j.dump(2) + "\n", out_path);
        }

        if (*verify_cmd) {
            run.command = "verify " + verify_suite;
            run.parameters["quick"] = verify_quick;
            std::vector<ordpath::verify::SuiteResult> results;
            if (verify_suite == "all")
                results = ordpath::verify::run_all(verify_quick);
            else
                results.push_back(ordpath::verify::run_suite(verify_suite, verify_quick));
            bool all = true;
            std::string payload;
            json j = json::array();
            for (const auto& suite : results) {
                for (const auto& r : suite.results) {
                    all = all && r.pass;
                    payload += std::string(r.pass ? "[PASS] " : "[FAIL] ") + suite.suite + "/" +
                               r.name + (r.detail.empty() ? "" : "  (" + r.detail + ")") + "\n";
                    j.push_back({{"suite", suite.suite},
                                 {"property", r.name},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
                }
            }
            if (format == "json") payload = j.dump(2) + "\n" + payload;
            run.finish(payload, out_path);
            return all ? 0 : 1;
        }

        if (*ramsey) {
            run.command = "ramsey";
            run.parameters = {{"q", ramsey_q}, {"N", ramsey_n}, {"k", ramsey_k},
                              {"printed_k3", ramsey_printed_k3}};
            TowerValue v = ramsey_printed_k3 ? ramsey_upper_k3(ramsey_q, ramsey_n)
                                             : ramsey_upper(ramsey_q, ramsey_n, ramsey_k);
            json j;
            j["exact"] = v.exact;
            if (v.exact)
                j["value"] = v.value.str();
            else if (v.bit_length)
                j["bit_length_upper"] = v.bit_length->str();
            else
                j["bit_length_upper"] = nullptr;
            return run.finish(j.dump(2) + "\n", out_path);
        }

        throw std::invalid_argument("no subcommand");
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
