// Command-line frontend: per-graph analysis with certificates, theorem
// sweeps over enumerated graph streams, and family generation.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "wellcov/classify.hpp"
#include "wellcov/decomposition.hpp"
#include "wellcov/enumerate.hpp"
#include "wellcov/family.hpp"
#include "wellcov/independence.hpp"
#include "wellcov/io.hpp"
#include "wellcov/serialize.hpp"
#include "wellcov/shelling.hpp"
#include "wellcov/structure.hpp"

namespace {

using namespace wellcov;

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string t = line.substr(a, b - a + 1);
        return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
    }
    return false;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- analyze ----

const std::vector<std::string> kAllProperties = {
    "well_covered", "very_well_covered", "konig", "vertex_decomposable",
    "shellable",    "cm",                "seq_cm"};

int cmd_analyze(const std::string& input, std::vector<std::string> properties,
                bool with_witness, const std::string& format) {
    std::string text;
    Graph g;
    bool edge_list = false;
    try {
        text = read_file(input);
        edge_list = looks_like_edge_list(text);
        g = parse_graph_auto(text);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }

    if (properties.empty()) properties = kAllProperties;
    json props = json::object();
    json timing = json::object();
    std::optional<CmReport> cm_cache;
    auto cm = [&]() -> const CmReport& {
        if (!cm_cache) cm_cache = cm_oracle(g);
        return *cm_cache;
    };

    try {
        for (const std::string& p : properties) {
            auto t0 = std::chrono::steady_clock::now();
            json entry;
            if (p == "well_covered") {
                auto v = is_well_covered(g);
                entry["status"] = to_string(v.status);
                if (v.is_yes() && with_witness)
                    entry["witness"] = facet_list_json(*v.witness);
                if (v.is_no())
                    entry["counterexample"] = {
                        {"facets", json::array({vertex_set_json(v.counterexample->f1),
                                                vertex_set_json(v.counterexample->f2)})}};
            } else if (p == "very_well_covered") {
                entry["status"] = to_string(is_very_well_covered(g).status);
            } else if (p == "konig") {
                auto v = konig_certificate(g);
                entry["status"] = to_string(v.status);
                if (v.is_yes() && with_witness)
                    entry["witness"] = konig_certificate_json(*v.witness);
                if (v.is_no())
                    entry["counterexample"] = {{"tau", v.counterexample->first},
                                               {"nu", v.counterexample->second}};
            } else if (p == "vertex_decomposable") {
                auto v = vertex_decomposable(g);
                entry["status"] = to_string(v.status);
                if (v.is_yes() && with_witness)
                    entry["witness"] = decomposition_tree_json(*v.witness);
            } else if (p == "shellable") {
                auto v = shellable(g);
                entry["status"] = to_string(v.status);
                if (v.is_yes() && with_witness)
                    entry["witness"] = shelling_order_json(*v.witness);
                if (v.is_unknown()) entry["reason"] = v.reason;
            } else if (p == "cm") {
                entry["status"] = to_string(cm().cm.status);
                entry["theorem"] = cm().cm_rationale;
                if (cm().cm.is_unknown()) entry["reason"] = cm().cm.reason;
            } else if (p == "seq_cm") {
                entry["status"] = to_string(cm().seq_cm.status);
                entry["theorem"] = cm().seq_cm_rationale;
                if (cm().seq_cm.is_unknown()) entry["reason"] = cm().seq_cm.reason;
            } else {
                std::cerr << "unknown property: " << p << "\n";
                return 2;
            }
            props[p] = entry;
            timing[p] = ms_since(t0);
        }

        json report = {{"schema_version", kSchemaVersion},
                       {"graph",
                        {{"n", g.vertex_count()},
                         {"edges", graph_json(g)["edges"]},
                         {"format", edge_list ? "edgelist" : "graph6"}}},
                       {"classes", class_membership_json(classify(g))},
                       {"properties", props},
                       {"timing", timing}};
        if (format == "text") {
            std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
            for (auto& [name, entry] : props.items()) {
                std::cout << name << ": " << entry["status"].get<std::string>();
                if (entry.contains("theorem"))
                    std::cout << "  [" << entry["theorem"].get<std::string>() << "]";
                std::cout << "\n";
            }
        } else {
            std::cout << report.dump(2) << "\n";
        }
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

// ---- certify ----

int cmd_certify(const std::string& input, const std::string& property,
                const std::string& witness_file) {
    Graph g;
    json w;
    try {
        g = parse_graph_auto(read_file(input));
        w = json::parse(read_file(witness_file));
        if (w.is_object() && w.contains("witness")) w = w.at("witness");
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    bool ok = false;
    try {
        if (property == "shellable") {
            ok = verify_shelling(maximal_stable_sets(g), shelling_order_from_json(w));
        } else if (property == "vertex_decomposable") {
            ok = verify_decomposition_tree(g, decomposition_tree_from_json(w));
        } else if (property == "konig") {
            ok = verify_konig_certificate(g, konig_certificate_from_json(w));
        } else if (property == "perfect_konig_matching") {
            ok = verify_perfect_konig_matching(g, perfect_konig_matching_from_json(w));
        } else if (property == "well_covered") {
            FacetList claimed;
            for (const auto& f : w) claimed.facets.push_back(vertex_set_from_json(f));
            std::sort(claimed.facets.begin(), claimed.facets.end());
            FacetList actual = maximal_stable_sets(g);
            ok = claimed.facets == actual.facets && actual.pure();
        } else {
            std::cerr << "unknown property: " << property << "\n";
            return 2;
        }
    } catch (const MalformedInput& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // structurally well-formed but invalid witness (bad permutation,
        // unknown vertices, broken matching)
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
    std::cout << (ok ? "verified" : "rejected") << "\n";
    return ok ? 0 : 1;
}

// ---- sweep ----

struct Check {
    const char* name;
    // pass/fail for one graph; nullopt means the check does not apply
    std::function<std::optional<bool>(const Graph&)> run;
};

std::optional<bool> check_theorem24(const Graph& g) {
    CycleInfo ci = girth_and_cycles(g);
    if (ci.has_k_cycle.at(3) || ci.has_k_cycle.at(5) || ci.has_k_cycle.at(7))
        return std::nullopt;
    return theorem24(g).is_yes() == is_well_covered_within(g, g.vertices());
}

std::optional<bool> check_theoremP1(const Graph& g) {
    CycleInfo ci = girth_and_cycles(g);
    if (ci.has_k_cycle.at(3) || ci.has_k_cycle.at(5)) return std::nullopt;
    bool d = theoremP1(g).cm.is_yes();
    bool uvd = is_well_covered_within(g, g.vertices()) &&
               vertex_decomposable_within(g, g.vertices());
    if (d != uvd) return false;
    auto sh = shellable(g);
    if (sh.is_unknown()) return true;  // matching pair already agreed
    bool psh = maximal_stable_sets(g).pure() && sh.is_yes();
    return d == psh;
}

std::optional<bool> check_prop2(const Graph& g) {
    if (!is_konig(g)) return std::nullopt;
    Prop2Result r = prop2_equivalences(g);
    bool i = r.unmixed_vd.is_yes();
    if (!r.pure_shellable.is_unknown() && r.pure_shellable.is_yes() != i) return false;
    return r.konig_matching_no_squares.is_yes() == i && r.ordered_relabeling.is_yes() == i;
}

std::optional<bool> check_shedding_lemma4(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_shedding_in(g, g.vertices(), v) !=
            is_shedding_definitional(g, g.vertices(), v))
            return false;
    return true;
}

std::optional<bool> check_shedding_ext(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_shedding_in(g, g.vertices(), v) &&
            !shedding_candidate_in(g, g.vertices(), v))
            return false;
    return true;
}

std::optional<bool> check_lemma21(const Graph& g) {
    if (!is_well_covered_within(g, g.vertices())) return std::nullopt;
    for (int x = 0; x < g.vertex_count(); ++x) {
        int leaves = 0;
        for (int y : g.neighbors(x))
            if (g.degree(y) == 1) ++leaves;
        if (leaves >= 2) return false;
    }
    return true;
}

std::optional<bool> check_closure(const Graph& g) {
    bool unmixed = is_well_covered_within(g, g.vertices());
    bool vd = vertex_decomposable_within(g, g.vertices());
    auto sh = shellable(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet rest = g.vertices() - g.closed_neighbors(v);
        if (unmixed && !is_well_covered_within(g, rest)) return false;
        if (vd && !vertex_decomposable_within(g, rest)) return false;
        if (sh.is_yes() && shellable_within(g, rest).is_no()) return false;
    }
    return true;
}

std::optional<bool> check_unicyclic(const Graph& g) {
    if (!is_unicyclic(g)) return std::nullopt;
    if (unicyclic_wellcovered(g).is_yes() != is_well_covered_within(g, g.vertices()))
        return false;
    bool vd = vertex_decomposable_within(g, g.vertices());
    if (unicyclic_ssd(g).is_yes() != vd) return false;
    auto sh = shellable(g);
    if (!sh.is_unknown() && sh.is_yes() != vd) return false;
    return unicyclic_cm(g).cm.is_yes() ==
           (is_well_covered_within(g, g.vertices()) && vd);
}

std::optional<bool> check_girth6(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    int girth = girth_within(g, g.vertices());
    if (girth != kInfiniteGirth && girth < 6) return std::nullopt;
    bool uvd = is_well_covered_within(g, g.vertices()) &&
               vertex_decomposable_within(g, g.vertices());
    return girth6_corollary(g).cm.is_yes() == uvd;
}

const std::vector<Check> kChecks = {
    {"theorem24", check_theorem24},
    {"theoremP1", check_theoremP1},
    {"prop2", check_prop2},
    {"shedding-lemma4", check_shedding_lemma4},
    {"shedding-ext", check_shedding_ext},
    {"lemma21", check_lemma21},
    {"closure", check_closure},
    {"unicyclic", check_unicyclic},
    {"girth6", check_girth6},
};

GraphPredicate make_filter(const std::string& name) {
    if (name.empty() || name == "none") return nullptr;
    if (name == "connected") return [](const Graph& g) { return is_connected(g); };
    if (name == "bipartite") return [](const Graph& g) { return is_bipartite(g); };
    if (name == "konig") return [](const Graph& g) { return is_konig(g); };
    if (name == "unicyclic") return [](const Graph& g) { return is_unicyclic(g); };
    if (name == "well-covered")
        return [](const Graph& g) { return is_well_covered_within(g, g.vertices()); };
    if (name == "no-3-5-cycles") return [](const Graph& g) {
        CycleInfo ci = girth_and_cycles(g);
        return !ci.has_k_cycle.at(3) && !ci.has_k_cycle.at(5);
    };
    if (name == "no-3-5-7-cycles") return [](const Graph& g) {
        CycleInfo ci = girth_and_cycles(g);
        return !ci.has_k_cycle.at(3) && !ci.has_k_cycle.at(5) && !ci.has_k_cycle.at(7);
    };
    if (name == "girth-ge-6") return [](const Graph& g) {
        int girth = girth_within(g, g.vertices());
        return girth == kInfiniteGirth || girth >= 6;
    };
    throw BadParams("unknown filter: " + name);
}

int cmd_sweep(int n, const std::string& filter_name, const std::string& check_name,
              std::optional<std::uint64_t> seed, std::uint64_t samples, int jobs,
              const std::string& counterexample_path) {
    const Check* check = nullptr;
    for (const Check& c : kChecks)
        if (check_name == c.name) check = &c;
    if (!check) {
        std::cerr << "unknown check: " << check_name << "\n";
        return 2;
    }
    GraphPredicate filter;
    try {
        filter = make_filter(filter_name);
    } catch (const BadParams& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (!seed && n > 6) {
        std::cerr << "exhaustive sweep refused for n > 6; pass --seed to sample\n";
        return 2;
    }
    if (n < 1 || n > 11) {
        std::cerr << "n out of range [1, 11]\n";
        return 2;
    }

    std::atomic<std::uint64_t> checked{0}, passed{0};
    std::mutex cx_mutex;
    std::optional<Graph> counterexample;

    auto consider = [&](const Graph& g) {
        if (counterexample) return;
        auto result = check->run(g);
        if (!result) return;
        checked.fetch_add(1, std::memory_order_relaxed);
        if (*result) {
            passed.fetch_add(1, std::memory_order_relaxed);
        } else {
            std::lock_guard<std::mutex> lock(cx_mutex);
            if (!counterexample) counterexample = g;
        }
    };

    if (seed) {
        sample_labeled_graphs(n, samples, *seed, consider, filter);
    } else if (jobs <= 1) {
        for_each_labeled_graph(n, consider, filter);
    } else {
        // partition the code space by residue; order-independent aggregation
        std::uint64_t total = labeled_graph_count(n);
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint64_t code = t; code < total; code += jobs) {
                    Graph g = graph_from_code(n, code);
                    if (filter && !filter(g)) continue;
                    consider(g);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::cout << "checked " << checked.load() << ", passed " << passed.load() << "\n";
    if (counterexample) {
        std::ofstream out(counterexample_path);
        out << emit_graph(*counterexample, GraphFormat::Graph6) << "\n";
        std::cerr << "counterexample written to " << counterexample_path << "\n";
        return 4;
    }
    return 0;
}

// ---- family ----

Graph base_family(const std::string& kind, int n) {
    if (kind == "cycle") return family::cycle(n);
    if (kind == "path") return family::path(n);
    if (kind == "complete") return family::complete(n);
    if (kind == "empty") return family::empty(n);
    if (kind == "star") return family::star(n);
    throw BadParams("unknown family kind: " + kind);
}

int cmd_family(const std::string& kind, int n, const std::string& of_kind, int a, int b,
               int k, const std::string& out_path, const std::string& format) {
    Graph g;
    try {
        if (kind == "whisker" || kind == "corona") {
            if (of_kind.empty()) throw BadParams("whisker requires --of <kind> and n");
            g = family::whisker_of(base_family(of_kind, n));
        } else if (kind == "clique-sum") {
            g = family::clique_sum_of_cycles(a, b, k);
        } else {
            g = base_family(kind, n);
        }
    } catch (const std::exception& e) {
        std::cerr << "bad family parameters: " << e.what() << "\n";
        return 2;
    }
    GraphFormat fmt = format == "edgelist" ? GraphFormat::EdgeList : GraphFormat::Graph6;
    std::string text = emit_graph(g, fmt) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-covered graph analysis toolkit"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "analyze one graph and emit a JSON report");
    std::string an_input, an_format = "json";
    std::vector<std::string> an_props;
    bool an_witness = false;
    analyze->add_option("input", an_input, "graph file (graph6 or edge list)")->required();
    analyze->add_option("--properties", an_props, "subset of properties to run")
        ->delimiter(',');
    analyze->add_flag("--witness", an_witness, "embed witnesses in the report");
    analyze->add_option("--format", an_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* certify = app.add_subcommand("certify", "re-verify a witness against a graph");
    std::string ct_input, ct_property, ct_witness_file;
    certify->add_option("input", ct_input, "graph file")->required();
    certify->add_option("--property", ct_property, "property the witness claims")
        ->required();
    certify->add_option("--witness-file", ct_witness_file, "serialized witness")
        ->required();

    auto* sweep = app.add_subcommand("sweep", "run a theorem check over a graph stream");
    int sw_n = 5, sw_jobs = 1;
    std::string sw_filter, sw_check;
    std::optional<std::uint64_t> sw_seed;
    std::uint64_t sw_samples = 1000;
    std::string sw_cx_path = "sweep-counterexample.g6";
    sweep->add_option("--n", sw_n, "vertex count")->required();
    sweep->add_option("--filter", sw_filter, "graph stream filter");
    sweep->add_option("--check", sw_check, "check name")->required();
    sweep->add_option("--seed", sw_seed, "sample instead of exhausting");
    sweep->add_option("--samples", sw_samples, "sample count (with --seed)");
    sweep->add_option("--jobs", sw_jobs, "worker threads");
    sweep->add_option("--counterexample-out", sw_cx_path, "counterexample dump path");

    auto* fam = app.add_subcommand("family", "emit a named family graph");
    std::string fm_kind, fm_of, fm_out, fm_format = "graph6";
    int fm_n = 0, fm_a = 0, fm_b = 0, fm_k = 1;
    fam->add_option("kind", fm_kind, "cycle|path|complete|empty|star|whisker|clique-sum")
        ->required();
    fam->add_option("n", fm_n, "vertex parameter");
    fam->add_option("--of", fm_of, "base family for whisker");
    fam->add_option("--a", fm_a, "first cycle length (clique-sum)");
    fam->add_option("--b", fm_b, "second cycle length (clique-sum)");
    fam->add_option("--k", fm_k, "shared clique size (clique-sum)");
    fam->add_option("--out", fm_out, "output path (stdout if omitted)");
    fam->add_option("--format", fm_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(an_input, an_props, an_witness, an_format);
        if (*certify) return cmd_certify(ct_input, ct_property, ct_witness_file);
        if (*sweep)
            return cmd_sweep(sw_n, sw_filter, sw_check, sw_seed, sw_samples, sw_jobs,
                             sw_cx_path);
        if (*fam)
            return cmd_family(fm_kind, fm_n, fm_of, fm_a, fm_b, fm_k, fm_out, fm_format);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
