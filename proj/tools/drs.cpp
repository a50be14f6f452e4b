// Command-line front end: generate family graphs, build line graphs, solve
// and verify minimum doubly resolving sets, and run the matching reduction.
//
// Exit codes: 0 success / property true, 1 property false, 2 usage or input
// error, 3 work limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "drs/families.hpp"
#include "drs/reduction.hpp"
#include "drs/solvers.hpp"
#include "drs/tree_line.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWorkLimit = 3;

drs::Graph load_graph(const std::string& path) {
    if (path == "-") return drs::parse_graph(std::cin);
    return drs::parse_graph_file(path);
}

void write_output(const drs::Graph& g, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        drs::write_graph(g, std::cout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw drs::Error("cannot open '" + out_path + "' for writing");
    drs::write_graph(g, out);
}

std::uint64_t env_work_limit() {
    const char* v = std::getenv("DRS_WORK_LIMIT");
    if (!v) return drs::kDefaultWorkLimit;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0' || x == 0)
        throw drs::Error("DRS_WORK_LIMIT must be a positive integer");
    return x;
}

drs::VertexSet resolve_labels(const drs::Graph& g, const std::string& csv) {
    std::vector<int> ids;
    std::string name;
    std::istringstream ss(csv);
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        const int v = g.vertex_by_label(name);
        if (v < 0) throw drs::Error("unknown vertex label '" + name + "'");
        ids.push_back(v);
    }
    drs::VertexSet set = drs::make_vertex_set(ids);
    if (set.size() != ids.size()) throw drs::Error("duplicate vertex in set");
    return set;
}

std::vector<std::string> labels_of(const drs::Graph& g, const drs::VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(g.label(v));
    return out;
}

// Labels of line vertices named by their root edges, without building L(g).
std::vector<std::string> line_labels_of(const drs::Graph& root,
                                        const drs::VertexSet& edge_ids) {
    std::vector<std::string> out;
    out.reserve(edge_ids.size());
    for (int id : edge_ids) {
        const drs::Edge& e = root.edges()[id];
        out.push_back(root.label(e.u) + "_" + root.label(e.v));
    }
    return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ' ';
        out += parts[i];
    }
    return out;
}

std::string format_elapsed(std::chrono::duration<double> d) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(3) << d.count() << 's';
    return ss.str();
}

struct GenArgs {
    std::string family;
    int n = 0;
    int k = 0;
    int extra = 0;
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen(const GenArgs& a) {
    auto need = [&](const char* flag, bool present) {
        if (!present)
            throw drs::Error("family '" + a.family + "' requires " + flag);
    };
    std::optional<drs::Graph> g;
    if (a.family == "path" || a.family == "cycle" || a.family == "star" ||
        a.family == "complete") {
        need("--n", a.n > 0);
        const auto fam = a.family == "path"    ? drs::BasicFamily::path
                         : a.family == "cycle" ? drs::BasicFamily::cycle
                         : a.family == "star"  ? drs::BasicFamily::star
                                               : drs::BasicFamily::complete;
        g = drs::gen_basic(fam, a.n);
    } else if (a.family == "ak") {
        need("--k", a.k > 0);
        g = drs::gen_ak(a.k);
    } else if (a.family == "tk") {
        need("--k", a.k > 0);
        g = drs::gen_tk(a.k);
    } else if (a.family == "random-tree") {
        need("--n", a.n > 0);
        g = drs::gen_random_tree(a.n, a.seed);
    } else if (a.family == "random-connected") {
        need("--n", a.n > 0);
        g = drs::gen_random_connected(a.n, a.extra, a.seed);
    } else {
        throw drs::Error("unknown family '" + a.family + "'");
    }
    write_output(*g, a.output);
    return kExitTrue;
}

int run_linegraph(const std::string& input, const std::string& output) {
    const drs::Graph g = load_graph(input);
    auto [lg, map] = drs::line_graph(g);
    write_output(lg, output);
    return kExitTrue;
}

int run_stats(const std::string& input, bool as_json) {
    const drs::Graph g = load_graph(input);
    const bool tree = drs::is_tree(g);
    std::optional<drs::TreeStats> ts;
    if (tree && g.vertex_count() >= 2) ts = drs::tree_stats(g);

    if (as_json) {
        json j;
        j["verb"] = "stats";
        if (ts) {
            j["stats"] = {{"sigma", ts->sigma},
                          {"ex", ts->ex},
                          {"ex_prime", ts->ex_prime}};
        }
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["max_degree"] = drs::max_degree(g);
        j["connected"] = g.connected();
        j["tree"] = tree;
        print_json(j);
        return kExitTrue;
    }
    std::cout << "vertices: " << g.vertex_count() << '\n'
              << "edges: " << g.edge_count() << '\n'
              << "max degree: " << drs::max_degree(g) << '\n'
              << "connected: " << (g.connected() ? "yes" : "no") << '\n'
              << "tree: " << (tree ? "yes" : "no") << '\n';
    if (ts) {
        std::cout << "leaves (sigma): " << ts->sigma << '\n'
                  << "exterior majors (ex): " << ts->ex << '\n'
                  << "strong exterior majors (ex_prime): " << ts->ex_prime
                  << '\n';
    }
    return kExitTrue;
}

struct VerifyArgs {
    std::string input;
    std::string set_csv;
    bool line = false;
    bool as_json = false;
};

int run_verify(const VerifyArgs& a) {
    drs::Graph g = load_graph(a.input);
    if (a.line) g = drs::line_graph(g).first;
    if (g.vertex_count() == 1)
        std::cerr << "warning: single-vertex graph; every set is vacuously a "
                     "doubly resolving set\n";
    const drs::VertexSet s = resolve_labels(g, a.set_csv);
    const bool ok = drs::is_drs_fast(drs::bfs_all_pairs(g), s);
    if (a.as_json) {
        json j;
        j["verb"] = "verify";
        j["verified"] = ok;
        print_json(j);
    } else {
        std::cout << "verified: " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? kExitTrue : kExitFalse;
}

struct SolveArgs {
    std::string input;
    bool exact = false;
    bool decompose = false;
    bool line = false;
    std::string d_csv;
    int threads = 0;
    bool as_json = false;
};

int run_solve(const SolveArgs& a) {
    const drs::Graph root = load_graph(a.input);
    const drs::Graph g = a.line ? drs::line_graph(root).first : root;

    drs::SolveOptions opts;
    opts.work_limit = env_work_limit();
    opts.threads = a.threads;

    drs::SolveResult r;
    drs::VertexSet pinned;
    const bool use_decompose = a.decompose;
    if (use_decompose) {
        if (!a.d_csv.empty())
            throw drs::Error("--d is only available with --exact");
        r = drs::min_drs_decomposed(g, opts);
    } else {
        const drs::DistanceMatrix dm = drs::bfs_all_pairs(g);
        if (!a.d_csv.empty()) {
            pinned = resolve_labels(g, a.d_csv);
            r = drs::min_d_drs_exhaustive(dm, pinned, opts);
        } else {
            std::optional<int> hint;
            if (a.line && root.vertex_count() >= 3)
                hint = drs::lower_bound_line(root);
            r = drs::min_drs_exhaustive(dm, hint, opts);
        }
    }

    // Never print an unverified witness.
    const drs::DistanceMatrix dm = drs::bfs_all_pairs(g);
    const bool ok = pinned.empty() ? drs::is_drs_fast(dm, r.witness)
                                   : drs::is_d_drs(dm, r.witness, pinned);
    if (!ok) throw std::logic_error("solver returned an unverified witness");

    const auto set_labels = labels_of(g, r.witness);
    if (a.as_json) {
        json j;
        j["verb"] = "solve";
        j["psi"] = r.psi;
        j["set"] = set_labels;
        j["verified"] = true;
        print_json(j);
    } else {
        std::cout << "psi: " << r.psi << '\n'
                  << "set: " << join(set_labels) << '\n'
                  << "verified: yes\n"
                  << "method: " << drs::to_string(r.method) << '\n'
                  << "elapsed: " << format_elapsed(r.elapsed) << '\n';
    }
    return kExitTrue;
}

struct TreeArgs {
    std::string input;
    bool stats = false;
    bool construct = false;
    bool psi = false;
    bool as_json = false;
};

int run_tree(const TreeArgs& a) {
    const drs::Graph t = load_graph(a.input);
    if (!drs::is_tree(t)) throw drs::Error("input is not a tree");

    if (a.stats) {
        const drs::TreeStats st = drs::tree_stats(t);
        if (a.as_json) {
            json j;
            j["verb"] = "tree";
            j["stats"] = {{"sigma", st.sigma},
                          {"ex", st.ex},
                          {"ex_prime", st.ex_prime}};
            print_json(j);
        } else {
            std::cout << "leaves (sigma): " << st.sigma << '\n'
                      << "exterior majors (ex): " << st.ex << '\n'
                      << "strong exterior majors (ex_prime): " << st.ex_prime
                      << '\n'
                      << "leaf set: " << join(labels_of(t, st.leaves)) << '\n'
                      << "majors: " << join(labels_of(t, st.majors)) << '\n'
                      << "exterior majors: "
                      << join(labels_of(t, st.exterior_majors)) << '\n'
                      << "strong exterior majors: "
                      << join(labels_of(t, st.strong_exterior_majors)) << '\n';
        }
        return kExitTrue;
    }
    if (a.psi) {
        const int value = drs::psi_line_tree_formula(drs::tree_stats(t));
        if (a.as_json) {
            json j;
            j["verb"] = "tree";
            j["psi"] = value;
            print_json(j);
        } else {
            std::cout << "psi: " << value << '\n';
        }
        return kExitTrue;
    }

    const drs::VertexSet ids = drs::construct_min_drs_line_tree(t);
    // Never print an unverified witness; the block-structure test is exact
    // on line graphs of trees and needs no distance matrix.
    if (!drs::is_drs_of_line_tree(t, ids))
        throw std::logic_error("constructed witness failed verification");
    const auto set_labels = line_labels_of(t, ids);
    if (a.as_json) {
        json j;
        j["verb"] = "tree";
        j["psi"] = static_cast<int>(ids.size());
        j["set"] = set_labels;
        j["verified"] = true;
        print_json(j);
    } else {
        std::cout << "psi: " << ids.size() << '\n'
                  << "set: " << join(set_labels) << '\n'
                  << "verified: yes\n";
    }
    return kExitTrue;
}

int run_bounds(const std::string& input, bool as_json) {
    const drs::Graph g = load_graph(input);
    const int lower = drs::lower_bound_line(g);
    const int upper = g.vertex_count() - 1;
    const drs::VertexSet witness = drs::upper_bound_drs_line(g);  // verified
    const auto set_labels = line_labels_of(g, witness);
    if (as_json) {
        json j;
        j["verb"] = "bounds";
        j["set"] = set_labels;
        j["verified"] = true;
        j["bounds"] = {{"lower", lower}, {"upper", upper}};
        print_json(j);
    } else {
        std::cout << "lower: " << lower << '\n'
                  << "upper: " << upper << '\n'
                  << "set: " << join(set_labels) << '\n'
                  << "verified: yes\n";
    }
    return kExitTrue;
}

int run_decompose(const std::string& input, bool as_json) {
    const drs::Graph g = load_graph(input);
    const drs::BlockDecomposition bd = drs::blocks_and_cut_vertices(g);
    if (as_json) {
        json j;
        j["verb"] = "decompose";
        json blocks = json::array();
        for (const auto& blk : bd.blocks) blocks.push_back(labels_of(g, blk));
        j["blocks"] = blocks;
        j["cut_vertices"] = labels_of(g, bd.cut_vertices);
        print_json(j);
    } else {
        std::cout << "blocks: " << bd.blocks.size() << '\n';
        for (std::size_t i = 0; i < bd.blocks.size(); ++i)
            std::cout << "block " << i << ": " << join(labels_of(g, bd.blocks[i]))
                      << '\n';
        std::cout << "cut vertices: " << join(labels_of(g, bd.cut_vertices))
                  << '\n';
    }
    return kExitTrue;
}

struct ReduceArgs {
    std::string file;
    int n = 0;
    int big_n = 1;
    bool with_matching = false;
    std::string output;
    bool as_json = false;
};

int run_reduce(const ReduceArgs& a) {
    if (a.file.empty() == (a.n == 0))
        throw drs::Error("pass exactly one of --file or --n");
    drs::ThreeDmInstance inst;
    if (!a.file.empty()) {
        inst = drs::parse_3dm_file(a.file);
    } else {
        // Built-in demo instance: the diagonal triples (i, i, i).
        inst.n = a.n;
        for (int i = 0; i < a.n; ++i) inst.triples.push_back({i, i, i});
    }
    const drs::ReductionGraph rg = drs::build_reduction(inst, a.big_n);
    if (!a.output.empty()) write_output(rg.graph, a.output);

    std::optional<std::vector<int>> matching;
    drs::VertexSet witness;
    if (a.with_matching) {
        drs::SolveOptions opts;
        opts.work_limit = env_work_limit();
        matching = drs::solve_3dm_exhaustive(inst, opts);
        if (matching) {
            witness = drs::drs_from_matching(rg, *matching);
            const auto lg = drs::line_graph(rg.graph).first;
            if (!drs::is_drs_fast(drs::bfs_all_pairs(lg), witness))
                throw std::logic_error("matching witness failed verification");
        }
    }

    if (a.as_json) {
        json j;
        j["verb"] = "reduce";
        if (a.with_matching && matching) {
            j["set"] = line_labels_of(rg.graph, witness);
            j["verified"] = true;
        }
        j["tau"] = rg.tau;
        j["lambda"] = rg.lambda;
        j["k"] = rg.k_threshold;
        j["vertices"] = rg.graph.vertex_count();
        j["edges"] = rg.graph.edge_count();
        if (a.with_matching)
            j["matching"] = matching ? json(*matching) : json(nullptr);
        print_json(j);
    } else {
        std::cout << "n: " << rg.base_n << '\n'
                  << "triples: " << inst.triples.size() << '\n'
                  << "replication: " << rg.replication << '\n'
                  << "tau: " << rg.tau << '\n'
                  << "lambda: " << rg.lambda << '\n'
                  << "k: " << rg.k_threshold << '\n'
                  << "vertices: " << rg.graph.vertex_count() << '\n'
                  << "edges: " << rg.graph.edge_count() << '\n';
        if (a.with_matching) {
            if (!matching) {
                std::cout << "matching: none\n";
            } else {
                std::vector<std::string> parts;
                for (int j : *matching) parts.push_back(std::to_string(j));
                std::cout << "matching: " << join(parts) << '\n'
                          << "set: " << join(line_labels_of(rg.graph, witness))
                          << '\n'
                          << "verified: yes\n";
            }
        }
    }
    if (a.with_matching && !matching) return kExitFalse;
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum doubly resolving sets of line graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* sub_gen = app.add_subcommand("gen", "generate a family graph");
    sub_gen->add_option("family", gen.family,
                        "path|cycle|star|complete|ak|tk|random-tree|random-connected")
        ->required();
    sub_gen->add_option("--n", gen.n, "vertex count");
    sub_gen->add_option("--k", gen.k, "family parameter");
    sub_gen->add_option("--extra", gen.extra, "extra non-tree edges");
    sub_gen->add_option("--seed", gen.seed, "PRNG seed");
    sub_gen->add_option("-o,--output", gen.output, "output file (default stdout)");

    std::string lg_input, lg_output;
    auto* sub_lg = app.add_subcommand("linegraph", "write the line graph");
    sub_lg->add_option("input", lg_input, "graph file or -")->required();
    sub_lg->add_option("-o,--output", lg_output, "output file (default stdout)");

    std::string stats_input;
    bool stats_json = false;
    auto* sub_stats = app.add_subcommand("stats", "graph and tree statistics");
    sub_stats->add_option("input", stats_input, "graph file or -")->required();
    sub_stats->add_flag("--json", stats_json, "JSON output");

    VerifyArgs verify;
    auto* sub_verify =
        app.add_subcommand("verify", "check a doubly resolving set");
    sub_verify->add_option("input", verify.input, "graph file or -")->required();
    sub_verify->add_option("--set", verify.set_csv, "comma-separated labels")
        ->required();
    sub_verify->add_flag("--line", verify.line, "verify on the line graph");
    sub_verify->add_flag("--json", verify.as_json, "JSON output");

    SolveArgs solve;
    auto* sub_solve = app.add_subcommand("solve", "minimum doubly resolving set");
    sub_solve->add_option("input", solve.input, "graph file or -")->required();
    auto* flag_exact = sub_solve->add_flag("--exact", solve.exact,
                                           "exhaustive search (default)");
    sub_solve->add_flag("--decompose", solve.decompose, "block decomposition")
        ->excludes(flag_exact);
    sub_solve->add_flag("--line", solve.line, "solve on the line graph");
    sub_solve->add_option("--d", solve.d_csv,
                          "pinned vertices (comma-separated labels)");
    sub_solve->add_option("--threads", solve.threads,
                          "worker threads (0 = all cores, 1 = sequential)");
    sub_solve->add_flag("--json", solve.as_json, "JSON output");

    TreeArgs tree;
    auto* sub_tree = app.add_subcommand("tree", "tree-specific operations");
    sub_tree->add_option("input", tree.input, "tree file or -")->required();
    auto* flag_tstats = sub_tree->add_flag("--stats", tree.stats, "leaf census");
    auto* flag_tcon = sub_tree->add_flag("--construct", tree.construct,
                                         "build a minimum DRS of the line graph");
    auto* flag_tpsi =
        sub_tree->add_flag("--psi", tree.psi, "closed-form psi of the line graph");
    flag_tstats->excludes(flag_tcon)->excludes(flag_tpsi);
    flag_tcon->excludes(flag_tpsi);
    sub_tree->add_flag("--json", tree.as_json, "JSON output");

    std::string bounds_input;
    bool bounds_json = false;
    auto* sub_bounds =
        app.add_subcommand("bounds", "degree lower bound and spanning-tree upper bound");
    sub_bounds->add_option("input", bounds_input, "graph file or -")->required();
    sub_bounds->add_flag("--json", bounds_json, "JSON output");

    std::string dec_input;
    bool dec_json = false;
    auto* sub_dec = app.add_subcommand("decompose", "blocks and cut vertices");
    sub_dec->add_option("input", dec_input, "graph file or -")->required();
    sub_dec->add_flag("--json", dec_json, "JSON output");

    ReduceArgs reduce;
    auto* sub_reduce =
        app.add_subcommand("reduce", "matching-to-DRS reduction graph");
    sub_reduce->add_option("--file", reduce.file, "3dm instance file");
    sub_reduce->add_option("--n", reduce.n, "diagonal demo instance size");
    sub_reduce->add_option("--N", reduce.big_n, "replication factor");
    sub_reduce->add_flag("--with-matching", reduce.with_matching,
                         "solve the instance and emit the certificate DRS");
    sub_reduce->add_option("-o,--output", reduce.output, "graph output file");
    sub_reduce->add_flag("--json", reduce.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitTrue : kExitUsage;
    }

    try {
        if (sub_gen->parsed()) return run_gen(gen);
        if (sub_lg->parsed()) return run_linegraph(lg_input, lg_output);
        if (sub_stats->parsed()) return run_stats(stats_input, stats_json);
        if (sub_verify->parsed()) return run_verify(verify);
        if (sub_solve->parsed()) return run_solve(solve);
        if (sub_tree->parsed()) {
            if (!tree.stats && !tree.construct && !tree.psi)
                throw drs::Error("pass one of --stats, --construct, --psi");
            return run_tree(tree);
        }
        if (sub_bounds->parsed()) return run_bounds(bounds_input, bounds_json);
        if (sub_dec->parsed()) return run_decompose(dec_input, dec_json);
        if (sub_reduce->parsed()) return run_reduce(reduce);
        throw drs::Error("no subcommand given");
    } catch (const drs::WorkLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitWorkLimit;
    } catch (const drs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
