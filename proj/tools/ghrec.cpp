// ghrec: recognition and reconstruction tools for 2-intersection graphs of
// 3-uniform hypergraphs.

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ghrec/chordal.hpp"
#include "ghrec/generate.hpp"
#include "ghrec/graph.hpp"
#include "ghrec/hypergraph.hpp"
#include "ghrec/oracle.hpp"
#include "ghrec/patterns.hpp"
#include "ghrec/recognizer.hpp"
#include "ghrec/reductions.hpp"

namespace {

using namespace ghrec;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw error(errc::malformed, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_graph(in);
}

Labelling load_labelling(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_labelling(in);
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw error(errc::malformed, "cannot open '" + path + "' for writing");
    out << content;
}

// A combined stream carries graph lines (p/e) and labelling lines (l); the
// reduce-ham output is in this shape so it can be piped into `verify -`.
std::pair<Graph, Labelling> load_combined(const std::string& path) {
    std::istringstream in(slurp(path));
    std::ostringstream graph_part, label_part;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == 'l')
            label_part << line << '\n';
        else
            graph_part << line << '\n';
    }
    std::istringstream gs(graph_part.str()), ls(label_part.str());
    return {parse_graph(gs), parse_labelling(ls)};
}

void print_witness(std::ostream& os, const std::vector<int>& witness) {
    os << "w";
    for (int v : witness) os << ' ' << v;
    os << '\n';
}

struct RecognizeOutput {
    int exit_code;
    std::string stdout_text;
    std::string stderr_text;
};

RecognizeOutput run_recognize_one(const Graph& g, bool fallback_oracle, uint64_t budget, int oracle_cap) {
    std::ostringstream out, err;
    Recognition r = recognize(g);
    if (r.verdict == Verdict::yes) {
        out << "YES\n" << serialize_labelling(*r.labelling);
        return {kExitYes, out.str(), err.str()};
    }
    if (r.verdict == Verdict::no) {
        out << "NO " << to_string(r.refusal->code) << '\n';
        print_witness(out, r.refusal->witness);
        if (!r.refusal->detail.empty()) err << r.refusal->detail << '\n';
        return {kExitNo, out.str(), err.str()};
    }
    if (fallback_oracle && g.vertex_count() <= oracle_cap) {
        err << "inapplicable (" << to_string(r.inapplicable->code) << "); falling back to the oracle\n";
        OracleOutcome oracle = oracle_search(g, budget);
        err << "oracle: " << oracle.stats.nodes << " nodes, " << oracle.stats.elapsed_seconds << "s\n";
        if (oracle.status == OracleStatus::found) {
            out << "YES\n" << serialize_labelling(*oracle.labelling);
            return {kExitYes, out.str(), err.str()};
        }
        if (oracle.status == OracleStatus::proven_no) {
            out << "NO ORACLE_EXHAUSTIVE\n";
            return {kExitNo, out.str(), err.str()};
        }
        out << "INAPPLICABLE BUDGET_EXHAUSTED\n";
        return {kExitUnknown, out.str(), err.str()};
    }
    out << "INAPPLICABLE " << to_string(r.inapplicable->code) << '\n';
    print_witness(out, r.inapplicable->witness);
    return {kExitUnknown, out.str(), err.str()};
}

int cmd_recognize(const std::vector<std::string>& paths, bool fallback_oracle, uint64_t budget, int oracle_cap,
                  unsigned jobs) {
    if (paths.size() == 1) {
        RecognizeOutput r = run_recognize_one(load_graph(paths[0]), fallback_oracle, budget, oracle_cap);
        std::cout << r.stdout_text;
        std::cerr << r.stderr_text;
        return r.exit_code;
    }
    std::vector<RecognizeOutput> results(paths.size());
    std::mutex index_mutex;
    size_t next = 0;
    auto worker = [&] {
        while (true) {
            size_t mine;
            {
                std::lock_guard<std::mutex> lock(index_mutex);
                if (next >= paths.size()) return;
                mine = next++;
            }
            try {
                results[mine] = run_recognize_one(load_graph(paths[mine]), fallback_oracle, budget, oracle_cap);
            } catch (const std::exception& ex) {
                results[mine] = {kExitInputError, "", std::string(ex.what()) + "\n"};
            }
        }
    };
    unsigned thread_count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    int worst = 0;
    for (size_t i = 0; i < paths.size(); ++i) {
        std::cout << "== " << paths[i] << '\n' << results[i].stdout_text;
        std::cerr << results[i].stderr_text;
        worst = std::max(worst, results[i].exit_code);
    }
    return worst;
}

int cmd_verify(const std::vector<std::string>& paths) {
    Graph g;
    Labelling lab;
    if (paths.size() == 1) {
        auto both = load_combined(paths[0]);
        g = std::move(both.first);
        lab = std::move(both.second);
    } else {
        g = load_graph(paths[0]);
        lab = load_labelling(paths[1]);
    }
    VerificationReport report = verify_labelling(g, lab);
    if (report.ok) {
        std::cout << "OK\n";
        return kExitYes;
    }
    for (const auto& v : report.violations) {
        std::cout << to_string(v.kind) << ' ' << v.u;
        if (v.v != 0) std::cout << ' ' << v.v;
        if (v.kind == Violation::Kind::missing_edge) std::cout << " intersection " << v.intersection_size;
        std::cout << '\n';
    }
    return kExitNo;
}

int cmd_image(const std::string& path, int l, const std::string& out_path) {
    Labelling lab = load_labelling(path);
    write_out(out_path, serialize_graph(image(lab, l)));
    return kExitYes;
}

int cmd_oracle(const std::string& path, uint64_t budget, bool enumerate) {
    Graph g = load_graph(path);
    if (enumerate) {
        EnumerateOutcome out = oracle_enumerate(g, budget);
        std::cerr << "oracle: " << out.stats.nodes << " nodes, max depth " << out.stats.max_depth << ", "
                  << out.stats.elapsed_seconds << "s\n";
        std::cout << "SOLUTIONS " << out.labellings.size() << (out.complete ? "" : " INCOMPLETE") << '\n';
        for (const auto& lab : out.labellings) std::cout << serialize_labelling(lab) << '\n';
        return out.complete ? kExitYes : kExitUnknown;
    }
    OracleOutcome out = oracle_search(g, budget);
    std::cerr << "oracle: " << out.stats.nodes << " nodes, max depth " << out.stats.max_depth << ", "
              << out.stats.elapsed_seconds << "s\n";
    std::cout << to_string(out.status) << '\n';
    if (out.status == OracleStatus::found) {
        std::cout << serialize_labelling(*out.labelling);
        return kExitYes;
    }
    return out.status == OracleStatus::proven_no ? kExitNo : kExitUnknown;
}

int cmd_check(const std::string& path) {
    Graph g = load_graph(path);
    StructureReport rep = classify_basic(g);
    std::cout << "n " << rep.vertex_count << "\nm " << rep.edge_count << "\nmax-degree " << rep.max_degree
              << "\nmin-degree " << rep.min_degree << "\nconnected " << (rep.connected ? "yes" : "no") << "\ntree "
              << (rep.is_tree ? "yes" : "no") << '\n';
    if (rep.connected) {
        EliminationOrder ord = mcs_peo(g);
        std::cout << "chordal " << (ord.chordal ? "yes" : "no");
        if (!ord.chordal && ord.hole_witness) {
            std::cout << " hole";
            for (int v : *ord.hole_witness) std::cout << ' ' << v;
        }
        std::cout << '\n';
    }
    auto claw = find_star_witness(g, 3);
    std::cout << "claw-free " << (claw.empty() ? "yes" : "no");
    if (!claw.empty())
        for (int v : claw) std::cout << ' ' << v;
    std::cout << '\n';
    auto k14 = find_star_witness(g, 4);
    std::cout << "k14-free " << (k14.empty() ? "yes" : "no");
    if (!k14.empty())
        for (int v : k14) std::cout << ' ' << v;
    std::cout << '\n';
    if (g.vertex_count() <= 500) {
        for (PatternName p : all_patterns()) {
            auto occ = find_induced_pattern(g, p);
            std::cout << "pattern " << to_string(p) << ' ' << (occ ? "found" : "none");
            if (occ)
                for (int v : occ->embedding) std::cout << ' ' << v;
            std::cout << '\n';
        }
    } else {
        std::cout << "# pattern scan skipped (n > 500)\n";
    }
    return kExitYes;
}

int cmd_tree(const std::string& path, std::optional<uint64_t> seed) {
    Graph g = load_graph(path);
    CliqueTreeResult result = build_clique_tree(g, seed);
    if (std::holds_alternative<SeparatorTooBig>(result)) {
        const auto& s = std::get<SeparatorTooBig>(result);
        std::cout << "SEPARATOR_TOO_BIG\n";
        print_witness(std::cout, s.intersection);
        return kExitNo;
    }
    std::cout << dump_clique_tree(std::get<CliqueTree>(result));
    return kExitYes;
}

int cmd_solve_2li(const std::string& path, uint64_t budget) {
    std::istringstream in(slurp(path));
    TLIInstance inst = parse_2li(in);
    TwoLIOutcome out = solve_2li(inst, budget);
    std::cerr << "solve-2li: " << out.stats.nodes << " nodes, " << out.stats.elapsed_seconds << "s\n";
    std::cout << to_string(out.status) << '\n';
    if (out.status == OracleStatus::found) {
        for (size_t i = 0; i < out.labelling->pairs.size(); ++i)
            std::cout << "v " << (i + 1) << ' ' << out.labelling->pairs[i].first << ' '
                      << out.labelling->pairs[i].second << '\n';
        return kExitYes;
    }
    return out.status == OracleStatus::proven_no ? kExitNo : kExitUnknown;
}

int cmd_hamiltonian(const std::string& path, uint64_t budget) {
    Graph g = load_graph(path);
    HamiltonianOutcome out = hamiltonian(g, budget);
    std::cerr << "hamiltonian: " << out.stats.nodes << " nodes, " << out.stats.elapsed_seconds << "s\n";
    if (out.status == OracleStatus::found) {
        std::cout << "CYCLE";
        for (int v : *out.cycle) std::cout << ' ' << v;
        std::cout << '\n';
        return kExitYes;
    }
    std::cout << (out.status == OracleStatus::proven_no ? "NONE" : "BUDGET_EXHAUSTED") << '\n';
    return out.status == OracleStatus::proven_no ? kExitNo : kExitUnknown;
}

int cmd_gen(const std::string& kind, int n, int vars, int clauses, uint64_t seed, bool perturb,
            const std::string& out_path) {
    std::ostringstream out;
    if (kind == "tree") {
        out << serialize_graph(gen_tree(n, seed));
    } else if (kind == "cubic") {
        out << serialize_graph(gen_cubic(n, seed));
    } else if (kind == "cnf3") {
        out << serialize_cnf(gen_cnf3(vars, clauses, seed));
    } else if (kind == "random-labelling") {
        out << serialize_labelling(gen_random_labelling(n, seed));
    } else if (kind == "chordal-clawfree") {
        Graph g = gen_chordal_clawfree(n, seed);
        if (perturb) {
            auto flipped = perturb_chordal_clawfree(g, seed ^ 0xabcdef12345ULL);
            if (!flipped) throw error(errc::generation_timeout, "no screened perturbation found");
            g = *flipped;
        }
        out << serialize_graph(g);
    } else {
        throw error(errc::malformed, "unknown generator kind '" + kind + "'");
    }
    write_out(out_path, out.str());
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognition and reconstruction for 2-intersection graphs of 3-uniform hypergraphs"};
    app.require_subcommand(1);

    // recognize
    auto* recognize_cmd = app.add_subcommand("recognize", "decide membership and construct a realization");
    std::vector<std::string> rec_paths;
    bool fallback_oracle = false;
    uint64_t budget = kDefaultOracleBudget;
    int oracle_cap = 12;
    unsigned jobs = 1;
    recognize_cmd->add_option("graphs", rec_paths, "graph file(s), '-' for stdin")->required();
    recognize_cmd->add_flag("--fallback-oracle", fallback_oracle, "run the exhaustive oracle on inapplicable inputs");
    recognize_cmd->add_option("--budget", budget, "search node budget for the fallback oracle");
    recognize_cmd->add_option("--oracle-cap", oracle_cap, "max n for the fallback oracle");
    recognize_cmd->add_option("--jobs", jobs, "parallel workers for multiple input files");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a labelling against a graph");
    std::vector<std::string> verify_paths;
    verify_cmd->add_option("files", verify_paths, "graph and labelling files, or one combined stream")
        ->expected(1, 2)
        ->required();

    // image
    auto* image_cmd = app.add_subcommand("image", "compute the l-intersection image of a labelling");
    std::string image_path, image_out;
    int image_l = 2;
    image_cmd->add_option("labelling", image_path, "labelling file, '-' for stdin")->required();
    image_cmd->add_option("-l,--level", image_l, "intersection size (default 2)");
    image_cmd->add_option("--out", image_out, "output path (default stdout)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for a realization");
    std::string oracle_path;
    uint64_t oracle_budget = kDefaultOracleBudget;
    bool oracle_enum = false;
    oracle_cmd->add_option("graph", oracle_path, "graph file, '-' for stdin")->required();
    oracle_cmd->add_option("--budget", oracle_budget, "search node budget");
    oracle_cmd->add_flag("--enumerate", oracle_enum, "enumerate all canonical realizations");

    // check
    auto* check_cmd = app.add_subcommand("check", "structural report: degrees, chordality, forbidden patterns");
    std::string check_path;
    check_cmd->add_option("graph", check_path, "graph file, '-' for stdin")->required();

    // tree
    auto* tree_cmd = app.add_subcommand("tree", "maximal clique tree dump for a chordal graph");
    std::string tree_path;
    std::optional<uint64_t> tree_seed;
    uint64_t tree_seed_value = 0;
    tree_cmd->add_option("graph", tree_path, "graph file, '-' for stdin")->required();
    auto* tree_seed_opt = tree_cmd->add_option("--seed", tree_seed_value, "randomize spanning-tree tie breaks");

    // reductions
    auto* sat_cmd = app.add_subcommand("reduce-sat2li", "3-SAT formula to a 2LI instance");
    std::string sat_path, sat_out;
    sat_cmd->add_option("cnf", sat_path, "DIMACS file, '-' for stdin")->required();
    sat_cmd->add_option("--out", sat_out, "output path (default stdout)");

    auto* claw_cmd = app.add_subcommand("reduce-li2claw", "2LI instance to a claw-free class-C graph");
    std::string claw_path, claw_out;
    claw_cmd->add_option("instance", claw_path, "2LI file, '-' for stdin")->required();
    claw_cmd->add_option("--out", claw_out, "output path (default stdout)");

    auto* ham_cmd = app.add_subcommand("reduce-ham", "cubic graph to a realized graph preserving Hamiltonicity");
    std::string ham_path, ham_out;
    ham_cmd->add_option("graph", ham_path, "cubic graph file, '-' for stdin")->required();
    ham_cmd->add_option("--out", ham_out, "output path (default stdout; graph plus labelling)");

    auto* solve_cmd = app.add_subcommand("solve-2li", "exact 2-labelling search");
    std::string solve_path;
    uint64_t solve_budget = kDefault2LIBudget;
    solve_cmd->add_option("instance", solve_path, "2LI file, '-' for stdin")->required();
    solve_cmd->add_option("--budget", solve_budget, "search node budget");

    auto* hamilton_cmd = app.add_subcommand("hamiltonian", "exact Hamiltonian cycle search");
    std::string hamilton_path;
    uint64_t hamilton_budget = kDefaultHamBudget;
    hamilton_cmd->add_option("graph", hamilton_path, "graph file, '-' for stdin")->required();
    hamilton_cmd->add_option("--budget", hamilton_budget, "search node budget");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
    std::string gen_kind, gen_out;
    int gen_n = 10, gen_vars = 5, gen_clauses = 4;
    uint64_t gen_seed = 0;
    bool gen_perturb = false;
    gen_cmd->add_option("kind", gen_kind, "tree | cubic | cnf3 | random-labelling | chordal-clawfree")->required();
    gen_cmd->add_option("--n", gen_n, "vertex count");
    gen_cmd->add_option("--vars", gen_vars, "variable count (cnf3)");
    gen_cmd->add_option("--clauses", gen_clauses, "clause count (cnf3)");
    gen_cmd->add_option("--seed", gen_seed, "random seed")->required();
    gen_cmd->add_flag("--perturb", gen_perturb, "flip an edge of a chordal-clawfree instance (screened)");
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*recognize_cmd) return cmd_recognize(rec_paths, fallback_oracle, budget, oracle_cap, jobs);
        if (*verify_cmd) return cmd_verify(verify_paths);
        if (*image_cmd) return cmd_image(image_path, image_l, image_out);
        if (*oracle_cmd) return cmd_oracle(oracle_path, oracle_budget, oracle_enum);
        if (*check_cmd) return cmd_check(check_path);
        if (*tree_cmd) {
            if (tree_seed_opt->count() > 0) tree_seed = tree_seed_value;
            return cmd_tree(tree_path, tree_seed);
        }
        if (*sat_cmd) {
            std::istringstream in(slurp(sat_path));
            write_out(sat_out, serialize_2li(build_2li(parse_cnf(in))));
            return kExitYes;
        }
        if (*claw_cmd) {
            std::istringstream in(slurp(claw_path));
            write_out(claw_out, serialize_graph(li_to_clawfree(parse_2li(in)).graph));
            return kExitYes;
        }
        if (*ham_cmd) {
            HamReductionResult red = ham_reduction(load_graph(ham_path));
            write_out(ham_out, serialize_graph(red.graph) + serialize_labelling(red.labelling));
            return kExitYes;
        }
        if (*solve_cmd) return cmd_solve_2li(solve_path, solve_budget);
        if (*hamilton_cmd) return cmd_hamiltonian(hamilton_path, hamilton_budget);
        if (*gen_cmd) return cmd_gen(gen_kind, gen_n, gen_vars, gen_clauses, gen_seed, gen_perturb, gen_out);
    } catch (const error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
