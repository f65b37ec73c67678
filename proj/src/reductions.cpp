#include "ghrec/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ghrec {

// ---------------------------------------------------------------- 3-SAT

Formula3CNF parse_cnf(std::istream& in) {
    std::string line;
    long long vars = -1, clause_count = -1;
    std::vector<std::array<int, 3>> clauses;
    std::vector<int> current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string first;
        ss >> first;
        if (first.empty()) continue;
        if (first == "p") {
            std::string kind;
            if (vars >= 0 || !(ss >> kind >> vars >> clause_count) || kind != "cnf" || vars < 0 || clause_count < 0)
                throw error(errc::malformed, "bad DIMACS header (line " + std::to_string(lineno) + ")");
            continue;
        }
        if (vars < 0) throw error(errc::malformed, "clause before header (line " + std::to_string(lineno) + ")");
        ss.clear();
        ss.seekg(0);
        long long lit;
        while (ss >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw error(errc::not_3sat, "clause of length " + std::to_string(current.size()) + " (line " +
                                                    std::to_string(lineno) + ")");
                std::array<int, 3> clause{current[0], current[1], current[2]};
                std::sort(clause.begin(), clause.end());
                if (clause[0] == clause[1] || clause[1] == clause[2])
                    throw error(errc::not_3sat, "repeated literal (line " + std::to_string(lineno) + ")");
                clauses.push_back(clause);
                current.clear();
            } else {
                if (std::abs(lit) > vars)
                    throw error(errc::malformed, "literal out of range (line " + std::to_string(lineno) + ")");
                if (current.size() >= 3)
                    throw error(errc::not_3sat, "clause longer than 3 (line " + std::to_string(lineno) + ")");
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!ss.eof()) throw error(errc::malformed, "bad token (line " + std::to_string(lineno) + ")");
    }
    if (vars < 0) throw error(errc::malformed, "missing DIMACS header");
    if (!current.empty()) throw error(errc::malformed, "unterminated clause");
    if (static_cast<long long>(clauses.size()) != clause_count)
        throw error(errc::malformed, "declared " + std::to_string(clause_count) + " clauses, found " +
                                         std::to_string(clauses.size()));
    Formula3CNF f;
    f.variable_count = static_cast<int>(vars);
    f.clauses = std::move(clauses);
    return f;
}

Formula3CNF parse_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::malformed, "cannot open '" + path + "'");
    return parse_cnf(in);
}

std::string serialize_cnf(const Formula3CNF& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

bool brute_force_sat(const Formula3CNF& f) {
    if (f.variable_count > 20) throw error(errc::size_limit, "brute_force_sat limited to 20 variables");
    uint64_t limit = 1ULL << f.variable_count;
    for (uint64_t assignment = 0; assignment < limit; ++assignment) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (int lit : c) {
                bool value = (assignment >> (std::abs(lit) - 1)) & 1;
                if (lit < 0 ? !value : value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// ---------------------------------------------------------------- 2LI

TLIInstance::TLIInstance(Graph g, std::vector<std::pair<int, int>> weak, std::vector<std::pair<int, int>> strong)
    : graph(std::move(g)), weak_edges(std::move(weak)), strong_edges(std::move(strong)) {
    for (auto& [u, v] : weak_edges)
        if (u > v) std::swap(u, v);
    for (auto& [u, v] : strong_edges)
        if (u > v) std::swap(u, v);
    std::sort(weak_edges.begin(), weak_edges.end());
    std::sort(strong_edges.begin(), strong_edges.end());
    std::vector<std::pair<int, int>> all;
    std::merge(weak_edges.begin(), weak_edges.end(), strong_edges.begin(), strong_edges.end(),
               std::back_inserter(all));
    if (all != graph.edges())
        throw error(errc::malformed, "weak and strong edges must partition the graph's edge set");
}

TLIInstance parse_2li(std::istream& in) {
    std::string line;
    long long n = -1, mw = -1, ms = -1;
    std::vector<std::pair<int, int>> weak, strong;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head.empty()) continue;
        if (head == "p") {
            std::string kind;
            if (n >= 0 || !(ss >> kind >> n >> mw >> ms) || kind != "2li" || n < 0 || mw < 0 || ms < 0)
                throw error(errc::malformed_line, "bad header" + where());
        } else if (head == "w" || head == "s") {
            if (n < 0) throw error(errc::malformed_line, "edge before header" + where());
            long long u, v;
            if (!(ss >> u >> v)) throw error(errc::malformed_line, "bad edge" + where());
            if (u == v) throw error(errc::self_loop, "edge " + std::to_string(u) + "-" + std::to_string(v) + where());
            if (u < 1 || u > n || v < 1 || v > n) throw error(errc::vertex_out_of_range, "edge" + where());
            (head == "w" ? weak : strong).emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw error(errc::malformed_line, "unrecognized line '" + line + "'" + where());
        }
    }
    if (n < 0) throw error(errc::malformed_line, "missing header");
    if (static_cast<long long>(weak.size()) != mw || static_cast<long long>(strong.size()) != ms)
        throw error(errc::count_mismatch, "edge counts do not match the header");
    std::vector<std::pair<int, int>> all = weak;
    all.insert(all.end(), strong.begin(), strong.end());
    Graph g(static_cast<int>(n), std::move(all));
    return TLIInstance(std::move(g), std::move(weak), std::move(strong));
}

TLIInstance parse_2li_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::malformed, "cannot open '" + path + "'");
    return parse_2li(in);
}

std::string serialize_2li(const TLIInstance& inst) {
    std::ostringstream out;
    out << "p 2li " << inst.graph.vertex_count() << ' ' << inst.weak_edges.size() << ' ' << inst.strong_edges.size()
        << '\n';
    for (auto [u, v] : inst.weak_edges) out << "w " << u << ' ' << v << '\n';
    for (auto [u, v] : inst.strong_edges) out << "s " << u << ' ' << v << '\n';
    return out.str();
}

namespace {

int pair_overlap(std::pair<int, int> a, std::pair<int, int> b) {
    return static_cast<int>(a.first == b.first) + static_cast<int>(a.first == b.second) +
           static_cast<int>(a.second == b.first) + static_cast<int>(a.second == b.second);
}

} // namespace

std::optional<std::string> check_2labelling(const TLIInstance& inst, const TwoLabelling& phi) {
    int n = inst.graph.vertex_count();
    if (static_cast<int>(phi.pairs.size()) != n) return "labelling size does not match the instance";
    for (int v = 0; v < n; ++v) {
        if (phi.pairs[static_cast<size_t>(v)].first >= phi.pairs[static_cast<size_t>(v)].second)
            return "pair of vertex " + std::to_string(v + 1) + " is not strictly increasing";
    }
    std::set<std::pair<int, int>> seen(phi.pairs.begin(), phi.pairs.end());
    if (seen.size() != phi.pairs.size()) return "two vertices share the same pair";
    for (auto [u, v] : inst.weak_edges)
        if (pair_overlap(phi.pairs[static_cast<size_t>(u - 1)], phi.pairs[static_cast<size_t>(v - 1)]) != 0)
            return "weak edge " + std::to_string(u) + "-" + std::to_string(v) + " has intersecting pairs";
    for (auto [u, v] : inst.strong_edges)
        if (pair_overlap(phi.pairs[static_cast<size_t>(u - 1)], phi.pairs[static_cast<size_t>(v - 1)]) != 1)
            return "strong edge " + std::to_string(u) + "-" + std::to_string(v) + " does not share one element";
    return std::nullopt;
}

namespace {

// Canonical pair search. Vertices are ordered statically to keep a decided
// strong neighbor nearby (strong edges prune hardest); elements follow
// first-use order so each solution is found exactly once up to renaming.
struct TwoLISearcher {
    const TLIInstance& inst;
    uint64_t budget;
    const std::function<bool(const TwoLabelling&)>& visit;

    int n;
    std::vector<int> order, depth_of;
    std::vector<std::vector<std::tuple<int, bool>>> decided; // per depth: (earlier depth, strong?)
    std::vector<std::pair<int, int>> assigned;               // by depth
    std::unordered_set<uint64_t> used_pairs;
    SearchStats stats;
    bool exhausted = false;
    bool stop = false;

    TwoLISearcher(const TLIInstance& instance, uint64_t budget_, const std::function<bool(const TwoLabelling&)>& v)
        : inst(instance), budget(budget_), visit(v), n(instance.graph.vertex_count()) {
        build_order();
        decided.resize(static_cast<size_t>(n));
        assigned.resize(static_cast<size_t>(n));
        std::set<std::pair<int, int>> strong_set(inst.strong_edges.begin(), inst.strong_edges.end());
        for (int d = 0; d < n; ++d) {
            int v_id = order[static_cast<size_t>(d)];
            for (int w : inst.graph.neighbors(v_id)) {
                int e = depth_of[static_cast<size_t>(w)];
                if (e < d) {
                    bool strong = strong_set.count({std::min(v_id, w), std::max(v_id, w)}) > 0;
                    decided[static_cast<size_t>(d)].emplace_back(e, strong);
                }
            }
        }
    }

    void build_order() {
        std::vector<int> strong_deg(static_cast<size_t>(n) + 1, 0);
        for (auto [u, v] : inst.strong_edges) {
            ++strong_deg[static_cast<size_t>(u)];
            ++strong_deg[static_cast<size_t>(v)];
        }
        std::vector<char> placed(static_cast<size_t>(n) + 1, 0);
        std::vector<int> placed_strong(static_cast<size_t>(n) + 1, 0), placed_any(static_cast<size_t>(n) + 1, 0);
        std::set<std::pair<int, int>> strong_set(inst.strong_edges.begin(), inst.strong_edges.end());
        depth_of.assign(static_cast<size_t>(n) + 1, -1);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            auto better = [&](int a, int b) {
                auto key = [&](int x) {
                    return std::make_tuple(placed_strong[static_cast<size_t>(x)], placed_any[static_cast<size_t>(x)],
                                           strong_deg[static_cast<size_t>(x)], inst.graph.degree(x), -x);
                };
                return key(a) > key(b);
            };
            for (int v = 1; v <= n; ++v)
                if (!placed[static_cast<size_t>(v)] && (best == -1 || better(v, best))) best = v;
            placed[static_cast<size_t>(best)] = 1;
            depth_of[static_cast<size_t>(best)] = step;
            order.push_back(best);
            for (int w : inst.graph.neighbors(best)) {
                if (placed[static_cast<size_t>(w)]) continue;
                ++placed_any[static_cast<size_t>(w)];
                if (strong_set.count({std::min(best, w), std::max(best, w)})) ++placed_strong[static_cast<size_t>(w)];
            }
        }
    }

    static uint64_t key(std::pair<int, int> p) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(p.first)) << 32) | static_cast<uint32_t>(p.second);
    }

    bool consistent(int depth, std::pair<int, int> cand) const {
        if (used_pairs.count(key(cand))) return false;
        for (auto [e, strong] : decided[static_cast<size_t>(depth)]) {
            int shared = pair_overlap(assigned[static_cast<size_t>(e)], cand);
            if (strong ? shared != 1 : shared != 0) return false;
        }
        return true;
    }

    void candidates_for(int depth, int used, std::vector<std::pair<int, int>>& out) const {
        out.clear();
        // With a decided strong neighbor, one element is pinned to its pair.
        int pinned_depth = -1;
        for (auto [e, strong] : decided[static_cast<size_t>(depth)])
            if (strong) {
                pinned_depth = e;
                break;
            }
        int new1 = used + 1;
        if (pinned_depth >= 0) {
            auto base = assigned[static_cast<size_t>(pinned_depth)];
            for (int x : {base.first, base.second}) {
                for (int y = 1; y <= std::min(new1, 2 * n); ++y) {
                    if (y == x || y == base.first || y == base.second) continue;
                    out.emplace_back(std::min(x, y), std::max(x, y));
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        } else {
            for (int a = 1; a <= std::min(used, 2 * n - 1); ++a)
                for (int b = a + 1; b <= std::min(new1, 2 * n); ++b) out.emplace_back(a, b);
            if (new1 + 1 <= 2 * n) out.emplace_back(new1, new1 + 1);
        }
    }

    void search(int depth, int used) {
        if (stop) return;
        if (depth == n) {
            TwoLabelling phi;
            phi.pairs.resize(static_cast<size_t>(n));
            for (int d = 0; d < n; ++d)
                phi.pairs[static_cast<size_t>(order[static_cast<size_t>(d)] - 1)] = assigned[static_cast<size_t>(d)];
            if (!visit(phi)) stop = true;
            return;
        }
        std::vector<std::pair<int, int>> cands;
        candidates_for(depth, used, cands);
        for (auto cand : cands) {
            if (!consistent(depth, cand)) continue;
            if (stats.nodes >= budget) {
                exhausted = true;
                stop = true;
                return;
            }
            ++stats.nodes;
            stats.max_depth = std::max(stats.max_depth, depth + 1);
            assigned[static_cast<size_t>(depth)] = cand;
            used_pairs.insert(key(cand));
            search(depth + 1, std::max(used, cand.second));
            used_pairs.erase(key(cand));
            if (stop) return;
        }
    }
};

} // namespace

bool for_each_2li_solution(const TLIInstance& inst, uint64_t budget,
                           const std::function<bool(const TwoLabelling&)>& visit) {
    if (inst.graph.vertex_count() == 0) {
        visit(TwoLabelling{});
        return true;
    }
    TwoLISearcher s(inst, budget, visit);
    s.search(0, 0);
    return !s.exhausted;
}

TwoLIOutcome solve_2li(const TLIInstance& inst, uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    TwoLIOutcome out{OracleStatus::proven_no, std::nullopt, {}};
    if (inst.graph.vertex_count() == 0) {
        out.status = OracleStatus::found;
        out.labelling = TwoLabelling{};
        return out;
    }
    std::optional<TwoLabelling> found;
    std::function<bool(const TwoLabelling&)> take_first = [&](const TwoLabelling& phi) {
        found = phi;
        return false;
    };
    TwoLISearcher s(inst, budget, take_first);
    s.search(0, 0);
    out.stats = s.stats;
    out.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (found) {
        out.status = OracleStatus::found;
        out.labelling = std::move(found);
    } else if (s.exhausted) {
        out.status = OracleStatus::budget_exhausted;
    }
    return out;
}

// ------------------------------------------------- 3-SAT -> 2LI gadgets

TLIInstance build_2li(const Formula3CNF& f) {
    int n = f.variable_count;
    int m = static_cast<int>(f.clauses.size());
    auto var_base = [&](int i) { return 3 + 3 * (i - 1); };          // variable i in 1..n
    auto clause_base = [&](int j) { return 3 + 3 * n + 5 * (j - 1); }; // clause j in 1..m
    int total = 3 + 3 * n + 5 * m;

    std::vector<std::pair<int, int>> weak, strong;
    // Truth gadget: apex 1, truth carriers 2 (T side) and 3 (F side).
    strong.emplace_back(1, 2);
    strong.emplace_back(1, 3);
    weak.emplace_back(2, 3);
    // Variable gadgets plus their ties to the truth gadget.
    for (int i = 1; i <= n; ++i) {
        int b = var_base(i);
        strong.emplace_back(b + 1, b + 2);
        strong.emplace_back(b + 1, b + 3);
        weak.emplace_back(b + 2, b + 3);
        strong.emplace_back(b + 2, 1);
        strong.emplace_back(b + 3, 1);
    }
    // All apexes pairwise weak.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) weak.emplace_back(var_base(i) + 1, var_base(j) + 1);
    // Clause gadgets, their ties to the truth gadget, and literal wiring.
    for (int j = 1; j <= m; ++j) {
        int b = clause_base(j);
        strong.emplace_back(b + 1, b + 4);
        strong.emplace_back(b + 2, b + 4);
        strong.emplace_back(b + 3, b + 5);
        strong.emplace_back(b + 4, b + 5);
        strong.emplace_back(b + 4, 1);
        strong.emplace_back(b + 5, 1);
        strong.emplace_back(b + 5, 2);
        for (int pos = 0; pos < 3; ++pos) {
            int lit = f.clauses[static_cast<size_t>(j - 1)][static_cast<size_t>(pos)];
            int x = std::abs(lit);
            int port = b + 1 + pos;
            weak.emplace_back(var_base(x) + 1, port);
            strong.emplace_back(lit < 0 ? var_base(x) + 3 : var_base(x) + 2, port);
        }
    }
    std::vector<std::pair<int, int>> all = weak;
    all.insert(all.end(), strong.begin(), strong.end());
    Graph g(total, std::move(all));
    return TLIInstance(std::move(g), std::move(weak), std::move(strong));
}

// --------------------------------------------- 2LI -> claw-free class C

ClassCGraph li_to_clawfree(const TLIInstance& inst) {
    int n = inst.graph.vertex_count();
    ClassCGraph cc;
    cc.component_begin_end.resize(static_cast<size_t>(n));
    int next = 1;
    for (int v = 1; v <= n; ++v) {
        int size = std::max(5, 2 * inst.graph.degree(v));
        cc.component_begin_end[static_cast<size_t>(v - 1)] = {next, next + size};
        next += size;
    }
    int total = next - 1;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v) {
        auto [begin, end] = cc.component_begin_end[static_cast<size_t>(v - 1)];
        for (int a = begin; a < end; ++a)
            for (int b = a + 1; b < end; ++b) edges.emplace_back(a, b);
    }
    // Links take fresh slots from the front of each component; each instance
    // edge consumes two per side, so the 2*deg sizing always suffices.
    std::vector<int> cursor(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) cursor[static_cast<size_t>(v)] = cc.component_begin_end[static_cast<size_t>(v - 1)].first;
    std::set<std::pair<int, int>> strong_set(inst.strong_edges.begin(), inst.strong_edges.end());
    for (auto [u, v] : inst.graph.edges()) {
        bool strong = strong_set.count({u, v}) > 0;
        int u1 = cursor[static_cast<size_t>(u)]++;
        int u2 = cursor[static_cast<size_t>(u)]++;
        int v1 = cursor[static_cast<size_t>(v)]++;
        int v2 = cursor[static_cast<size_t>(v)]++;
        if (strong) {
            // Two cross edges; with the clique edges u1-u2 and v1-v2 they
            // induce the 4-cycle u1-v1 ... v1-v2 ... v2-u2 ... u2-u1.
            edges.emplace_back(u1, v1);
            edges.emplace_back(u2, v2);
        } else {
            edges.emplace_back(u1, v1);
            edges.emplace_back(u1, v2);
            edges.emplace_back(u2, v1);
            edges.emplace_back(u2, v2);
        }
        cc.links.push_back(ClassCGraph::Link{{u, v}, strong, {u1, u2, v1, v2}});
    }
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    cc.graph = Graph(total, std::move(edges));
    return cc;
}

namespace {

// The label pattern of the constructive direction: every clique vertex gets
// its component's pair plus a third element. Strong links share two fresh
// extras across the link; weak links exchange the partner pair's elements.
std::vector<std::vector<int>> lift_labels(const TLIInstance& inst, const TwoLabelling& sol, const ClassCGraph& cc) {
    int n = inst.graph.vertex_count();
    std::vector<std::vector<int>> labels(static_cast<size_t>(cc.graph.vertex_count()));
    int fresh = 0;
    for (auto [a, b] : sol.pairs) fresh = std::max(fresh, b);
    ++fresh;
    auto put = [&](int vertex, int x, int y, int z) {
        std::vector<int> l{x, y, z};
        std::sort(l.begin(), l.end());
        labels[static_cast<size_t>(vertex - 1)] = std::move(l);
    };
    for (const auto& link : cc.links) {
        auto [u, v] = link.instance_edge;
        auto pu = sol.pairs[static_cast<size_t>(u - 1)];
        auto pv = sol.pairs[static_cast<size_t>(v - 1)];
        if (link.strong) {
            int a = fresh++, b = fresh++;
            put(link.slots[0], pu.first, pu.second, a);
            put(link.slots[1], pu.first, pu.second, b);
            put(link.slots[2], pv.first, pv.second, a);
            put(link.slots[3], pv.first, pv.second, b);
        } else {
            put(link.slots[0], pu.first, pu.second, pv.first);
            put(link.slots[1], pu.first, pu.second, pv.second);
            put(link.slots[2], pv.first, pv.second, pu.first);
            put(link.slots[3], pv.first, pv.second, pu.second);
        }
    }
    for (int v = 1; v <= n; ++v) {
        auto [begin, end] = cc.component_begin_end[static_cast<size_t>(v - 1)];
        auto p = sol.pairs[static_cast<size_t>(v - 1)];
        for (int x = begin; x < end; ++x)
            if (labels[static_cast<size_t>(x - 1)].empty()) put(x, p.first, p.second, fresh++);
    }
    return labels;
}

std::optional<Labelling> try_lift(const TLIInstance& inst, const TwoLabelling& sol, const ClassCGraph& cc) {
    try {
        Labelling lab(lift_labels(inst, sol, cc));
        if (verify_labelling(cc.graph, lab).ok) return lab;
    } catch (const error&) {
        // duplicate labels: the solution shares elements where the pattern
        // cannot tolerate it; treated exactly like a verification failure
    }
    return std::nullopt;
}

} // namespace

Labelling lift_2li_solution(const TLIInstance& inst, const TwoLabelling& sol, const ClassCGraph& cc,
                            uint64_t repair_budget) {
    if (auto msg = check_2labelling(inst, sol))
        throw error(errc::malformed, "2-labelling does not satisfy the instance: " + *msg);
    if (auto lab = try_lift(inst, sol, cc)) return *lab;
    // The pattern is forced, so a solution reusing elements across unrelated
    // pairs can be unliftable even though the instance is realizable. Fall
    // back to the canonical enumeration and lift the first compatible one.
    std::optional<Labelling> rescued;
    for_each_2li_solution(inst, repair_budget, [&](const TwoLabelling& phi) {
        if (auto lab = try_lift(inst, phi, cc)) {
            rescued = std::move(lab);
            return false;
        }
        return true;
    });
    if (rescued) return *rescued;
    throw error(errc::verification_failed, "no 2-labelling of this instance lifts to a realization");
}

// ------------------------------------------------- Hamiltonicity

HamReductionResult ham_reduction(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) != 3)
            throw error(errc::not_cubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    if (!g.connected()) throw error(errc::not_connected, "ham_reduction requires a connected graph");

    HamReductionResult out;
    out.origin.resize(static_cast<size_t>(3 * n));
    std::vector<std::vector<int>> labels(static_cast<size_t>(3 * n));
    std::vector<std::pair<int, int>> edges;
    auto slot = [&](int v, int nbr) {
        auto nbrs = g.neighbors(v);
        int idx = static_cast<int>(std::lower_bound(nbrs.begin(), nbrs.end(), nbr) - nbrs.begin());
        return 3 * (v - 1) + idx + 1;
    };
    for (int v = 1; v <= n; ++v) {
        auto nbrs = g.neighbors(v);
        for (int k = 0; k < 3; ++k) {
            int id = 3 * (v - 1) + k + 1;
            int u = nbrs[static_cast<size_t>(k)];
            out.origin[static_cast<size_t>(id - 1)] = {v, u};
            labels[static_cast<size_t>(id - 1)] = {2 * v - 1, 2 * v, 2 * u - 1};
            std::sort(labels[static_cast<size_t>(id - 1)].begin(), labels[static_cast<size_t>(id - 1)].end());
        }
        edges.emplace_back(3 * (v - 1) + 1, 3 * (v - 1) + 2);
        edges.emplace_back(3 * (v - 1) + 1, 3 * (v - 1) + 3);
        edges.emplace_back(3 * (v - 1) + 2, 3 * (v - 1) + 3);
    }
    for (auto [u, v] : g.edges()) {
        int a = slot(v, u), b = slot(u, v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    out.graph = Graph(3 * n, std::move(edges));
    out.labelling = Labelling(std::move(labels));
    return out;
}

namespace {

HamiltonianOutcome ham_dp(const Graph& g, uint64_t budget) {
    int n = g.vertex_count();
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u - 1)] |= 1u << (v - 1);
        adj[static_cast<size_t>(v - 1)] |= 1u << (u - 1);
    }
    size_t size = 1ULL << n;
    HamiltonianOutcome out{OracleStatus::proven_no, std::nullopt, {}};
    // reach[mask] = set of endpoints v of paths 1 -> v visiting exactly mask
    std::vector<uint32_t> reach(size, 0);
    reach[1] = 1; // path of length 0 at vertex 1
    for (uint32_t mask = 1; mask < size; ++mask) {
        if (!(mask & 1u) || reach[mask] == 0) continue;
        uint32_t ends = reach[mask];
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            uint32_t next = adj[static_cast<size_t>(v)] & ~mask;
            while (next) {
                int w = std::countr_zero(next);
                next &= next - 1;
                reach[mask | (1u << w)] |= 1u << w;
                ++out.stats.nodes;
            }
        }
        if (out.stats.nodes >= budget) {
            out.status = OracleStatus::budget_exhausted;
            return out;
        }
    }
    uint32_t full = static_cast<uint32_t>(size - 1);
    uint32_t closers = reach[full] & adj[0];
    if (closers == 0) return out;

    // Walk the cycle backwards through the reach table.
    std::vector<int> cycle;
    int v = std::countr_zero(closers);
    uint32_t mask = full;
    while (true) {
        cycle.push_back(v + 1);
        if (v == 0) break;
        uint32_t prev_mask = mask & ~(1u << v);
        uint32_t candidates = reach[prev_mask] & adj[static_cast<size_t>(v)];
        check_internal(candidates != 0, "broken reconstruction in hamiltonian dp");
        v = std::countr_zero(candidates);
        mask = prev_mask;
    }
    std::reverse(cycle.begin(), cycle.end());
    out.status = OracleStatus::found;
    out.cycle = std::move(cycle);
    return out;
}

struct HamBacktracker {
    const Graph& g;
    uint64_t budget;
    SearchStats stats;
    bool exhausted = false;
    std::vector<int> path;
    std::vector<char> visited;
    std::vector<int> unvisited_degree;
    std::optional<std::vector<int>> cycle;

    HamBacktracker(const Graph& graph, uint64_t budget_) : g(graph), budget(budget_) {
        visited.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
        unvisited_degree.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
        for (int v = 1; v <= g.vertex_count(); ++v) unvisited_degree[static_cast<size_t>(v)] = g.degree(v);
    }

    bool viable(int tip) const {
        // Every unvisited vertex still needs two incident path slots among
        // unvisited vertices, the tip and the start.
        for (int w = 1; w <= g.vertex_count(); ++w) {
            if (visited[static_cast<size_t>(w)]) continue;
            int options = unvisited_degree[static_cast<size_t>(w)];
            if (g.has_edge(w, tip)) ++options;
            if (g.has_edge(w, 1)) ++options;
            if (options < 2) return false;
        }
        return true;
    }

    bool extend(int v) {
        if (stats.nodes >= budget) {
            exhausted = true;
            return true;
        }
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, static_cast<int>(path.size()) + 1);
        visited[static_cast<size_t>(v)] = 1;
        path.push_back(v);
        for (int w : g.neighbors(v)) --unvisited_degree[static_cast<size_t>(w)];

        if (static_cast<int>(path.size()) == g.vertex_count()) {
            if (g.has_edge(v, 1)) {
                cycle = path;
                return true;
            }
        } else if (viable(v)) {
            for (int w : g.neighbors(v)) {
                if (!visited[static_cast<size_t>(w)] && extend(w)) return true;
            }
        }

        for (int w : g.neighbors(v)) ++unvisited_degree[static_cast<size_t>(w)];
        path.pop_back();
        visited[static_cast<size_t>(v)] = 0;
        return false;
    }
};

} // namespace

HamiltonianOutcome hamiltonian(const Graph& g, uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    HamiltonianOutcome out{OracleStatus::proven_no, std::nullopt, {}};
    int n = g.vertex_count();
    if (n < 3 || !g.connected()) {
        out.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    }
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) < 2) {
            out.stats.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return out;
        }
    }
    if (n <= 20) {
        out = ham_dp(g, budget);
    } else {
        HamBacktracker bt(g, budget);
        bt.extend(1);
        out.stats = bt.stats;
        if (bt.cycle) {
            out.status = OracleStatus::found;
            out.cycle = std::move(bt.cycle);
        } else if (bt.exhausted) {
            out.status = OracleStatus::budget_exhausted;
        }
    }
    out.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace ghrec
