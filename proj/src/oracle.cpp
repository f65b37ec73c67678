#include "ghrec/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>

namespace ghrec {

const char* to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::found: return "FOUND";
        case OracleStatus::proven_no: return "PROVEN_NO";
        case OracleStatus::budget_exhausted: return "BUDGET_EXHAUSTED";
    }
    return "UNKNOWN";
}

namespace {

using Label3 = std::array<int, 3>;

int isect3(const Label3& a, const Label3& b) {
    int count = 0;
    for (int x : a)
        count += (x == b[0]) | (x == b[1]) | (x == b[2]);
    return count;
}

struct Searcher {
    const Graph& g;
    uint64_t budget;
    bool enumerate_all;

    std::vector<int> order;           // assignment order (vertex ids)
    std::vector<int> vertex_depth;    // vertex id -> depth in `order`
    std::vector<Label3> assigned;     // by depth
    std::vector<std::vector<std::pair<int, bool>>> decided; // per depth: (earlier depth, adjacent)
    SearchStats stats;
    bool exhausted = false;
    std::vector<Labelling> found;

    explicit Searcher(const Graph& graph, uint64_t budget_, bool all)
        : g(graph), budget(budget_), enumerate_all(all) {
        int n = g.vertex_count();
        order.resize(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        vertex_depth.assign(static_cast<size_t>(n) + 1, -1);
        for (int d = 0; d < n; ++d) vertex_depth[static_cast<size_t>(order[static_cast<size_t>(d)])] = d;
        assigned.resize(static_cast<size_t>(n));
        decided.resize(static_cast<size_t>(n));
        for (int d = 0; d < n; ++d) {
            int v = order[static_cast<size_t>(d)];
            std::vector<char> adjacent(static_cast<size_t>(n) + 1, 0);
            for (int w : g.neighbors(v)) adjacent[static_cast<size_t>(w)] = 1;
            for (int e = 0; e < d; ++e) {
                int u = order[static_cast<size_t>(e)];
                decided[static_cast<size_t>(d)].emplace_back(e, adjacent[static_cast<size_t>(u)] != 0);
            }
        }
    }

    bool consistent(int depth, const Label3& cand) const {
        for (auto [e, adjacent] : decided[static_cast<size_t>(depth)]) {
            int shared = isect3(assigned[static_cast<size_t>(e)], cand);
            if (adjacent ? shared != 2 : shared >= 2) return false;
        }
        return true;
    }

    // Returns true when the search below `depth` found a solution and the
    // caller should stop (single-solution mode only).
    bool search(int depth, int used) {
        if (depth == g.vertex_count()) {
            record_solution();
            return !enumerate_all;
        }
        // Candidate 3-sets in ascending lexicographic order: elements are
        // either already used or the next unused ones in first-use order
        // (new elements always sort above old ones).
        int limit = std::min(used + 3, 3 * std::max(g.vertex_count(), 1));
        Label3 cand;
        for (int a = 1; a <= limit - 2; ++a) {
            if (a > used && a != used + 1) break;
            for (int b = a + 1; b <= limit - 1; ++b) {
                if (b > used && b != used + 1 && b != a + 1) break;
                for (int c = b + 1; c <= limit; ++c) {
                    if (c > used && c != used + 1 && c != b + 1) break;
                    cand = {a, b, c};
                    if (!consistent(depth, cand)) continue;
                    if (stats.nodes >= budget) {
                        exhausted = true;
                        return true;
                    }
                    ++stats.nodes;
                    stats.max_depth = std::max(stats.max_depth, depth + 1);
                    assigned[static_cast<size_t>(depth)] = cand;
                    if (search(depth + 1, std::max(used, c))) return true;
                }
            }
        }
        return false;
    }

    void record_solution() {
        std::vector<std::vector<int>> labels(static_cast<size_t>(g.vertex_count()));
        for (int v = 1; v <= g.vertex_count(); ++v) {
            const Label3& l = assigned[static_cast<size_t>(vertex_depth[static_cast<size_t>(v)])];
            labels[static_cast<size_t>(v - 1)] = {l[0], l[1], l[2]};
        }
        found.emplace_back(std::move(labels));
    }
};

} // namespace

OracleOutcome oracle_search(const Graph& g, uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    if (g.vertex_count() == 0)
        return {OracleStatus::found, Labelling(), SearchStats{}};
    Searcher s(g, budget, false);
    s.search(0, 0);
    s.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!s.found.empty()) return {OracleStatus::found, std::move(s.found.front()), s.stats};
    if (s.exhausted) return {OracleStatus::budget_exhausted, std::nullopt, s.stats};
    return {OracleStatus::proven_no, std::nullopt, s.stats};
}

EnumerateOutcome oracle_enumerate(const Graph& g, uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    if (g.vertex_count() == 0) return {true, {Labelling()}, SearchStats{}};
    Searcher s(g, budget, true);
    s.search(0, 0);
    s.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {!s.exhausted, std::move(s.found), s.stats};
}

} // namespace ghrec
