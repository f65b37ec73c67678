#include "ghrec/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ghrec {

namespace {

// MCS visit order: repeatedly take an unvisited vertex with the most visited
// neighbors, smallest id on ties. Bucket queue, O(n + m) amortized.
std::vector<int> mcs_visit_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n) + 1, 0);
    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    std::vector<std::deque<int>> buckets(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) buckets[0].push_back(v);
    int top = 0;
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        while (top > 0 && buckets[static_cast<size_t>(top)].empty()) --top;
        int v = -1;
        auto& bucket = buckets[static_cast<size_t>(top)];
        while (!bucket.empty()) {
            int cand = bucket.front();
            bucket.pop_front();
            if (!visited[static_cast<size_t>(cand)] && weight[static_cast<size_t>(cand)] == top) {
                v = cand;
                break;
            }
        }
        if (v == -1) {
            --step;
            continue;
        }
        visited[static_cast<size_t>(v)] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (!visited[static_cast<size_t>(w)]) {
                int nw = ++weight[static_cast<size_t>(w)];
                buckets[static_cast<size_t>(nw)].push_back(w);
                top = std::max(top, nw);
            }
        }
    }
    return order;
}

// Exhaustive fallback: scan every vertex c and non-adjacent neighbor pair for
// a cycle avoiding N[c]. Only reached when the MCS-guided extraction fails.
std::vector<int> find_hole_anywhere(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 1; c <= n; ++c) {
        auto nbrs = g.neighbors(c);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                int a = nbrs[i], b = nbrs[j];
                if (g.has_edge(a, b)) continue;
                std::vector<char> blocked(static_cast<size_t>(n) + 1, 0);
                blocked[static_cast<size_t>(c)] = 1;
                for (int x : g.neighbors(c)) blocked[static_cast<size_t>(x)] = 1;
                blocked[static_cast<size_t>(a)] = 0;
                blocked[static_cast<size_t>(b)] = 0;
                std::vector<int> prev(static_cast<size_t>(n) + 1, 0);
                std::deque<int> queue{a};
                prev[static_cast<size_t>(a)] = a;
                while (!queue.empty()) {
                    int x = queue.front();
                    queue.pop_front();
                    for (int y : g.neighbors(x)) {
                        if (!blocked[static_cast<size_t>(y)] && prev[static_cast<size_t>(y)] == 0) {
                            prev[static_cast<size_t>(y)] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if (prev[static_cast<size_t>(b)] != 0) {
                    std::vector<int> path;
                    for (int x = b; x != a; x = prev[static_cast<size_t>(x)]) path.push_back(x);
                    path.push_back(a);
                    path.push_back(c);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
            }
        }
    }
    return {};
}

std::vector<int> extract_hole(const Graph& g, int v, int u, int w) {
    // u and w are non-adjacent neighbors of v. A shortest u-w path avoiding
    // N[v] \ {u, w} closes a chordless cycle through v.
    int n = g.vertex_count();
    std::vector<char> blocked(static_cast<size_t>(n) + 1, 0);
    blocked[static_cast<size_t>(v)] = 1;
    for (int x : g.neighbors(v)) blocked[static_cast<size_t>(x)] = 1;
    blocked[static_cast<size_t>(u)] = 0;
    blocked[static_cast<size_t>(w)] = 0;
    std::vector<int> prev(static_cast<size_t>(n) + 1, 0);
    std::deque<int> queue{u};
    prev[static_cast<size_t>(u)] = u;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == w) break;
        for (int y : g.neighbors(x)) {
            if (!blocked[static_cast<size_t>(y)] && prev[static_cast<size_t>(y)] == 0) {
                prev[static_cast<size_t>(y)] = x;
                queue.push_back(y);
            }
        }
    }
    if (prev[static_cast<size_t>(w)] != 0) {
        std::vector<int> path;
        for (int x = w; x != u; x = prev[static_cast<size_t>(x)]) path.push_back(x);
        path.push_back(u);
        path.push_back(v);
        // cycle: v - u - ... - w - v
        std::reverse(path.begin(), path.end());
        return path;
    }
    return find_hole_anywhere(g);
}

} // namespace

EliminationOrder mcs_peo(const Graph& g) {
    if (!g.connected()) throw error(errc::not_connected, "mcs_peo requires a connected graph");
    int n = g.vertex_count();
    EliminationOrder result;
    if (n == 0) {
        result.chordal = true;
        return result;
    }

    std::vector<int> visit = mcs_visit_order(g);

    // Elimination order is the reverse of the visit order.
    result.order.assign(visit.rbegin(), visit.rend());

    std::vector<int> pos(static_cast<size_t>(n) + 1, 0); // elimination position, 1-based
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(result.order[static_cast<size_t>(i)])] = i + 1;

    // Standard PEO check: for each v, the later neighbors minus the parent
    // must all be adjacent to the parent (the earliest-eliminated later
    // neighbor).
    std::vector<char> mark(static_cast<size_t>(n) + 1, 0);
    for (int v : result.order) {
        int parent = 0;
        int best = n + 1;
        for (int w : g.neighbors(v)) {
            if (pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(v)] && pos[static_cast<size_t>(w)] < best) {
                best = pos[static_cast<size_t>(w)];
                parent = w;
            }
        }
        if (parent == 0) continue;
        for (int w : g.neighbors(parent)) mark[static_cast<size_t>(w)] = 1;
        int bad = 0;
        for (int w : g.neighbors(v)) {
            if (w != parent && pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(v)] &&
                !mark[static_cast<size_t>(w)]) {
                bad = w;
                break;
            }
        }
        for (int w : g.neighbors(parent)) mark[static_cast<size_t>(w)] = 0;
        if (bad != 0) {
            result.chordal = false;
            result.hole_witness = extract_hole(g, v, parent, bad);
            return result;
        }
    }
    result.chordal = true;
    return result;
}

std::vector<std::vector<int>> chordal_maximal_cliques(const Graph& g, const EliminationOrder& ord) {
    if (!ord.chordal) throw error(errc::not_chordal, "chordal_maximal_cliques needs a chordal graph");
    int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(ord.order[static_cast<size_t>(i)])] = i + 1;

    // Visit order = reverse elimination order. The candidate clique of x_j is
    // {x_j} ∪ (earlier-visited neighbors); it is subsumed exactly when the
    // next visited vertex extends it (its weight grows by one).
    std::vector<int> visit(ord.order.rbegin(), ord.order.rend());
    std::vector<std::vector<int>> cliques;
    for (int j = 0; j < n; ++j) {
        int v = visit[static_cast<size_t>(j)];
        int wj = 0;
        for (int w : g.neighbors(v))
            if (pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(v)]) ++wj;
        bool subsumed = false;
        if (j + 1 < n) {
            int next = visit[static_cast<size_t>(j) + 1];
            int wnext = 0;
            for (int w : g.neighbors(next))
                if (pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(next)]) ++wnext;
            subsumed = (wnext == wj + 1);
        }
        if (!subsumed) {
            std::vector<int> clique{v};
            for (int w : g.neighbors(v))
                if (pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(v)]) clique.push_back(w);
            std::sort(clique.begin(), clique.end());
            cliques.push_back(std::move(clique));
        }
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

} // namespace

CliqueTreeResult build_clique_tree(const Graph& g, std::optional<uint64_t> tie_seed) {
    EliminationOrder ord = mcs_peo(g);
    if (!ord.chordal) throw error(errc::not_chordal, "build_clique_tree needs a chordal graph");
    CliqueTree tree;
    tree.nodes = chordal_maximal_cliques(g, ord);
    int count = static_cast<int>(tree.nodes.size());
    if (count <= 1) {
        return tree;
    }

    // Candidate tree edges: clique pairs sharing at least one vertex,
    // gathered through per-vertex incidence lists.
    std::vector<std::vector<int>> incident(static_cast<size_t>(g.vertex_count()) + 1);
    for (int id = 0; id < count; ++id)
        for (int v : tree.nodes[static_cast<size_t>(id)]) incident[static_cast<size_t>(v)].push_back(id);
    std::unordered_set<uint64_t> seen;
    struct Candidate {
        int weight;
        int a, b;
    };
    std::vector<Candidate> candidates;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto& ids = incident[static_cast<size_t>(v)];
        for (size_t i = 0; i < ids.size(); ++i) {
            for (size_t j = i + 1; j < ids.size(); ++j) {
                int a = std::min(ids[i], ids[j]), b = std::max(ids[i], ids[j]);
                uint64_t key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
                if (!seen.insert(key).second) continue;
                auto inter = sorted_intersection(tree.nodes[static_cast<size_t>(a)], tree.nodes[static_cast<size_t>(b)]);
                candidates.push_back({static_cast<int>(inter.size()), a, b});
            }
        }
    }

    // Any >= 3 intersection certifies non-membership; report the least pair.
    const Candidate* worst = nullptr;
    for (const auto& c : candidates) {
        if (c.weight >= 3 && (!worst || std::make_pair(c.a, c.b) < std::make_pair(worst->a, worst->b)))
            worst = &c;
    }
    if (worst) {
        return SeparatorTooBig{tree.nodes[static_cast<size_t>(worst->a)], tree.nodes[static_cast<size_t>(worst->b)],
                               sorted_intersection(tree.nodes[static_cast<size_t>(worst->a)],
                                                   tree.nodes[static_cast<size_t>(worst->b)])};
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        return std::make_tuple(-x.weight, x.a, x.b) < std::make_tuple(-y.weight, y.a, y.b);
    });
    if (tie_seed) {
        std::mt19937_64 rng(*tie_seed);
        size_t i = 0;
        while (i < candidates.size()) {
            size_t j = i;
            while (j < candidates.size() && candidates[j].weight == candidates[i].weight) ++j;
            std::shuffle(candidates.begin() + static_cast<long>(i), candidates.begin() + static_cast<long>(j), rng);
            i = j;
        }
    }

    UnionFind uf(count);
    for (const auto& c : candidates) {
        if (uf.unite(c.a, c.b)) {
            CliqueTree::Edge e;
            e.a = c.a;
            e.b = c.b;
            e.separator =
                sorted_intersection(tree.nodes[static_cast<size_t>(c.a)], tree.nodes[static_cast<size_t>(c.b)]);
            tree.edges.push_back(std::move(e));
        }
    }
    check_internal(static_cast<int>(tree.edges.size()) == count - 1,
                   "clique intersection graph of a connected chordal graph must be connected");

    // Induced-subtree property: for every vertex, the cliques containing it
    // must form a connected subtree; with separators equal to endpoint
    // intersections this reduces to an edge count per vertex.
    std::vector<int> edge_count(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (const auto& e : tree.edges)
        for (int v : e.separator) ++edge_count[static_cast<size_t>(v)];
    for (int v = 1; v <= g.vertex_count(); ++v) {
        check_internal(edge_count[static_cast<size_t>(v)] ==
                           static_cast<int>(incident[static_cast<size_t>(v)].size()) - 1 ||
                           incident[static_cast<size_t>(v)].empty(),
                       "clique tree violates the induced-subtree property");
    }
    std::sort(tree.edges.begin(), tree.edges.end(), [](const CliqueTree::Edge& x, const CliqueTree::Edge& y) {
        return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
    });
    return tree;
}

std::string dump_clique_tree(const CliqueTree& t) {
    std::ostringstream out;
    for (size_t id = 0; id < t.nodes.size(); ++id) {
        out << "c " << id;
        for (int v : t.nodes[id]) out << ' ' << v;
        out << '\n';
    }
    for (const auto& e : t.edges) {
        out << "t " << e.a << ' ' << e.b;
        for (int v : e.separator) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace ghrec
