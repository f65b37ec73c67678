#include "ghrec/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

namespace ghrec {

const char* to_string(errc code) {
    switch (code) {
        case errc::malformed_line: return "MALFORMED_LINE";
        case errc::vertex_out_of_range: return "VERTEX_OUT_OF_RANGE";
        case errc::duplicate_edge: return "DUPLICATE_EDGE";
        case errc::self_loop: return "SELF_LOOP";
        case errc::count_mismatch: return "COUNT_MISMATCH";
        case errc::size_limit: return "SIZE_LIMIT";
        case errc::not_connected: return "NOT_CONNECTED";
        case errc::bad_arity: return "BAD_ARITY";
        case errc::duplicate_element_in_label: return "DUPLICATE_ELEMENT_IN_LABEL";
        case errc::duplicate_label: return "DUPLICATE_LABEL";
        case errc::bad_l: return "BAD_L";
        case errc::vertex_mismatch: return "VERTEX_MISMATCH";
        case errc::not_chordal: return "NOT_CHORDAL";
        case errc::separator_too_big: return "SEPARATOR_TOO_BIG";
        case errc::not_a_realized_clique: return "NOT_A_REALIZED_CLIQUE";
        case errc::immediate_conflict: return "IMMEDIATE_CONFLICT";
        case errc::not_a_tree: return "NOT_A_TREE";
        case errc::not_cubic: return "NOT_CUBIC";
        case errc::not_3sat: return "NOT_3SAT";
        case errc::malformed: return "MALFORMED";
        case errc::verification_failed: return "VERIFICATION_FAILED";
        case errc::internal_construction_failure: return "INTERNAL_CONSTRUCTION_FAILURE";
        case errc::generation_timeout: return "GENERATION_TIMEOUT";
    }
    return "UNKNOWN";
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
    if (n_ < 0) throw error(errc::malformed, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw error(errc::self_loop, "edge " + std::to_string(u) + "-" + std::to_string(v));
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw error(errc::vertex_out_of_range,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " with n=" + std::to_string(n_));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw error(errc::duplicate_edge,
                        "edge " + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second));
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(n_) + 1, {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
    const auto& a = adj_[static_cast<size_t>(u)];
    const auto& b = adj_[static_cast<size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    std::vector<std::vector<int>> result;
    for (int s = 1; s <= n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : neighbors(v)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (size_t i = 0; i < vertices.size(); ++i) index[static_cast<size_t>(vertices[i])] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices) {
        for (int w : g.neighbors(v)) {
            if (w > v && index[static_cast<size_t>(w)] != 0)
                edges.emplace_back(index[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
        }
    }
    return {Graph(static_cast<int>(vertices.size()), std::move(edges)), vertices};
}

StructureReport classify_basic(const Graph& g) {
    StructureReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    if (g.vertex_count() > 0) {
        r.min_degree = g.degree(1);
        for (int v = 1; v <= g.vertex_count(); ++v) {
            r.max_degree = std::max(r.max_degree, g.degree(v));
            r.min_degree = std::min(r.min_degree, g.degree(v));
        }
    }
    r.connected = g.connected();
    r.is_tree = r.connected && r.edge_count == r.vertex_count - 1;
    return r;
}

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

bool parse_int(const std::string& s, long long& out) {
    try {
        size_t pos = 0;
        out = std::stoll(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (line.empty() || line[0] == '#') continue;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] == "p") {
            if (n >= 0) throw error(errc::malformed_line, "duplicate header" + where());
            long long nn, mm;
            if (tok.size() != 4 || tok[1] != "ghrec" || !parse_int(tok[2], nn) || !parse_int(tok[3], mm) || nn < 0 ||
                mm < 0)
                throw error(errc::malformed_line, "bad header '" + line + "'" + where());
            n = nn;
            m = mm;
        } else if (tok[0] == "e") {
            if (n < 0) throw error(errc::malformed_line, "edge before header" + where());
            long long u, v;
            if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v))
                throw error(errc::malformed_line, "bad edge line '" + line + "'" + where());
            if (u == v) throw error(errc::self_loop, "edge " + tok[1] + "-" + tok[2] + where());
            if (u < 1 || u > n || v < 1 || v > n)
                throw error(errc::vertex_out_of_range, "edge " + tok[1] + "-" + tok[2] + where());
            if (static_cast<long long>(edges.size()) >= m)
                throw error(errc::count_mismatch, "more than " + std::to_string(m) + " edges" + where());
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw error(errc::malformed_line, "unrecognized line '" + line + "'" + where());
        }
    }
    if (n < 0) throw error(errc::malformed_line, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw error(errc::count_mismatch,
                    "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::malformed, "cannot open '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p ghrec " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    if (!g.connected()) throw error(errc::not_connected, "bridges requires a connected graph");
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n) + 1, 0), low(static_cast<size_t>(n) + 1, 0),
        parent(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> result;
    if (n == 0) return result;
    int timer = 0;
    // Iterative lowpoint DFS.
    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> stack;
    disc[1] = low[1] = ++timer;
    stack.push_back({1, 0});
    while (!stack.empty()) {
        auto& fr = stack.back();
        auto nbrs = g.neighbors(fr.v);
        if (fr.next < nbrs.size()) {
            int w = nbrs[fr.next++];
            if (disc[static_cast<size_t>(w)] == 0) {
                parent[static_cast<size_t>(w)] = fr.v;
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = ++timer;
                stack.push_back({w, 0});
            } else if (w != parent[static_cast<size_t>(fr.v)]) {
                low[static_cast<size_t>(fr.v)] =
                    std::min(low[static_cast<size_t>(fr.v)], disc[static_cast<size_t>(w)]);
            }
        } else {
            stack.pop_back();
            int p = parent[static_cast<size_t>(fr.v)];
            if (p != 0) {
                low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(fr.v)]);
                if (low[static_cast<size_t>(fr.v)] > disc[static_cast<size_t>(p)])
                    result.emplace_back(std::min(p, fr.v), std::max(p, fr.v));
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

// Bron-Kerbosch with pivoting over <= 64 vertices packed in a bitmask.
void bron_kerbosch(const std::vector<uint64_t>& adj, uint64_t r, uint64_t p, uint64_t x,
                   std::vector<uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (uint64_t s = px; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        int cnt = std::popcount(p & adj[static_cast<size_t>(v)]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    uint64_t candidates = p & ~adj[static_cast<size_t>(pivot)];
    while (candidates) {
        int v = std::countr_zero(candidates);
        uint64_t bit = 1ULL << v;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | bit, p & adj[static_cast<size_t>(v)], x & adj[static_cast<size_t>(v)], out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int size_limit) {
    int n = g.vertex_count();
    if (n > size_limit || n > 64)
        throw error(errc::size_limit, "maximal_cliques limited to " + std::to_string(std::min(size_limit, 64)) +
                                          " vertices, got " + std::to_string(n));
    if (n == 0) return {};
    std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u - 1)] |= 1ULL << (v - 1);
        adj[static_cast<size_t>(v - 1)] |= 1ULL << (u - 1);
    }
    std::vector<uint64_t> masks;
    uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    bron_kerbosch(adj, 0, all, 0, masks);
    std::vector<std::vector<int>> result;
    result.reserve(masks.size());
    for (uint64_t mask : masks) {
        std::vector<int> clique;
        for (uint64_t s = mask; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            clique.push_back(v + 1);
        }
        result.push_back(std::move(clique));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<int> find_star_witness(const Graph& g, int leaves) {
    int n = g.vertex_count();
    std::vector<int> chosen;
    for (int c = 1; c <= n; ++c) {
        if (g.degree(c) < leaves) continue;
        auto nbrs = g.neighbors(c);
        chosen.clear();
        // Backtracking for `leaves` pairwise non-adjacent neighbors, tried in
        // ascending order so the first hit is the lexicographically least.
        std::vector<size_t> pos;
        size_t next = 0;
        while (true) {
            if (static_cast<int>(chosen.size()) == leaves) {
                std::vector<int> witness{c};
                witness.insert(witness.end(), chosen.begin(), chosen.end());
                return witness;
            }
            bool advanced = false;
            for (size_t i = next; i < nbrs.size(); ++i) {
                int cand = nbrs[i];
                bool ok = true;
                for (int u : chosen)
                    if (g.has_edge(u, cand)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    chosen.push_back(cand);
                    pos.push_back(i);
                    next = i + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                if (chosen.empty()) break;
                next = pos.back() + 1;
                chosen.pop_back();
                pos.pop_back();
            }
        }
    }
    return {};
}

} // namespace ghrec
