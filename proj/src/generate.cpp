#include "ghrec/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "ghrec/chordal.hpp"

namespace ghrec {

Graph gen_tree(int n, uint64_t seed) {
    if (n < 1) throw error(errc::malformed, "tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) {
        int parent = static_cast<int>(rng() % static_cast<uint64_t>(v - 1)) + 1;
        edges.emplace_back(parent, v);
    }
    return Graph(n, std::move(edges));
}

Graph gen_cubic(int n, uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw error(errc::malformed, "cubic graphs need even n >= 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(3 * n));
        for (int v = 1; v <= n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> edge_set;
        bool ok = true;
        for (size_t i = 0; i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            auto e = std::minmax(u, v);
            if (!edge_set.insert({e.first, e.second}).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Graph g(n, {edge_set.begin(), edge_set.end()});
        if (g.connected()) return g;
    }
    throw error(errc::generation_timeout, "pairing model failed to produce a connected cubic graph");
}

Formula3CNF gen_cnf3(int variables, int clauses, uint64_t seed) {
    if (variables < 3) throw error(errc::malformed, "need at least 3 variables");
    std::mt19937_64 rng(seed);
    Formula3CNF f;
    f.variable_count = variables;
    for (int c = 0; c < clauses; ++c) {
        std::set<int> vars;
        while (static_cast<int>(vars.size()) < 3)
            vars.insert(static_cast<int>(rng() % static_cast<uint64_t>(variables)) + 1);
        std::array<int, 3> clause{};
        int k = 0;
        for (int v : vars) clause[static_cast<size_t>(k++)] = (rng() & 1) ? v : -v;
        std::sort(clause.begin(), clause.end());
        f.clauses.push_back(clause);
    }
    return f;
}

Labelling gen_random_labelling(int n, uint64_t seed) {
    if (n < 1) throw error(errc::malformed, "need at least one vertex");
    std::mt19937_64 rng(seed);
    int universe = std::max(5, n / 2 + 3);
    std::set<std::vector<int>> used;
    std::vector<std::vector<int>> labels;
    int guard = 0;
    while (static_cast<int>(labels.size()) < n) {
        if (++guard > 100000) throw error(errc::generation_timeout, "random labelling rejection bound hit");
        std::set<int> elems;
        while (static_cast<int>(elems.size()) < 3)
            elems.insert(static_cast<int>(rng() % static_cast<uint64_t>(universe)) + 1);
        std::vector<int> label(elems.begin(), elems.end());
        if (used.insert(label).second) labels.push_back(std::move(label));
    }
    return Labelling(std::move(labels));
}

namespace {

uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

// Random walk over clique-tree shapes, mirroring the recognizer's
// construction rules: positive cliques grow by pair+fresh labels, strong
// switches step into negative cliques through two members, weak switches
// start a butterfly at a member's free pair. Pair counts keep far-apart
// labels from intersecting in two elements, and no vertex ever serves more
// than two cliques (claw-freeness).
struct CliqueWalk {
    std::mt19937_64 rng;
    std::vector<std::vector<int>> labels;
    std::unordered_map<uint64_t, int> counts;
    int fresh = 1;
    int remaining = 0;

    std::vector<int> current;   // label indices of the current clique
    bool current_neg = false;
    std::vector<int> attachable; // members still free to join one more clique

    explicit CliqueWalk(uint64_t seed) : rng(seed) {}

    size_t pick(size_t bound) { return static_cast<size_t>(rng() % bound); }

    int place(std::vector<int> label) {
        std::sort(label.begin(), label.end());
        for (size_t i = 0; i < label.size(); ++i)
            for (size_t j = i + 1; j < label.size(); ++j) ++counts[pair_key(label[i], label[j])];
        fresh = std::max(fresh, label.back() + 1);
        labels.push_back(std::move(label));
        --remaining;
        return static_cast<int>(labels.size()) - 1;
    }

    int pair_count(int a, int b) const {
        auto it = counts.find(pair_key(a, b));
        return it == counts.end() ? 0 : it->second;
    }

    std::vector<int> shared_pair(int a, int b) const {
        std::vector<int> out;
        const auto& la = labels[static_cast<size_t>(a)];
        const auto& lb = labels[static_cast<size_t>(b)];
        std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(out));
        return out;
    }

    std::vector<std::pair<int, int>> free_pairs(int vertex) const {
        const auto& l = labels[static_cast<size_t>(vertex)];
        std::vector<std::pair<int, int>> out;
        for (size_t i = 0; i < l.size(); ++i)
            for (size_t j = i + 1; j < l.size(); ++j)
                if (pair_count(l[i], l[j]) == 1) out.emplace_back(l[i], l[j]);
        return out;
    }

    void take_attach(int v) {
        attachable.erase(std::remove(attachable.begin(), attachable.end(), v), attachable.end());
    }

    // Adds one vertex to the current positive clique.
    void grow() {
        auto pair = shared_pair(current[0], current[1]);
        check_internal(pair.size() == 2, "positive clique lost its common pair");
        int id = place({pair[0], pair[1], fresh});
        current.push_back(id);
        attachable.push_back(id);
    }

    // Two members of the current positive clique plus 1..2 new vertices form
    // a negative clique.
    void strong_to_negative() {
        size_t i = pick(attachable.size());
        size_t j = pick(attachable.size() - 1);
        if (j >= i) ++j;
        int a = attachable[i], b = attachable[j];
        take_attach(a);
        take_attach(b);
        auto shared = shared_pair(a, b);
        check_internal(shared.size() == 2, "strong switch needs a shared pair");
        std::vector<int> ea, eb;
        const auto& la = labels[static_cast<size_t>(a)];
        const auto& lb = labels[static_cast<size_t>(b)];
        std::set_difference(la.begin(), la.end(), shared.begin(), shared.end(), std::back_inserter(ea));
        std::set_difference(lb.begin(), lb.end(), shared.begin(), shared.end(), std::back_inserter(eb));
        int members = std::min((pick(2) == 0 && remaining >= 2) ? 2 : 1, remaining);
        std::vector<int> clique{a, b};
        std::vector<int> attach;
        int w1 = place({shared[0], ea[0], eb[0]});
        clique.push_back(w1);
        attach.push_back(w1);
        if (members == 2) {
            int w2 = place({shared[1], ea[0], eb[0]});
            clique.push_back(w2);
            attach.push_back(w2);
        }
        current = std::move(clique);
        current_neg = true;
        attachable = std::move(attach);
    }

    // Two free members of the current negative clique plus new vertices form
    // a positive clique on their shared pair.
    void strong_to_positive() {
        int a = attachable[0], b = attachable[1];
        take_attach(a);
        take_attach(b);
        auto shared = shared_pair(a, b);
        check_internal(shared.size() == 2 && pair_count(shared[0], shared[1]) == 2,
                       "negative clique hand-off pair is not private");
        int members = std::min(1 + static_cast<int>(pick(3)), remaining);
        std::vector<int> clique{a, b};
        std::vector<int> attach;
        for (int k = 0; k < members; ++k) {
            int id = place({shared[0], shared[1], fresh});
            clique.push_back(id);
            attach.push_back(id);
        }
        current = std::move(clique);
        current_neg = false;
        attachable = std::move(attach);
    }

    // One member hands off through a free pair of its label (the butterfly
    // step). The new clique is positive.
    void weak_to_positive() {
        size_t i = pick(attachable.size());
        int u = attachable[i];
        auto pairs = free_pairs(u);
        check_internal(!pairs.empty(), "attachable member without a free pair");
        take_attach(u);
        auto [x, y] = pairs[pick(pairs.size())];
        int members = std::min(2 + static_cast<int>(pick(3)), remaining);
        std::vector<int> clique{u};
        std::vector<int> attach;
        for (int k = 0; k < members; ++k) {
            int id = place({x, y, fresh});
            clique.push_back(id);
            attach.push_back(id);
        }
        current = std::move(clique);
        current_neg = false;
        attachable = std::move(attach);
    }
};

bool screens_pass(const Graph& g) {
    if (!g.connected()) return false;
    if (!find_star_witness(g, 3).empty()) return false;
    return mcs_peo(g).chordal;
}

} // namespace

Labelling gen_chordal_clawfree_labelling(int n, uint64_t seed) {
    if (n < 1) throw error(errc::malformed, "need at least one vertex");
    CliqueWalk walk(seed);
    walk.remaining = n;
    if (n <= 2) {
        walk.place({1, 2, 3});
        if (walk.remaining > 0) walk.place({1, 2, 4});
        return Labelling(std::move(walk.labels));
    }

    int root_size = std::min(3 + static_cast<int>(walk.pick(3)), walk.remaining);
    for (int i = 0; i < root_size; ++i) walk.current.push_back(walk.place({1, 2, 3 + i}));
    walk.attachable = walk.current;

    while (walk.remaining > 0) {
        if (walk.current_neg) {
            if (walk.attachable.size() >= 2)
                walk.strong_to_positive();
            else
                walk.weak_to_positive();
            continue;
        }
        int roll = static_cast<int>(walk.pick(100));
        if (roll < 45 || walk.attachable.empty()) {
            walk.grow();
        } else if (roll < 70 && walk.attachable.size() >= 2 && walk.remaining >= 1) {
            walk.strong_to_negative();
        } else {
            walk.weak_to_positive();
        }
    }
    return Labelling(std::move(walk.labels));
}

Graph gen_chordal_clawfree(int n, uint64_t seed) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Labelling lab =
            gen_chordal_clawfree_labelling(n, seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(attempt));
        Graph g = image(lab, 2);
        if (screens_pass(g)) return g;
    }
    throw error(errc::generation_timeout, "clique walk kept failing the structural screens");
}

std::optional<Graph> perturb_chordal_clawfree(const Graph& g, uint64_t seed, int tries) {
    std::mt19937_64 rng(seed);
    int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    for (int attempt = 0; attempt < tries; ++attempt) {
        auto edges = g.edges();
        bool remove = !edges.empty() && (rng() & 1);
        if (remove) {
            size_t k = static_cast<size_t>(rng() % edges.size());
            edges.erase(edges.begin() + static_cast<long>(k));
        } else {
            int u = static_cast<int>(rng() % static_cast<uint64_t>(n)) + 1;
            int v = static_cast<int>(rng() % static_cast<uint64_t>(n)) + 1;
            if (u == v || g.has_edge(u, v)) continue;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        Graph candidate(n, std::move(edges));
        if (screens_pass(candidate)) return candidate;
    }
    return std::nullopt;
}

} // namespace ghrec
