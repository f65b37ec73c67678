#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ghrec/oracle.hpp"
#include "ghrec/patterns.hpp"
#include "ghrec/sign.hpp"
#include "test_util.hpp"

using namespace ghrec;
using namespace ghrec::test;

namespace {

// Naive reference: backtracking over all 3-subsets of {1..3n}, no element
// canonicalization (the symmetry breaking under test). High-degree vertices
// go first so unrealizable stars refute quickly; a precomputed triple
// intersection matrix keeps full refutations affordable. Only for n <= 5.
bool naive_realizable(const Graph& g) {
    int n = g.vertex_count();
    int universe = 3 * n;
    static std::vector<std::array<int, 3>> triples;
    static std::vector<unsigned char> shared_matrix;
    static int cached_universe = 0;
    if (cached_universe < universe) {
        cached_universe = 15; // n <= 5
        triples.clear();
        for (int a = 1; a <= cached_universe; ++a)
            for (int b = a + 1; b <= cached_universe; ++b)
                for (int c = b + 1; c <= cached_universe; ++c) triples.push_back({a, b, c});
        size_t count = triples.size();
        shared_matrix.assign(count * count, 0);
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j) {
                int s = 0;
                for (int x : triples[i])
                    s += (x == triples[j][0]) + (x == triples[j][1]) + (x == triples[j][2]);
                shared_matrix[i * count + j] = static_cast<unsigned char>(s);
            }
    }
    size_t count = triples.size();
    // restrict to triples over {1..universe}
    std::vector<size_t> usable;
    for (size_t i = 0; i < count; ++i)
        if (triples[i][2] <= universe) usable.push_back(i);

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<size_t> chosen(static_cast<size_t>(n), 0);
    std::vector<char> adjacency(static_cast<size_t>(n * n), 0);
    for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e)
            adjacency[static_cast<size_t>(d * n + e)] =
                g.has_edge(order[static_cast<size_t>(d)], order[static_cast<size_t>(e)]);

    std::function<bool(int)> rec = [&](int d) {
        if (d == n) return true;
        for (size_t ti : usable) {
            bool ok = true;
            for (int e = 0; e < d; ++e) {
                int s = shared_matrix[chosen[static_cast<size_t>(e)] * count + ti];
                if (adjacency[static_cast<size_t>(d * n + e)] ? s != 2 : s >= 2) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[static_cast<size_t>(d)] = ti;
                if (rec(d + 1)) return true;
            }
        }
        return false;
    };
    return rec(0);
}

// First-use canonicalization of a labelling under the oracle's vertex order.
Labelling canonicalize(const Graph& g, const Labelling& lab) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::map<int, int> rename;
    int next = 1;
    for (int v : order)
        for (int e : lab.label(v))
            if (!rename.count(e)) rename[e] = next++;
    std::vector<std::vector<int>> out(static_cast<size_t>(g.vertex_count()));
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<int> l;
        for (int e : lab.label(v)) l.push_back(rename[e]);
        std::sort(l.begin(), l.end());
        out[static_cast<size_t>(v - 1)] = std::move(l);
    }
    return Labelling(std::move(out));
}

} // namespace

TEST_CASE("oracle on the forbidden fixtures") {
    OracleOutcome k5e = oracle_search(k5_minus_e());
    CHECK(k5e.status == OracleStatus::proven_no);

    OracleOutcome w5 = oracle_search(pattern_template(PatternName::w5).graph);
    CHECK(w5.status == OracleStatus::proven_no);

    OracleOutcome k14 = oracle_search(star(4));
    CHECK(k14.status == OracleStatus::proven_no);
}

TEST_CASE("oracle finds verified realizations") {
    for (const Graph& g : {complete(4), path(5), pattern_template(PatternName::diamond).graph,
                           pattern_template(PatternName::prism).graph, cycle(4), cycle(6)}) {
        OracleOutcome out = oracle_search(g);
        REQUIRE(out.status == OracleStatus::found);
        CHECK(verify_labelling(g, *out.labelling).ok);
    }
}

TEST_CASE("oracle budget exhaustion is reported") {
    OracleOutcome out = oracle_search(complete(6), 10);
    CHECK(out.status == OracleStatus::budget_exhausted);
    CHECK(out.stats.nodes == 10);
}

TEST_CASE("oracle agrees with the naive reference on all graphs with n <= 5") {
    // all edge subsets over 4 and 5 vertices
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
        int m = static_cast<int>(all_edges.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) edges.push_back(all_edges[static_cast<size_t>(i)]);
            Graph g(n, std::move(edges));
            bool fast = oracle_search(g).status == OracleStatus::found;
            bool slow = naive_realizable(g);
            CAPTURE(serialize_graph(g));
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("oracle enumeration covers canonical forms") {
    // triangle: exactly two sign types among all canonical realizations
    Graph triangle = complete(3);
    EnumerateOutcome all = oracle_enumerate(triangle);
    REQUIRE(all.complete);
    std::set<Sign> signs;
    for (const auto& lab : all.labellings) {
        REQUIRE(verify_labelling(triangle, lab).ok);
        signs.insert(clique_sign_of_labelling(lab, {1, 2, 3}));
    }
    CHECK(signs == std::set<Sign>{Sign::pos, Sign::neg});

    // K4 admits both a positive-type and a negative-type realization
    EnumerateOutcome k4 = oracle_enumerate(complete(4));
    REQUIRE(k4.complete);
    std::set<Sign> k4signs;
    for (const auto& lab : k4.labellings) k4signs.insert(clique_sign_of_labelling(lab, {1, 2, 3, 4}));
    CHECK(k4signs == std::set<Sign>{Sign::pos, Sign::neg});

    // canonicalizing any found realization lands inside the enumeration
    std::mt19937_64 rng(3);
    int rounds = 0;
    while (rounds < 20) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 3), 0.7, rng);
        OracleOutcome out = oracle_search(g);
        if (out.status != OracleStatus::found) continue;
        EnumerateOutcome en = oracle_enumerate(g, 2'000'000);
        if (!en.complete) continue; // sparse instances can have huge solution sets
        ++rounds;
        Labelling canon = canonicalize(g, *out.labelling);
        bool present = false;
        for (const auto& lab : en.labellings)
            if (lab.labels() == canon.labels()) present = true;
        CHECK(present);
    }
}

TEST_CASE("every enumerated labelling is canonical and verified") {
    std::mt19937_64 rng(9);
    int rounds = 0;
    while (rounds < 15) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 3), 0.7, rng);
        EnumerateOutcome en = oracle_enumerate(g, 2'000'000);
        if (!en.complete || en.labellings.empty()) continue;
        ++rounds;
        std::set<std::vector<std::vector<int>>> distinct;
        for (const auto& lab : en.labellings) {
            CHECK(verify_labelling(g, lab).ok);
            CHECK(canonicalize(g, lab).labels() == lab.labels());
            distinct.insert(lab.labels());
        }
        CHECK(distinct.size() == en.labellings.size());
    }
}
