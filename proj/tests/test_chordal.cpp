#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ghrec/chordal.hpp"
#include "ghrec/patterns.hpp"
#include "test_util.hpp"

using namespace ghrec;
using namespace ghrec::test;

namespace {

// A hole witness must be an induced cycle of length >= 4.
void check_hole(const Graph& g, const std::vector<int>& hole) {
    REQUIRE(hole.size() >= 4);
    std::set<int> distinct(hole.begin(), hole.end());
    CHECK(distinct.size() == hole.size());
    for (size_t i = 0; i < hole.size(); ++i)
        for (size_t j = i + 1; j < hole.size(); ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == hole.size() - 1);
            CHECK(g.has_edge(hole[i], hole[j]) == consecutive);
        }
}

Graph butterfly() { return pattern_template(PatternName::butterfly).graph; }
Graph diamond() { return pattern_template(PatternName::diamond).graph; }
Graph sun3() { return pattern_template(PatternName::sun3).graph; }

} // namespace

TEST_CASE("mcs_peo recognizes chordal graphs") {
    EliminationOrder c4 = mcs_peo(cycle(4));
    CHECK(!c4.chordal);
    REQUIRE(c4.hole_witness.has_value());
    check_hole(cycle(4), *c4.hole_witness);

    EliminationOrder c6 = mcs_peo(cycle(6));
    CHECK(!c6.chordal);
    check_hole(cycle(6), *c6.hole_witness);

    CHECK(mcs_peo(path(6)).chordal);
    CHECK(mcs_peo(star(5)).chordal);
    CHECK(mcs_peo(complete(6)).chordal);
    CHECK(mcs_peo(k5_minus_e()).chordal);
    CHECK(mcs_peo(sun3()).chordal);
    CHECK(!mcs_peo(pattern_template(PatternName::w4).graph).chordal);
    CHECK(!mcs_peo(pattern_template(PatternName::prism).graph).chordal);
    CHECK_THROWS_AS(mcs_peo(make_graph(4, {{1, 2}, {3, 4}})), error);

    // chordality matches a brute-force hole scan on random graphs
    std::mt19937_64 rng(17);
    int rounds = 0;
    while (rounds < 40) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 6), 0.5, rng);
        if (!g.connected()) continue;
        ++rounds;
        EliminationOrder ord = mcs_peo(g);
        // reference: try every subset as a chordless cycle via DFS on
        // candidate 4+ subsets is overkill; instead verify the witness or
        // verify the elimination order directly
        if (ord.chordal) {
            std::vector<int> pos(static_cast<size_t>(g.vertex_count()) + 1, 0);
            for (size_t i = 0; i < ord.order.size(); ++i) pos[static_cast<size_t>(ord.order[i])] = static_cast<int>(i);
            for (int v : ord.order) {
                std::vector<int> later;
                for (int w : g.neighbors(v))
                    if (pos[static_cast<size_t>(w)] > pos[static_cast<size_t>(v)]) later.push_back(w);
                for (size_t i = 0; i < later.size(); ++i)
                    for (size_t j = i + 1; j < later.size(); ++j) CHECK(g.has_edge(later[i], later[j]));
            }
        } else {
            check_hole(g, *ord.hole_witness);
        }
    }
}

TEST_CASE("chordal_maximal_cliques") {
    auto k4 = chordal_maximal_cliques(complete(4), mcs_peo(complete(4)));
    CHECK(k4 == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    auto dia = chordal_maximal_cliques(diamond(), mcs_peo(diamond()));
    CHECK(dia == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}});

    auto sun = chordal_maximal_cliques(sun3(), mcs_peo(sun3()));
    CHECK(sun == std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 3, 6}});

    EliminationOrder bad = mcs_peo(cycle(5));
    CHECK_THROWS_AS(chordal_maximal_cliques(cycle(5), bad), error);

    // equality with the general-purpose enumerator on random chordal graphs
    std::mt19937_64 rng(23);
    int rounds = 0;
    while (rounds < 60) {
        Graph g = random_interval_graph(2 + static_cast<int>(rng() % 9), rng);
        if (!g.connected()) continue;
        EliminationOrder ord = mcs_peo(g);
        REQUIRE(ord.chordal);
        ++rounds;
        CHECK(chordal_maximal_cliques(g, ord) == maximal_cliques(g));
    }
}

TEST_CASE("build_clique_tree basics") {
    auto dia = build_clique_tree(diamond());
    REQUIRE(std::holds_alternative<CliqueTree>(dia));
    const auto& dt = std::get<CliqueTree>(dia);
    REQUIRE(dt.nodes.size() == 2);
    REQUIRE(dt.edges.size() == 1);
    CHECK(dt.edges[0].separator == std::vector<int>{2, 3});
    CHECK(dt.strong(dt.edges[0]));

    auto but = build_clique_tree(butterfly());
    REQUIRE(std::holds_alternative<CliqueTree>(but));
    const auto& bt = std::get<CliqueTree>(but);
    REQUIRE(bt.nodes.size() == 2);
    REQUIRE(bt.edges.size() == 1);
    CHECK(bt.edges[0].separator == std::vector<int>{1});
    CHECK(!bt.strong(bt.edges[0]));

    auto refused = build_clique_tree(k5_minus_e());
    REQUIRE(std::holds_alternative<SeparatorTooBig>(refused));
    const auto& sep = std::get<SeparatorTooBig>(refused);
    CHECK(sep.intersection == std::vector<int>{1, 2, 3});
    CHECK(sep.clique_a == std::vector<int>{1, 2, 3, 4});
    CHECK(sep.clique_b == std::vector<int>{1, 2, 3, 5});

    CHECK_THROWS_AS(build_clique_tree(cycle(5)), error);
}

TEST_CASE("clique tree structural invariants on random chordal graphs") {
    std::mt19937_64 rng(29);
    int rounds = 0;
    while (rounds < 60) {
        Graph g = random_interval_graph(3 + static_cast<int>(rng() % 8), rng);
        if (!g.connected()) continue;
        ++rounds;
        auto built = build_clique_tree(g);
        if (std::holds_alternative<SeparatorTooBig>(built)) {
            const auto& s = std::get<SeparatorTooBig>(built);
            CHECK(s.intersection.size() >= 3);
            continue;
        }
        const auto& t = std::get<CliqueTree>(built);
        CHECK(t.nodes == maximal_cliques(g));
        CHECK(t.edges.size() + 1 == t.nodes.size());
        for (const auto& e : t.edges) {
            std::vector<int> inter;
            std::set_intersection(t.nodes[static_cast<size_t>(e.a)].begin(), t.nodes[static_cast<size_t>(e.a)].end(),
                                  t.nodes[static_cast<size_t>(e.b)].begin(), t.nodes[static_cast<size_t>(e.b)].end(),
                                  std::back_inserter(inter));
            CHECK(e.separator == inter);
            // separators separate: removing the separator disconnects some
            // private vertex of a from some private vertex of b
            std::vector<int> keep;
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (!std::binary_search(e.separator.begin(), e.separator.end(), v)) keep.push_back(v);
            auto [rest, map] = induced_subgraph(g, keep);
            std::vector<int> priv_a, priv_b;
            for (size_t i = 0; i < map.size(); ++i) {
                int v = map[i];
                if (std::binary_search(t.nodes[static_cast<size_t>(e.a)].begin(),
                                       t.nodes[static_cast<size_t>(e.a)].end(), v))
                    priv_a.push_back(static_cast<int>(i) + 1);
                if (std::binary_search(t.nodes[static_cast<size_t>(e.b)].begin(),
                                       t.nodes[static_cast<size_t>(e.b)].end(), v))
                    priv_b.push_back(static_cast<int>(i) + 1);
            }
            if (priv_a.empty() || priv_b.empty()) continue;
            auto comps = rest.components();
            for (int a : priv_a)
                for (int b : priv_b)
                    for (const auto& comp : comps) {
                        bool has_a = std::binary_search(comp.begin(), comp.end(), a);
                        bool has_b = std::binary_search(comp.begin(), comp.end(), b);
                        CHECK(!(has_a && has_b));
                    }
        }
    }
}

TEST_CASE("randomized tie-breaks preserve the node set") {
    std::mt19937_64 rng(31);
    int rounds = 0;
    while (rounds < 20) {
        Graph g = random_interval_graph(4 + static_cast<int>(rng() % 7), rng);
        if (!g.connected()) continue;
        auto base = build_clique_tree(g);
        if (!std::holds_alternative<CliqueTree>(base)) continue;
        ++rounds;
        for (uint64_t seed = 1; seed <= 3; ++seed) {
            auto shuffled = build_clique_tree(g, seed);
            REQUIRE(std::holds_alternative<CliqueTree>(shuffled));
            CHECK(std::get<CliqueTree>(shuffled).nodes == std::get<CliqueTree>(base).nodes);
            CHECK(std::get<CliqueTree>(shuffled).edges.size() == std::get<CliqueTree>(base).edges.size());
        }
    }
}

TEST_CASE("clique tree dump format") {
    auto built = build_clique_tree(diamond());
    std::string dump = dump_clique_tree(std::get<CliqueTree>(built));
    CHECK(dump == "c 0 1 2 3\nc 1 2 3 4\nt 0 1 2 3\n");
}
