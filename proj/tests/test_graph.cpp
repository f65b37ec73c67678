#include <algorithm>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "ghrec/graph.hpp"
#include "ghrec/patterns.hpp"
#include "test_util.hpp"

using namespace ghrec;
using namespace ghrec::test;

namespace {

Graph parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

errc parse_error_code(const std::string& text) {
    try {
        parse_text(text);
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return errc::malformed;
}

// Reference matcher: does any size-|template| subset of g induce a copy?
bool brute_force_has_pattern(const Graph& g, PatternName p) {
    const auto& tpl = pattern_template(p);
    int tn = tpl.graph.vertex_count();
    int n = g.vertex_count();
    if (n < tn) return false;
    std::vector<int> subset;
    std::vector<int> perm(static_cast<size_t>(tn));

    // test all injections template -> subset by permutation backtracking
    auto matches = [&]() {
        std::vector<char> used(static_cast<size_t>(tn), 0);
        struct Frame {
            int t;
            int k;
        };
        std::vector<Frame> stack{{1, 0}};
        while (!stack.empty()) {
            auto& fr = stack.back();
            if (fr.t > tn) return true;
            bool advanced = false;
            for (int k = fr.k; k < tn; ++k) {
                if (used[static_cast<size_t>(k)]) continue;
                int host = subset[static_cast<size_t>(k)];
                bool ok = true;
                for (int prev = 1; prev < fr.t; ++prev) {
                    bool want = tpl.graph.has_edge(prev, fr.t);
                    bool have = g.has_edge(perm[static_cast<size_t>(prev - 1)], host);
                    if (want != have) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    perm[static_cast<size_t>(fr.t - 1)] = host;
                    used[static_cast<size_t>(k)] = 1;
                    fr.k = k + 1;
                    stack.push_back({fr.t + 1, 0});
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                stack.pop_back();
                if (!stack.empty()) {
                    auto& parent = stack.back();
                    int k = parent.k - 1;
                    used[static_cast<size_t>(k)] = 0;
                }
            }
        }
        return false;
    };

    std::vector<int> choice(static_cast<size_t>(tn));
    // enumerate subsets via combinations
    std::function<bool(int, int)> rec = [&](int start, int picked) {
        if (picked == tn) {
            subset = choice;
            return matches();
        }
        for (int v = start; v <= n - (tn - picked - 1); ++v) {
            choice[static_cast<size_t>(picked)] = v;
            if (rec(v + 1, picked + 1)) return true;
        }
        return false;
    };
    return rec(1, 0);
}

} // namespace

TEST_CASE("graph parsing basics") {
    Graph k2 = parse_text("p ghrec 2 1\ne 1 2\n");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(1, 2));

    Graph k5e = parse_text("p ghrec 5 9\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\n");
    CHECK(k5e.vertex_count() == 5);
    CHECK(k5e.edge_count() == 9);
    CHECK(!k5e.has_edge(4, 5));
    CHECK(k5e.edges() == k5_minus_e().edges());

    CHECK(parse_error_code("p ghrec 2 1\ne 1 1\n") == errc::self_loop);
    CHECK(parse_error_code("p ghrec 2 1\ne 1 3\n") == errc::vertex_out_of_range);
    CHECK(parse_error_code("p ghrec 2 2\ne 1 2\ne 2 1\n") == errc::duplicate_edge);
    CHECK(parse_error_code("p ghrec 2 2\ne 1 2\n") == errc::count_mismatch);
    CHECK(parse_error_code("p ghrec 2 0\ne 1 2\n") == errc::count_mismatch);
    CHECK(parse_error_code("e 1 2\n") == errc::malformed_line);
    CHECK(parse_error_code("p ghrec 2 1\nx 1 2\n") == errc::malformed_line);
    CHECK(parse_error_code("") == errc::malformed_line);
}

TEST_CASE("graph serialization is canonical and round-trips") {
    CHECK(serialize_graph(parse_text("p ghrec 2 1\ne 1 2\n")) == "p ghrec 2 1\ne 1 2\n");
    CHECK(serialize_graph(parse_text("p ghrec 1 0\n")) == "p ghrec 1 0\n");
    // comments and edge order do not affect the canonical form
    Graph shuffled = parse_text("# comment\np ghrec 4 3\ne 3 4\ne 2 1\ne 1 3\n");
    CHECK(serialize_graph(shuffled) == "p ghrec 4 3\ne 1 2\ne 1 3\ne 3 4\n");

    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
        Graph reparsed = parse_text(serialize_graph(g));
        CHECK(serialize_graph(reparsed) == serialize_graph(g));
    }
}

TEST_CASE("classify_basic") {
    StructureReport p4 = classify_basic(path(4));
    CHECK(p4.max_degree == 2);
    CHECK(p4.is_tree);
    CHECK(p4.connected);

    StructureReport s = classify_basic(star(4));
    CHECK(s.max_degree == 4);
    CHECK(s.is_tree);

    StructureReport two = classify_basic(make_graph(4, {{1, 2}, {3, 4}}));
    CHECK(!two.connected);
    CHECK(!two.is_tree);
}

TEST_CASE("pattern templates are consistent") {
    for (PatternName p : all_patterns()) {
        const auto& tpl = pattern_template(p);
        CHECK(tpl.graph.vertex_count() <= 7);
        auto self = find_induced_pattern(tpl.graph, p);
        REQUIRE(self.has_value());
    }
    // the sun template's roles pick out the central triangle
    const auto& sun = pattern_template(PatternName::sun3);
    CHECK(sun.role("center") == std::vector<int>{1, 2, 3});
    CHECK(sun.role("t2") == std::vector<int>{1, 2, 4});
}

TEST_CASE("find_induced_pattern examples") {
    // the W5 template matches itself with the identity embedding
    auto w5 = find_induced_pattern(pattern_template(PatternName::w5).graph, PatternName::w5);
    REQUIRE(w5.has_value());
    CHECK(w5->embedding == std::vector<int>{1, 2, 3, 4, 5, 6});

    CHECK(!find_induced_pattern(k5_minus_e(), PatternName::claw).has_value());

    auto sun = find_induced_pattern(pattern_template(PatternName::sun3).graph, PatternName::sun3);
    REQUIRE(sun.has_value());

    // K4 contains a diamond only as a non-induced subgraph
    CHECK(!find_induced_pattern(complete(4), PatternName::diamond).has_value());
    CHECK(find_induced_pattern(k5_minus_e(), PatternName::diamond).has_value());
}

TEST_CASE("find_induced_pattern agrees with subset brute force") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 40; ++round) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 7), 0.45, rng);
        for (PatternName p : all_patterns()) {
            bool fast = find_induced_pattern(g, p).has_value();
            bool slow = brute_force_has_pattern(g, p);
            CAPTURE(to_string(p));
            CAPTURE(serialize_graph(g));
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("find_induced_pattern returns the least embedding") {
    // two claws; the one through lower vertex ids must be reported
    Graph g = make_graph(8, {{1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}, {5, 8}});
    auto occ = find_induced_pattern(g, PatternName::claw);
    REQUIRE(occ.has_value());
    CHECK(occ->embedding == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("maximal cliques") {
    auto k5e = maximal_cliques(k5_minus_e());
    CHECK(k5e == std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 2, 3, 5}});
    CHECK(maximal_cliques(complete(3)) == std::vector<std::vector<int>>{{1, 2, 3}});

    auto diamond = maximal_cliques(pattern_template(PatternName::diamond).graph);
    CHECK(diamond == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}});

    CHECK_THROWS_AS(maximal_cliques(complete(5), 4), error);

    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 9), 0.5, rng);
        auto cliques = maximal_cliques(g);
        // every returned set is a clique and inclusion-maximal
        for (const auto& c : cliques) {
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = i + 1; j < c.size(); ++j) CHECK(g.has_edge(c[i], c[j]));
            for (int v = 1; v <= g.vertex_count(); ++v) {
                if (std::binary_search(c.begin(), c.end(), v)) continue;
                bool dominates = true;
                for (int u : c)
                    if (!g.has_edge(u, v)) {
                        dominates = false;
                        break;
                    }
                CHECK(!dominates);
            }
        }
        // every edge is covered
        for (auto [u, v] : g.edges()) {
            bool covered = false;
            for (const auto& c : cliques)
                if (std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v)) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
        // no set contained in another
        for (const auto& a : cliques)
            for (const auto& b : cliques)
                if (&a != &b) CHECK(!std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("bridges") {
    CHECK(bridges(path(3)) == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(bridges(complete(3)).empty());

    // two triangles joined by a single edge
    Graph joined = make_graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}});
    CHECK(bridges(joined) == std::vector<std::pair<int, int>>{{3, 4}});

    CHECK_THROWS_AS(bridges(make_graph(4, {{1, 2}, {3, 4}})), error);

    // brute force: an edge is a bridge iff removing it disconnects the graph
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 25) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 10), 0.3, rng);
        if (!g.connected()) continue;
        ++checked;
        auto fast = bridges(g);
        std::vector<std::pair<int, int>> slow;
        for (auto e : g.edges()) {
            std::vector<std::pair<int, int>> rest;
            for (auto f : g.edges())
                if (f != e) rest.push_back(f);
            if (!Graph(g.vertex_count(), rest).connected()) slow.push_back(e);
        }
        CHECK(fast == slow);
    }
}

TEST_CASE("find_star_witness") {
    CHECK(find_star_witness(star(4), 4) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(find_star_witness(star(3), 3) == std::vector<int>{1, 2, 3, 4});
    CHECK(find_star_witness(star(3), 4).empty());
    CHECK(find_star_witness(complete(6), 3).empty());
    CHECK(find_star_witness(k5_minus_e(), 3).empty());
    // star witness agrees with the pattern engine on random graphs
    std::mt19937_64 rng(99);
    for (int round = 0; round < 40; ++round) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
        CHECK(find_star_witness(g, 3).empty() == !find_induced_pattern(g, PatternName::claw).has_value());
        CHECK(find_star_witness(g, 4).empty() == !find_induced_pattern(g, PatternName::k14).has_value());
    }
}

TEST_CASE("induced subgraph keeps ids consistent") {
    Graph g = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 5}});
    auto [sub, map] = induced_subgraph(g, {2, 3, 5});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.has_edge(1, 2)); // 2-3
    CHECK(sub.has_edge(1, 3)); // 2-5
    CHECK(!sub.has_edge(2, 3));
    CHECK(map == std::vector<int>{2, 3, 5});
}
