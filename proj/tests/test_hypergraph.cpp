#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ghrec/hypergraph.hpp"
#include "ghrec/patterns.hpp"
#include "test_util.hpp"

using namespace ghrec;
using namespace ghrec::test;

namespace {

Labelling parse_lab(const std::string& text) {
    std::istringstream in(text);
    return parse_labelling(in);
}

errc lab_error_code(const std::string& text) {
    try {
        parse_lab(text);
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected a labelling error");
    return errc::malformed;
}

Labelling random_k3_labelling(int n, std::mt19937_64& rng) {
    int universe = std::max(5, n + 2);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> labels;
    while (static_cast<int>(labels.size()) < n) {
        std::set<int> e;
        while (static_cast<int>(e.size()) < 3) e.insert(static_cast<int>(rng() % static_cast<uint64_t>(universe)) + 1);
        std::vector<int> l(e.begin(), e.end());
        if (seen.insert(l).second) labels.push_back(l);
    }
    return Labelling(std::move(labels));
}

} // namespace

TEST_CASE("labelling parsing") {
    Labelling two = parse_lab("l 1 1 2 3\nl 2 1 2 4\n");
    CHECK(two.vertex_count() == 2);
    CHECK(two.uniformity() == 3);
    CHECK(two.label(2) == std::vector<int>{1, 2, 4});

    CHECK(lab_error_code("l 1 1 1 2\n") == errc::duplicate_element_in_label);
    CHECK(lab_error_code("l 1 1 2 3\nl 2 3 2 1\n") == errc::duplicate_label);
    CHECK(lab_error_code("l 1 1 2 3\nl 2 1 2\n") == errc::bad_arity);
    CHECK(lab_error_code("q 1 1 2 3\n") == errc::malformed_line);
    CHECK(lab_error_code("l 1 1 2 3\nl 3 4 5 6\n") == errc::vertex_mismatch);

    // serialization emits sorted elements in vertex order
    Labelling messy = parse_lab("l 2 9 4 1\nl 1 3 2 1\n");
    CHECK(serialize_labelling(messy) == "l 1 1 2 3\nl 2 1 4 9\n");
}

TEST_CASE("image examples") {
    Labelling k2 = Labelling({{1, 2, 3}, {1, 2, 4}});
    CHECK(image(k2, 2).edges() == std::vector<std::pair<int, int>>{{1, 2}});

    // negative K4 pattern
    Labelling k4 = Labelling({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(image(k4, 2).edge_count() == 6);

    // claw: center plus three leaves that pairwise share one element
    Labelling claw = Labelling({{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 3, 6}});
    Graph img = image(claw, 2);
    CHECK(img.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}});

    CHECK_THROWS_AS(image(k2, 0), error);
    CHECK_THROWS_AS(image(k2, 3), error);
}

TEST_CASE("verify_labelling") {
    Graph k2(2, {{1, 2}});
    CHECK(verify_labelling(k2, Labelling({{1, 2, 3}, {1, 2, 4}})).ok);

    VerificationReport missing = verify_labelling(k2, Labelling({{1, 2, 3}, {1, 4, 5}}));
    CHECK(!missing.ok);
    REQUIRE(missing.violations.size() == 1);
    CHECK(missing.violations[0].kind == Violation::Kind::missing_edge);
    CHECK(missing.violations[0].intersection_size == 1);

    // diamond a-b-c-d with a,d non-adjacent
    Graph diamond = pattern_template(PatternName::diamond).graph;
    CHECK(verify_labelling(diamond, Labelling({{2, 4, 5}, {1, 2, 4}, {1, 2, 5}, {1, 2, 3}})).ok);

    VerificationReport extra = verify_labelling(Graph(2, {}), Labelling({{1, 2, 3}, {1, 2, 4}}));
    CHECK(!extra.ok);
    CHECK(extra.violations[0].kind == Violation::Kind::extra_edge);

    CHECK_THROWS_AS(verify_labelling(Graph(3, {}), Labelling({{1, 2, 3}})), error);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(Labelling({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})) == 3);
    CHECK(multiplicity(Labelling({{1, 2, 3}, {4, 5, 6}})) == 1);
    CHECK(multiplicity(Labelling({{1, 2}, {3, 4}})) == 1);
    CHECK(multiplicity(Labelling()) == 0);
}

TEST_CASE("lift") {
    Labelling lifted = lift(Labelling({{1, 2}, {3, 4}}));
    CHECK(lifted.uniformity() == 3);
    CHECK(lifted.label(1) == std::vector<int>{1, 2, 5});
    CHECK(lifted.label(2) == std::vector<int>{3, 4, 6});

    Labelling single = lift(Labelling({{1, 2, 3}}));
    CHECK(single.label(1) == std::vector<int>{1, 2, 3, 4});

    // lifting a linear labelling preserves the 1-intersection image
    std::mt19937_64 rng(123);
    int rounds = 0;
    while (rounds < 30) {
        int n = 2 + static_cast<int>(rng() % 7);
        Labelling lab = random_k3_labelling(n, rng);
        if (multiplicity(lab) > 1) continue;
        ++rounds;
        CHECK(image(lift(lab), 1).edges() == image(lab, 1).edges());
    }
}

TEST_CASE("image/verify duality on random labellings") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 50; ++round) {
        Labelling lab = random_k3_labelling(2 + static_cast<int>(rng() % 9), rng);
        CHECK(verify_labelling(image(lab, 2), lab).ok);
    }
}

TEST_CASE("image is invariant under element renaming") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 30; ++round) {
        Labelling lab = random_k3_labelling(2 + static_cast<int>(rng() % 8), rng);
        std::map<int, int> rename;
        for (const auto& l : lab.labels())
            for (int e : l) rename[e] = 0;
        int next = 1;
        for (auto& [e, t] : rename) {
            (void)e;
            t = (next += 1 + static_cast<int>(rng() % 3));
        }
        std::vector<std::vector<int>> renamed;
        for (const auto& l : lab.labels()) {
            std::vector<int> r;
            for (int e : l) r.push_back(rename[e]);
            renamed.push_back(r);
        }
        CHECK(image(Labelling(std::move(renamed)), 2).edges() == image(lab, 2).edges());
    }
}

TEST_CASE("images of 3-uniform labellings are K14-free") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 60; ++round) {
        Labelling lab = random_k3_labelling(2 + static_cast<int>(rng() % 10), rng);
        Graph img = image(lab, 2);
        CHECK(find_star_witness(img, 4).empty());
        CHECK(!find_induced_pattern(img, PatternName::k14).has_value());
    }
}

TEST_CASE("induced P3 in an image forces endpoint intersection") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 40; ++round) {
        Labelling lab = random_k3_labelling(3 + static_cast<int>(rng() % 8), rng);
        Graph img = image(lab, 2);
        for (int v = 1; v <= img.vertex_count(); ++v) {
            auto nbrs = img.neighbors(v);
            for (size_t i = 0; i < nbrs.size(); ++i)
                for (size_t j = i + 1; j < nbrs.size(); ++j) {
                    if (img.has_edge(nbrs[i], nbrs[j])) continue;
                    CHECK(intersection_size(lab.label(nbrs[i]), lab.label(nbrs[j])) >= 1);
                }
        }
    }
}
