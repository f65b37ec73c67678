#ifndef GHREC_TEST_UTIL_HPP
#define GHREC_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "ghrec/graph.hpp"
#include "ghrec/patterns.hpp"

namespace ghrec::test {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, std::move(edges)); }

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
    return Graph(leaves + 1, std::move(edges));
}

inline Graph k5_minus_e() { return pattern_template(PatternName::k5_minus_e).graph; }

inline Graph petersen() {
    return make_graph(10, {{1, 2},
                           {2, 3},
                           {3, 4},
                           {4, 5},
                           {1, 5},
                           {1, 6},
                           {2, 7},
                           {3, 8},
                           {4, 9},
                           {5, 10},
                           {6, 8},
                           {8, 10},
                           {7, 10},
                           {7, 9},
                           {6, 9}});
}

inline Graph cube() {
    return make_graph(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

inline Graph complete_bipartite_33() {
    return make_graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Random interval graph: always chordal.
inline Graph random_interval_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> intervals;
    std::uniform_int_distribution<int> point(0, 3 * n);
    for (int i = 0; i < n; ++i) {
        int a = point(rng), b = point(rng);
        intervals.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (intervals[static_cast<size_t>(u)].first <= intervals[static_cast<size_t>(v)].second &&
                intervals[static_cast<size_t>(v)].first <= intervals[static_cast<size_t>(u)].second)
                edges.emplace_back(u + 1, v + 1);
    return Graph(n, std::move(edges));
}

} // namespace ghrec::test

#endif
