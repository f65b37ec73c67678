#include "ghrec/patterns.hpp"

#include <algorithm>
#include <array>

namespace ghrec {

const char* to_string(PatternName p) {
    switch (p) {
        case PatternName::claw: return "CLAW";
        case PatternName::k14: return "K14";
        case PatternName::diamond: return "DIAMOND";
        case PatternName::butterfly: return "BUTTERFLY";
        case PatternName::w4: return "W4";
        case PatternName::w5: return "W5";
        case PatternName::prism: return "PRISM";
        case PatternName::sun3: return "SUN3";
        case PatternName::k4_plus_v: return "K4_PLUS_V";
        case PatternName::k5_minus_e: return "K5_MINUS_E";
    }
    return "UNKNOWN";
}

std::optional<PatternName> pattern_from_string(const std::string& s) {
    for (PatternName p : all_patterns())
        if (s == to_string(p)) return p;
    return std::nullopt;
}

std::vector<PatternName> all_patterns() {
    return {PatternName::claw,  PatternName::k14,  PatternName::diamond,   PatternName::butterfly,
            PatternName::w4,    PatternName::w5,   PatternName::prism,     PatternName::sun3,
            PatternName::k4_plus_v, PatternName::k5_minus_e};
}

const std::vector<int>& PatternTemplate::role(const std::string& name_) const {
    for (const auto& [key, vertices] : roles)
        if (key == name_) return vertices;
    throw error(errc::malformed, "pattern " + std::string(to_string(name)) + " has no role '" + name_ + "'");
}

namespace {

using Edges = std::vector<std::pair<int, int>>;

PatternTemplate make_template(PatternName name, int n, Edges edges,
                              std::vector<std::pair<std::string, std::vector<int>>> roles) {
    return PatternTemplate{name, Graph(n, std::move(edges)), std::move(roles)};
}

std::vector<PatternTemplate> build_all_templates() {
    std::vector<PatternTemplate> t;
    t.push_back(make_template(PatternName::claw, 4, {{1, 2}, {1, 3}, {1, 4}},
                              {{"center", {1}}, {"leaves", {2, 3, 4}}}));
    t.push_back(make_template(PatternName::k14, 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}},
                              {{"center", {1}}, {"leaves", {2, 3, 4, 5}}}));
    // K4 minus the edge 1-4: triangles {1,2,3} and {2,3,4} share the edge 2-3.
    t.push_back(make_template(PatternName::diamond, 4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}},
                              {{"t1", {1, 2, 3}}, {"t2", {2, 3, 4}}, {"shared_edge", {2, 3}}, {"apexes", {1, 4}}}));
    // Two triangles sharing the single vertex 1.
    t.push_back(make_template(PatternName::butterfly, 5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}},
                              {{"center", {1}}, {"t1", {1, 2, 3}}, {"t2", {1, 4, 5}}}));
    // Hub 1, rim cycle 2-3-4-5.
    t.push_back(make_template(PatternName::w4, 5,
                              {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}},
                              {{"hub", {1}},
                               {"rim", {2, 3, 4, 5}},
                               {"t1", {1, 2, 3}},
                               {"t2", {1, 3, 4}},
                               {"t3", {1, 4, 5}},
                               {"t4", {1, 2, 5}}}));
    // Hub 1, rim cycle 2-3-4-5-6.
    t.push_back(make_template(PatternName::w5, 6,
                              {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}},
                              {{"hub", {1}}, {"rim", {2, 3, 4, 5, 6}}}));
    // Vertex-disjoint triangles {1,2,3}, {4,5,6} plus the rungs 1-4, 2-5, 3-6.
    t.push_back(make_template(PatternName::prism, 6,
                              {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}},
                              {{"t1", {1, 2, 3}}, {"t2", {4, 5, 6}}}));
    // Central triangle {1,2,3}; petal vertices 4, 5, 6, one per edge.
    t.push_back(make_template(PatternName::sun3, 6,
                              {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {3, 5}, {2, 6}, {3, 6}},
                              {{"center", {1, 2, 3}},
                               {"petal_vertices", {4, 5, 6}},
                               {"t1", {1, 2, 3}},
                               {"t2", {1, 2, 4}},
                               {"t3", {1, 3, 5}},
                               {"t4", {2, 3, 6}}}));
    t.push_back(make_template(PatternName::k4_plus_v, 5,
                              {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}},
                              {{"k4", {1, 2, 3, 4}}, {"pendant", {5}}, {"attach", {1}}}));
    // K5 minus the edge 4-5: two K4s sharing the triangle {1,2,3}.
    t.push_back(make_template(PatternName::k5_minus_e, 5,
                              {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}},
                              {{"k4a", {1, 2, 3, 4}}, {"k4b", {1, 2, 3, 5}}, {"missing_pair", {4, 5}}}));
    return t;
}

} // namespace

const PatternTemplate& pattern_template(PatternName p) {
    static const std::vector<PatternTemplate> templates = build_all_templates();
    for (const auto& t : templates)
        if (t.name == p) return t;
    throw error(errc::malformed, "unknown pattern");
}

std::optional<PatternOccurrence> find_induced_pattern(const Graph& g, PatternName p) {
    const PatternTemplate& tpl = pattern_template(p);
    int tn = tpl.graph.vertex_count();
    int n = g.vertex_count();
    if (n < tn) return std::nullopt;

    std::vector<int> image(static_cast<size_t>(tn) + 1, 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);

    // Template vertices are assigned in id order and host candidates tried
    // ascending, so the first full embedding found is lexicographically least.
    std::vector<int> cursor(static_cast<size_t>(tn) + 2, 0);
    int depth = 1;
    while (depth >= 1) {
        if (depth > tn) {
            std::vector<int> emb(image.begin() + 1, image.end());
            return PatternOccurrence{p, std::move(emb)};
        }
        bool advanced = false;
        for (int cand = cursor[static_cast<size_t>(depth)] + 1; cand <= n; ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            if (g.degree(cand) < tpl.graph.degree(depth)) continue;
            bool ok = true;
            for (int prev = 1; prev < depth; ++prev) {
                bool want = tpl.graph.has_edge(prev, depth);
                bool have = g.has_edge(image[static_cast<size_t>(prev)], cand);
                if (want != have) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                image[static_cast<size_t>(depth)] = cand;
                used[static_cast<size_t>(cand)] = 1;
                cursor[static_cast<size_t>(depth)] = cand;
                ++depth;
                cursor[static_cast<size_t>(depth)] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            cursor[static_cast<size_t>(depth)] = 0;
            --depth;
            if (depth >= 1) {
                used[static_cast<size_t>(image[static_cast<size_t>(depth)])] = 0;
                image[static_cast<size_t>(depth)] = 0;
            }
        }
    }
    return std::nullopt;
}

} // namespace ghrec
