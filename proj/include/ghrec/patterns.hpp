#ifndef GHREC_PATTERNS_HPP
#define GHREC_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ghrec/graph.hpp"

namespace ghrec {

/// The fixed small configurations used as forcing or forbidding patterns.
enum class PatternName {
    claw,
    k14,
    diamond,
    butterfly,
    w4,
    w5,
    prism,
    sun3,
    k4_plus_v,
    k5_minus_e,
};

const char* to_string(PatternName p);
std::optional<PatternName> pattern_from_string(const std::string& s);
std::vector<PatternName> all_patterns();

/// Template graph plus named vertex groups, so downstream code can read off
/// e.g. which triangle is the sun center without re-deriving it.
struct PatternTemplate {
    PatternName name;
    Graph graph;
    std::vector<std::pair<std::string, std::vector<int>>> roles;

    const std::vector<int>& role(const std::string& name_) const;
};

const PatternTemplate& pattern_template(PatternName p);

struct PatternOccurrence {
    PatternName pattern;
    // embedding[i] = host vertex for template vertex i+1; the image induces a
    // subgraph isomorphic to the template (non-edges match too).
    std::vector<int> embedding;
};

/// Exhaustive backtracking over embeddings with degree pruning; returns the
/// lexicographically least embedding, or nullopt when the template does not
/// occur as an induced subgraph.
std::optional<PatternOccurrence> find_induced_pattern(const Graph& g, PatternName p);

} // namespace ghrec

#endif
