#ifndef GHREC_CHORDAL_HPP
#define GHREC_CHORDAL_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ghrec/graph.hpp"

namespace ghrec {

struct EliminationOrder {
    std::vector<int> order;               // elimination order, first eliminated first
    bool chordal = false;
    std::optional<std::vector<int>> hole_witness; // chordless cycle of length >= 4 when not chordal
};

/// Maximum-cardinality search plus the standard elimination check.
/// Throws NOT_CONNECTED.
EliminationOrder mcs_peo(const Graph& g);

/// Exactly the maximal cliques of a chordal graph, each sorted, collection
/// sorted lexicographically. Throws NOT_CHORDAL when ord.chordal is false.
std::vector<std::vector<int>> chordal_maximal_cliques(const Graph& g, const EliminationOrder& ord);

struct CliqueTree {
    std::vector<std::vector<int>> nodes; // maximal cliques, sorted lexicographically; id = index
    struct Edge {
        int a = 0, b = 0;            // node ids, a < b
        std::vector<int> separator;  // = nodes[a] ∩ nodes[b], size 1 (weak) or 2 (strong)
    };
    std::vector<Edge> edges;
    std::optional<int> root;

    bool strong(const Edge& e) const { return e.separator.size() == 2; }
};

/// Two maximal cliques intersecting in >= 3 vertices: a certified refusal for
/// 2-intersection realizability, not a representable clique-tree state.
struct SeparatorTooBig {
    std::vector<int> clique_a;
    std::vector<int> clique_b;
    std::vector<int> intersection;
};

using CliqueTreeResult = std::variant<CliqueTree, SeparatorTooBig>;

/// Maximum-weight spanning tree over clique intersection sizes; ties broken
/// by lexicographic clique-id order, or shuffled deterministically when
/// tie_seed is given (the produced tree may differ, downstream verdicts must
/// not). Throws NOT_CHORDAL / NOT_CONNECTED.
CliqueTreeResult build_clique_tree(const Graph& g, std::optional<uint64_t> tie_seed = std::nullopt);

/// Debug dump: "c <id> <vertices...>" per node, "t <id1> <id2> <sep...>" per edge.
std::string dump_clique_tree(const CliqueTree& t);

} // namespace ghrec

#endif
