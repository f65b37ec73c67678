#ifndef GHREC_GRAPH_HPP
#define GHREC_GRAPH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghrec/errors.hpp"

namespace ghrec {

/// Simple undirected graph over dense vertex ids 1..n. Immutable after
/// construction; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Throws error with SELF_LOOP,
    /// VERTEX_OUT_OF_RANGE or DUPLICATE_EDGE on invalid input.
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges normalized to u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Sorted neighbor list of v (1-based).
    std::span<const int> neighbors(int v) const {
        return {adj_[static_cast<size_t>(v)].data(), adj_[static_cast<size_t>(v)].size()};
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(int u, int v) const;

    bool connected() const;

    /// Vertex sets of connected components, each sorted, ordered by minimum vertex.
    std::vector<std::vector<int>> components() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_; // index 0 unused
};

/// Induced subgraph on `vertices` (sorted ascending). Vertex i of the result
/// corresponds to to_parent[i - 1] in g.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

struct StructureReport {
    int vertex_count = 0;
    int edge_count = 0;
    int max_degree = 0;
    int min_degree = 0;
    bool connected = false;
    bool is_tree = false;
};

StructureReport classify_basic(const Graph& g);

/// Parses the graph file format: '#' comments, one "p ghrec <n> <m>" header,
/// then m lines "e <u> <v>".
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

/// Canonical text form; parse(serialize(g)) == g byte-for-byte.
std::string serialize_graph(const Graph& g);

/// Cut-edges of a connected graph, sorted lexicographically (u < v).
/// Throws NOT_CONNECTED.
std::vector<std::pair<int, int>> bridges(const Graph& g);

/// All inclusion-maximal cliques, each sorted, collection sorted
/// lexicographically. General-purpose (Bron-Kerbosch); refuses graphs larger
/// than `size_limit` vertices with SIZE_LIMIT.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int size_limit = 64);

/// Lexicographically least vertex set {center, l1 < l2 < ... < lp} such that
/// the li are pairwise non-adjacent neighbors of center, i.e. an induced
/// K_{1,p} witness. Returns empty if none. Linear-ish scan used by the
/// recognizer for claw / K_{1,4} screening on large graphs.
std::vector<int> find_star_witness(const Graph& g, int leaves);

} // namespace ghrec

#endif
