#ifndef GHREC_HYPERGRAPH_HPP
#define GHREC_HYPERGRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ghrec/graph.hpp"

namespace ghrec {

/// A k-uniform hypergraph given as a vertex labelling: vertex v of a graph
/// carries a sorted k-set of ground elements (its hyperedge). Labels are
/// pairwise distinct; the primary use is k = 3.
class Labelling {
public:
    Labelling() = default;

    /// labels[i] is the label of vertex i+1 (vertices are dense 1..n).
    /// Throws BAD_ARITY / DUPLICATE_ELEMENT_IN_LABEL / DUPLICATE_LABEL.
    explicit Labelling(std::vector<std::vector<int>> labels);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int uniformity() const { return k_; }

    const std::vector<int>& label(int v) const { return labels_[static_cast<size_t>(v - 1)]; }
    const std::vector<std::vector<int>>& labels() const { return labels_; }

    int max_element() const;

private:
    int k_ = 0;
    std::vector<std::vector<int>> labels_;
};

/// Labelling file format: '#' comments, lines "l <vertex> <e1> ... <ek>".
Labelling parse_labelling(std::istream& in);
Labelling parse_labelling_file(const std::string& path);
std::string serialize_labelling(const Labelling& lab);

/// The l-intersection image: edge uv iff |label(u) ∩ label(v)| = l exactly.
/// Throws BAD_L unless 1 <= l < k.
Graph image(const Labelling& lab, int l);

struct Violation {
    enum class Kind { missing_edge, extra_edge, duplicate_label, bad_arity };
    Kind kind;
    int u = 0;
    int v = 0;                 // 0 when not applicable
    int intersection_size = 0; // for edge kinds
};

const char* to_string(Violation::Kind k);

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;
};

/// Checks that image(lab, 2) equals g edge-for-edge (k = 3 realizations).
/// Throws VERTEX_MISMATCH when lab does not cover exactly g's vertices.
VerificationReport verify_labelling(const Graph& g, const Labelling& lab);

/// Maximum multiplicity: the largest number of labels containing a common
/// element pair. 0 when no label has two elements.
int multiplicity(const Labelling& lab);

/// The (k+1)-uniform lifting: each label gains one fresh element, assigned as
/// max(existing)+1, +2, ... in vertex-id order. Preserves linearity.
Labelling lift(const Labelling& lab);

int intersection_size(const std::vector<int>& a, const std::vector<int>& b);

} // namespace ghrec

#endif
