#ifndef GHREC_SIGN_HPP
#define GHREC_SIGN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghrec/chordal.hpp"
#include "ghrec/hypergraph.hpp"

namespace ghrec {

/// Sign of a realized maximal clique: positive when all vertex labels share a
/// common element pair, negative otherwise. K2 is degenerate (counts as
/// positive here); cliques of size >= 5 can only be positive.
enum class Sign : unsigned char { pos, neg };

inline Sign opposite(Sign s) { return s == Sign::pos ? Sign::neg : Sign::pos; }
inline char sign_char(Sign s) { return s == Sign::pos ? '+' : '-'; }

/// Reads the sign of a clique off a labelling. Every pair of members must
/// intersect in exactly 2 elements, else NOT_A_REALIZED_CLIQUE.
Sign clique_sign_of_labelling(const Labelling& lab, const std::vector<int>& clique);

enum class UnaryReason : unsigned char {
    big_clique,            // |c| >= 5
    k4_weak,               // |c| = 4 with an incident weak tree edge
    sun_center,
    sun_petal,
    bridge_side_condition, // injected by the bridge decomposition
};

const char* to_string(UnaryReason r);

enum class Relation : unsigned char {
    must_differ,  // strong edge: endpoint signs differ
    not_both_neg, // weak edge: endpoints not both negative
};

struct SignConstraintSet {
    struct Unary {
        int node;
        Sign sign;
        UnaryReason reason;
    };
    std::vector<Unary> unary;              // at most one per node
    std::vector<Relation> edge_relation;   // aligned with the clique tree's edges

    struct ImmediateConflict {
        int node;
        UnaryReason first_reason;
        UnaryReason second_reason; // forced the opposite sign
    };
    std::optional<ImmediateConflict> conflict;
};

/// Derives the forced unary signs (big cliques positive, K4s with weak edges
/// positive, sun centers negative with positive petals, injected bridge side
/// conditions) and the per-edge binary relations. `forced_pos` lists clique
/// vertex sets that must be positive; each must match a tree node exactly.
SignConstraintSet derive_constraints(const CliqueTree& t, const Graph& g,
                                     std::span<const std::vector<int>> forced_pos = {});

struct SignConflict {
    std::vector<int> chain;  // node ids from a forced source to the contradiction
    std::string description;
};

struct SignAssignment {
    std::vector<Sign> sign;  // per node id; meaningful only when no conflict
    std::optional<SignConflict> conflict;
};

/// Exact linear-time solver for the tree-structured sign CSP: arc consistency
/// from the forced nodes, then free nodes filled root-first with positive
/// preferred. A conflict is a value, not an error.
SignAssignment solve_sign_csp(const CliqueTree& t, const SignConstraintSet& cs);

} // namespace ghrec

#endif
