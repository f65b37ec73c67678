#ifndef GHREC_REDUCTIONS_HPP
#define GHREC_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghrec/hypergraph.hpp"
#include "ghrec/oracle.hpp"

namespace ghrec {

// ---------------------------------------------------------------- 3-SAT

struct Formula3CNF {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses; // DIMACS literals: +v / -v
};

/// DIMACS CNF with every clause of length exactly 3 (NOT_3SAT otherwise).
Formula3CNF parse_cnf(std::istream& in);
Formula3CNF parse_cnf_file(const std::string& path);
std::string serialize_cnf(const Formula3CNF& f);

/// Truth-table satisfiability; the desk-scale reference (<= 20 variables).
bool brute_force_sat(const Formula3CNF& f);

// ---------------------------------------------------------------- 2LI

/// A graph with its edges partitioned into weak and strong sets.
struct TLIInstance {
    Graph graph;
    std::vector<std::pair<int, int>> weak_edges;   // sorted, u < v
    std::vector<std::pair<int, int>> strong_edges; // sorted, u < v

    TLIInstance() = default;
    TLIInstance(Graph g, std::vector<std::pair<int, int>> weak, std::vector<std::pair<int, int>> strong);
};

/// 2LI file format: "p 2li <n> <mw> <ms>", then "w <u> <v>" / "s <u> <v>".
TLIInstance parse_2li(std::istream& in);
TLIInstance parse_2li_file(const std::string& path);
std::string serialize_2li(const TLIInstance& inst);

/// Pair labelling: distinct pairs, disjoint across weak edges, sharing
/// exactly one element across strong edges.
struct TwoLabelling {
    std::vector<std::pair<int, int>> pairs; // pairs[i] for vertex i+1, first < second
};

/// Empty when valid, else a short description of the first violation.
std::optional<std::string> check_2labelling(const TLIInstance& inst, const TwoLabelling& phi);

struct TwoLIOutcome {
    OracleStatus status;
    std::optional<TwoLabelling> labelling;
    SearchStats stats;
};

constexpr uint64_t kDefault2LIBudget = 200'000'000;

/// Canonical backtracking over pairs with first-use element ordering
/// (universe 2n); sound and complete within budget.
TwoLIOutcome solve_2li(const TLIInstance& inst, uint64_t budget = kDefault2LIBudget);

/// Enumerates solutions in canonical order until the callback returns false.
/// Returns false iff the budget ran out before the space was exhausted.
bool for_each_2li_solution(const TLIInstance& inst, uint64_t budget,
                           const std::function<bool(const TwoLabelling&)>& visit);

// ------------------------------------------------- 3-SAT -> 2LI gadgets

/// Gadget graph for a 3-CNF formula: one truth gadget (vertices 1..3), one
/// 3-vertex gadget per variable, one 5-vertex gadget per clause, wired so a
/// 2-labelling exists iff the formula is satisfiable. Vertex numbering:
/// truth gadget t1,t2,t3 = 1,2,3; variable i occupies 3+3(i-1)+{1,2,3} as
/// v1,v2,v3; clause j occupies 3+3n+5(j-1)+{1..5} as c1..c5.
TLIInstance build_2li(const Formula3CNF& f);

// --------------------------------------------- 2LI -> claw-free class C

struct ClassCGraph {
    Graph graph;
    // Half-open vertex ranges, one per instance vertex (its clique component).
    std::vector<std::pair<int, int>> component_begin_end;
    struct Link {
        std::pair<int, int> instance_edge; // (u, v), u < v
        bool strong;
        // clique vertices consumed by the link: u-side first/second, v-side first/second
        std::array<int, 4> slots;
    };
    std::vector<Link> links;
};

/// One clique component of size max(5, 2 deg) per instance vertex; strong
/// edges become C4 links (two cross edges), weak edges K4 links (four cross
/// edges); links are pairwise vertex-disjoint. The output is claw-free.
ClassCGraph li_to_clawfree(const TLIInstance& inst);

/// Labels the class-C graph from a 2-labelling of the instance: every clique
/// vertex gets its component pair plus a third element (fresh, shared per
/// strong link, or the partner pair's elements for weak links). The result is
/// verified against cc.graph; throws VERIFICATION_FAILED when the given
/// solution cannot be lifted (then no canonical solution lifts either).
Labelling lift_2li_solution(const TLIInstance& inst, const TwoLabelling& sol, const ClassCGraph& cc,
                            uint64_t repair_budget = kDefault2LIBudget);

// ------------------------------------------------- Hamiltonicity

struct HamReductionResult {
    Graph graph;         // 3n vertices: one triangle per input vertex
    Labelling labelling; // the reduction is label-native; multiplicity 3
    // output vertex id -> (input vertex, input neighbor)
    std::vector<std::pair<int, int>> origin;
};

/// Triangle substitution for a cubic graph: vertex v with neighbors u < w < t
/// becomes a triangle labelled (v, v̄, u), (v, v̄, w), (v, v̄, t); each input
/// edge uv adds the cross edge between (v, v̄, u) and (u, ū, v). Preserves
/// Hamiltonicity. Throws NOT_CUBIC.
HamReductionResult ham_reduction(const Graph& g);

struct HamiltonianOutcome {
    OracleStatus status; // found / proven_no / budget_exhausted
    std::optional<std::vector<int>> cycle;
    SearchStats stats;
};

constexpr uint64_t kDefaultHamBudget = 200'000'000;

/// Exact Hamiltonian cycle search: bitmask dynamic programming up to 20
/// vertices, pruned backtracking beyond.
HamiltonianOutcome hamiltonian(const Graph& g, uint64_t budget = kDefaultHamBudget);

} // namespace ghrec

#endif
