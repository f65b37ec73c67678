#ifndef GHREC_ORACLE_HPP
#define GHREC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ghrec/hypergraph.hpp"

namespace ghrec {

struct SearchStats {
    uint64_t nodes = 0;
    int max_depth = 0;
    double elapsed_seconds = 0.0;
};

enum class OracleStatus { found, proven_no, budget_exhausted };

const char* to_string(OracleStatus s);

struct OracleOutcome {
    OracleStatus status;
    std::optional<Labelling> labelling;
    SearchStats stats;
};

constexpr uint64_t kDefaultOracleBudget = 50'000'000;

/// Exhaustive backtracking for a 3-set labelling with adjacency iff
/// 2-intersection. Vertices are assigned in decreasing-degree order (ties by
/// id); ground elements are canonicalized to first-use order over {1..3n},
/// which loses no realizations. Complete within budget.
OracleOutcome oracle_search(const Graph& g, uint64_t budget = kDefaultOracleBudget);

struct EnumerateOutcome {
    bool complete = false; // false iff the budget ran out
    std::vector<Labelling> labellings;
    SearchStats stats;
};

/// All canonical realizations (pairwise non-isomorphic under element
/// renaming by construction of the canonical order).
EnumerateOutcome oracle_enumerate(const Graph& g, uint64_t budget = kDefaultOracleBudget);

} // namespace ghrec

#endif
