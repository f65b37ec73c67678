#ifndef GHREC_RECOGNIZER_HPP
#define GHREC_RECOGNIZER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghrec/chordal.hpp"
#include "ghrec/hypergraph.hpp"
#include "ghrec/sign.hpp"

namespace ghrec {

enum class Verdict { yes, no, inapplicable };

struct Refusal {
    enum class Code {
        k14_found,
        separator_too_big,
        sign_conflict,
        tree_degree,
        disconnected_policy, // reserved; disconnected inputs are handled per component
    };
    Code code;
    std::vector<int> witness; // vertices certifying the refusal
    std::string detail;
};

const char* to_string(Refusal::Code c);

struct InapplicableReason {
    enum class Code { not_chordal, claw_found_not_tree };
    Code code;
    std::vector<int> witness;
};

const char* to_string(InapplicableReason::Code c);

struct Recognition {
    Verdict verdict = Verdict::inapplicable;
    std::optional<Labelling> labelling;            // present iff YES
    std::optional<Refusal> refusal;                // present iff NO
    std::optional<InapplicableReason> inapplicable; // present iff INAPPLICABLE
};

/// Full decision procedure for triangulated claw-free graphs and trees:
/// per-component screening, bridge decomposition, sign solving, label
/// construction and a final unconditional verification. Polynomial; graphs
/// outside the covered classes come back INAPPLICABLE.
Recognition recognize(const Graph& g);

/// Trees: YES with a verified labelling iff the maximum degree is at most 3.
/// Throws NOT_A_TREE.
Recognition tree_labelling(const Graph& g);

/// Top-down label construction from a clique tree and a conflict-free sign
/// assignment; verifies the result against g and throws
/// INTERNAL_CONSTRUCTION_FAILURE if it does not realize g.
Labelling construct_labelling(const CliqueTree& t, const SignAssignment& s, const Graph& g);

struct BridgeAttachInfo {
    std::vector<int> left_to_merged;  // 1-based piece id -> merged id
    std::vector<int> right_to_merged;
    const Graph* merged = nullptr;    // graph the merged labelling must realize
};

/// Merges two YES results across a bridge by renaming one side's ground
/// elements so the bridge endpoint labels coincide; the merged labelling is
/// verified. bridge = (u, v) in merged coordinates, u on the left side.
Recognition merge_at_bridge(const Recognition& left, const Recognition& right, std::pair<int, int> bridge,
                            const BridgeAttachInfo& info);

} // namespace ghrec

#endif
