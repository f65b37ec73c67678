#include "ghrec/sign.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ghrec {

const char* to_string(UnaryReason r) {
    switch (r) {
        case UnaryReason::big_clique: return "BIG_CLIQUE";
        case UnaryReason::k4_weak: return "K4_WEAK";
        case UnaryReason::sun_center: return "SUN_CENTER";
        case UnaryReason::sun_petal: return "SUN_PETAL";
        case UnaryReason::bridge_side_condition: return "BRIDGE_SIDE_CONDITION";
    }
    return "UNKNOWN";
}

Sign clique_sign_of_labelling(const Labelling& lab, const std::vector<int>& clique) {
    if (clique.size() < 2)
        throw error(errc::not_a_realized_clique, "clique needs at least 2 vertices");
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            if (intersection_size(lab.label(clique[i]), lab.label(clique[j])) != 2)
                throw error(errc::not_a_realized_clique,
                            "vertices " + std::to_string(clique[i]) + " and " + std::to_string(clique[j]) +
                                " do not intersect in 2 elements");
    std::vector<int> common = lab.label(clique[0]);
    for (size_t i = 1; i < clique.size() && common.size() >= 2; ++i) {
        std::vector<int> next;
        const auto& l = lab.label(clique[i]);
        std::set_intersection(common.begin(), common.end(), l.begin(), l.end(), std::back_inserter(next));
        common = std::move(next);
    }
    return common.size() >= 2 ? Sign::pos : Sign::neg;
}

SignConstraintSet derive_constraints(const CliqueTree& t, const Graph& g,
                                     std::span<const std::vector<int>> forced_pos) {
    (void)g;
    int count = static_cast<int>(t.nodes.size());
    SignConstraintSet cs;
    cs.edge_relation.reserve(t.edges.size());
    for (const auto& e : t.edges) {
        check_internal(e.separator.size() == 1 || e.separator.size() == 2,
                       "clique tree separators must have size 1 or 2 here");
        cs.edge_relation.push_back(e.separator.size() == 2 ? Relation::must_differ : Relation::not_both_neg);
    }

    std::vector<std::optional<SignConstraintSet::Unary>> staged(static_cast<size_t>(count));
    auto force = [&](int node, Sign sign, UnaryReason reason) {
        auto& slot = staged[static_cast<size_t>(node)];
        if (!slot) {
            slot = SignConstraintSet::Unary{node, sign, reason};
        } else if (slot->sign != sign && !cs.conflict) {
            cs.conflict = SignConstraintSet::ImmediateConflict{node, slot->reason, reason};
        }
    };

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(count)); // (neighbor, edge idx)
    for (size_t i = 0; i < t.edges.size(); ++i) {
        adj[static_cast<size_t>(t.edges[i].a)].emplace_back(t.edges[i].b, static_cast<int>(i));
        adj[static_cast<size_t>(t.edges[i].b)].emplace_back(t.edges[i].a, static_cast<int>(i));
    }

    for (int id = 0; id < count; ++id) {
        size_t size = t.nodes[static_cast<size_t>(id)].size();
        if (size >= 5) {
            force(id, Sign::pos, UnaryReason::big_clique);
        } else if (size == 4) {
            for (auto [nb, ei] : adj[static_cast<size_t>(id)]) {
                (void)nb;
                if (t.edges[static_cast<size_t>(ei)].separator.size() == 1) {
                    force(id, Sign::pos, UnaryReason::k4_weak);
                    break;
                }
            }
        }
    }

    // Sun configuration: a triangle strongly intersected by three triangles on
    // its three distinct edges forces the center negative, the petals positive.
    for (int id = 0; id < count; ++id) {
        const auto& c = t.nodes[static_cast<size_t>(id)];
        if (c.size() != 3) continue;
        std::vector<int> petals;
        std::vector<std::vector<int>> seps;
        for (auto [nb, ei] : adj[static_cast<size_t>(id)]) {
            const auto& e = t.edges[static_cast<size_t>(ei)];
            if (e.separator.size() == 2 && t.nodes[static_cast<size_t>(nb)].size() == 3) {
                petals.push_back(nb);
                seps.push_back(e.separator);
            }
        }
        if (petals.size() != 3) continue;
        std::sort(seps.begin(), seps.end());
        if (std::unique(seps.begin(), seps.end()) != seps.end()) continue;
        force(id, Sign::neg, UnaryReason::sun_center);
        for (int p : petals) force(p, Sign::pos, UnaryReason::sun_petal);
    }

    for (const auto& want : forced_pos) {
        int found = -1;
        for (int id = 0; id < count; ++id)
            if (t.nodes[static_cast<size_t>(id)] == want) {
                found = id;
                break;
            }
        check_internal(found >= 0, "bridge side condition does not match any maximal clique");
        force(found, Sign::pos, UnaryReason::bridge_side_condition);
    }

    for (auto& slot : staged)
        if (slot) cs.unary.push_back(*slot);
    return cs;
}

namespace {

constexpr unsigned kPos = 1, kNeg = 2, kBoth = 3;

unsigned allowed_through(unsigned dom_from, Relation rel) {
    if (rel == Relation::must_differ) {
        unsigned out = 0;
        if (dom_from & kPos) out |= kNeg;
        if (dom_from & kNeg) out |= kPos;
        return out;
    }
    // not_both_neg: only a definitely-negative endpoint constrains the other.
    return dom_from == kNeg ? kPos : kBoth;
}

struct Cause {
    bool is_unary = false;
    UnaryReason unary{};
    int from_node = -1;
    int via_edge = -1;
};

} // namespace

SignAssignment solve_sign_csp(const CliqueTree& t, const SignConstraintSet& cs) {
    int count = static_cast<int>(t.nodes.size());
    SignAssignment result;
    result.sign.assign(static_cast<size_t>(count), Sign::pos);
    if (cs.conflict) {
        std::ostringstream msg;
        msg << "clique " << cs.conflict->node << " forced both ways: " << to_string(cs.conflict->first_reason)
            << " vs " << to_string(cs.conflict->second_reason);
        result.conflict = SignConflict{{cs.conflict->node}, msg.str()};
        return result;
    }
    if (count == 0) return result;

    std::vector<unsigned> dom(static_cast<size_t>(count), kBoth);
    std::vector<Cause> cause(static_cast<size_t>(count));
    for (const auto& u : cs.unary) {
        dom[static_cast<size_t>(u.node)] = u.sign == Sign::pos ? kPos : kNeg;
        cause[static_cast<size_t>(u.node)] = Cause{true, u.reason, -1, -1};
    }

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(count));
    for (size_t i = 0; i < t.edges.size(); ++i) {
        adj[static_cast<size_t>(t.edges[i].a)].emplace_back(t.edges[i].b, static_cast<int>(i));
        adj[static_cast<size_t>(t.edges[i].b)].emplace_back(t.edges[i].a, static_cast<int>(i));
    }

    auto trace = [&](int start) {
        std::vector<int> chain;
        int node = start;
        while (node >= 0) {
            if (std::find(chain.begin(), chain.end(), node) != chain.end()) break;
            chain.push_back(node);
            node = cause[static_cast<size_t>(node)].is_unary ? -1 : cause[static_cast<size_t>(node)].from_node;
        }
        return chain;
    };

    // Arc consistency to fixpoint; on a tree this is exact.
    std::deque<int> work;
    for (const auto& u : cs.unary) work.push_back(u.node);
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        for (auto [w, ei] : adj[static_cast<size_t>(v)]) {
            unsigned allowed = allowed_through(dom[static_cast<size_t>(v)], cs.edge_relation[static_cast<size_t>(ei)]);
            unsigned next = dom[static_cast<size_t>(w)] & allowed;
            if (next == dom[static_cast<size_t>(w)]) continue;
            if (next == 0) {
                std::vector<int> chain = trace(w);
                std::vector<int> other = trace(v);
                chain.insert(chain.end(), other.begin(), other.end());
                std::ostringstream msg;
                msg << "cliques " << v << " and " << w << " violate "
                    << (cs.edge_relation[static_cast<size_t>(ei)] == Relation::must_differ ? "MUST_DIFFER"
                                                                                           : "NOT_BOTH_NEG");
                result.conflict = SignConflict{std::move(chain), msg.str()};
                return result;
            }
            dom[static_cast<size_t>(w)] = next;
            if (!cause[static_cast<size_t>(w)].is_unary) cause[static_cast<size_t>(w)] = Cause{false, {}, v, ei};
            work.push_back(w);
        }
    }

    // Root-first assignment, positive preferred for free nodes; the tree is
    // connected so one traversal from node 0 covers everything.
    std::vector<char> assigned(static_cast<size_t>(count), 0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (assigned[static_cast<size_t>(v)]) continue;
        unsigned d = dom[static_cast<size_t>(v)];
        check_internal(d != 0, "empty domain after arc consistency");
        result.sign[static_cast<size_t>(v)] = (d & kPos) ? Sign::pos : Sign::neg;
        assigned[static_cast<size_t>(v)] = 1;
        for (auto [w, ei] : adj[static_cast<size_t>(v)]) {
            if (assigned[static_cast<size_t>(w)]) continue;
            unsigned from = result.sign[static_cast<size_t>(v)] == Sign::pos ? kPos : kNeg;
            dom[static_cast<size_t>(w)] &= allowed_through(from, cs.edge_relation[static_cast<size_t>(ei)]);
            stack.push_back(w);
        }
    }
    return result;
}

} // namespace ghrec
