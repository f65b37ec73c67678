#include "ghrec/recognizer.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ghrec {

const char* to_string(Refusal::Code c) {
    switch (c) {
        case Refusal::Code::k14_found: return "K14_FOUND";
        case Refusal::Code::separator_too_big: return "SEPARATOR_TOO_BIG";
        case Refusal::Code::sign_conflict: return "SIGN_CONFLICT";
        case Refusal::Code::tree_degree: return "TREE_DEGREE";
        case Refusal::Code::disconnected_policy: return "DISCONNECTED_POLICY";
    }
    return "UNKNOWN";
}

const char* to_string(InapplicableReason::Code c) {
    switch (c) {
        case InapplicableReason::Code::not_chordal: return "NOT_CHORDAL";
        case InapplicableReason::Code::claw_found_not_tree: return "CLAW_FOUND_NOT_TREE";
    }
    return "UNKNOWN";
}

namespace {

using Label = std::vector<int>;

uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

// How many placed labels contain a given element pair. The attach rule for a
// pendant vertex is: any pair of the support's label held by no other label,
// plus a fresh element, realizes exactly the pendant edge.
struct PairCounts {
    std::unordered_map<uint64_t, int> counts;

    void add(const Label& l) {
        for (size_t i = 0; i < l.size(); ++i)
            for (size_t j = i + 1; j < l.size(); ++j) ++counts[pair_key(l[i], l[j])];
    }
    int get(int a, int b) const {
        auto it = counts.find(pair_key(a, b));
        return it == counts.end() ? 0 : it->second;
    }
};

int max_used_element(const std::vector<Label>& labels) {
    int best = 0;
    for (const auto& l : labels)
        if (!l.empty()) best = std::max(best, l.back());
    return best;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_inter(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct RealizeOutcome {
    bool ok = false;
    std::vector<Label> labels; // indexed by vertex id, slot 0 unused
    Refusal refusal;
};

RealizeOutcome refuse(Refusal::Code code, std::vector<int> witness, std::string detail) {
    RealizeOutcome out;
    out.ok = false;
    out.refusal = Refusal{code, std::move(witness), std::move(detail)};
    return out;
}

// Renames side2's ground elements so the bridge endpoint labels coincide with
// side1's, everything else fresh, and overlays the two sides. side1 covers
// u's side of the bridge plus v; side2 covers v's side plus u.
std::vector<Label> merge_sides(const std::vector<Label>& side1, const std::vector<Label>& side2, int u, int v) {
    const Label& l1u = side1[static_cast<size_t>(u)];
    const Label& l1v = side1[static_cast<size_t>(v)];
    const Label& l2u = side2[static_cast<size_t>(u)];
    const Label& l2v = side2[static_cast<size_t>(v)];
    check_internal(!l1u.empty() && !l1v.empty() && !l2u.empty() && !l2v.empty(),
                   "bridge endpoints must be labelled on both sides");
    Label q1 = set_inter(l1u, l1v), q2 = set_inter(l2u, l2v);
    check_internal(q1.size() == 2 && q2.size() == 2, "bridge endpoint labels must share a pair");
    Label p1 = set_minus(l1u, q1), p2 = set_minus(l2u, q2);
    Label s1 = set_minus(l1v, q1), s2 = set_minus(l2v, q2);

    std::unordered_map<int, int> rho;
    rho[q2[0]] = q1[0];
    rho[q2[1]] = q1[1];
    rho[p2[0]] = p1[0];
    rho[s2[0]] = s1[0];

    std::set<int> other_elements;
    for (const auto& l : side2)
        for (int e : l)
            if (!rho.count(e)) other_elements.insert(e);
    int fresh = std::max(max_used_element(side1), max_used_element(side2)) + 1;
    for (int e : other_elements) rho[e] = fresh++;

    std::vector<Label> merged(side1.size());
    for (size_t x = 0; x < side1.size(); ++x) {
        if (!side1[x].empty() && static_cast<int>(x) != v) {
            merged[x] = side1[x];
        } else if (!side2[x].empty()) {
            Label l;
            l.reserve(side2[x].size());
            for (int e : side2[x]) l.push_back(rho.at(e));
            std::sort(l.begin(), l.end());
            merged[x] = std::move(l);
        }
    }
    check_internal(merged[static_cast<size_t>(v)] == l1v, "bridge renaming failed to align the pendant label");
    return merged;
}

Labelling to_labelling(const std::vector<Label>& labels) {
    std::vector<Label> dense(labels.begin() + 1, labels.end());
    return Labelling(std::move(dense));
}

// Realizes a connected chordal claw-free K14-free graph, or reports a refusal
// with a witness in g's coordinates. forced_pos carries maximal cliques that
// must come out positive (bridge side conditions from enclosing calls).
RealizeOutcome realize_connected(const Graph& g, std::vector<std::vector<int>> forced_pos) {
    int n = g.vertex_count();
    RealizeOutcome out;
    out.labels.assign(static_cast<size_t>(n) + 1, {});

    if (n <= 2) {
        check_internal(forced_pos.empty(), "side condition on a trivial piece");
        if (n >= 1) out.labels[1] = {1, 2, 3};
        if (n == 2) out.labels[2] = {1, 2, 4};
        out.ok = true;
        return out;
    }

    // Peel pendant vertices. Each peel records the support and, when the
    // support's remaining clique is a K4, the side condition that it must be
    // labelled positively (otherwise the pendant could not be re-attached).
    std::vector<char> alive(static_cast<size_t>(n) + 1, 1);
    std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
    std::set<int> leaf_pool;
    for (int v = 1; v <= n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) leaf_pool.insert(v);
    }
    int alive_count = n;
    std::vector<std::pair<int, int>> peeled; // (leaf, support)
    std::set<std::vector<int>> conditions(forced_pos.begin(), forced_pos.end());

    while (alive_count > 2 && !leaf_pool.empty()) {
        int v = *leaf_pool.begin();
        leaf_pool.erase(leaf_pool.begin());
        if (!alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] != 1) continue;
        int support = 0;
        for (int w : g.neighbors(v))
            if (alive[static_cast<size_t>(w)]) {
                support = w;
                break;
            }
        check_internal(support != 0, "pendant vertex without a live support");
        std::vector<int> clique{support};
        for (int w : g.neighbors(support))
            if (alive[static_cast<size_t>(w)] && w != v) clique.push_back(w);
        std::sort(clique.begin(), clique.end());
        if (clique.size() == 4) {
            for (size_t i = 0; i < clique.size(); ++i)
                for (size_t j = i + 1; j < clique.size(); ++j)
                    check_internal(g.has_edge(clique[i], clique[j]),
                                   "support neighborhood not a clique in a claw-free graph");
            conditions.insert(clique);
        }
        alive[static_cast<size_t>(v)] = 0;
        deg[static_cast<size_t>(v)] = 0;
        --alive_count;
        peeled.emplace_back(v, support);
        if (--deg[static_cast<size_t>(support)] == 1) leaf_pool.insert(support);
    }

    if (alive_count <= 2) {
        check_internal(conditions.empty(), "K4 side condition cannot survive to a trivial core");
        std::vector<int> core;
        for (int v = 1; v <= n; ++v)
            if (alive[static_cast<size_t>(v)]) core.push_back(v);
        out.labels[static_cast<size_t>(core[0])] = {1, 2, 3};
        if (core.size() == 2) out.labels[static_cast<size_t>(core[1])] = {1, 2, 4};
    } else {
        std::vector<int> core;
        for (int v = 1; v <= n; ++v)
            if (alive[static_cast<size_t>(v)]) core.push_back(v);
        auto [h, to_g] = induced_subgraph(g, core);
        std::vector<int> g_to_h(static_cast<size_t>(n) + 1, 0);
        for (size_t i = 0; i < to_g.size(); ++i) g_to_h[static_cast<size_t>(to_g[i])] = static_cast<int>(i) + 1;

        std::vector<std::vector<int>> core_conditions;
        for (const auto& cond : conditions) {
            std::vector<int> mapped;
            for (int v : cond) {
                check_internal(alive[static_cast<size_t>(v)], "side-condition clique lost a vertex");
                mapped.push_back(g_to_h[static_cast<size_t>(v)]);
            }
            std::sort(mapped.begin(), mapped.end());
            core_conditions.push_back(std::move(mapped));
        }

        auto remap_witness = [&](std::vector<int> w) {
            for (int& v : w) v = to_g[static_cast<size_t>(v - 1)];
            std::sort(w.begin(), w.end());
            return w;
        };

        auto bridge_list = bridges(h);
        std::vector<Label> core_labels;
        if (bridge_list.empty()) {
            auto built = build_clique_tree(h);
            if (std::holds_alternative<SeparatorTooBig>(built)) {
                const auto& sep = std::get<SeparatorTooBig>(built);
                std::ostringstream msg;
                msg << "two maximal cliques share " << sep.intersection.size() << " vertices";
                return refuse(Refusal::Code::separator_too_big, remap_witness(sep.intersection), msg.str());
            }
            const auto& tree = std::get<CliqueTree>(built);
            SignConstraintSet cs = derive_constraints(tree, h, core_conditions);
            SignAssignment assignment = solve_sign_csp(tree, cs);
            if (assignment.conflict) {
                std::vector<int> witness;
                for (int node : assignment.conflict->chain)
                    for (int v : tree.nodes[static_cast<size_t>(node)]) witness.push_back(v);
                std::sort(witness.begin(), witness.end());
                witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
                return refuse(Refusal::Code::sign_conflict, remap_witness(witness),
                              assignment.conflict->description);
            }
            Labelling lab = construct_labelling(tree, assignment, h);
            core_labels.assign(static_cast<size_t>(h.vertex_count()) + 1, {});
            for (int v = 1; v <= h.vertex_count(); ++v) core_labels[static_cast<size_t>(v)] = lab.label(v);
        } else {
            auto [bu, bv] = bridge_list.front();
            // Vertices on u's side of the bridge.
            std::vector<char> side(static_cast<size_t>(h.vertex_count()) + 1, 0);
            std::deque<int> queue{bu};
            side[static_cast<size_t>(bu)] = 1;
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                for (int y : h.neighbors(x)) {
                    if ((x == bu && y == bv) || (x == bv && y == bu)) continue;
                    if (!side[static_cast<size_t>(y)]) {
                        side[static_cast<size_t>(y)] = 1;
                        queue.push_back(y);
                    }
                }
            }
            std::vector<int> piece1, piece2;
            for (int v = 1; v <= h.vertex_count(); ++v) (side[static_cast<size_t>(v)] ? piece1 : piece2).push_back(v);
            std::vector<int> verts1 = piece1, verts2 = piece2;
            verts1.push_back(bv);
            verts2.push_back(bu);
            std::sort(verts1.begin(), verts1.end());
            std::sort(verts2.begin(), verts2.end());
            auto [g1, to_h1] = induced_subgraph(h, verts1);
            auto [g2, to_h2] = induced_subgraph(h, verts2);
            std::vector<int> h_to_1(static_cast<size_t>(h.vertex_count()) + 1, 0),
                h_to_2(static_cast<size_t>(h.vertex_count()) + 1, 0);
            for (size_t i = 0; i < to_h1.size(); ++i) h_to_1[static_cast<size_t>(to_h1[i])] = static_cast<int>(i) + 1;
            for (size_t i = 0; i < to_h2.size(); ++i) h_to_2[static_cast<size_t>(to_h2[i])] = static_cast<int>(i) + 1;

            std::vector<std::vector<int>> conds1, conds2;
            for (const auto& cond : core_conditions) {
                bool in1 = true, in2 = true;
                for (int v : cond) {
                    if (v != bv && !side[static_cast<size_t>(v)]) in1 = false;
                    if (v != bu && side[static_cast<size_t>(v)]) in2 = false;
                }
                check_internal(in1 != in2, "side-condition clique split by a bridge");
                auto& target = in1 ? conds1 : conds2;
                const auto& map = in1 ? h_to_1 : h_to_2;
                std::vector<int> mapped;
                for (int v : cond) mapped.push_back(map[static_cast<size_t>(v)]);
                std::sort(mapped.begin(), mapped.end());
                target.push_back(std::move(mapped));
            }

            RealizeOutcome r1 = realize_connected(g1, std::move(conds1));
            if (!r1.ok) {
                for (int& v : r1.refusal.witness) v = to_h1[static_cast<size_t>(v - 1)];
                r1.refusal.witness = remap_witness(r1.refusal.witness);
                out.refusal = std::move(r1.refusal);
                return out;
            }
            RealizeOutcome r2 = realize_connected(g2, std::move(conds2));
            if (!r2.ok) {
                for (int& v : r2.refusal.witness) v = to_h2[static_cast<size_t>(v - 1)];
                r2.refusal.witness = remap_witness(r2.refusal.witness);
                out.refusal = std::move(r2.refusal);
                return out;
            }

            std::vector<Label> side1(static_cast<size_t>(h.vertex_count()) + 1),
                side2(static_cast<size_t>(h.vertex_count()) + 1);
            for (int v = 1; v <= g1.vertex_count(); ++v)
                side1[static_cast<size_t>(to_h1[static_cast<size_t>(v - 1)])] = std::move(r1.labels[static_cast<size_t>(v)]);
            for (int v = 1; v <= g2.vertex_count(); ++v)
                side2[static_cast<size_t>(to_h2[static_cast<size_t>(v - 1)])] = std::move(r2.labels[static_cast<size_t>(v)]);
            core_labels = merge_sides(side1, side2, bu, bv);
            VerificationReport report = verify_labelling(h, to_labelling(core_labels));
            check_internal(report.ok, "merged bridge labelling failed verification");
        }
        for (int hv = 1; hv <= h.vertex_count(); ++hv)
            out.labels[static_cast<size_t>(to_g[static_cast<size_t>(hv - 1)])] =
                std::move(core_labels[static_cast<size_t>(hv)]);
    }

    // Re-attach peeled pendants, most recent first.
    PairCounts counts;
    int fresh = 1;
    for (int v = 1; v <= n; ++v) {
        if (!out.labels[static_cast<size_t>(v)].empty()) {
            counts.add(out.labels[static_cast<size_t>(v)]);
            fresh = std::max(fresh, out.labels[static_cast<size_t>(v)].back() + 1);
        }
    }
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        auto [v, support] = *it;
        const Label& ls = out.labels[static_cast<size_t>(support)];
        check_internal(!ls.empty(), "support of a pendant vertex is unlabelled");
        Label chosen;
        for (size_t i = 0; i < ls.size() && chosen.empty(); ++i)
            for (size_t j = i + 1; j < ls.size() && chosen.empty(); ++j)
                if (counts.get(ls[i], ls[j]) == 1) chosen = {ls[i], ls[j]};
        check_internal(!chosen.empty(), "no free pair to attach a pendant vertex");
        chosen.push_back(fresh++);
        counts.add(chosen);
        out.labels[static_cast<size_t>(v)] = std::move(chosen);
    }

    out.ok = true;
    return out;
}

Recognition yes_with(std::vector<Label> labels) {
    Recognition r;
    r.verdict = Verdict::yes;
    r.labelling = to_labelling(labels);
    return r;
}

// Decision for one connected component.
Recognition recognize_component(const Graph& k) {
    int n = k.vertex_count();
    if (n <= 2) {
        // A connected component of size 2 always carries its edge.
        std::vector<Label> labels(static_cast<size_t>(n) + 1);
        if (n >= 1) labels[1] = {1, 2, 3};
        if (n == 2) labels[2] = {1, 2, 4};
        return yes_with(std::move(labels));
    }
    StructureReport rep = classify_basic(k);
    if (rep.is_tree) return tree_labelling(k);

    Recognition r;
    auto k14 = find_star_witness(k, 4);
    if (!k14.empty()) {
        r.verdict = Verdict::no;
        r.refusal = Refusal{Refusal::Code::k14_found, std::move(k14), "induced K_{1,4}"};
        return r;
    }
    auto claw = find_star_witness(k, 3);
    if (!claw.empty()) {
        r.verdict = Verdict::inapplicable;
        r.inapplicable = InapplicableReason{InapplicableReason::Code::claw_found_not_tree, std::move(claw)};
        return r;
    }
    EliminationOrder ord = mcs_peo(k);
    if (!ord.chordal) {
        r.verdict = Verdict::inapplicable;
        r.inapplicable =
            InapplicableReason{InapplicableReason::Code::not_chordal, ord.hole_witness.value_or(std::vector<int>{})};
        return r;
    }
    RealizeOutcome outcome = realize_connected(k, {});
    if (!outcome.ok) {
        r.verdict = Verdict::no;
        r.refusal = std::move(outcome.refusal);
        return r;
    }
    return yes_with(std::move(outcome.labels));
}

} // namespace

Recognition recognize(const Graph& g) {
    int n = g.vertex_count();
    auto comps = g.components();
    std::vector<Label> combined(static_cast<size_t>(n) + 1);
    std::optional<Refusal> first_no;
    std::optional<InapplicableReason> first_inapplicable;
    int element_offset = 0;

    for (const auto& comp : comps) {
        auto [piece, to_g] = induced_subgraph(g, comp);
        Recognition r = recognize_component(piece);
        auto remap = [&](std::vector<int>& w) {
            for (int& v : w) v = to_g[static_cast<size_t>(v - 1)];
            std::sort(w.begin(), w.end());
        };
        if (r.verdict == Verdict::no) {
            remap(r.refusal->witness);
            first_no = std::move(r.refusal);
            break;
        }
        if (r.verdict == Verdict::inapplicable) {
            if (!first_inapplicable) {
                remap(r.inapplicable->witness);
                first_inapplicable = std::move(r.inapplicable);
            }
            continue;
        }
        // Disjoint ground sets per component keep cross-component label
        // intersections empty, matching the absent cross edges.
        int local_max = 0;
        for (int v = 1; v <= piece.vertex_count(); ++v) {
            Label l = r.labelling->label(v);
            for (int& e : l) {
                local_max = std::max(local_max, e);
                e += element_offset;
            }
            combined[static_cast<size_t>(to_g[static_cast<size_t>(v - 1)])] = std::move(l);
        }
        element_offset += local_max;
    }

    Recognition result;
    if (first_no) {
        result.verdict = Verdict::no;
        result.refusal = std::move(first_no);
        return result;
    }
    if (first_inapplicable) {
        result.verdict = Verdict::inapplicable;
        result.inapplicable = std::move(first_inapplicable);
        return result;
    }
    result.verdict = Verdict::yes;
    result.labelling = to_labelling(combined);
    VerificationReport report = verify_labelling(g, *result.labelling);
    check_internal(report.ok, "final labelling failed verification");
    return result;
}

Recognition tree_labelling(const Graph& g) {
    StructureReport rep = classify_basic(g);
    if (!rep.is_tree) throw error(errc::not_a_tree, "tree_labelling requires a tree");
    int n = g.vertex_count();
    Recognition r;
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) >= 4) {
            std::vector<int> witness{v};
            auto nbrs = g.neighbors(v);
            witness.insert(witness.end(), nbrs.begin(), nbrs.begin() + 4);
            r.verdict = Verdict::no;
            r.refusal = Refusal{Refusal::Code::tree_degree, std::move(witness),
                                "tree vertex of degree " + std::to_string(g.degree(v))};
            return r;
        }
    }
    std::vector<Label> labels(static_cast<size_t>(n) + 1);
    if (n >= 1) {
        PairCounts counts;
        labels[1] = {1, 2, 3};
        counts.add(labels[1]);
        int fresh = 4;
        std::deque<int> queue{1};
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        seen[1] = 1;
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(w)) {
                if (seen[static_cast<size_t>(v)]) continue;
                seen[static_cast<size_t>(v)] = 1;
                const Label& lw = labels[static_cast<size_t>(w)];
                Label chosen;
                for (size_t i = 0; i < lw.size() && chosen.empty(); ++i)
                    for (size_t j = i + 1; j < lw.size() && chosen.empty(); ++j)
                        if (counts.get(lw[i], lw[j]) == 1) chosen = {lw[i], lw[j]};
                check_internal(!chosen.empty(), "degree-3 tree vertex ran out of free pairs");
                chosen.push_back(fresh++);
                counts.add(chosen);
                labels[static_cast<size_t>(v)] = std::move(chosen);
                queue.push_back(v);
            }
        }
    }
    Recognition result = yes_with(std::move(labels));
    VerificationReport report = verify_labelling(g, *result.labelling);
    check_internal(report.ok, "tree labelling failed verification");
    return result;
}

Labelling construct_labelling(const CliqueTree& t, const SignAssignment& s, const Graph& g) {
    if (s.conflict) throw error(errc::malformed, "construct_labelling needs a conflict-free assignment");
    int count = static_cast<int>(t.nodes.size());
    std::vector<Label> labels(static_cast<size_t>(g.vertex_count()) + 1);
    if (count == 0) return to_labelling(labels);

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(count)); // (neighbor, edge idx)
    for (size_t i = 0; i < t.edges.size(); ++i) {
        adj[static_cast<size_t>(t.edges[i].a)].emplace_back(t.edges[i].b, static_cast<int>(i));
        adj[static_cast<size_t>(t.edges[i].b)].emplace_back(t.edges[i].a, static_cast<int>(i));
    }

    PairCounts counts;
    int fresh = 1;
    auto place = [&](int vertex, Label l) {
        std::sort(l.begin(), l.end());
        fresh = std::max(fresh, l.back() + 1);
        counts.add(l);
        check_internal(labels[static_cast<size_t>(vertex)].empty(), "vertex labelled twice");
        labels[static_cast<size_t>(vertex)] = std::move(l);
    };

    int root = t.root.value_or(0);
    const auto& root_clique = t.nodes[static_cast<size_t>(root)];
    Sign root_sign = s.sign[static_cast<size_t>(root)];
    if (root_sign == Sign::pos || root_clique.size() <= 2) {
        int third = 3;
        for (int v : root_clique) place(v, {1, 2, third++});
    } else {
        check_internal(root_clique.size() <= 4, "negative clique of size 5 or more");
        static const Label kNegPatterns[4] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
        for (size_t i = 0; i < root_clique.size(); ++i) place(root_clique[i], kNegPatterns[i]);
    }

    // Root-to-leaves: every child clique is labelled from its already
    // labelled separator into the parent.
    std::vector<char> done(static_cast<size_t>(count), 0);
    done[static_cast<size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        for (auto [child, ei] : adj[static_cast<size_t>(node)]) {
            if (done[static_cast<size_t>(child)]) continue;
            done[static_cast<size_t>(child)] = 1;
            queue.push_back(child);
            const auto& sep = t.edges[static_cast<size_t>(ei)].separator;
            const auto& clique = t.nodes[static_cast<size_t>(child)];
            Sign sign = s.sign[static_cast<size_t>(child)];
            std::vector<int> fresh_members;
            for (int v : clique)
                if (labels[static_cast<size_t>(v)].empty()) fresh_members.push_back(v);
            check_internal(fresh_members.size() + sep.size() == clique.size(),
                           "child clique overlaps the labelled region beyond its separator");

            if (sep.size() == 2) {
                const Label& a = labels[static_cast<size_t>(sep[0])];
                const Label& b = labels[static_cast<size_t>(sep[1])];
                Label shared = set_inter(a, b);
                check_internal(shared.size() == 2, "strong separator labels must share a pair");
                if (sign == Sign::pos) {
                    check_internal(counts.get(shared[0], shared[1]) == 2,
                                   "shared pair of a strong separator is not private");
                    for (int v : fresh_members) place(v, {shared[0], shared[1], fresh});
                } else {
                    check_internal(fresh_members.size() <= 2, "negative clique larger than 4");
                    int extra_a = set_minus(a, shared)[0];
                    int extra_b = set_minus(b, shared)[0];
                    if (!fresh_members.empty()) place(fresh_members[0], {shared[0], extra_a, extra_b});
                    if (fresh_members.size() == 2) place(fresh_members[1], {shared[1], extra_a, extra_b});
                }
            } else {
                const Label& u = labels[static_cast<size_t>(sep[0])];
                std::vector<std::pair<int, int>> free_pairs;
                for (size_t i = 0; i < u.size(); ++i)
                    for (size_t j = i + 1; j < u.size(); ++j)
                        if (counts.get(u[i], u[j]) == 1) free_pairs.emplace_back(u[i], u[j]);
                if (sign == Sign::pos) {
                    check_internal(!free_pairs.empty(), "weak child needs a free pair on its separator");
                    auto [x, y] = free_pairs.front();
                    for (int v : fresh_members) place(v, {x, y, fresh});
                } else {
                    check_internal(fresh_members.size() == 2, "negative weak child must be a triangle");
                    check_internal(free_pairs.size() >= 2, "negative weak child needs two free pairs");
                    int shared_extra = fresh;
                    place(fresh_members[0], {free_pairs[0].first, free_pairs[0].second, shared_extra});
                    place(fresh_members[1], {free_pairs[1].first, free_pairs[1].second, shared_extra});
                }
            }
        }
    }

    for (int v = 1; v <= g.vertex_count(); ++v)
        check_internal(!labels[static_cast<size_t>(v)].empty(), "construction left a vertex unlabelled");
    Labelling lab = to_labelling(labels);
    VerificationReport report = verify_labelling(g, lab);
    if (!report.ok) throw error(errc::internal_construction_failure, "constructed labelling failed verification");
    return lab;
}

Recognition merge_at_bridge(const Recognition& left, const Recognition& right, std::pair<int, int> bridge,
                            const BridgeAttachInfo& info) {
    if (left.verdict != Verdict::yes || right.verdict != Verdict::yes)
        throw error(errc::malformed, "merge_at_bridge needs two YES results");
    check_internal(info.merged != nullptr, "merge_at_bridge needs the merged graph");
    int n = info.merged->vertex_count();
    std::vector<Label> side1(static_cast<size_t>(n) + 1), side2(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= left.labelling->vertex_count(); ++v)
        side1[static_cast<size_t>(info.left_to_merged[static_cast<size_t>(v - 1)])] = left.labelling->label(v);
    for (int v = 1; v <= right.labelling->vertex_count(); ++v)
        side2[static_cast<size_t>(info.right_to_merged[static_cast<size_t>(v - 1)])] = right.labelling->label(v);
    std::vector<Label> merged = merge_sides(side1, side2, bridge.first, bridge.second);
    Recognition result = yes_with(std::move(merged));
    VerificationReport report = verify_labelling(*info.merged, *result.labelling);
    if (!report.ok)
        throw error(errc::internal_construction_failure, "bridge merge case failed verification");
    return result;
}

} // namespace ghrec
