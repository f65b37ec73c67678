#include "ghrec/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace ghrec {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

Labelling::Labelling(std::vector<std::vector<int>> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) return;
    k_ = static_cast<int>(labels_[0].size());
    for (size_t i = 0; i < labels_.size(); ++i) {
        auto& lab = labels_[i];
        if (static_cast<int>(lab.size()) != k_ || k_ < 1)
            throw error(errc::bad_arity, "vertex " + std::to_string(i + 1) + " has " +
                                             std::to_string(lab.size()) + " elements, expected " + std::to_string(k_));
        std::sort(lab.begin(), lab.end());
        for (size_t j = 1; j < lab.size(); ++j)
            if (lab[j] == lab[j - 1])
                throw error(errc::duplicate_element_in_label,
                            "vertex " + std::to_string(i + 1) + " repeats element " + std::to_string(lab[j]));
        for (int e : lab)
            if (e < 0) throw error(errc::malformed, "negative ground element");
    }
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) {
            std::ostringstream msg;
            msg << "label {";
            for (size_t j = 0; j < sorted[i].size(); ++j) msg << (j ? "," : "") << sorted[i][j];
            msg << "} appears twice";
            throw error(errc::duplicate_label, msg.str());
        }
}

int Labelling::max_element() const {
    int best = 0;
    for (const auto& lab : labels_)
        if (!lab.empty()) best = std::max(best, lab.back());
    return best;
}

Labelling parse_labelling(std::istream& in) {
    std::string line;
    std::map<long long, std::vector<int>> by_vertex;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head.empty()) continue;
        if (head != "l") throw error(errc::malformed_line, "unrecognized line '" + line + "'" + where());
        long long v;
        if (!(ss >> v) || v < 1) throw error(errc::malformed_line, "bad vertex id" + where());
        std::vector<int> elems;
        long long e;
        while (ss >> e) {
            if (e < 0) throw error(errc::malformed_line, "negative element" + where());
            elems.push_back(static_cast<int>(e));
        }
        if (!ss.eof()) throw error(errc::malformed_line, "trailing junk" + where());
        if (elems.empty()) throw error(errc::malformed_line, "empty label" + where());
        if (by_vertex.count(v)) throw error(errc::malformed_line, "vertex " + std::to_string(v) + " repeated" + where());
        by_vertex[v] = std::move(elems);
    }
    if (by_vertex.empty()) return Labelling();
    long long n = by_vertex.rbegin()->first;
    if (static_cast<long long>(by_vertex.size()) != n)
        throw error(errc::vertex_mismatch, "labelling must cover vertices 1.." + std::to_string(n));
    std::vector<std::vector<int>> labels;
    labels.reserve(by_vertex.size());
    for (auto& [v, lab] : by_vertex) labels.push_back(std::move(lab));
    return Labelling(std::move(labels));
}

Labelling parse_labelling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::malformed, "cannot open '" + path + "'");
    return parse_labelling(in);
}

std::string serialize_labelling(const Labelling& lab) {
    std::ostringstream out;
    for (int v = 1; v <= lab.vertex_count(); ++v) {
        out << "l " << v;
        for (int e : lab.label(v)) out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

namespace {

uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

// Edges of the 2-intersection image of a 3-uniform labelling, via grouping
// vertices by the element pairs inside their labels. Two distinct labels
// intersect in exactly 2 elements iff they share exactly one such pair, so
// no deduplication is needed. Linear in output size.
std::vector<std::pair<int, int>> image2_edges(const Labelling& lab) {
    std::unordered_map<uint64_t, std::vector<int>> groups;
    groups.reserve(static_cast<size_t>(lab.vertex_count()) * 3);
    for (int v = 1; v <= lab.vertex_count(); ++v) {
        const auto& l = lab.label(v);
        for (size_t i = 0; i < l.size(); ++i)
            for (size_t j = i + 1; j < l.size(); ++j) groups[pair_key(l[i], l[j])].push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [key, vs] : groups) {
        (void)key;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                edges.emplace_back(std::min(vs[i], vs[j]), std::max(vs[i], vs[j]));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

Graph image(const Labelling& lab, int l) {
    int k = lab.uniformity();
    if (lab.vertex_count() == 0) return Graph(0, {});
    if (l < 1 || l >= k) throw error(errc::bad_l, "l=" + std::to_string(l) + " with k=" + std::to_string(k));
    if (k == 3 && l == 2) return Graph(lab.vertex_count(), image2_edges(lab));
    // General case: candidate pairs share at least one element; check exactly.
    std::unordered_map<int, std::vector<int>> by_element;
    for (int v = 1; v <= lab.vertex_count(); ++v)
        for (int e : lab.label(v)) by_element[e].push_back(v);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [e, vs] : by_element) {
        (void)e;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                int u = vs[i], w = vs[j];
                if (intersection_size(lab.label(u), lab.label(w)) == l)
                    edges.emplace_back(std::min(u, w), std::max(u, w));
            }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(lab.vertex_count(), std::move(edges));
}

const char* to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::missing_edge: return "MISSING_EDGE";
        case Violation::Kind::extra_edge: return "EXTRA_EDGE";
        case Violation::Kind::duplicate_label: return "DUPLICATE_LABEL";
        case Violation::Kind::bad_arity: return "BAD_ARITY";
    }
    return "UNKNOWN";
}

VerificationReport verify_labelling(const Graph& g, const Labelling& lab) {
    if (lab.vertex_count() != g.vertex_count())
        throw error(errc::vertex_mismatch, "labelling covers " + std::to_string(lab.vertex_count()) +
                                               " vertices, graph has " + std::to_string(g.vertex_count()));
    VerificationReport report;
    if (g.vertex_count() == 0) {
        report.ok = true;
        return report;
    }
    if (lab.uniformity() != 3) {
        for (int v = 1; v <= lab.vertex_count(); ++v)
            report.violations.push_back({Violation::Kind::bad_arity, v, 0, 0});
        return report;
    }
    // Labelling construction already rejects duplicate labels and mixed
    // arity, so the remaining discrepancies are edge mismatches.
    auto edges = image2_edges(lab);
    const auto& want = g.edges();
    size_t i = 0, j = 0;
    while (i < edges.size() || j < want.size()) {
        if (j == want.size() || (i < edges.size() && edges[i] < want[j])) {
            auto [u, v] = edges[i++];
            report.violations.push_back({Violation::Kind::extra_edge, u, v, 2});
        } else if (i == edges.size() || want[j] < edges[i]) {
            auto [u, v] = want[j++];
            report.violations.push_back(
                {Violation::Kind::missing_edge, u, v, intersection_size(lab.label(u), lab.label(v))});
        } else {
            ++i;
            ++j;
        }
    }
    report.ok = report.violations.empty();
    return report;
}

int multiplicity(const Labelling& lab) {
    std::unordered_map<uint64_t, int> counts;
    for (int v = 1; v <= lab.vertex_count(); ++v) {
        const auto& l = lab.label(v);
        for (size_t i = 0; i < l.size(); ++i)
            for (size_t j = i + 1; j < l.size(); ++j) ++counts[pair_key(l[i], l[j])];
    }
    int best = 0;
    for (const auto& [key, c] : counts) {
        (void)key;
        best = std::max(best, c);
    }
    return best;
}

Labelling lift(const Labelling& lab) {
    int fresh = lab.max_element() + 1;
    std::vector<std::vector<int>> labels;
    labels.reserve(static_cast<size_t>(lab.vertex_count()));
    for (int v = 1; v <= lab.vertex_count(); ++v) {
        auto l = lab.label(v);
        l.push_back(fresh++);
        labels.push_back(std::move(l));
    }
    return Labelling(std::move(labels));
}

} // namespace ghrec
