#include "treelift/lift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "treelift/errors.hpp"

namespace treelift {

std::size_t predicted_lift_size(const Digraph& g) {
    Digraph unit = with_unit_weights(g);
    Weight t = tau_via_matrix(unit);
    Rational r = t.constant_value();
    if (!r.is_integer() || r.sign() < 0) throw Error("non-integer arborescence count");
    mpz_class z = r.numerator();
    if (!z.fits_ulong_p()) throw CapExceeded("arborescence count overflows size_t");
    return static_cast<std::size_t>(z.get_ui());
}

Arborescence transfer_tree(const Arborescence& t, int j) {
    Arborescence out = t;
    out.out[static_cast<std::size_t>(t.root)] = j;
    out.out[static_cast<std::size_t>(j)] = -1;
    out.root = j;
    return out;
}

LiftGraph build_lift(const Digraph& g, std::size_t cap) {
    if (!is_strongly_connected(g))
        throw DomainError("lift construction requires a strongly connected graph");
    std::size_t predicted = predicted_lift_size(g);
    if (predicted > cap)
        throw CapExceeded("lift would have " + std::to_string(predicted) +
                          " vertices, above the cap of " + std::to_string(cap));

    std::vector<Arborescence> tree_of;
    std::vector<int> root_of;
    std::unordered_map<std::string, int> index; // root-prefixed encoding -> lift vertex
    auto key = [](int root, const std::string& enc) { return std::to_string(root) + ":" + enc; };
    for (int root = 0; root < g.vertex_count(); ++root) {
        for (Arborescence& t : enumerate_trees(g, root)) {
            index.emplace(key(root, t.encode()), static_cast<int>(tree_of.size()));
            root_of.push_back(root);
            tree_of.push_back(std::move(t));
        }
    }
    if (tree_of.size() != predicted)
        throw Error("lift size prediction disagrees with enumeration");

    int m = static_cast<int>(tree_of.size());
    std::vector<Edge> edges;
    std::vector<Weight> diag;
    std::optional<std::vector<Weight>> vws;
    if (g.has_vertex_weights()) vws.emplace();
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) {
        const Arborescence& t = tree_of[static_cast<std::size_t>(i)];
        int root = root_of[static_cast<std::size_t>(i)];
        labels.push_back("r" + std::to_string(root) + ":" + t.encode());
        diag.push_back(g.diagonal(root));
        if (vws) vws->push_back(g.vertex_weight(root));
        for (const Edge& e : g.out_edges(root)) {
            Arborescence next = transfer_tree(t, e.to);
            auto it = index.find(key(e.to, next.encode()));
            if (it == index.end()) throw Error("tree transfer left the arborescence set");
            edges.push_back({i, it->second, e.w});
        }
    }
    // the Digraph constructor re-checks simplicity and the absence of loops
    return LiftGraph{Digraph(m, std::move(edges), std::move(diag), std::move(vws),
                             std::move(labels)),
                     std::move(tree_of), std::move(root_of)};
}

RingMatrix lift_matrix(const Digraph& g, const LiftGraph& lg) {
    for (int i = 0; i < static_cast<int>(lg.size()); ++i)
        if (!is_valid_arborescence(g, lg.tree_of[static_cast<std::size_t>(i)]))
            throw DomainError("lift does not belong to this graph");
    return weight_matrix(lg.graph);
}

RingMatrix schrodinger_matrix(const Digraph& g) {
    RingMatrix h = laplacian(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        h.at(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) += g.vertex_weight(v);
    return h;
}

SchrodingerPair lift_schrodinger(const Digraph& g, const LiftGraph& lg) {
    return {schrodinger_matrix(g), schrodinger_matrix(lg.graph)};
}

namespace {

// All based closed walks of length 1..max_len, as vertex sequences; steps
// run along edges or along a nonzero diagonal (self-transition).
std::vector<std::vector<int>> closed_walks(const Digraph& g, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> walk;
    auto can_step = [&](int v, int u) {
        if (u == v) return !g.diagonal(v).is_zero();
        return g.has_edge(v, u);
    };
    std::function<void(int)> rec = [&](int start) {
        int v = walk.back();
        if (static_cast<int>(walk.size()) <= max_len && can_step(v, start))
            out.push_back(walk);
        if (static_cast<int>(walk.size()) == max_len) return;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (!can_step(v, u)) continue;
            walk.push_back(u);
            rec(start);
            walk.pop_back();
        }
    };
    for (int b = 0; b < g.vertex_count(); ++b) {
        walk.assign(1, b);
        rec(b);
    }
    return out;
}

} // namespace

WalkLiftReport count_walk_lifts(const Digraph& g, const LiftGraph& lg, int max_len) {
    if (max_len < 1) throw DomainError("walk length must be at least 1");
    if (lg.size() > 4096) throw CapExceeded("walk lift counting needs a small lift");
    WalkLiftReport report;

    // closed walks upstairs, bucketed by root projection
    std::map<std::vector<int>, long long> lifted;
    for (const auto& w : closed_walks(lg.graph, max_len)) {
        std::vector<int> projected;
        projected.reserve(w.size());
        for (int t : w) projected.push_back(lg.root_of[static_cast<std::size_t>(t)]);
        ++lifted[projected];
    }

    for (const auto& walk : closed_walks(g, max_len)) {
        WalkLiftRecord rec;
        rec.walk = walk;
        for (int v : walk) rec.support = rec.support.with(v);
        auto it = lifted.find(walk);
        rec.lift_count = it == lifted.end() ? 0 : it->second;
        rec.forest_count = k_count(g, rec.support);
        rec.ok = rec.lift_count == rec.forest_count;
        if (!rec.ok) report.all_ok = false;
        ++report.walks_checked;
        report.records.push_back(std::move(rec));
    }

    // every projected walk must occur downstairs as well
    for (const auto& [walk, count] : lifted) {
        bool closed_downstairs = false;
        for (const auto& rec : report.records)
            if (rec.walk == walk) {
                closed_downstairs = true;
                break;
            }
        if (!closed_downstairs) {
            report.all_ok = false;
            WalkLiftRecord rec;
            rec.walk = walk;
            rec.lift_count = count;
            rec.forest_count = -1;
            rec.ok = false;
            report.records.push_back(std::move(rec));
        }
    }
    return report;
}

std::string lift_label_map(const LiftGraph& lg) {
    std::ostringstream os;
    for (std::size_t i = 0; i < lg.size(); ++i)
        os << i << " " << lg.root_of[i] << " " << lg.tree_of[i].encode() << "\n";
    return os.str();
}

LiftFileCheck check_lift_files(const Digraph& g, std::string_view lift_text,
                               std::string_view sidecar_text, std::size_t cap) {
    LiftGraph rebuilt = build_lift(g, cap);

    Digraph provided = Digraph::parse(lift_text); // ParseError propagates (input error)
    std::string canonical = rebuilt.graph.serialize();
    std::string given = provided.serialize();
    if (canonical != given) {
        // locate the first differing line for the message
        std::istringstream a(canonical), b(given);
        std::string la, lb;
        int line = 0;
        while (true) {
            ++line;
            bool ga = static_cast<bool>(std::getline(a, la));
            bool gb = static_cast<bool>(std::getline(b, lb));
            if (!ga && !gb) break;
            if (la != lb || ga != gb)
                return {false, "lift graph mismatch at canonical line " + std::to_string(line) +
                                   ": expected '" + (ga ? la : "<eof>") + "', found '" +
                                   (gb ? lb : "<eof>") + "'"};
            la.clear();
            lb.clear();
        }
        return {false, "lift graph differs from the rebuilt lift"};
    }
    if (lift_label_map(rebuilt) != std::string(sidecar_text)) {
        std::istringstream in{std::string(sidecar_text)};
        std::string line;
        std::size_t idx = 0;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::size_t i;
            int root;
            std::string enc;
            if (!(ls >> i >> root >> enc))
                return {false, "sidecar line " + std::to_string(idx + 1) + " is malformed"};
            if (i >= rebuilt.size() || i != idx)
                return {false, "sidecar indices must run 0.." + std::to_string(rebuilt.size() - 1)};
            if (root != rebuilt.root_of[i] || enc != rebuilt.tree_of[i].encode())
                return {false, "sidecar entry " + std::to_string(i) +
                                   " does not name the canonical arborescence"};
            ++idx;
        }
        return {false, "sidecar does not match the rebuilt label map"};
    }
    return {true, "lift files match the canonical lift of the input graph"};
}

} // namespace treelift
