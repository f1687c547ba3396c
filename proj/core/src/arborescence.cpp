#include "treelift/arborescence.hpp"

#include <algorithm>
#include <sstream>

#include "treelift/errors.hpp"

namespace treelift {

namespace {

std::string encode_out_map(const std::vector<int>& out) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t v = 0; v < out.size(); ++v) {
        if (out[v] < 0) continue;
        if (!first) os << ",";
        os << v << ">" << out[v];
        first = false;
    }
    if (first) return "-";
    return os.str();
}

// Depth-first enumeration over per-vertex out-edge choices. Non-root
// vertices are assigned in ascending order, choices scanned in ascending
// target order, so results come out lexicographic on the out-map.
void for_each_functional(const Digraph& g, VertexSet roots,
                         const std::function<void(const std::vector<int>&)>& fn) {
    int n = g.vertex_count();
    if (n > 64) throw CapExceeded("tree and forest enumeration supports at most 64 vertices");
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
        if (!roots.contains(v)) vs.push_back(v);
    std::vector<int> out(static_cast<std::size_t>(n), -1);

    auto creates_cycle = [&](int v) {
        int cur = out[static_cast<std::size_t>(v)];
        while (cur >= 0) {
            if (cur == v) return true;
            cur = out[static_cast<std::size_t>(cur)];
        }
        return false;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == vs.size()) {
            fn(out);
            return;
        }
        int v = vs[idx];
        for (const Edge& e : g.out_edges(v)) {
            out[static_cast<std::size_t>(v)] = e.to;
            if (!creates_cycle(v)) rec(idx + 1);
        }
        out[static_cast<std::size_t>(v)] = -1;
    };
    rec(0);
}

} // namespace

std::string Arborescence::encode() const {
    return encode_out_map(out);
}

std::string Forest::encode() const {
    return encode_out_map(out);
}

bool is_valid_forest(const Digraph& g, const Forest& f) {
    int n = g.vertex_count();
    if (f.roots.empty()) return false;
    if (static_cast<int>(f.out.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        if (f.roots.contains(v)) {
            if (f.out[static_cast<std::size_t>(v)] != -1) return false;
            continue;
        }
        int u = f.out[static_cast<std::size_t>(v)];
        if (u < 0 || u >= n || !g.has_edge(v, u)) return false;
    }
    // every non-root vertex drains into the root set
    for (int v = 0; v < n; ++v) {
        int cur = v, steps = 0;
        while (!f.roots.contains(cur)) {
            cur = f.out[static_cast<std::size_t>(cur)];
            if (++steps > n) return false; // cycle
        }
    }
    return true;
}

bool is_valid_arborescence(const Digraph& g, const Arborescence& t) {
    Forest f{VertexSet::single(t.root), t.out};
    return is_valid_forest(g, f);
}

std::vector<Arborescence> enumerate_trees(const Digraph& g, int root) {
    if (root < 0 || root >= g.vertex_count()) throw DomainError("root out of range");
    std::vector<Arborescence> out;
    for_each_functional(g, VertexSet::single(root),
                        [&](const std::vector<int>& o) { out.push_back({root, o}); });
    return out;
}

std::vector<Forest> enumerate_forests(const Digraph& g, VertexSet roots) {
    if (roots.empty()) throw DomainError("forest root set must be nonempty");
    if (!roots.subset_of(VertexSet::full(g.vertex_count())))
        throw DomainError("root set out of range");
    std::vector<Forest> out;
    for_each_functional(g, roots, [&](const std::vector<int>& o) { out.push_back({roots, o}); });
    return out;
}

long long k_count(const Digraph& g, VertexSet roots) {
    if (roots.empty()) throw DomainError("forest root set must be nonempty");
    long long k = 0;
    for_each_functional(g, roots, [&](const std::vector<int>&) { ++k; });
    return k;
}

Weight tree_weight(const Digraph& g, const Arborescence& t) {
    return forest_weight(g, Forest{VertexSet::single(t.root), t.out});
}

Weight forest_weight(const Digraph& g, const Forest& f) {
    Weight acc(1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int u = f.out[static_cast<std::size_t>(v)];
        if (u < 0) continue;
        const Weight* w = g.edge_weight(v, u);
        if (!w) throw DomainError("forest uses a non-edge");
        acc *= *w;
    }
    return acc;
}

Weight psi_sum(const Digraph& g, VertexSet roots) {
    if (roots.empty()) throw DomainError("forest root set must be nonempty");
    Weight acc;
    for_each_functional(g, roots, [&](const std::vector<int>& o) {
        acc += forest_weight(g, Forest{roots, o});
    });
    return acc;
}

Weight tau(const Digraph& g) {
    Weight acc;
    for (int v = 0; v < g.vertex_count(); ++v) acc += psi_sum(g, VertexSet::single(v));
    return acc;
}

Weight tau_via_matrix(const Digraph& g) {
    RingMatrix lap = laplacian(g);
    Weight acc;
    for (int v = 0; v < g.vertex_count(); ++v) acc += det(minor_by_indices(lap, {v}));
    return acc;
}

RingMatrix laplacian(const Digraph& g) {
    RingMatrix m(g.labels());
    for (const Edge& e : g.edges()) {
        m.at(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to)) = -e.w;
        m.at(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.from)) += e.w;
    }
    return m;
}

MinorCheck matrix_forest_check(const Digraph& g, VertexSet w) {
    MinorCheck out;
    std::vector<int> remove = w.members();
    out.minor_det = det(minor_by_indices(laplacian(g), remove));
    out.forest_sum = psi_sum(g, w);
    out.ok = out.minor_det == out.forest_sum;
    return out;
}

MinorCheck matrix_tree_check(const Digraph& g, int root) {
    return matrix_forest_check(g, VertexSet::single(root));
}

} // namespace treelift
