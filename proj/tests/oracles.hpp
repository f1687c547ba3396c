// Independent test oracles. Everything here recomputes results through a
// different route than the library: cofactor determinants, filter-style
// forest enumeration, closure-based connectivity, explicit walk listing.

#ifndef TREELIFT_TESTS_ORACLES_HPP
#define TREELIFT_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include "treelift/arborescence.hpp"
#include "treelift/digraph.hpp"
#include "treelift/matrix.hpp"

namespace oracles {

using namespace treelift;

// Laplace expansion along the first row; fine up to n = 5.
inline Weight det_cofactor(const RingMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return Weight(1);
    if (n == 1) return m.at(0, 0);
    Weight acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<std::string> labels;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) labels.push_back(m.labels()[c]);
        // submatrix without row 0 / column j, labels along the columns
        RingMatrix sub(labels);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc) = m.at(r, c);
                ++cc;
            }
        }
        Weight term = m.at(0, j) * det_cofactor(sub);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// All out-edge assignments for the non-root vertices, post-filtered by
// "every vertex drains into the root set" (no incremental pruning).
inline std::vector<std::vector<int>> functional_maps(const Digraph& g, VertexSet roots) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> result;
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
        if (!roots.contains(v)) vs.push_back(v);

    std::vector<std::size_t> choice(vs.size(), 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < vs.size() && ok; ++i) {
            auto outs = g.out_edges(vs[i]);
            if (choice[i] >= outs.size())
                ok = false;
            else
                out[static_cast<std::size_t>(vs[i])] = outs[choice[i]].to;
        }
        if (vs.empty()) {
            result.push_back(out);
            break;
        }
        if (ok) {
            // keep it when every chain reaches the root set
            bool forest = true;
            for (int v = 0; v < n && forest; ++v) {
                int cur = v, steps = 0;
                while (!roots.contains(cur)) {
                    cur = out[static_cast<std::size_t>(cur)];
                    if (cur < 0 || ++steps > n) {
                        forest = false;
                        break;
                    }
                }
            }
            if (forest) result.push_back(out);
        }
        // advance the odometer
        std::size_t pos = 0;
        while (pos < vs.size()) {
            auto outs = g.out_edges(vs[pos]);
            if (++choice[pos] < outs.size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == vs.size()) break;
    }
    return result;
}

inline long long forest_count(const Digraph& g, VertexSet roots) {
    return static_cast<long long>(functional_maps(g, roots).size());
}

inline Weight forest_weight_sum(const Digraph& g, VertexSet roots) {
    Weight acc;
    for (const auto& out : functional_maps(g, roots))
        acc += forest_weight(g, Forest{roots, out});
    return acc;
}

inline Weight tree_sum_over_roots(const Digraph& g) {
    Weight acc;
    for (int v = 0; v < g.vertex_count(); ++v)
        acc += forest_weight_sum(g, VertexSet::single(v));
    return acc;
}

// Warshall-style reachability closure; subset strongly connected iff all
// pairs reach each other inside the subset.
inline bool strongly_connected_by_closure(const Digraph& g, VertexSet w) {
    int n = g.vertex_count();
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int v = 0; v < n; ++v) reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = true;
    for (const Edge& e : g.edges())
        if (w.contains(e.from) && w.contains(e.to))
            reach[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int i : w.members())
        for (int j : w.members())
            if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    return true;
}

// Explicit list of based closed walks of exactly length n, as sequences.
inline void closed_walks_of_length(const Digraph& g, int len,
                                   std::vector<std::vector<int>>& out) {
    std::vector<int> walk;
    auto can_step = [&](int v, int u) {
        if (u == v) return !g.diagonal(v).is_zero();
        return g.has_edge(v, u);
    };
    std::function<void()> rec = [&]() {
        if (static_cast<int>(walk.size()) == len) {
            if (can_step(walk.back(), walk.front())) out.push_back(walk);
            return;
        }
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (!can_step(walk.back(), u)) continue;
            walk.push_back(u);
            rec();
            walk.pop_back();
        }
    };
    for (int b = 0; b < g.vertex_count(); ++b) {
        walk.assign(1, b);
        rec();
    }
}

// Walk weight sums by (length, support) computed from the explicit lists.
inline std::map<std::pair<int, VertexSet>, Weight> walk_sums_explicit(const Digraph& g,
                                                                      int max_len) {
    std::map<std::pair<int, VertexSet>, Weight> table;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> walks;
        closed_walks_of_length(g, len, walks);
        for (const auto& w : walks) {
            Weight weight(1);
            VertexSet support;
            for (std::size_t i = 0; i < w.size(); ++i) {
                int a = w[i], b = w[(i + 1) % w.size()];
                weight *= a == b ? g.diagonal(a) : *g.edge_weight(a, b);
                support = support.with(a);
            }
            table[{len, support}] += weight;
        }
    }
    for (auto it = table.begin(); it != table.end();)
        it = it->second.is_zero() ? table.erase(it) : std::next(it);
    return table;
}

} // namespace oracles

#endif
