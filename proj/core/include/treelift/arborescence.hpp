#ifndef TREELIFT_ARBORESCENCE_HPP
#define TREELIFT_ARBORESCENCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "treelift/digraph.hpp"
#include "treelift/matrix.hpp"

namespace treelift {

/// Directed rooted spanning tree. Every non-root vertex has exactly one
/// outgoing edge and following them reaches the root.
struct Arborescence {
    int root = 0;
    std::vector<int> out; // out[v] = head of v's edge, -1 at the root

    /// "1>2,2>0" (non-root vertices ascending); "-" for a single vertex.
    std::string encode() const;

    friend bool operator==(const Arborescence& a, const Arborescence& b) {
        return a.root == b.root && a.out == b.out;
    }
    friend bool operator<(const Arborescence& a, const Arborescence& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.out < b.out;
    }
};

/// Spanning forest rooted in a nonempty vertex set: every outside vertex
/// has one outgoing edge and drains into the root set.
struct Forest {
    VertexSet roots;
    std::vector<int> out; // -1 on roots

    std::string encode() const;

    friend bool operator==(const Forest& a, const Forest& b) {
        return a.roots == b.roots && a.out == b.out;
    }
};

bool is_valid_arborescence(const Digraph& g, const Arborescence& t);
bool is_valid_forest(const Digraph& g, const Forest& f);

/// All arborescences rooted at `root`, lexicographic on the out-map.
std::vector<Arborescence> enumerate_trees(const Digraph& g, int root);
/// All forests rooted in `roots` (nonempty), lexicographic on the out-map.
std::vector<Forest> enumerate_forests(const Digraph& g, VertexSet roots);

/// Number of spanning forests rooted in `roots` (the k(W) count).
long long k_count(const Digraph& g, VertexSet roots);

Weight tree_weight(const Digraph& g, const Arborescence& t);
Weight forest_weight(const Digraph& g, const Forest& f);

/// Sum of the weights of spanning forests rooted at `roots` (Psi_R).
Weight psi_sum(const Digraph& g, VertexSet roots);

/// Sum of the weights of all arborescences over all roots, by enumeration.
Weight tau(const Digraph& g);
/// Same value through Laplacian minors; the matrix-tree route.
Weight tau_via_matrix(const Digraph& g);

/// Combinatorial Laplacian of the edge weights: off-diagonal -w(i,j),
/// diagonal the out-weight sum. Rows sum to zero; the graph diagonal is
/// not part of it. Equals I - P for a row-stochastic weighting and Q for
/// raw symbolic weights.
RingMatrix laplacian(const Digraph& g);

struct MinorCheck {
    Weight minor_det;
    Weight forest_sum;
    bool ok = false;
};

/// det(L with rows/cols of W removed) against the enumerated forest sum.
MinorCheck matrix_forest_check(const Digraph& g, VertexSet w);
/// Single-root specialization.
MinorCheck matrix_tree_check(const Digraph& g, int root);

} // namespace treelift

#endif
