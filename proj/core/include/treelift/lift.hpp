#ifndef TREELIFT_LIFT_HPP
#define TREELIFT_LIFT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "treelift/arborescence.hpp"
#include "treelift/digraph.hpp"
#include "treelift/matrix.hpp"

namespace treelift {

/// The spanning tree graph of G. Vertices are the arborescences of G over
/// all roots (ordered by root, then lexicographic tree encoding); there is
/// an edge t_i -> t_j whenever t_j arises from t_i by adding the edge
/// (i, j) of G and deleting j's outgoing edge, and it carries the weight
/// of (i, j). Diagonal data and vertex weights transfer root-wise.
struct LiftGraph {
    Digraph graph;
    std::vector<Arborescence> tree_of;
    std::vector<int> root_of;

    std::size_t size() const { return tree_of.size(); }
};

/// Predicted lift size: the arborescence count of g (unit-weight Laplacian
/// minors summed over roots).
std::size_t predicted_lift_size(const Digraph& g);

/// Builds the spanning tree graph. Requires g strongly connected; refuses
/// to build more than `cap` lift vertices (fails fast on the prediction).
LiftGraph build_lift(const Digraph& g, std::size_t cap = 100000);

/// Tree reached from t by adding edge (root(t), j) and removing j's
/// outgoing edge.
Arborescence transfer_tree(const Arborescence& t, int j);

/// Lifted weight-plus-diagonal matrix over the lift vertex labels.
RingMatrix lift_matrix(const Digraph& g, const LiftGraph& lg);

/// H = Q + Y where Q is the edge-weight Laplacian and Y the diagonal of
/// vertex weights (zero when the graph declares none).
RingMatrix schrodinger_matrix(const Digraph& g);

struct SchrodingerPair {
    RingMatrix base;   // H on G
    RingMatrix lifted; // H on the lift
};
SchrodingerPair lift_schrodinger(const Digraph& g, const LiftGraph& lg);

/// Per-walk verification that closed walks of the lift projecting onto a
/// given closed walk of G are counted by spanning forests rooted in the
/// walk's support.
struct WalkLiftRecord {
    std::vector<int> walk; // base vertex sequence, length = walk length
    VertexSet support;
    long long lift_count = 0;
    long long forest_count = 0;
    bool ok = false;
};

struct WalkLiftReport {
    std::vector<WalkLiftRecord> records;
    bool all_ok = true;
    std::size_t walks_checked = 0;
};

WalkLiftReport count_walk_lifts(const Digraph& g, const LiftGraph& lg, int max_len);

/// Sidecar label map: one line per lift vertex, "<index> <root> <encoding>".
std::string lift_label_map(const LiftGraph& lg);

struct LiftFileCheck {
    bool ok = false;
    std::string message;
};

/// Validates a serialized lift (graph file + sidecar) against the graph it
/// claims to lift: sidecar trees must be the arborescences of g in
/// canonical order and the graph file must match the rebuilt lift
/// byte-for-byte in canonical form.
LiftFileCheck check_lift_files(const Digraph& g, std::string_view lift_text,
                               std::string_view sidecar_text, std::size_t cap = 100000);

} // namespace treelift

#endif
