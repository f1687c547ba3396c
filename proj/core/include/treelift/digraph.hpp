#ifndef TREELIFT_DIGRAPH_HPP
#define TREELIFT_DIGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treelift/errors.hpp"
#include "treelift/matrix.hpp"
#include "treelift/multipoly.hpp"
#include "treelift/prng.hpp"

namespace treelift {

/// Subset of the vertex index range, bitset semantics. Subset analysis
/// (connectivity enumeration, walk supports, forest roots) is a base-graph
/// facility and tops out at 64 vertices; lift graphs can be far larger but
/// never enter these code paths.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}
    static VertexSet single(int v) { return VertexSet(bit(v)); }
    static VertexSet full(int n) {
        if (n < 0 || n > 64) throw DomainError("vertex sets hold at most 64 vertices");
        return VertexSet(n == 64 ? ~0ull : (1ull << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= bit(v);
        return s;
    }

    bool contains(int v) const { return v >= 0 && v < 64 && ((bits >> v) & 1); }
    bool empty() const { return bits == 0; }
    int count() const;
    bool subset_of(const VertexSet& o) const { return (bits & ~o.bits) == 0; }

    VertexSet with(int v) const { return VertexSet(bits | bit(v)); }
    VertexSet without(int v) const { return VertexSet(bits & ~bit(v)); }
    VertexSet complement(int n) const { return VertexSet(full(n).bits & ~bits); }
    VertexSet operator|(const VertexSet& o) const { return VertexSet(bits | o.bits); }
    VertexSet operator&(const VertexSet& o) const { return VertexSet(bits & o.bits); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits == b.bits; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return a.bits != b.bits; }
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.bits < b.bits; }

    std::vector<int> members() const;
    std::string str() const; // "{0,2,3}"

private:
    static std::uint64_t bit(int v) {
        if (v < 0 || v >= 64) throw DomainError("vertex index outside the 64-bit subset range");
        return 1ull << v;
    }
};

/// Canonical subset order used everywhere results are listed: size
/// descending, then lexicographic on the sorted member list.
bool canonical_subset_less(const VertexSet& a, const VertexSet& b);

struct Edge {
    int from = 0;
    int to = 0;
    Weight w;
};

/// Simple weighted directed graph. At most one edge per ordered pair, no
/// self-loops in the edge list; self-transitions (or other diagonal data)
/// live in the per-vertex diagonal. Optional per-vertex weights hold the
/// y_v data of Schrodinger matrices. Immutable once built.
class Digraph {
public:
    explicit Digraph(int n);
    Digraph(int n, std::vector<Edge> edges, std::vector<Weight> diagonal = {},
            std::optional<std::vector<Weight>> vertex_weights = std::nullopt,
            std::vector<std::string> labels = {});

    void add_edge(int u, int v, Weight w);
    void set_diagonal(int v, Weight w);
    void set_vertex_weight(int v, Weight w);
    void set_label(int v, std::string label);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Weight& diagonal(int v) const { return diag_.at(static_cast<std::size_t>(v)); }
    bool has_vertex_weights() const { return vweights_.has_value(); }
    /// y_v; zero when no vertex weights were declared.
    Weight vertex_weight(int v) const;

    std::span<const Edge> out_edges(int v) const;
    const Weight* edge_weight(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_weight(u, v) != nullptr; }

    /// Graph file format, one directive per line, '#' comments:
    ///   graph <n>, edge <u> <v> <w>, diag <v> <w>, vweight <v> <w>
    /// where <w> is an integer, "p/q", "sym" (canonical variable) or a
    /// variable name.
    static Digraph parse(std::string_view text);
    std::string serialize() const;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_; // sorted by (from, to), unique
    std::vector<Weight> diag_;
    std::optional<std::vector<Weight>> vweights_;

    void check_vertex(int v) const;
};

/// Canonical symbolic names used by "sym" weights.
std::string edge_var_name(int u, int v);
std::string vertex_var_name(int v);
std::string diag_var_name(int v);

bool is_strongly_connected(const Digraph& g);
bool is_strongly_connected_subset(const Digraph& g, VertexSet w);

/// Vertices reachable from `start` inside `within`, following out-edges
/// (forward) or in-edges (backward). Includes `start`.
VertexSet reachable_set(const Digraph& g, int start, VertexSet within, bool forward);
/// Strongly connected component of `v` in the subgraph induced on `within`.
VertexSet scc_containing(const Digraph& g, int v, VertexSet within);

/// Keeps edges with both ends in w plus the diagonal entries of w;
/// vertices are reindexed, labels preserved. w must be nonempty.
Digraph induced_subgraph(const Digraph& g, VertexSet w);

/// All nonempty subsets whose induced subgraph is strongly connected.
/// Singletons always qualify; V itself qualifies iff g does. Canonical
/// order: size descending, then lexicographic.
std::vector<VertexSet> strongly_connected_subsets(const Digraph& g);

/// Total weight of based closed walks, classified by (length, visited
/// set). Walks may use diagonal self-transitions. The per-length total
/// equals trace of the n-th power of the weight-plus-diagonal matrix.
struct WalkSupportTable {
    int max_len = 0;
    std::map<std::pair<int, VertexSet>, Weight> entries;

    const Weight* get(int len, VertexSet support) const;
    Weight total(int len) const;
};

WalkSupportTable closed_walk_support_sums(const Digraph& g, int max_len);

/// The full weight-plus-diagonal matrix (P when the graph is a chain).
RingMatrix weight_matrix(const Digraph& g);

bool is_symbolic(const Digraph& g);
/// All weights and diagonal entries rational, nonnegative, each row
/// (diagonal plus out-weights) summing to one.
bool is_row_stochastic(const Digraph& g);

/// Weight-transformation helpers. Shapes are preserved; only weights move.
Digraph with_unit_weights(const Digraph& g);
Digraph with_symbolic_weights(const Digraph& g);
Digraph with_random_rational_weights(const Digraph& g, Prng& rng,
                                     std::uint64_t lo = 1, std::uint64_t hi = 20);
Digraph with_row_stochastic_weights(const Digraph& g, Prng& rng, bool with_diagonal);
Digraph evaluate_weights(const Digraph& g, const std::map<std::string, Rational>& assignment);

} // namespace treelift

#endif
