#ifndef TREELIFT_IDENTITIES_HPP
#define TREELIFT_IDENTITIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treelift/arborescence.hpp"
#include "treelift/digraph.hpp"
#include "treelift/lift.hpp"
#include "treelift/prng.hpp"
#include "treelift/series.hpp"
#include "treelift/unipoly.hpp"

namespace treelift {

struct Config {
    int series_order = 8;        // truncation order N for series identities
    int symbolic_cap = 12;       // largest dimension for full symbolic determinants
    int eval_points = 3;         // random evaluation points beyond the cap
    std::size_t lift_cap = 100000;
    std::size_t det_cap = 64;    // largest lift dimension for dense determinant checks
    std::uint64_t seed = 20260809ull;
    int walk_max_len = 6;        // closed walk length for lift counting
    int edge_orderings = 20;     // random orderings for the exploration suite
    int s_assignments = 5;       // random vertex-weight vectors for the zeta check
};

/// Outcome of one identity check. Identity violations are reported here,
/// never thrown; `witness` is nonempty exactly when the check failed.
struct CheckResult {
    std::string name;
    std::string identity;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    std::string witness;

    static CheckResult ok(std::string name, std::string identity, std::string detail = {});
    static CheckResult fail(std::string name, std::string identity, std::string witness,
                            std::string detail = {});
    static CheckResult skip(std::string name, std::string identity, std::string reason);
};

/// Total order on the edge list: position in the permutation is scan
/// priority (lower first).
using EdgeOrdering = std::vector<int>;

EdgeOrdering default_edge_ordering(const Digraph& g);
EdgeOrdering random_edge_ordering(const Digraph& g, Prng& rng);

/// The exponents m'(W) of the zeta-ratio factorization, computed by the
/// downward recursion m'(V) = 1, m'(W) = k(W) - sum of m' over strongly
/// connected strict supersets.
struct MPrimeTable {
    std::vector<std::pair<VertexSet, long long>> entries; // canonical subset order

    long long at(VertexSet w) const;
    bool has(VertexSet w) const;
    std::vector<VertexSet> negative_sets() const;
};

MPrimeTable m_prime(const Digraph& g);

/// k(W) - 1 = sum of m'(W') over proper strongly connected supersets of W,
/// for every proper nonempty strongly connected W.
CheckResult m_condition_check(const Digraph& g);

/// Exploration of a spanning tree: breadth-first from the root along
/// incoming edges, scanning each vertex's surviving in-edges in ordering
/// priority; a first visit along a non-tree edge deletes the source vertex
/// with all its edges. Returns the strongly connected component of the
/// root among the undeleted vertices.
VertexSet exploration_psi(const Digraph& g, const Arborescence& t, const EdgeOrdering& ord);

/// Number of trees rooted at w whose exploration set equals W.
long long m_count(const Digraph& g, VertexSet w_set, int w, const EdgeOrdering& ord);
/// Number of trees rooted at w whose exploration set contains W.
long long count_psi_superset(const Digraph& g, VertexSet w_set, int w, const EdgeOrdering& ord);

/// The unique tree containing forest f (rooted at W) that explores to a
/// superset of W: breadth-first from w, initialized with f, deleting
/// non-W vertices first reached off-f and adopting the visiting edge for
/// W vertices.
Arborescence canonical_tree(const Digraph& g, const Forest& f, int w, const EdgeOrdering& ord);

/// The polynomial ratio tau(lift)/tau(G) computed three independent ways.
struct PhiReport {
    std::size_t lift_size = 0;
    Weight tau_base;
    Weight tau_lift;
    Weight phi_lift;            // tau(lift)/tau(G), exact division
    Weight phi_product;         // product of Psi_{V\W}^m'(W) over proper W
    Weight phi_minor;           // common value of det(Llift^(t))/w(t)
    bool minor_all_equal = false;
    bool lift_matches_minor_sum = false; // tau(lift) == sum of the minors
    bool agree = false;
    std::string note;
};

PhiReport phi_report(const Digraph& g, const Config& cfg = {});

Weight phi_via_lift(const Digraph& g, const LiftGraph& lg);
Weight phi_via_product(const Digraph& g);
/// Ratio det(Llift^(t))/w(t) per lift vertex; all must agree.
std::pair<Weight, bool> phi_via_minor(const Digraph& g, const LiftGraph& lg);

/// det(I - s*Plift) / det(I - s*P) as an exact univariate polynomial.
/// Throws InexactDivision if the ratio fails to be a polynomial. Rational
/// weights only; symbolic graphs go through r_polynomial_symbolic.
UniPoly r_polynomial(const Digraph& g, const LiftGraph& lg);
/// Fully symbolic variant (variable name "s" joins the weight variables).
MultiPoly r_polynomial_symbolic(const Digraph& g, const LiftGraph& lg);

CheckResult r_factorization_check(const Digraph& g, const Config& cfg = {});
CheckResult linear_coefficient_check(const Digraph& g, const Config& cfg = {});
/// (d/ds) det(I - sP) at s = 1 equals -tau(G); row-stochastic inputs.
CheckResult tau_from_zeta_derivative_check(const Digraph& g, const Config& cfg = {});

CheckResult zeta_truncated_check(const Digraph& g, int order);
CheckResult vertex_weighted_zeta_check(const Digraph& g, const std::vector<Rational>& s_assign,
                                       int order);

CheckResult walk_lift_check(const Digraph& g, const Config& cfg = {});
CheckResult sp_formula_check(const Digraph& g, const Config& cfg = {});
CheckResult schrodinger_identity_check(const Digraph& g, const Config& cfg = {});
CheckResult tree_weight_stationarity_check(const Digraph& g, const Config& cfg = {});

/// Uniform random rational assignment for every variable of the graph.
std::map<std::string, Rational> random_assignment(const Digraph& g, Prng& rng,
                                                  std::uint64_t lo = 1, std::uint64_t hi = 1000);

} // namespace treelift

#endif
