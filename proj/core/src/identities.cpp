#include "treelift/identities.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "treelift/errors.hpp"
#include "treelift/matrix.hpp"

namespace treelift {

CheckResult CheckResult::ok(std::string name, std::string identity, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.identity = std::move(identity);
    r.pass = true;
    r.detail = std::move(detail);
    return r;
}

CheckResult CheckResult::fail(std::string name, std::string identity, std::string witness,
                              std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.identity = std::move(identity);
    r.pass = false;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
}

CheckResult CheckResult::skip(std::string name, std::string identity, std::string reason) {
    CheckResult r;
    r.name = std::move(name);
    r.identity = std::move(identity);
    r.pass = true;
    r.skipped = true;
    r.detail = std::move(reason);
    return r;
}

EdgeOrdering default_edge_ordering(const Digraph& g) {
    // edges are stored sorted by (source, target) already
    EdgeOrdering ord(g.edges().size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
    return ord;
}

EdgeOrdering random_edge_ordering(const Digraph& g, Prng& rng) {
    return rng.permutation(static_cast<int>(g.edges().size()));
}

long long MPrimeTable::at(VertexSet w) const {
    for (const auto& [set, m] : entries)
        if (set == w) return m;
    throw DomainError("subset " + w.str() + " is not strongly connected here");
}

bool MPrimeTable::has(VertexSet w) const {
    for (const auto& [set, m] : entries)
        if (set == w) return true;
    return false;
}

std::vector<VertexSet> MPrimeTable::negative_sets() const {
    std::vector<VertexSet> out;
    for (const auto& [set, m] : entries)
        if (m < 0) out.push_back(set);
    return out;
}

MPrimeTable m_prime(const Digraph& g) {
    if (!is_strongly_connected(g))
        throw DomainError("m' recursion requires a strongly connected graph");
    MPrimeTable table;
    // canonical order is size-descending, exactly the recursion order
    for (const VertexSet& w : strongly_connected_subsets(g)) {
        long long m;
        if (w == VertexSet::full(g.vertex_count())) {
            m = 1;
        } else {
            m = k_count(g, w);
            for (const auto& [sup, msup] : table.entries)
                if (w != sup && w.subset_of(sup)) m -= msup;
        }
        table.entries.emplace_back(w, m);
    }
    return table;
}

CheckResult m_condition_check(const Digraph& g) {
    const std::string id = "k(W) - 1 = sum of m'(W') over proper strongly connected W' >= W";
    MPrimeTable table = m_prime(g);
    VertexSet full = VertexSet::full(g.vertex_count());
    int checked = 0;
    for (const auto& [w, m] : table.entries) {
        if (w == full) continue;
        long long lhs = k_count(g, w) - 1;
        long long rhs = 0;
        for (const auto& [sup, msup] : table.entries)
            if (sup != full && w.subset_of(sup)) rhs += msup;
        if (lhs != rhs)
            return CheckResult::fail("m_condition", id,
                                     "W = " + w.str() + ": k(W)-1 = " + std::to_string(lhs) +
                                         " but the m' sum is " + std::to_string(rhs));
        ++checked;
    }
    return CheckResult::ok("m_condition", id,
                           std::to_string(checked) + " proper strongly connected subsets");
}

VertexSet exploration_psi(const Digraph& g, const Arborescence& t, const EdgeOrdering& ord) {
    if (!is_valid_arborescence(g, t)) throw DomainError("exploration requires a valid tree");
    int n = g.vertex_count();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<bool> deleted(static_cast<std::size_t>(n), false);
    std::deque<int> queue;
    visited[static_cast<std::size_t>(t.root)] = true;
    queue.push_back(t.root);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int ei : ord) {
            const Edge& e = g.edges()[static_cast<std::size_t>(ei)];
            if (e.to != u) continue;
            int x = e.from;
            if (visited[static_cast<std::size_t>(x)] || deleted[static_cast<std::size_t>(x)])
                continue;
            if (t.out[static_cast<std::size_t>(x)] == u) {
                visited[static_cast<std::size_t>(x)] = true;
                queue.push_back(x);
            } else {
                // first visit along a non-tree edge: remove x entirely
                deleted[static_cast<std::size_t>(x)] = true;
            }
        }
    }
    VertexSet alive;
    for (int v = 0; v < n; ++v)
        if (!deleted[static_cast<std::size_t>(v)]) alive = alive.with(v);
    return scc_containing(g, t.root, alive);
}

long long m_count(const Digraph& g, VertexSet w_set, int w, const EdgeOrdering& ord) {
    long long count = 0;
    for (const Arborescence& t : enumerate_trees(g, w))
        if (exploration_psi(g, t, ord) == w_set) ++count;
    return count;
}

long long count_psi_superset(const Digraph& g, VertexSet w_set, int w, const EdgeOrdering& ord) {
    long long count = 0;
    for (const Arborescence& t : enumerate_trees(g, w))
        if (w_set.subset_of(exploration_psi(g, t, ord))) ++count;
    return count;
}

Arborescence canonical_tree(const Digraph& g, const Forest& f, int w, const EdgeOrdering& ord) {
    if (!is_valid_forest(g, f)) throw DomainError("canonical_tree requires a valid forest");
    if (!f.roots.contains(w)) throw DomainError("start vertex must belong to the root set");
    int n = g.vertex_count();
    std::vector<int> out = f.out;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<bool> deleted(static_cast<std::size_t>(n), false);
    std::deque<int> queue;
    visited[static_cast<std::size_t>(w)] = true;
    queue.push_back(w);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int ei : ord) {
            const Edge& e = g.edges()[static_cast<std::size_t>(ei)];
            if (e.to != u) continue;
            int x = e.from;
            if (visited[static_cast<std::size_t>(x)] || deleted[static_cast<std::size_t>(x)])
                continue;
            if (f.roots.contains(x)) {
                // a root-set vertex adopts its first visiting edge
                out[static_cast<std::size_t>(x)] = u;
                visited[static_cast<std::size_t>(x)] = true;
                queue.push_back(x);
            } else if (f.out[static_cast<std::size_t>(x)] == u) {
                visited[static_cast<std::size_t>(x)] = true;
                queue.push_back(x);
            } else {
                deleted[static_cast<std::size_t>(x)] = true;
            }
        }
    }
    Arborescence t{w, std::move(out)};
    t.out[static_cast<std::size_t>(w)] = -1;
    if (!is_valid_arborescence(g, t))
        throw Error("canonical tree construction failed to produce a spanning tree");
    return t;
}

Weight phi_via_lift(const Digraph& g, const LiftGraph& lg) {
    Weight tau_lift = lg.size() <= 12 ? tau(lg.graph) : tau_via_matrix(lg.graph);
    return tau_lift.divide_exact(tau(g));
}

Weight phi_via_product(const Digraph& g) {
    MPrimeTable table = m_prime(g);
    int n = g.vertex_count();
    VertexSet full = VertexSet::full(n);
    Weight num(1), den(1);
    for (const auto& [w, m] : table.entries) {
        if (w == full || m == 0) continue;
        Weight psi = psi_sum(g, w.complement(n));
        if (m > 0)
            num *= psi.pow(m);
        else
            den *= psi.pow(-m);
    }
    return num.divide_exact(den);
}

std::pair<Weight, bool> phi_via_minor(const Digraph& g, const LiftGraph& lg) {
    RingMatrix lap = laplacian(lg.graph);
    Weight ratio;
    bool first = true, all_equal = true;
    for (int t = 0; t < static_cast<int>(lg.size()); ++t) {
        Weight d = det(minor_by_indices(lap, {t}));
        Weight r = d.divide_exact(tree_weight(g, lg.tree_of[static_cast<std::size_t>(t)]));
        if (first) {
            ratio = r;
            first = false;
        } else if (ratio != r) {
            all_equal = false;
        }
    }
    return {ratio, all_equal};
}

namespace {

// The per-vertex minor and characteristic-pencil checks are cubic per
// determinant and run one determinant per lift vertex; refuse lifts whose
// dimension would turn a check into an hours-long computation.
void require_dense_feasible(const Digraph& g, const Config& cfg, const char* what) {
    std::size_t predicted = predicted_lift_size(g);
    if (predicted > cfg.det_cap)
        throw CapExceeded(std::string(what) + ": lift has " + std::to_string(predicted) +
                          " vertices, above the dense determinant cap of " +
                          std::to_string(cfg.det_cap) + " (raise --det-cap to force)");
}

} // namespace

PhiReport phi_report(const Digraph& g, const Config& cfg) {
    require_dense_feasible(g, cfg, "phi report");
    PhiReport rep;
    LiftGraph lg = build_lift(g, cfg.lift_cap);
    rep.lift_size = lg.size();
    rep.tau_base = tau(g);

    RingMatrix lap = laplacian(lg.graph);
    Weight minor_sum;
    bool first = true;
    rep.minor_all_equal = true;
    for (int t = 0; t < static_cast<int>(lg.size()); ++t) {
        Weight d = det(minor_by_indices(lap, {t}));
        minor_sum += d;
        Weight r = d.divide_exact(tree_weight(g, lg.tree_of[static_cast<std::size_t>(t)]));
        if (first) {
            rep.phi_minor = r;
            first = false;
        } else if (rep.phi_minor != r) {
            rep.minor_all_equal = false;
        }
    }

    if (lg.size() <= 12) {
        rep.tau_lift = tau(lg.graph);
        rep.note = "tau(lift) by arborescence enumeration";
    } else {
        rep.tau_lift = minor_sum;
        rep.note = "tau(lift) via Laplacian minors (lift too large to enumerate)";
    }
    rep.lift_matches_minor_sum = rep.tau_lift == minor_sum;
    rep.phi_lift = rep.tau_lift.divide_exact(rep.tau_base);
    rep.phi_product = phi_via_product(g);
    rep.agree = rep.minor_all_equal && rep.lift_matches_minor_sum &&
                rep.phi_lift == rep.phi_product && rep.phi_lift == rep.phi_minor;
    return rep;
}

namespace {

RingMatrix negated(const RingMatrix& m) {
    RingMatrix out(m.labels());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!m.at(i, j).is_zero()) out.at(i, j) = -m.at(i, j);
    return out;
}

UniPoly char_style_det(const RingMatrix& p) {
    // det(I - s*P) by interpolation
    return det_pencil(RingMatrix::identity(p.labels()), negated(p));
}

// I - s*P with a symbolic s joined to the weight ring.
RingMatrix one_minus_s_matrix(const RingMatrix& p, const std::string& var) {
    Weight s = Weight::variable(var);
    RingMatrix out = RingMatrix::identity(p.labels());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (!p.at(i, j).is_zero()) out.at(i, j) -= s * p.at(i, j);
    return out;
}

std::set<std::string> graph_variables(const Digraph& g) {
    std::set<std::string> vars;
    auto absorb = [&](const Weight& w) {
        for (const auto& v : w.variables()) vars.insert(v);
    };
    for (const Edge& e : g.edges()) absorb(e.w);
    for (int v = 0; v < g.vertex_count(); ++v) {
        absorb(g.diagonal(v));
        if (g.has_vertex_weights()) absorb(g.vertex_weight(v));
    }
    return vars;
}

void forbid_variable(const Digraph& g, const std::string& var) {
    if (graph_variables(g).count(var))
        throw DomainError("variable name '" + var + "' is reserved here");
}

std::string rational_str(const Weight& w) {
    return w.is_constant() ? w.constant_value().str() : w.str();
}

} // namespace

UniPoly r_polynomial(const Digraph& g, const LiftGraph& lg) {
    if (is_symbolic(g)) throw DomainError("r_polynomial needs rational weights");
    UniPoly num = char_style_det(weight_matrix(lg.graph));
    UniPoly den = char_style_det(weight_matrix(g));
    return num.divide_exact(den);
}

MultiPoly r_polynomial_symbolic(const Digraph& g, const LiftGraph& lg) {
    forbid_variable(g, "s");
    Weight num = det(one_minus_s_matrix(weight_matrix(lg.graph), "s"));
    Weight den = det(one_minus_s_matrix(weight_matrix(g), "s"));
    return num.divide_exact(den);
}

namespace {

// Cross-multiplied comparison of num/den == prod factor^exponent over a
// generic ring element. Positive exponents multiply into the right side,
// negative ones into the left.
template <typename Value>
bool ratio_matches_product(const Value& num, const Value& den,
                           const std::vector<std::pair<Value, long long>>& factors) {
    Value lhs = num;
    Value rhs = den;
    for (const auto& [f, m] : factors) {
        if (m == 0) continue;
        for (long long i = 0; i < (m > 0 ? m : -m); ++i) {
            if (m > 0)
                rhs = rhs * f;
            else
                lhs = lhs * f;
        }
    }
    return lhs == rhs;
}

struct FactorizationData {
    bool pass = true;
    std::string witness;
};

// Verifies det(I-s*Plift)/det(I-s*P) = prod det((I-sP)^(V\W))^m'(W) on a
// rational-weighted graph, coefficientwise in s.
FactorizationData factorization_on_rational(const Digraph& g, const MPrimeTable& table,
                                            const Config& cfg) {
    FactorizationData out;
    LiftGraph lg = build_lift(g, cfg.lift_cap);
    RingMatrix p = weight_matrix(g);
    UniPoly num = char_style_det(weight_matrix(lg.graph));
    UniPoly den = char_style_det(p);

    // existence of the exact polynomial quotient plus its normalization
    UniPoly r;
    try {
        r = num.divide_exact(den);
    } catch (const InexactDivision&) {
        out.pass = false;
        out.witness = "det(I-s*Plift)/det(I-s*P) is not a polynomial";
        return out;
    }
    if (!r.coeff(0).is_one()) {
        out.pass = false;
        out.witness = "R(0) = " + r.coeff(0).str() + ", expected 1";
        return out;
    }

    VertexSet full = VertexSet::full(g.vertex_count());
    std::vector<std::pair<UniPoly, long long>> factors;
    for (const auto& [w, m] : table.entries) {
        if (w == full) continue;
        RingMatrix pw = minor_by_indices(p, w.complement(g.vertex_count()).members());
        factors.emplace_back(char_style_det(pw), m);
    }
    if (!ratio_matches_product(num, den, factors)) {
        out.pass = false;
        out.witness = "coefficientwise mismatch; R(s) = " + r.str();
        return out;
    }
    // for a stochastic chain the ratio at s = 1 is the tree-weight ratio
    if (is_row_stochastic(g)) {
        Rational at_one = r.evaluate(Rational(1));
        Rational phi = phi_via_product(g).constant_value();
        if (at_one != phi) {
            out.pass = false;
            out.witness = "R(1) = " + at_one.str() + " but the subset product gives " + phi.str();
        }
    }
    return out;
}

} // namespace

CheckResult r_factorization_check(const Digraph& g, const Config& cfg) {
    const std::string id =
        "det(I-s*Plift)/det(I-s*P) = prod over proper strongly connected W of "
        "det((I-sP)^(V\\W))^m'(W)";
    require_dense_feasible(g, cfg, "zeta ratio");
    MPrimeTable table = m_prime(g);

    if (!is_symbolic(g)) {
        FactorizationData d = factorization_on_rational(g, table, cfg);
        if (!d.pass) return CheckResult::fail("r_factorization", id, d.witness);
        return CheckResult::ok("r_factorization", id, "exact polynomial identity in s");
    }

    std::size_t lift_size = predicted_lift_size(g);
    if (lift_size <= static_cast<std::size_t>(cfg.symbolic_cap)) {
        forbid_variable(g, "s");
        LiftGraph lg = build_lift(g, cfg.lift_cap);
        RingMatrix p = weight_matrix(g);
        Weight num = det(one_minus_s_matrix(weight_matrix(lg.graph), "s"));
        Weight den = det(one_minus_s_matrix(p, "s"));
        try {
            Weight r = num.divide_exact(den);
            if (!(r.coefficient_of("s", 0) == Weight(1)))
                return CheckResult::fail("r_factorization", id, "R(0) != 1 symbolically");
        } catch (const InexactDivision&) {
            return CheckResult::fail("r_factorization", id,
                                     "zeta ratio is not a polynomial (symbolic)");
        }
        VertexSet full = VertexSet::full(g.vertex_count());
        std::vector<std::pair<Weight, long long>> factors;
        for (const auto& [w, m] : table.entries) {
            if (w == full) continue;
            RingMatrix pw = minor_by_indices(p, w.complement(g.vertex_count()).members());
            factors.emplace_back(det(one_minus_s_matrix(pw, "s")), m);
        }
        if (!ratio_matches_product(num, den, factors))
            return CheckResult::fail("r_factorization", id, "symbolic mismatch");
        return CheckResult::ok("r_factorization", id, "exact symbolic identity");
    }

    Prng rng(cfg.seed ^ fnv1a64("r_factorization"));
    for (int pt = 0; pt < cfg.eval_points; ++pt) {
        Digraph ge = evaluate_weights(g, random_assignment(g, rng));
        FactorizationData d = factorization_on_rational(ge, table, cfg);
        if (!d.pass)
            return CheckResult::fail("r_factorization", id,
                                     "evaluation point " + std::to_string(pt) + ": " + d.witness);
    }
    return CheckResult::ok("r_factorization", id,
                           std::to_string(cfg.eval_points) + " random evaluation points");
}

CheckResult linear_coefficient_check(const Digraph& g, const Config& cfg) {
    const std::string id = "[s^1] R(s) = trace(P) - trace(Plift)";
    require_dense_feasible(g, cfg, "linear coefficient");
    auto check_rational = [&](const Digraph& base) -> std::optional<std::string> {
        LiftGraph lg = build_lift(base, cfg.lift_cap);
        UniPoly r;
        try {
            r = r_polynomial(base, lg);
        } catch (const InexactDivision&) {
            return "zeta ratio is not a polynomial";
        }
        Rational expected = weight_matrix(base).trace().constant_value() -
                            weight_matrix(lg.graph).trace().constant_value();
        if (r.coeff(1) != expected)
            return "[s^1] R = " + r.coeff(1).str() + ", traces give " + expected.str();
        return std::nullopt;
    };

    if (!is_symbolic(g)) {
        if (auto w = check_rational(g))
            return CheckResult::fail("linear_coefficient", id, *w);
        return CheckResult::ok("linear_coefficient", id);
    }
    std::size_t lift_size = predicted_lift_size(g);
    if (lift_size <= static_cast<std::size_t>(cfg.symbolic_cap)) {
        LiftGraph lg = build_lift(g, cfg.lift_cap);
        MultiPoly r = r_polynomial_symbolic(g, lg);
        Weight expected = weight_matrix(g).trace() - weight_matrix(lg.graph).trace();
        if (!(r.coefficient_of("s", 1) == expected))
            return CheckResult::fail("linear_coefficient", id,
                                     "symbolic coefficient mismatch: [s] R = " +
                                         r.coefficient_of("s", 1).str() + " vs " + expected.str());
        return CheckResult::ok("linear_coefficient", id, "exact symbolic identity");
    }
    Prng rng(cfg.seed ^ fnv1a64("linear_coefficient"));
    for (int pt = 0; pt < cfg.eval_points; ++pt) {
        Digraph ge = evaluate_weights(g, random_assignment(g, rng));
        if (auto w = check_rational(ge))
            return CheckResult::fail("linear_coefficient", id,
                                     "evaluation point " + std::to_string(pt) + ": " + *w);
    }
    return CheckResult::ok("linear_coefficient", id,
                           std::to_string(cfg.eval_points) + " random evaluation points");
}

CheckResult tau_from_zeta_derivative_check(const Digraph& g, const Config& cfg) {
    (void)cfg;
    const std::string id = "d/ds det(I - sP) at s=1 equals -tau(G)";
    if (!is_row_stochastic(g))
        return CheckResult::skip("tau_derivative", id, "weights are not row-stochastic");
    UniPoly den = char_style_det(weight_matrix(g));
    Rational derivative = den.derivative().evaluate(Rational(1));
    Rational t = tau(g).constant_value();
    if (derivative != -t)
        return CheckResult::fail("tau_derivative", id,
                                 "derivative " + derivative.str() + " vs -tau = " + (-t).str());
    return CheckResult::ok("tau_derivative", id, "tau = " + t.str());
}

CheckResult zeta_truncated_check(const Digraph& g, int order) {
    const std::string id = "exp(sum s^n/n C_n) = 1/det(I - sP) through order N";
    if (is_symbolic(g))
        return CheckResult::skip("zeta_series", id, "series checks need rational weights");
    WalkSupportTable table = closed_walk_support_sums(g, order);
    TruncatedSeries expo(order);
    for (int n = 1; n <= order; ++n)
        expo.set_coeff(static_cast<std::size_t>(n),
                       table.total(n).constant_value() / Rational(static_cast<long>(n)));
    TruncatedSeries lhs = expo.exp();
    UniPoly den = char_style_det(weight_matrix(g));
    TruncatedSeries rhs = TruncatedSeries::from_unipoly(den, order).inverse();
    int bad = lhs.first_mismatch(rhs);
    if (bad >= 0)
        return CheckResult::fail("zeta_series", id,
                                 "coefficient of s^" + std::to_string(bad) + ": walk side " +
                                     lhs.coeff(static_cast<std::size_t>(bad)).str() +
                                     ", determinant side " +
                                     rhs.coeff(static_cast<std::size_t>(bad)).str());
    return CheckResult::ok("zeta_series", id, "agreement through order " + std::to_string(order));
}

CheckResult vertex_weighted_zeta_check(const Digraph& g, const std::vector<Rational>& s_assign,
                                       int order) {
    const std::string id =
        "exp(sum u^n/n C_n(s)) = 1/det(I - u*SP) through order N, det identity at u=1";
    if (is_symbolic(g))
        return CheckResult::skip("vertex_zeta", id, "series checks need rational weights");
    if (static_cast<int>(s_assign.size()) != g.vertex_count())
        throw DomainError("one s value per vertex required");

    // fold the vertex weights into the steps: step i->j carries s_i p(i,j)
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.push_back({e.from, e.to,
                         Weight(s_assign[static_cast<std::size_t>(e.from)]) * e.w});
    std::vector<Weight> diag;
    for (int v = 0; v < g.vertex_count(); ++v)
        diag.push_back(Weight(s_assign[static_cast<std::size_t>(v)]) * g.diagonal(v));
    Digraph folded(g.vertex_count(), std::move(edges), std::move(diag), std::nullopt, g.labels());

    WalkSupportTable table = closed_walk_support_sums(folded, order);
    TruncatedSeries expo(order);
    for (int n = 1; n <= order; ++n)
        expo.set_coeff(static_cast<std::size_t>(n),
                       table.total(n).constant_value() / Rational(static_cast<long>(n)));

    RingMatrix sp = weight_matrix(folded); // SP including the diagonal
    UniPoly det_u = char_style_det(sp);    // det(I - u*SP)

    TruncatedSeries lhs = expo.exp();
    TruncatedSeries rhs = TruncatedSeries::from_unipoly(det_u, order).inverse();
    int bad = lhs.first_mismatch(rhs);
    if (bad >= 0)
        return CheckResult::fail("vertex_zeta", id,
                                 "coefficient of u^" + std::to_string(bad) + " differs");

    // finite determinant identity: exp(-series) is exactly the polynomial
    // det(I - u*SP), including vanishing coefficients above the degree
    TruncatedSeries negside = (-expo).exp();
    TruncatedSeries poly_series = TruncatedSeries::from_unipoly(det_u, order);
    bad = negside.first_mismatch(poly_series);
    if (bad >= 0)
        return CheckResult::fail("vertex_zeta", id,
                                 "exp(-series) fails to terminate at the determinant "
                                 "polynomial (coefficient u^" +
                                     std::to_string(bad) + ")");

    // two independent routes to det(I - SP) at u = 1
    RingMatrix at_one = RingMatrix::identity(sp.labels());
    for (std::size_t i = 0; i < sp.size(); ++i)
        for (std::size_t j = 0; j < sp.size(); ++j)
            at_one.at(i, j) -= sp.at(i, j);
    Rational direct = det(at_one).constant_value();
    if (det_u.evaluate(Rational(1)) != direct)
        return CheckResult::fail("vertex_zeta", id,
                                 "interpolated det at u=1 disagrees with direct elimination");
    return CheckResult::ok("vertex_zeta", id, "agreement through order " + std::to_string(order));
}

CheckResult walk_lift_check(const Digraph& g, const Config& cfg) {
    const std::string id = "closed walks of the lift over walk c = forests rooted in support(c)";
    std::size_t lift_size = predicted_lift_size(g);
    if (lift_size > 4096)
        return CheckResult::skip("walk_lifts", id, "lift too large for walk enumeration");
    LiftGraph lg = build_lift(g, cfg.lift_cap);
    WalkLiftReport rep = count_walk_lifts(g, lg, cfg.walk_max_len);
    if (!rep.all_ok) {
        for (const auto& rec : rep.records)
            if (!rec.ok) {
                std::ostringstream w;
                w << "walk (";
                for (std::size_t i = 0; i < rec.walk.size(); ++i)
                    w << (i ? "," : "") << rec.walk[i];
                w << "): " << rec.lift_count << " lifts, k(" << rec.support.str()
                  << ") = " << rec.forest_count;
                return CheckResult::fail("walk_lifts", id, w.str());
            }
    }
    return CheckResult::ok("walk_lifts", id,
                           std::to_string(rep.walks_checked) + " closed walks through length " +
                               std::to_string(cfg.walk_max_len));
}

CheckResult sp_formula_check(const Digraph& g, const Config& cfg) {
    const std::string id =
        "det(I - Slift*Plift)/det(I - SP) = prod det((I-SP)^(V\\W))^m(W) over proper W";
    require_dense_feasible(g, cfg, "diagonal-weighted ratio");
    MPrimeTable table = m_prime(g);
    Prng rng(cfg.seed ^ fnv1a64("sp_formula"));
    int points = cfg.eval_points;
    for (int pt = 0; pt < points; ++pt) {
        Digraph base = is_symbolic(g) ? evaluate_weights(g, random_assignment(g, rng)) : g;
        LiftGraph lg = build_lift(base, cfg.lift_cap);
        std::vector<Rational> s;
        for (int v = 0; v < base.vertex_count(); ++v) s.push_back(rng.rational(1, 1000));

        // I - S P downstairs
        RingMatrix p = weight_matrix(base);
        RingMatrix i_sp = RingMatrix::identity(p.labels());
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                i_sp.at(i, j) -= Weight(s[i]) * p.at(i, j);

        // I - Slift Plift upstairs, Slift(t,t) = s_{root(t)}
        RingMatrix ph = weight_matrix(lg.graph);
        RingMatrix i_sph = RingMatrix::identity(ph.labels());
        for (std::size_t i = 0; i < ph.size(); ++i) {
            Rational si = s[static_cast<std::size_t>(lg.root_of[i])];
            for (std::size_t j = 0; j < ph.size(); ++j)
                i_sph.at(i, j) -= Weight(si) * ph.at(i, j);
        }

        Weight num = det(i_sph);
        Weight den = det(i_sp);
        VertexSet full = VertexSet::full(base.vertex_count());
        std::vector<std::pair<Weight, long long>> factors;
        for (const auto& [w, m] : table.entries) {
            if (w == full) continue;
            factors.emplace_back(
                det(minor_by_indices(i_sp, w.complement(base.vertex_count()).members())), m);
        }
        if (!ratio_matches_product(num, den, factors))
            return CheckResult::fail(
                "sp_formula", id,
                "vertex-weight draw " + std::to_string(pt) + ": det(I-Slift*Plift) = " +
                    rational_str(num) + ", det(I-SP) = " + rational_str(den) +
                    ", product disagrees");
    }

    // S = c*I collapses the identity onto the zeta-ratio pipeline: direct
    // elimination at three scalar diagonals must agree with the
    // interpolated characteristic polynomials
    {
        Digraph base = is_symbolic(g) ? evaluate_weights(g, random_assignment(g, rng)) : g;
        LiftGraph lg = build_lift(base, cfg.lift_cap);
        RingMatrix p = weight_matrix(base);
        RingMatrix ph = weight_matrix(lg.graph);
        UniPoly num_poly = char_style_det(ph);
        UniPoly den_poly = char_style_det(p);
        for (int i = 0; i < 3; ++i) {
            Rational c = rng.rational(1, 1000);
            RingMatrix i_cp = RingMatrix::identity(p.labels());
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = 0; b < p.size(); ++b)
                    i_cp.at(a, b) -= Weight(c) * p.at(a, b);
            RingMatrix i_cph = RingMatrix::identity(ph.labels());
            for (std::size_t a = 0; a < ph.size(); ++a)
                for (std::size_t b = 0; b < ph.size(); ++b)
                    i_cph.at(a, b) -= Weight(c) * ph.at(a, b);
            if (det(i_cp).constant_value() != den_poly.evaluate(c) ||
                det(i_cph).constant_value() != num_poly.evaluate(c))
                return CheckResult::fail("sp_formula", id,
                                         "scalar diagonal S = " + c.str() +
                                             "*I disagrees with the zeta-ratio pipeline");
        }
    }
    return CheckResult::ok("sp_formula", id,
                           std::to_string(points) +
                               " random diagonal draws verified, scalar-diagonal "
                               "specialization cross-checked");
}

CheckResult schrodinger_identity_check(const Digraph& g, const Config& cfg) {
    const std::string id = "det(Hlift) = prod over strongly connected W of det(H^(V\\W))^m(W)";
    require_dense_feasible(g, cfg, "Schrodinger identity");
    MPrimeTable table = m_prime(g);

    // make sure vertex weights exist; without them H would just be Q
    Digraph base = g;
    if (!g.has_vertex_weights()) {
        for (int v = 0; v < base.vertex_count(); ++v)
            base.set_vertex_weight(v, Weight::variable(vertex_var_name(v)));
    }

    std::size_t lift_size = predicted_lift_size(base);
    auto run_exact = [&](const Digraph& instance) -> std::optional<std::string> {
        LiftGraph lg = build_lift(instance, cfg.lift_cap);
        SchrodingerPair pair = lift_schrodinger(instance, lg);
        Weight num = det(pair.lifted);
        Weight den(1);
        std::vector<std::pair<Weight, long long>> factors;
        for (const auto& [w, m] : table.entries) {
            // all strongly connected subsets, V included with m(V) = 1
            factors.emplace_back(
                det(minor_by_indices(pair.base,
                                     w.complement(instance.vertex_count()).members())),
                m);
        }
        if (!ratio_matches_product(num, den, factors))
            return "det(Hlift) = " + rational_str(num) + " but the minor product disagrees";
        return std::nullopt;
    };

    if (lift_size <= static_cast<std::size_t>(cfg.symbolic_cap)) {
        if (auto w = run_exact(base))
            return CheckResult::fail("schrodinger", id, "symbolic: " + *w);
        std::string kind = is_symbolic(base) ? "exact symbolic identity" : "exact rational identity";
        return CheckResult::ok("schrodinger", id, kind);
    }
    Prng rng(cfg.seed ^ fnv1a64("schrodinger"));
    for (int pt = 0; pt < cfg.eval_points; ++pt) {
        Digraph ge = evaluate_weights(base, random_assignment(base, rng));
        if (auto w = run_exact(ge))
            return CheckResult::fail("schrodinger", id,
                                     "evaluation point " + std::to_string(pt) + ": " + *w);
    }
    return CheckResult::ok("schrodinger", id,
                           std::to_string(cfg.eval_points) + " random (x, y) evaluation points");
}

CheckResult tree_weight_stationarity_check(const Digraph& g, const Config& cfg) {
    const std::string id = "the tree-weight row vector is invariant under Plift";
    if (!is_row_stochastic(g))
        return CheckResult::skip("stationarity", id, "weights are not row-stochastic");
    LiftGraph lg = build_lift(g, cfg.lift_cap);
    std::vector<Weight> w;
    w.reserve(lg.size());
    for (const auto& t : lg.tree_of) w.push_back(tree_weight(g, t));
    // sparse row-vector product; lifts can be far too large for a dense matrix
    std::vector<Weight> after(lg.size());
    for (const Edge& e : lg.graph.edges())
        after[static_cast<std::size_t>(e.to)] += w[static_cast<std::size_t>(e.from)] * e.w;
    for (std::size_t t = 0; t < lg.size(); ++t) {
        const Weight& d = lg.graph.diagonal(static_cast<int>(t));
        if (!d.is_zero()) after[t] += w[t] * d;
    }
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != after[i])
            return CheckResult::fail(
                "stationarity", id,
                "lift vertex " + lg.graph.labels()[i] + ": weight " + rational_str(w[i]) +
                    " maps to " + rational_str(after[i]));
    return CheckResult::ok("stationarity", id,
                           std::to_string(lg.size()) + " tree weights fixed by Plift");
}

std::map<std::string, Rational> random_assignment(const Digraph& g, Prng& rng, std::uint64_t lo,
                                                  std::uint64_t hi) {
    std::map<std::string, Rational> out;
    for (const auto& v : graph_variables(g)) out.emplace(v, rng.rational(lo, hi));
    return out;
}

} // namespace treelift
