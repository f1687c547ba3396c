#include "treelift/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "treelift/errors.hpp"

namespace treelift {

namespace {

std::string to_hex(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

CheckResult run_matrix_forest(const Digraph& g, const Config&) {
    const std::string id = "det(L^(W)) = forest weight sum at every nonempty W";
    int n = g.vertex_count();
    if (n > 12)
        return CheckResult::skip("matrix_forest", id, "exhaustive subsets need |V| <= 12");
    int subsets = 0;
    for (std::uint64_t m = 1; m < (1ull << n); ++m) {
        MinorCheck c = matrix_forest_check(g, VertexSet(m));
        ++subsets;
        if (!c.ok)
            return CheckResult::fail("matrix_forest", id,
                                     "W = " + VertexSet(m).str() + ": det = " +
                                         c.minor_det.str() + ", forest sum = " +
                                         c.forest_sum.str());
    }
    return CheckResult::ok("matrix_forest", id, std::to_string(subsets) + " subsets");
}

std::string brief_weight(const Weight& w) {
    std::string s = w.str();
    if (s.size() <= 60) return s;
    return "<polynomial with " + std::to_string(w.term_count()) + " terms, degree " +
           std::to_string(w.total_degree()) + ">";
}

CheckResult run_phi(const Digraph& g, const Config& cfg) {
    const std::string id = "tau(lift)/tau(G) = prod Psi_{V\\W}^m'(W) = det(Llift^(t))/w(t)";
    PhiReport rep;
    try {
        rep = phi_report(g, cfg);
    } catch (const CapExceeded& e) {
        return CheckResult::skip("phi_three_way", id, e.what());
    } catch (const InexactDivision& e) {
        return CheckResult::fail("phi_three_way", id,
                                 std::string("a route failed to divide exactly: ") + e.what());
    }
    std::ostringstream detail;
    detail << "phi = " << brief_weight(rep.phi_lift) << "; tau = " << brief_weight(rep.tau_base)
           << "; tau(lift) = " << brief_weight(rep.tau_lift) << "; lift has " << rep.lift_size
           << " vertices (" << rep.note << ")";
    auto negatives = m_prime(g).negative_sets();
    if (!negatives.empty()) {
        detail << "; note: negative m' at";
        for (const auto& w : negatives) detail << " " << w.str();
    }
    if (!rep.agree) {
        std::ostringstream w;
        w << "routes disagree: lift " << brief_weight(rep.phi_lift) << ", product "
          << brief_weight(rep.phi_product) << ", minor " << brief_weight(rep.phi_minor)
          << (rep.minor_all_equal ? "" : " (per-vertex minor ratios differ)")
          << (rep.lift_matches_minor_sum ? "" : " (tau(lift) != sum of minors)");
        return CheckResult::fail("phi_three_way", id, w.str(), detail.str());
    }
    return CheckResult::ok("phi_three_way", id, detail.str());
}

CheckResult run_m_condition(const Digraph& g, const Config&) {
    return m_condition_check(g);
}

CheckResult run_exploration(const Digraph& g, const Config& cfg) {
    const std::string id =
        "m(W,w) = m'(W) for every w and edge order; the psi values partition the trees";
    if (g.vertex_count() > 6)
        return CheckResult::skip("exploration", id, "tree-by-tree exploration needs |V| <= 6");
    MPrimeTable table = m_prime(g);
    Prng rng(cfg.seed ^ fnv1a64("exploration"));
    std::vector<EdgeOrdering> orderings{default_edge_ordering(g)};
    for (int i = 1; i < cfg.edge_orderings; ++i) orderings.push_back(random_edge_ordering(g, rng));

    for (const auto& [w_set, m] : table.entries) {
        for (int w : w_set.members()) {
            for (std::size_t oi = 0; oi < orderings.size(); ++oi) {
                long long counted = m_count(g, w_set, w, orderings[oi]);
                if (counted != m)
                    return CheckResult::fail(
                        "exploration", id,
                        "m(" + w_set.str() + "," + std::to_string(w) + ") = " +
                            std::to_string(counted) + " under ordering " + std::to_string(oi) +
                            ", recursion gives " + std::to_string(m));
                long long supersets = count_psi_superset(g, w_set, w, orderings[oi]);
                long long k = k_count(g, w_set);
                if (supersets != k)
                    return CheckResult::fail(
                        "exploration", id,
                        "trees with " + w_set.str() + " inside psi: " + std::to_string(supersets) +
                            ", forests rooted there: " + std::to_string(k));
            }
        }
    }
    // psi partitions the trees at every root (default ordering)
    EdgeOrdering ord = default_edge_ordering(g);
    for (int w = 0; w < g.vertex_count(); ++w) {
        long long total = 0;
        for (const auto& [w_set, m] : table.entries)
            if (w_set.contains(w)) total += m_count(g, w_set, w, ord);
        long long trees = k_count(g, VertexSet::single(w));
        if (total != trees)
            return CheckResult::fail("exploration", id,
                                     "psi values at root " + std::to_string(w) + " cover " +
                                         std::to_string(total) + " of " + std::to_string(trees) +
                                         " trees");
    }
    std::ostringstream detail;
    detail << table.entries.size() << " subsets x " << orderings.size() << " orderings";
    return CheckResult::ok("exploration", id, detail.str());
}

CheckResult run_canonical_tree(const Digraph& g, const Config& cfg) {
    const std::string id =
        "f -> t_f is injective from forests rooted at W into trees with W inside psi(t_f)";
    if (g.vertex_count() > 6)
        return CheckResult::skip("canonical_tree", id, "forest enumeration needs |V| <= 6");
    Prng rng(cfg.seed ^ fnv1a64("canonical_tree"));
    std::vector<EdgeOrdering> orderings{default_edge_ordering(g)};
    for (int i = 1; i < std::min(cfg.edge_orderings, 5); ++i)
        orderings.push_back(random_edge_ordering(g, rng));
    for (const VertexSet& w_set : strongly_connected_subsets(g)) {
        for (int w : w_set.members()) {
            for (const auto& ord : orderings) {
                std::vector<Arborescence> images;
                for (const Forest& f : enumerate_forests(g, w_set)) {
                    Arborescence t = canonical_tree(g, f, w, ord);
                    // the forest must survive inside its canonical tree
                    for (int v = 0; v < g.vertex_count(); ++v)
                        if (f.out[static_cast<std::size_t>(v)] >= 0 &&
                            t.out[static_cast<std::size_t>(v)] != f.out[static_cast<std::size_t>(v)])
                            return CheckResult::fail("canonical_tree", id,
                                                     "t_f drops a forest edge at W = " +
                                                         w_set.str());
                    if (!w_set.subset_of(exploration_psi(g, t, ord)))
                        return CheckResult::fail("canonical_tree", id,
                                                 "psi(t_f) misses W = " + w_set.str() +
                                                     " for forest " + f.encode());
                    images.push_back(std::move(t));
                }
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) != images.end())
                    return CheckResult::fail("canonical_tree", id,
                                             "two forests map to one tree at W = " + w_set.str());
            }
        }
    }
    return CheckResult::ok("canonical_tree", id);
}

CheckResult run_r_factorization(const Digraph& g, const Config& cfg) {
    try {
        return r_factorization_check(g, cfg);
    } catch (const CapExceeded& e) {
        return CheckResult::skip("r_factorization", "zeta ratio factorization", e.what());
    }
}

CheckResult run_linear_coefficient(const Digraph& g, const Config& cfg) {
    try {
        return linear_coefficient_check(g, cfg);
    } catch (const CapExceeded& e) {
        return CheckResult::skip("linear_coefficient", "[s^1] R = trace(P) - trace(Plift)",
                                 e.what());
    }
}

CheckResult run_tau_derivative(const Digraph& g, const Config& cfg) {
    return tau_from_zeta_derivative_check(g, cfg);
}

CheckResult run_zeta_series(const Digraph& g, const Config& cfg) {
    return zeta_truncated_check(g, cfg.series_order);
}

CheckResult run_vertex_zeta(const Digraph& g, const Config& cfg) {
    const std::string id =
        "exp(sum u^n/n C_n(s)) = 1/det(I - u*SP) through order N, det identity at u=1";
    if (is_symbolic(g))
        return CheckResult::skip("vertex_zeta", id, "series checks need rational weights");
    Prng rng(cfg.seed ^ fnv1a64("vertex_zeta"));
    int order = std::max(cfg.series_order, g.vertex_count() + 3);
    for (int i = 0; i < cfg.s_assignments; ++i) {
        std::vector<Rational> s;
        for (int v = 0; v < g.vertex_count(); ++v) s.push_back(rng.rational(1, 1000));
        CheckResult r = vertex_weighted_zeta_check(g, s, order);
        if (!r.pass)
            return CheckResult::fail("vertex_zeta", id,
                                     "assignment " + std::to_string(i) + ": " + r.witness);
    }
    return CheckResult::ok("vertex_zeta", id,
                           std::to_string(cfg.s_assignments) + " random vertex-weight vectors");
}

CheckResult run_walk_lifts(const Digraph& g, const Config& cfg) {
    return walk_lift_check(g, cfg);
}

CheckResult run_sp_formula(const Digraph& g, const Config& cfg) {
    try {
        return sp_formula_check(g, cfg);
    } catch (const CapExceeded& e) {
        return CheckResult::skip("sp_formula", "diagonal-weighted determinant ratio", e.what());
    }
}

CheckResult run_schrodinger(const Digraph& g, const Config& cfg) {
    try {
        return schrodinger_identity_check(g, cfg);
    } catch (const CapExceeded& e) {
        return CheckResult::skip("schrodinger", "lifted Schrodinger determinant", e.what());
    }
}

CheckResult run_stationarity(const Digraph& g, const Config& cfg) {
    try {
        return tree_weight_stationarity_check(g, cfg);
    } catch (const CapExceeded& e) {
        return CheckResult::skip("stationarity", "tree-weight invariance", e.what());
    }
}

struct CheckSpec {
    const char* name;
    CheckResult (*fn)(const Digraph&, const Config&);
};

const CheckSpec kChecks[] = {
    {"matrix_forest", run_matrix_forest},
    {"phi_three_way", run_phi},
    {"m_condition", run_m_condition},
    {"exploration", run_exploration},
    {"canonical_tree", run_canonical_tree},
    {"r_factorization", run_r_factorization},
    {"linear_coefficient", run_linear_coefficient},
    {"tau_derivative", run_tau_derivative},
    {"zeta_series", run_zeta_series},
    {"vertex_zeta", run_vertex_zeta},
    {"walk_lifts", run_walk_lifts},
    {"sp_formula", run_sp_formula},
    {"schrodinger", run_schrodinger},
    {"stationarity", run_stationarity},
};

} // namespace

int VerificationReport::passed() const {
    int n = 0;
    for (const auto& e : entries)
        if (e.result.pass && !e.result.skipped) ++n;
    return n;
}

int VerificationReport::failed() const {
    int n = 0;
    for (const auto& e : entries)
        if (!e.result.pass) ++n;
    return n;
}

int VerificationReport::skipped() const {
    int n = 0;
    for (const auto& e : entries)
        if (e.result.skipped) ++n;
    return n;
}

std::vector<std::string> available_checks() {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.emplace_back(c.name);
    return out;
}

std::string input_digest(const Digraph& g) {
    return "fnv1a:" + to_hex(fnv1a64(g.serialize()));
}

VerificationReport run_verification(const Digraph& g, const Config& cfg,
                                    const std::vector<std::string>& selected,
                                    const std::string& input_name) {
    if (!is_strongly_connected(g))
        throw DomainError("input graph must be strongly connected");
    for (const auto& name : selected) {
        bool known = std::any_of(std::begin(kChecks), std::end(kChecks),
                                 [&](const CheckSpec& c) { return name == c.name; });
        if (!known) throw DomainError("unknown check '" + name + "'");
    }
    VerificationReport report;
    report.input_name = input_name;
    report.digest = input_digest(g);
    report.seed = cfg.seed;
    report.vertex_count = g.vertex_count();
    report.edge_count = static_cast<int>(g.edges().size());
    report.symbolic = is_symbolic(g);
    report.stochastic = is_row_stochastic(g);
    report.config = cfg;
    for (const auto& check : kChecks) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), check.name) == selected.end())
            continue;
        auto start = std::chrono::steady_clock::now();
        ReportEntry entry;
        entry.result = check.fn(g, cfg);
        entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string report_to_text(const VerificationReport& report, bool timings) {
    std::ostringstream os;
    os << "treelift verification report\n";
    os << "input: " << report.input_name << "\n";
    os << "digest: " << report.digest << "\n";
    os << "vertices: " << report.vertex_count << "  edges: " << report.edge_count << "\n";
    os << "ring: " << (report.symbolic ? "symbolic" : "rational") << "\n";
    os << "stochastic: " << (report.stochastic ? "yes" : "no") << "\n";
    os << "seed: " << report.seed << "\n";
    os << "series-order: " << report.config.series_order
       << "  symbolic-cap: " << report.config.symbolic_cap
       << "  eval-points: " << report.config.eval_points << "\n";
    for (const auto& e : report.entries) {
        const CheckResult& r = e.result;
        os << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << " "
           << std::left << std::setw(20) << r.name << " " << r.identity;
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        if (timings && !r.skipped)
            os << "  (" << std::fixed << std::setprecision(3) << e.seconds << "s)";
        os << "\n";
        if (!r.pass && !r.witness.empty()) os << "     witness: " << r.witness << "\n";
    }
    os << "summary: " << report.passed() << " passed, " << report.failed() << " failed, "
       << report.skipped() << " skipped\n";
    os << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace treelift
