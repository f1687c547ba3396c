// treelift command line front end: parse graph files, run the identity
// suite, enumerate arborescences and forests, build lifts, print zeta
// tables. Exit codes: 0 all good, 1 identity violation, 2 input or usage
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "treelift/arborescence.hpp"
#include "treelift/digraph.hpp"
#include "treelift/errors.hpp"
#include "treelift/identities.hpp"
#include "treelift/lift.hpp"
#include "treelift/series.hpp"
#include "treelift/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw treelift::ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw treelift::ParseError("cannot write '" + path + "'");
    out << content;
}

treelift::Digraph load_graph(const std::string& path) {
    return treelift::Digraph::parse(read_file(path));
}

nlohmann::json report_to_json(const treelift::VerificationReport& r, bool timings) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json c{
            {"name", e.result.name},
            {"identity", e.result.identity},
            {"status", e.result.skipped ? "skip" : e.result.pass ? "pass" : "fail"},
        };
        if (!e.result.detail.empty()) c["detail"] = e.result.detail;
        if (!e.result.witness.empty()) c["witness"] = e.result.witness;
        if (timings && !e.result.skipped) c["seconds"] = e.seconds;
        checks.push_back(std::move(c));
    }
    return nlohmann::json{
        {"input", r.input_name},
        {"digest", r.digest},
        {"seed", r.seed},
        {"vertices", r.vertex_count},
        {"edges", r.edge_count},
        {"ring", r.symbolic ? "symbolic" : "rational"},
        {"stochastic", r.stochastic},
        {"config",
         {{"series_order", r.config.series_order},
          {"symbolic_cap", r.config.symbolic_cap},
          {"eval_points", r.config.eval_points},
          {"lift_cap", r.config.lift_cap},
          {"walk_max_len", r.config.walk_max_len}}},
        {"checks", std::move(checks)},
        {"summary",
         {{"passed", r.passed()}, {"failed", r.failed()}, {"skipped", r.skipped()}}},
        {"result", r.all_passed() ? "PASS" : "FAIL"},
    };
}

std::string weight_str(const treelift::Weight& w) {
    return w.is_constant() ? w.constant_value().str() : w.str();
}

} // namespace

int main(int argc, char** argv) {
    using namespace treelift;

    CLI::App app{"spanning tree graph (lift) construction and exact identity verification"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::vector<std::string> selected_checks;
    std::string format = "text";
    bool timings = false;

    app.add_option("--seed", cfg.seed, "seed for sampled orderings and evaluation points");
    app.add_option("--series-order", cfg.series_order, "truncation order for series checks")
        ->check(CLI::Range(1, 24));
    app.add_option("--symbolic-cap", cfg.symbolic_cap,
                   "largest dimension for full symbolic determinants");
    app.add_option("--eval-points", cfg.eval_points,
                   "random evaluation points beyond the symbolic cap")
        ->check(CLI::Range(1, 64));
    app.add_option("--lift-cap", cfg.lift_cap, "largest lift size to build");
    app.add_option("--det-cap", cfg.det_cap,
                   "largest lift dimension for dense determinant checks");
    app.add_option("--walk-len", cfg.walk_max_len, "closed-walk length for lift counting")
        ->check(CLI::Range(1, 8));

    auto* cmd_verify = app.add_subcommand("verify", "run the identity suite on a graph file");
    std::string verify_path;
    cmd_verify->add_option("graph", verify_path, "graph file")->required();
    cmd_verify->add_option("--checks", selected_checks,
                           "comma separated subset of checks to run")
        ->delimiter(',');
    cmd_verify->add_option("--format", format, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd_verify->add_flag("--timings", timings, "include wall times in the report");

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "list arborescences, forests or strongly "
                                        "connected subsets");
    std::string enum_path, enum_what;
    int enum_root = 0;
    std::vector<int> enum_roots;
    cmd_enumerate->add_option("graph", enum_path, "graph file")->required();
    cmd_enumerate->add_option("kind", enum_what, "trees | forests | subsets")
        ->required()
        ->check(CLI::IsMember({"trees", "forests", "subsets"}));
    cmd_enumerate->add_option("--root", enum_root, "root vertex for trees");
    cmd_enumerate->add_option("--roots", enum_roots, "root set for forests")->delimiter(',');

    auto* cmd_lift = app.add_subcommand("lift", "build the spanning tree graph and write it "
                                                "with its label sidecar");
    std::string lift_path, lift_out;
    cmd_lift->add_option("graph", lift_path, "graph file")->required();
    cmd_lift->add_option("-o,--output", lift_out,
                         "output prefix (default: <graph>.lift)");

    auto* cmd_checklift = app.add_subcommand(
        "checklift", "verify a previously written lift against its source graph");
    std::string cl_graph, cl_lift, cl_labels;
    cmd_checklift->add_option("graph", cl_graph, "source graph file")->required();
    cmd_checklift->add_option("lift", cl_lift, "lift graph file")->required();
    cmd_checklift->add_option("labels", cl_labels, "lift label sidecar")->required();

    auto* cmd_phi = app.add_subcommand("phi", "compute the tree-ratio polynomial three ways");
    std::string phi_path;
    cmd_phi->add_option("graph", phi_path, "graph file")->required();

    auto* cmd_zeta = app.add_subcommand("zeta", "print the truncated zeta series both ways");
    std::string zeta_path;
    cmd_zeta->add_option("graph", zeta_path, "graph file")->required();

    auto* cmd_schrodinger =
        app.add_subcommand("schrodinger", "check the lifted Schrodinger determinant identity");
    std::string sch_path;
    cmd_schrodinger->add_option("graph", sch_path, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*cmd_verify) {
            Digraph g = load_graph(verify_path);
            VerificationReport report = run_verification(g, cfg, selected_checks, verify_path);
            if (format == "structured")
                std::cout << report_to_json(report, timings).dump(2) << "\n";
            else
                std::cout << report_to_text(report, timings);
            return report.all_passed() ? kExitPass : kExitViolation;
        }

        if (*cmd_enumerate) {
            Digraph g = load_graph(enum_path);
            if (enum_what == "trees") {
                for (const Arborescence& t : enumerate_trees(g, enum_root))
                    std::cout << t.encode() << "\t" << weight_str(tree_weight(g, t)) << "\n";
            } else if (enum_what == "forests") {
                if (enum_roots.empty())
                    throw DomainError("forests need --roots");
                VertexSet roots;
                for (int v : enum_roots) roots = roots.with(v);
                for (const Forest& f : enumerate_forests(g, roots))
                    std::cout << f.encode() << "\t" << weight_str(forest_weight(g, f)) << "\n";
            } else {
                for (const VertexSet& w : strongly_connected_subsets(g))
                    std::cout << w.str() << "\n";
            }
            return kExitPass;
        }

        if (*cmd_lift) {
            Digraph g = load_graph(lift_path);
            LiftGraph lg = build_lift(g, cfg.lift_cap);
            std::string prefix = lift_out.empty() ? lift_path + ".lift" : lift_out;
            write_file(prefix + ".graph", lg.graph.serialize());
            write_file(prefix + ".labels", lift_label_map(lg));
            std::cout << "lift: " << lg.size() << " vertices, " << lg.graph.edges().size()
                      << " edges\n";
            std::cout << "wrote " << prefix << ".graph and " << prefix << ".labels\n";
            return kExitPass;
        }

        if (*cmd_checklift) {
            Digraph g = load_graph(cl_graph);
            LiftFileCheck res = check_lift_files(g, read_file(cl_lift), read_file(cl_labels),
                                                 cfg.lift_cap);
            std::cout << (res.ok ? "OK: " : "MISMATCH: ") << res.message << "\n";
            return res.ok ? kExitPass : kExitViolation;
        }

        if (*cmd_phi) {
            Digraph g = load_graph(phi_path);
            if (!is_strongly_connected(g))
                throw DomainError("input graph must be strongly connected");
            PhiReport rep = phi_report(g, cfg);
            std::cout << "lift vertices: " << rep.lift_size << "\n";
            std::cout << "tau(G) = " << weight_str(rep.tau_base) << "\n";
            std::cout << "tau(lift) = " << weight_str(rep.tau_lift) << "\n";
            std::cout << "phi (lift route)    = " << weight_str(rep.phi_lift) << "\n";
            std::cout << "phi (product route) = " << weight_str(rep.phi_product) << "\n";
            std::cout << "phi (minor route)   = " << weight_str(rep.phi_minor) << "\n";
            std::cout << "agreement: " << (rep.agree ? "yes" : "NO") << "\n";
            return rep.agree ? kExitPass : kExitViolation;
        }

        if (*cmd_zeta) {
            Digraph g = load_graph(zeta_path);
            if (!is_strongly_connected(g))
                throw DomainError("input graph must be strongly connected");
            if (is_symbolic(g)) throw DomainError("zeta tables need rational weights");
            int order = cfg.series_order;
            WalkSupportTable table = closed_walk_support_sums(g, order);
            TruncatedSeries expo(order);
            for (int n = 1; n <= order; ++n)
                expo.set_coeff(static_cast<std::size_t>(n),
                               table.total(n).constant_value() /
                                   Rational(static_cast<long>(n)));
            TruncatedSeries walk_side = expo.exp();
            // det(I - sP) as the pencil det(I + s*(-P))
            RingMatrix p = weight_matrix(g);
            RingMatrix minus_p(p.labels());
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < p.size(); ++j)
                    if (!p.at(i, j).is_zero()) minus_p.at(i, j) = -p.at(i, j);
            UniPoly den = det_pencil(RingMatrix::identity(p.labels()), minus_p);
            TruncatedSeries det_side = TruncatedSeries::from_unipoly(den, order).inverse();
            std::cout << "n\twalk-side\tdet-side\tmatch\n";
            bool all = true;
            for (int n = 0; n <= order; ++n) {
                bool same = walk_side.coeff(static_cast<std::size_t>(n)) ==
                            det_side.coeff(static_cast<std::size_t>(n));
                all = all && same;
                std::cout << n << "\t" << walk_side.coeff(static_cast<std::size_t>(n)).str()
                          << "\t" << det_side.coeff(static_cast<std::size_t>(n)).str() << "\t"
                          << (same ? "yes" : "NO") << "\n";
            }
            std::cout << "det(I - sP) = " << den.str() << "\n";
            return all ? kExitPass : kExitViolation;
        }

        if (*cmd_schrodinger) {
            Digraph g = load_graph(sch_path);
            if (!is_strongly_connected(g))
                throw DomainError("input graph must be strongly connected");
            CheckResult r = schrodinger_identity_check(g, cfg);
            std::cout << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << " " << r.name << " "
                      << r.identity;
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
            if (!r.witness.empty()) std::cout << "witness: " << r.witness << "\n";
            return r.pass ? kExitPass : kExitViolation;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CapExceeded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
