#ifndef TREELIFT_VERIFY_HPP
#define TREELIFT_VERIFY_HPP

#include <string>
#include <vector>

#include "treelift/digraph.hpp"
#include "treelift/identities.hpp"

namespace treelift {

struct ReportEntry {
    CheckResult result;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string input_name;
    std::string digest;
    std::uint64_t seed = 0;
    int vertex_count = 0;
    int edge_count = 0;
    bool symbolic = false;
    bool stochastic = false;
    Config config;
    std::vector<ReportEntry> entries;

    int passed() const;
    int failed() const;
    int skipped() const;
    bool all_passed() const { return failed() == 0; }
};

/// Names in fixed execution order.
std::vector<std::string> available_checks();

/// Runs the selected checks (all when `selected` is empty). Requires a
/// strongly connected input; throws DomainError otherwise. Unknown check
/// names also raise DomainError. Identity violations are reported in the
/// result, never thrown.
VerificationReport run_verification(const Digraph& g, const Config& cfg = {},
                                    const std::vector<std::string>& selected = {},
                                    const std::string& input_name = "<memory>");

/// Line-oriented text form. Deterministic for a fixed seed; wall times are
/// only included when `timings` is set.
std::string report_to_text(const VerificationReport& report, bool timings = false);

std::string input_digest(const Digraph& g);

} // namespace treelift

#endif
