#pragma once

#include "unidom/domination.hpp"
#include "unidom/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unidom {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int budget_truncated = 3;
}  // namespace exit_code

struct Expectations {
    std::optional<int> gamma;
    std::optional<int> size;
};

struct VerifyOutcome {
    Graph graph;
    DominationReport report;
    std::vector<std::string> mismatches;
    std::vector<std::string> warnings;

    /// Unique minimum dominating set and no expectation mismatch.
    bool passed() const { return report.unique && mismatches.empty(); }
};

/// Reads a single graph (graph6 or edge list) and reports on it. Throws
/// ParseError or std::runtime_error when the file is unreadable or holds
/// anything other than exactly one graph.
VerifyOutcome verify_file(const std::string& path, const Expectations& expect = {});
VerifyOutcome verify_graph(const Graph& g, const Expectations& expect = {});

/// Entry point shared by the binary and the tests. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unidom
