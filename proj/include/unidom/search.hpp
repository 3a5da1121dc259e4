#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unidom {

/// Largest order the exhaustive searches accept.
inline constexpr int kMaxSearchOrder = 10;

struct SearchOptions {
    /// Wall-clock limit; the result is flagged incomplete when it runs out.
    std::optional<std::chrono::duration<double>> budget;
    /// Worker threads. 0 reads UNIDOM_THREADS, falling back to the hardware count.
    unsigned threads = 0;
    /// Keep every extremal graph (deduplicated by isomorphism at the end).
    bool collect_witnesses = true;
    /// Called now and then with (graphs scanned so far, best size so far).
    std::function<void(std::uint64_t, int)> progress;
};

struct SearchResult {
    int n = 0;
    int gamma = 0;
    /// -1 when no graph qualifies.
    int max_size = -1;
    /// graph6, one per isomorphism class, sorted.
    std::vector<std::string> witnesses;
    std::uint64_t graphs_scanned = 0;
    /// Labeled graphs the complete run visits.
    std::uint64_t expected_scan = 0;
    std::uint64_t umd_graphs_found = 0;
    std::chrono::duration<double> elapsed{0};
    bool complete = false;
};

class SearchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Maximum size over labeled bipartite graphs of order n, without isolated
/// vertices, whose domination number is gamma and whose minimum dominating
/// set is unique.
///
/// Graphs are enumerated as a part A containing vertex 0 (the A/B swap is
/// symmetric) together with every subset of the |A|*|B| cross pairs.
/// Requires n <= kMaxSearchOrder and gamma >= 2.
SearchResult max_umd_bipartite_size(int n, int gamma, const SearchOptions& options = {});

/// Isomorphism classes of bipartite UMD graphs with the given order, domination
/// number and exactly `size` edges. Only masks of that popcount are visited.
/// max_size in the result is `size` when at least one witness exists.
SearchResult count_extremal_witnesses(int n, int gamma, int size,
                                      const SearchOptions& options = {});

/// sum over a = 1..n of C(n-1, a-1) * 2^(a(n-a)).
std::uint64_t labeled_bipartite_scan_count(int n);
/// sum over a = 1..n of C(n-1, a-1) * C(a(n-a), size).
std::uint64_t labeled_bipartite_scan_count(int n, int size);

/// Fewest edges of a graph on n labeled vertices with no isolated vertex and
/// no K2 component, by trying every edge subset. Requires 3 <= n <= 7.
int brute_force_min_forest_edges(int n);
/// brute_force_min_forest_edges(n) == min_forest_edges(n).
bool verify_forest_lemma(int n);

}  // namespace unidom
