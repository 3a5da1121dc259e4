#pragma once

#include "unidom/graph.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace unidom {

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// Exact domination by branch and bound over bit rows.
///
/// The search repeatedly picks the undominated vertex with the fewest
/// remaining candidate dominators and branches over its closed neighborhood.
/// Once a candidate has been tried it is excluded from the sibling branches,
/// so every dominating set of the target size is reached exactly once. A
/// branch is cut when an undominated vertex has no candidate left or when
/// the remaining picks times the best single-vertex coverage falls short of
/// the undominated count.
///
/// Single-threaded; one instance per thread.
class DominationSolver {
public:
    explicit DominationSolver(const Graph& g);

    /// True iff some dominating set has at most k vertices.
    bool has_dominating_set_of_size(int k);
    int domination_number();
    /// All minimum dominating sets in increasing bitmask order. If the cap is
    /// hit, the sets are the first `cap` reached by the (deterministic)
    /// search, still sorted.
    std::vector<VertexSet> minimum_dominating_sets(std::size_t cap = kNoCap);

    /// Dominating sets of at most k vertices, increasing bitmask order,
    /// stopping after `cap`. When none has fewer than k vertices these are
    /// exactly the minimum dominating sets.
    std::vector<VertexSet> dominating_sets_up_to(int k, std::size_t cap = kNoCap);
    /// Size of a greedy dominating set; an upper bound on gamma.
    int greedy_upper_bound() const;
    std::uint64_t nodes_visited() const { return nodes_; }

private:
    bool search(std::uint64_t undominated, std::uint64_t allowed, std::uint64_t chosen,
                int picks_left);

    int n_;
    std::array<std::uint64_t, kMaxVertices> closed_{};
    std::optional<int> gamma_;

    // Per-search state.
    bool collect_ = false;
    std::size_t cap_ = 0;
    std::vector<VertexSet> found_;
    std::uint64_t nodes_ = 0;
};

struct DominationReport {
    int gamma = 0;
    /// Minimum dominating sets; at most two unless requested otherwise.
    std::vector<VertexSet> min_sets;
    /// True when enumeration stopped at the cap, so min_sets may be partial.
    bool truncated = false;
    bool unique = false;
    bool has_isolated = false;
    /// Filled from the unique minimum set; empty otherwise.
    std::map<Vertex, VertexSet> epn_by_dominator;
    bool perfectly_dominated = false;
    bool epn_condition_met = false;
};

bool is_dominating(const Graph& g, VertexSet s);
int domination_number(const Graph& g);
/// cap must be at least 2 (kNoCap for everything).
std::vector<VertexSet> enumerate_minimum_dominating_sets(const Graph& g, std::size_t cap = kNoCap);

/// Decides uniqueness with a cap of 2 unless `cap` asks for more sets.
/// Every unique report on a graph without isolated vertices is passed through
/// the private-neighbor audit below.
DominationReport is_umd(const Graph& g, std::size_t cap = 2);

/// epn(v, S): vertices outside s whose only neighbor in s is v.
/// Throws std::invalid_argument if v is not in s.
VertexSet exterior_private_neighbors(const Graph& g, Vertex v, VertexSet s);

/// |epn(v, d)| >= 2 for every v in d. Throws std::invalid_argument unless d dominates g.
bool check_epn_condition(const Graph& g, VertexSet d);

/// Sum of dominator degrees equals n - |d|. Throws std::invalid_argument
/// unless d is a minimum dominating set of g.
bool is_perfectly_dominated(const Graph& g, VertexSet d);
bool perfect_by_degree_sum(const Graph& g, VertexSet d);
/// d is independent and every vertex outside d has exactly one neighbor in d.
bool perfect_by_structure(const Graph& g, VertexSet d);

bool closed_neighborhoods_disjoint(const Graph& g, VertexSet d);

/// A uniquely dominated graph without isolated vertices must give every
/// dominator at least two exterior private neighbors, which forces n >= 3*gamma.
/// Every report that reaches is_umd is checked; a violation means a solver bug.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace audit {
/// Throws TheoremViolation if a unique, isolated-vertex-free report breaks
/// the private-neighbor property. No-op otherwise.
void check_private_neighbor_theorem(const Graph& g, const DominationReport& r);
/// UMD instances that went through the check since process start.
std::uint64_t umd_instances_checked();
}  // namespace audit

}  // namespace unidom
