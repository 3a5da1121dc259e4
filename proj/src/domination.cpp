#include "unidom/domination.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace unidom {

DominationSolver::DominationSolver(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) closed_[v] = g.closed_neighborhood(v).bits();
}

int DominationSolver::greedy_upper_bound() const {
    std::uint64_t undominated = low_bits(n_);
    int picks = 0;
    while (undominated != 0) {
        int best = 0, best_cover = -1;
        for (Vertex v = 0; v < n_; ++v) {
            const int cover = std::popcount(closed_[v] & undominated);
            if (cover > best_cover) {
                best_cover = cover;
                best = v;
            }
        }
        undominated &= ~closed_[best];
        ++picks;
    }
    return picks;
}

bool DominationSolver::search(std::uint64_t undominated, std::uint64_t allowed,
                              std::uint64_t chosen, int picks_left) {
    ++nodes_;
    if (undominated == 0) {
        if (!collect_) return true;
        found_.emplace_back(chosen);
        return found_.size() >= cap_;
    }
    if (picks_left == 0) return false;

    Vertex pivot = -1;
    int fewest = kMaxVertices + 1;
    for (std::uint64_t b = undominated; b != 0; b &= b - 1) {
        const Vertex u = std::countr_zero(b);
        const int options = std::popcount(closed_[u] & allowed);
        if (options == 0) return false;
        if (options < fewest) {
            fewest = options;
            pivot = u;
        }
    }

    int best_cover = 0;
    for (std::uint64_t b = allowed; b != 0; b &= b - 1) {
        best_cover = std::max(best_cover, std::popcount(closed_[std::countr_zero(b)] & undominated));
    }
    if (best_cover * picks_left < std::popcount(undominated)) return false;

    for (std::uint64_t b = closed_[pivot] & allowed; b != 0; b &= b - 1) {
        const Vertex c = std::countr_zero(b);
        const std::uint64_t bit = std::uint64_t{1} << c;
        allowed &= ~bit;
        if (search(undominated & ~closed_[c], allowed, chosen | bit, picks_left - 1)) return true;
    }
    return false;
}

bool DominationSolver::has_dominating_set_of_size(int k) {
    if (k < 0) return false;
    collect_ = false;
    return search(low_bits(n_), low_bits(n_), 0, k);
}

int DominationSolver::domination_number() {
    if (gamma_) return *gamma_;
    const int upper = greedy_upper_bound();
    int gamma = upper;
    for (int k = n_ == 0 ? 0 : 1; k < upper; ++k) {
        if (has_dominating_set_of_size(k)) {
            gamma = k;
            break;
        }
    }
    gamma_ = gamma;
    return gamma;
}

std::vector<VertexSet> DominationSolver::minimum_dominating_sets(std::size_t cap) {
    return dominating_sets_up_to(domination_number(), cap);
}

std::vector<VertexSet> DominationSolver::dominating_sets_up_to(int k, std::size_t cap) {
    if (k < 0) return {};
    collect_ = true;
    cap_ = cap;
    found_.clear();
    search(low_bits(n_), low_bits(n_), 0, k);
    collect_ = false;
    std::vector<VertexSet> out = std::move(found_);
    found_ = {};
    std::sort(out.begin(), out.end());
    return out;
}

bool is_dominating(const Graph& g, VertexSet s) {
    return g.closed_neighborhood(s) == g.all();
}

int domination_number(const Graph& g) { return DominationSolver(g).domination_number(); }

std::vector<VertexSet> enumerate_minimum_dominating_sets(const Graph& g, std::size_t cap) {
    if (cap < 2) throw std::invalid_argument("enumerate_minimum_dominating_sets: cap must be >= 2");
    return DominationSolver(g).minimum_dominating_sets(cap);
}

VertexSet exterior_private_neighbors(const Graph& g, Vertex v, VertexSet s) {
    if (!s.contains(v)) {
        throw std::invalid_argument("exterior_private_neighbors: vertex " + std::to_string(v) +
                                    " is not in the set");
    }
    VertexSet out;
    for (Vertex u : (g.neighbors(v) - s).to_vector()) {
        if ((g.neighbors(u) & s) == VertexSet::of({v})) out.insert(u);
    }
    return out;
}

bool check_epn_condition(const Graph& g, VertexSet d) {
    if (!is_dominating(g, d)) {
        throw std::invalid_argument("check_epn_condition: set does not dominate the graph");
    }
    for (Vertex v : d.to_vector()) {
        if (exterior_private_neighbors(g, v, d).size() < 2) return false;
    }
    return true;
}

bool perfect_by_degree_sum(const Graph& g, VertexSet d) {
    int sum = 0;
    for (Vertex v : d.to_vector()) sum += g.degree(v);
    return sum == g.order() - d.size();
}

bool perfect_by_structure(const Graph& g, VertexSet d) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const int inside = (g.neighbors(v) & d).size();
        if (d.contains(v) ? inside != 0 : inside != 1) return false;
    }
    return true;
}

bool is_perfectly_dominated(const Graph& g, VertexSet d) {
    if (!is_dominating(g, d) || d.size() != domination_number(g)) {
        throw std::invalid_argument("is_perfectly_dominated: set is not a minimum dominating set");
    }
    return perfect_by_degree_sum(g, d);
}

bool closed_neighborhoods_disjoint(const Graph& g, VertexSet d) {
    std::uint64_t seen = 0;
    for (Vertex v : d.to_vector()) {
        const std::uint64_t nb = g.closed_neighborhood(v).bits();
        if (seen & nb) return false;
        seen |= nb;
    }
    return true;
}

DominationReport is_umd(const Graph& g, std::size_t cap) {
    DominationSolver solver(g);
    DominationReport r;
    r.gamma = solver.domination_number();
    r.min_sets = solver.minimum_dominating_sets(std::max<std::size_t>(cap, 2));
    r.truncated = cap != kNoCap && r.min_sets.size() >= std::max<std::size_t>(cap, 2);
    r.unique = r.min_sets.size() == 1;
    r.has_isolated = g.has_isolated_vertex();
    if (r.unique) {
        const VertexSet d = r.min_sets.front();
        for (Vertex v : d.to_vector()) r.epn_by_dominator[v] = exterior_private_neighbors(g, v, d);
        r.perfectly_dominated = perfect_by_degree_sum(g, d);
        r.epn_condition_met =
            std::all_of(r.epn_by_dominator.begin(), r.epn_by_dominator.end(),
                        [](const auto& kv) { return kv.second.size() >= 2; });
        audit::check_private_neighbor_theorem(g, r);
    }
    return r;
}

namespace audit {

namespace {
std::atomic<std::uint64_t> checked{0};
}

void check_private_neighbor_theorem(const Graph& g, const DominationReport& r) {
    if (!r.unique || r.has_isolated) return;
    checked.fetch_add(1, std::memory_order_relaxed);
    if (!r.epn_condition_met) {
        throw TheoremViolation("unique minimum dominating set with a dominator having fewer than "
                               "two exterior private neighbors");
    }
    if (g.order() < 3 * r.gamma) {
        throw TheoremViolation("unique minimum dominating set on fewer than 3*gamma vertices");
    }
}

std::uint64_t umd_instances_checked() { return checked.load(std::memory_order_relaxed); }

}  // namespace audit

}  // namespace unidom
