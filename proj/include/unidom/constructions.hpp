#pragma once

#include "unidom/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unidom {

enum class Role {
    // Bipartite family.
    DX,
    DY,
    X1,
    X2,
    Y,
    C,
    RPrime,
    RDoublePrime,
    // Fischermann family.
    D,
    A,
    B,
    R,
    // Star.
    Leaf,
};

std::string_view role_name(Role r);

/// Role of every vertex of a constructed graph, its display name, the
/// dominating set the construction is built around, and the two-coloring
/// when the family is bipartite.
struct ConstructionLayout {
    std::vector<Role> role_of;
    std::vector<std::string> name_of;
    VertexSet intended_dominators;
    std::optional<Bipartition> partition;

    VertexSet with_role(Role r) const;
    /// "name (role)" per vertex, for DOT output.
    std::vector<std::string> dot_labels() const;
};

struct Construction {
    Graph graph;
    ConstructionLayout layout;
};

enum class Family { bipartite, fischermann, star };

/// Extremal bipartite UMD graph of order n with domination number gamma and
/// bipartite_bound(n, gamma) edges.
///
/// Vertex order: D_X = x_1.., D_Y = y_1.., X = b_{1,1}, b_{1,2}, b_{2,1}, ..,
/// Y = a_{1,1}, a_{1,2}, .., then C, then R = r_1, r_2, .. . Parts are
/// A = Y + D_X + R' and B = X + D_Y + C + R'', where R' holds the odd-indexed
/// r_i and R'' the even-indexed ones.
///
/// Edges, in order:
///   x_i - b_{i,1}, x_i - b_{i,2}, y_j - a_{j,1}, y_j - a_{j,2};
///   b_{i,1} - every a in Y;
///   every c in C to x_1 and to every a in Y;
///   R' x (C + X1 + {y_1} + R'') and R'' x (Y + {x_1}).
///
/// Throws std::invalid_argument unless gamma >= 2 and n >= 3*gamma.
Construction construct_bipartite(int n, int gamma);

/// Perfectly dominated UMD graph meeting fischermann_bound(n, gamma).
/// Vertex order D = x_1.., A = a_1.., B = b_1.., R = r_1.. .
/// Throws std::invalid_argument unless gamma >= 2 and n >= 3*gamma.
Construction construct_fischermann(int n, int gamma);

/// K_{1,n-1} with center 0. Throws std::invalid_argument if n < 3.
Construction construct_star(int n);

Construction construct(Family family, int n, int gamma);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationCertificate {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// nullptr when the check was not run.
    const CheckResult* find(std::string_view name) const;
};

/// Independently recomputes every structural claim about a constructed graph.
VerificationCertificate verify_construction(const Graph& g, const ConstructionLayout& layout,
                                            int expected_size);

}  // namespace unidom
