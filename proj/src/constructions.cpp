#include "unidom/constructions.hpp"

#include "unidom/bounds.hpp"
#include "unidom/domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace unidom {

namespace {

void require_hypothesis(int n, int gamma, const char* what) {
    if (gamma < 2 || n < 3 * gamma) {
        throw std::invalid_argument(std::string(what) + ": needs gamma >= 2 and n >= 3*gamma");
    }
    if (n > kMaxVertices) {
        throw std::invalid_argument(std::string(what) + ": order exceeds the vertex cap");
    }
}

class LayoutBuilder {
public:
    Vertex add(Role role, std::string name) {
        layout_.role_of.push_back(role);
        layout_.name_of.push_back(std::move(name));
        return static_cast<Vertex>(layout_.role_of.size() - 1);
    }
    void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

    Construction finish(VertexSet dominators, std::optional<Bipartition> partition) {
        layout_.intended_dominators = dominators;
        layout_.partition = partition;
        const int n = static_cast<int>(layout_.role_of.size());
        return {Graph::from_edge_list(n, edges_), std::move(layout_)};
    }

private:
    ConstructionLayout layout_;
    std::vector<Edge> edges_;
};

std::string sub(char letter, int i) { return letter + std::to_string(i); }
std::string sub(char letter, int i, int k) {
    return letter + std::to_string(i) + "," + std::to_string(k);
}

}  // namespace

std::string_view role_name(Role r) {
    switch (r) {
        case Role::DX: return "D_X";
        case Role::DY: return "D_Y";
        case Role::X1: return "X1";
        case Role::X2: return "X2";
        case Role::Y: return "Y";
        case Role::C: return "C";
        case Role::RPrime: return "R_prime";
        case Role::RDoublePrime: return "R_dprime";
        case Role::D: return "D";
        case Role::A: return "A";
        case Role::B: return "B";
        case Role::R: return "R";
        case Role::Leaf: return "Leaf";
    }
    return "?";
}

VertexSet ConstructionLayout::with_role(Role r) const {
    VertexSet out;
    for (std::size_t v = 0; v < role_of.size(); ++v) {
        if (role_of[v] == r) out.insert(static_cast<Vertex>(v));
    }
    return out;
}

std::vector<std::string> ConstructionLayout::dot_labels() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < role_of.size(); ++v) {
        out.push_back(name_of[v] + " (" + std::string(role_name(role_of[v])) + ")");
    }
    return out;
}

Construction construct_bipartite(int n, int gamma) {
    require_hypothesis(n, gamma, "construct_bipartite");
    const int half_down = gamma / 2;
    const int half_up = (gamma + 1) / 2;
    const int c_count = static_cast<int>(std::min<std::int64_t>(n - 3 * gamma, c_capacity(gamma)));
    const int r_count = n - 3 * gamma - c_count;

    LayoutBuilder b;
    std::vector<Vertex> dx, dy, x1, x2, y, c, r_prime, r_dprime;
    for (int i = 1; i <= half_down; ++i) dx.push_back(b.add(Role::DX, sub('x', i)));
    for (int j = 1; j <= half_up; ++j) dy.push_back(b.add(Role::DY, sub('y', j)));
    for (int i = 1; i <= half_down; ++i) {
        x1.push_back(b.add(Role::X1, sub('b', i, 1)));
        x2.push_back(b.add(Role::X2, sub('b', i, 2)));
    }
    for (int j = 1; j <= half_up; ++j) {
        y.push_back(b.add(Role::Y, sub('a', j, 1)));
        y.push_back(b.add(Role::Y, sub('a', j, 2)));
    }
    for (int k = 1; k <= c_count; ++k) c.push_back(b.add(Role::C, sub('c', k)));
    for (int k = 1; k <= r_count; ++k) {
        if (k % 2 == 1) {
            r_prime.push_back(b.add(Role::RPrime, sub('r', k)));
        } else {
            r_dprime.push_back(b.add(Role::RDoublePrime, sub('r', k)));
        }
    }

    // P3 skeleton.
    for (int i = 0; i < half_down; ++i) {
        b.edge(dx[i], x1[i]);
        b.edge(dx[i], x2[i]);
    }
    for (int j = 0; j < half_up; ++j) {
        b.edge(dy[j], y[2 * j]);
        b.edge(dy[j], y[2 * j + 1]);
    }
    // First neighbor of each x_i joins all of Y.
    for (Vertex bi1 : x1) {
        for (Vertex a : y) b.edge(bi1, a);
    }
    for (Vertex cv : c) {
        b.edge(cv, dx.front());
        for (Vertex a : y) b.edge(cv, a);
    }
    for (Vertex rp : r_prime) {
        for (Vertex cv : c) b.edge(rp, cv);
        for (Vertex bi1 : x1) b.edge(rp, bi1);
        b.edge(rp, dy.front());
        for (Vertex rd : r_dprime) b.edge(rp, rd);
    }
    for (Vertex rd : r_dprime) {
        for (Vertex a : y) b.edge(rd, a);
        b.edge(rd, dx.front());
    }

    VertexSet dominators, side_a, side_b;
    for (Vertex v : dx) dominators.insert(v);
    for (Vertex v : dy) dominators.insert(v);
    for (const auto* group : {&y, &dx, &r_prime}) {
        for (Vertex v : *group) side_a.insert(v);
    }
    for (const auto* group : {&x1, &x2, &dy, &c, &r_dprime}) {
        for (Vertex v : *group) side_b.insert(v);
    }
    return b.finish(dominators, Bipartition{side_a, side_b});
}

Construction construct_fischermann(int n, int gamma) {
    require_hypothesis(n, gamma, "construct_fischermann");
    const int r_count = n - 3 * gamma;

    LayoutBuilder b;
    std::vector<Vertex> x, a, bv, r;
    for (int i = 1; i <= gamma; ++i) x.push_back(b.add(Role::D, sub('x', i)));
    for (int i = 1; i <= gamma; ++i) a.push_back(b.add(Role::A, sub('a', i)));
    for (int i = 1; i <= gamma; ++i) bv.push_back(b.add(Role::B, sub('b', i)));
    for (int k = 1; k <= r_count; ++k) r.push_back(b.add(Role::R, sub('r', k)));

    for (int i = 0; i < gamma; ++i) {
        b.edge(a[i], x[i]);
        b.edge(bv[i], x[i]);
    }
    for (Vertex rv : r) b.edge(x.front(), rv);
    // b_i ~ a_j for i > j (1-based i from 2).
    for (int i = 1; i < gamma; ++i) {
        for (int j = 0; j < i; ++j) b.edge(bv[i], a[j]);
    }
    for (int i = 1; i < gamma; ++i) {
        for (Vertex rv : r) b.edge(bv[i], rv);
    }
    std::vector<Vertex> clique = a;
    clique.insert(clique.end(), r.begin(), r.end());
    for (std::size_t p = 0; p < clique.size(); ++p) {
        for (std::size_t q = p + 1; q < clique.size(); ++q) b.edge(clique[p], clique[q]);
    }

    VertexSet dominators;
    for (Vertex v : x) dominators.insert(v);
    return b.finish(dominators, std::nullopt);
}

Construction construct_star(int n) {
    if (n < 3) {
        throw std::invalid_argument("construct_star: needs n >= 3 (K_{1,1} has two minimum "
                                    "dominating sets)");
    }
    if (n > kMaxVertices) throw std::invalid_argument("construct_star: order exceeds the vertex cap");
    LayoutBuilder b;
    const Vertex center = b.add(Role::D, "x1");
    VertexSet leaves;
    for (int k = 1; k < n; ++k) {
        const Vertex leaf = b.add(Role::Leaf, sub('a', k));
        b.edge(center, leaf);
        leaves.insert(leaf);
    }
    return b.finish(VertexSet::of({center}), Bipartition{VertexSet::of({center}), leaves});
}

Construction construct(Family family, int n, int gamma) {
    switch (family) {
        case Family::bipartite: return construct_bipartite(n, gamma);
        case Family::fischermann: return construct_fischermann(n, gamma);
        case Family::star: return construct_star(n);
    }
    throw std::invalid_argument("unknown family");
}

bool VerificationCertificate::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationCertificate::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

VerificationCertificate verify_construction(const Graph& g, const ConstructionLayout& layout,
                                            int expected_size) {
    VerificationCertificate cert;
    auto add = [&](std::string name, bool passed, std::string detail) {
        cert.checks.push_back({std::move(name), passed, std::move(detail)});
    };
    const VertexSet intended = layout.intended_dominators;

    add("size", g.size() == expected_size,
        "s(G) = " + std::to_string(g.size()) + ", expected " + std::to_string(expected_size));
    add("no_isolated_vertices", !g.has_isolated_vertex(), "");

    const DominationReport report = is_umd(g);
    add("gamma", report.gamma == intended.size(),
        "gamma = " + std::to_string(report.gamma) + ", |D| = " + std::to_string(intended.size()));
    add("unique", report.unique,
        report.unique ? "" : "found at least " + std::to_string(report.min_sets.size()) +
                                 " minimum dominating sets");
    add("min_set_is_intended", report.unique && report.min_sets.front() == intended, "");

    const bool by_sum = is_dominating(g, intended) && perfect_by_degree_sum(g, intended);
    const bool by_structure = is_dominating(g, intended) && perfect_by_structure(g, intended);
    add("perfectly_dominated", by_sum && by_structure && report.gamma == intended.size(),
        by_sum == by_structure ? "" : "degree-sum and structural forms disagree");

    add("neighborhoods_disjoint", closed_neighborhoods_disjoint(g, intended), "");
    add("epn_condition", is_dominating(g, intended) && check_epn_condition(g, intended), "");

    if (layout.partition) {
        add("bipartite", is_valid_bipartition(g, *layout.partition), "");
    }
    return cert;
}

}  // namespace unidom
