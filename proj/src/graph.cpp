#include "unidom/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace unidom {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw GraphError("graph order " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
    }
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<std::uint64_t> rows(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const std::uint64_t mask = low_bits(n);
    for (int i = 0; i < n; ++i) {
        if (rows[i] & ~mask) throw GraphError("row " + std::to_string(i) + " has bits >= n");
        if ((rows[i] >> i) & 1U) throw GraphError("self-loop at vertex " + std::to_string(i));
        for (std::uint64_t b = rows[i]; b != 0; b &= b - 1) {
            const int j = std::countr_zero(b);
            if (!((rows[j] >> i) & 1U)) {
                throw GraphError("asymmetric adjacency between " + std::to_string(i) + " and " +
                                 std::to_string(j));
            }
        }
    }
    return Graph(std::move(rows));
}

Graph Graph::edgeless(int n) {
    check_order(n);
    return Graph(std::vector<std::uint64_t>(n, 0));
}

int Graph::size() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
    std::uint64_t out = s.bits();
    for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) out |= rows_[std::countr_zero(b)];
    return VertexSet{out};
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(rows_.begin(), rows_.end(), [](std::uint64_t r) { return r == 0; });
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for (std::uint64_t b = rows_[u] & ~low_bits(u + 1); b != 0; b &= b - 1) {
            out.emplace_back(u, std::countr_zero(b));
        }
    }
    return out;
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::queue<Vertex> frontier;
    for (Vertex root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        frontier.push(root);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            for (Vertex v : g.neighbors(u).to_vector()) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    frontier.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition p;
    for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? p.a : p.b).insert(v);
    return p;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& p) {
    if (!(p.a & p.b).empty() || (p.a | p.b) != g.all()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet same = p.a.contains(v) ? p.a : p.b;
        if (!(g.neighbors(v) & same).empty()) return false;
    }
    return true;
}

Graph bipartite_complement(const Graph& g, const Bipartition& p) {
    if (!is_valid_bipartition(g, p)) {
        throw GraphError("bipartite_complement: partition is not valid for this graph");
    }
    std::vector<std::uint64_t> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet other = p.a.contains(v) ? p.b : p.a;
        rows[v] = (other - g.neighbors(v)).bits();
    }
    return Graph::from_rows(std::move(rows));
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs(g.order());
    for (Vertex v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end(), std::greater<>());
    return degs;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    const auto verts = keep.to_vector();
    std::vector<std::uint64_t> rows(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (g.has_edge(verts[i], verts[j])) rows[i] |= std::uint64_t{1} << j;
        }
    }
    return Graph::from_rows(std::move(rows));
}

namespace {

using Colors = std::array<std::uint64_t, kMaxVertices>;

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// One round: own color combined with the multiset of neighbor colors. The
// sum of mixed values is order-independent, so the result is invariant.
void refine_round(const Graph& g, const Colors& in, Colors& out) {
    for (Vertex v = 0; v < g.order(); ++v) {
        std::uint64_t acc = 0;
        for (std::uint64_t b = g.neighbors(v).bits(); b != 0; b &= b - 1) {
            acc += mix(in[std::countr_zero(b)]);
        }
        out[v] = mix(in[v] * 0x100000001b3ULL ^ acc);
    }
}

int count_distinct(const Colors& c, int n) {
    Colors s = c;
    std::sort(s.begin(), s.begin() + n);
    return static_cast<int>(std::unique(s.begin(), s.begin() + n) - s.begin());
}

class IsoMatcher {
public:
    IsoMatcher(const Graph& g, const Graph& h, const Colors& cg, const Colors& ch)
        : g_(g), h_(h), cg_(cg), ch_(ch), n_(g.order()) {
        // Match rare colors first; ties broken by higher degree.
        std::array<int, kMaxVertices> freq{};
        for (int v = 0; v < n_; ++v)
            for (int u = 0; u < n_; ++u) freq[v] += cg_[u] == cg_[v];
        std::iota(order_.begin(), order_.begin() + n_, 0);
        std::stable_sort(order_.begin(), order_.begin() + n_, [&](Vertex a, Vertex b) {
            if (freq[a] != freq[b]) return freq[a] < freq[b];
            return g_.degree(a) > g_.degree(b);
        });
    }

    bool run() { return extend(0); }

private:
    bool extend(int depth) {
        if (depth == n_) return true;
        const Vertex u = order_[depth];
        for (Vertex w = 0; w < n_; ++w) {
            if (((used_ >> w) & 1U) || ch_[w] != cg_[u]) continue;
            bool ok = true;
            for (int k = 0; k < depth && ok; ++k) {
                const Vertex pu = order_[k];
                ok = g_.has_edge(u, pu) == h_.has_edge(w, map_[pu]);
            }
            if (!ok) continue;
            map_[u] = w;
            used_ |= std::uint64_t{1} << w;
            if (extend(depth + 1)) return true;
            used_ &= ~(std::uint64_t{1} << w);
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    const Colors& cg_;
    const Colors& ch_;
    const int n_;
    std::array<Vertex, kMaxVertices> map_{};
    std::array<Vertex, kMaxVertices> order_{};
    std::uint64_t used_ = 0;
};

}  // namespace

RefinedGraph refine(Graph g) {
    RefinedGraph r{std::move(g)};
    const int n = r.graph.order();
    Colors next{};
    int classes = 1;
    for (;;) {
        refine_round(r.graph, r.colors, next);
        r.colors = next;
        const int k = count_distinct(r.colors, n);
        if (k == classes) break;
        classes = k;
    }
    Colors sorted = r.colors;
    std::sort(sorted.begin(), sorted.begin() + n);
    r.hash = mix(static_cast<std::uint64_t>(n));
    for (int i = 0; i < n; ++i) r.hash = mix(r.hash ^ sorted[i]);
    return r;
}

std::uint64_t invariant_hash(const Graph& g) { return refine(g).hash; }

bool are_isomorphic(const RefinedGraph& g, const RefinedGraph& h) {
    if (g.hash != h.hash || g.graph.order() != h.graph.order() ||
        g.graph.size() != h.graph.size()) {
        return false;
    }
    return IsoMatcher(g.graph, h.graph, g.colors, h.colors).run();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (degree_sequence(g) != degree_sequence(h)) return false;
    return are_isomorphic(refine(g), refine(h));
}

}  // namespace unidom
