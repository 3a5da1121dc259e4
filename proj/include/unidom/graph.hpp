#pragma once

#include <array>

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unidom {

/// Hard cap on graph order: each adjacency row is a single 64-bit word.
inline constexpr int kMaxVertices = 64;

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t low_bits(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A set of vertices as a bitmask. Bit i set means vertex i is a member.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<Vertex> vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    /// Members in increasing order.
    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Two-coloring of a graph's vertex set.
struct Bipartition {
    VertexSet a;
    VertexSet b;

    bool operator==(const Bipartition&) const = default;
};

/// Simple undirected graph on at most kMaxVertices vertices. Immutable once
/// built; every constructor path checks symmetry and irreflexivity.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on an out-of-range endpoint or a self-loop.
    /// Duplicate edges collapse.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Throws GraphError unless the rows form a valid adjacency matrix.
    static Graph from_rows(std::vector<std::uint64_t> rows);
    static Graph edgeless(int n);

    int order() const { return static_cast<int>(rows_.size()); }
    /// Number of edges, s(G).
    int size() const;

    VertexSet all() const { return VertexSet{low_bits(order())}; }
    VertexSet neighbors(Vertex v) const { return VertexSet{rows_[v]}; }
    VertexSet closed_neighborhood(Vertex v) const {
        return VertexSet{rows_[v] | (std::uint64_t{1} << v)};
    }
    /// N[S], the union of closed neighborhoods of the members of s.
    VertexSet closed_neighborhood(VertexSet s) const;
    int degree(Vertex v) const { return std::popcount(rows_[v]); }
    bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    bool has_isolated_vertex() const;

    std::span<const std::uint64_t> rows() const { return rows_; }
    /// Edges (u, v) with u < v, in row-major order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

    std::vector<std::uint64_t> rows_;
};

/// BFS two-coloring. Each component's lowest-indexed vertex goes to side a.
std::optional<Bipartition> find_bipartition(const Graph& g);

/// True when p covers the vertex set disjointly and no edge lies within a side.
bool is_valid_bipartition(const Graph& g, const Bipartition& p);

/// Cross edges of the partition that are missing from g. Throws GraphError if
/// p is not a valid bipartition of g.
Graph bipartite_complement(const Graph& g, const Bipartition& p);

/// Degrees sorted in non-increasing order.
std::vector<int> degree_sequence(const Graph& g);

/// Color refinement followed by backtracking over color-compatible maps.
bool are_isomorphic(const Graph& g, const Graph& h);

/// A graph with its stable color-refinement coloring. Colors are hashes, not
/// indices, so colorings of different graphs can be compared directly.
struct RefinedGraph {
    Graph graph;
    std::array<std::uint64_t, kMaxVertices> colors{};
    /// Hash of the sorted colors. Isomorphic graphs hash equal.
    std::uint64_t hash = 0;
};

RefinedGraph refine(Graph g);
bool are_isomorphic(const RefinedGraph& g, const RefinedGraph& h);

/// refine(g).hash
std::uint64_t invariant_hash(const Graph& g);

/// Graph on the vertices of keep, relabeled 0..|keep|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

}  // namespace unidom
