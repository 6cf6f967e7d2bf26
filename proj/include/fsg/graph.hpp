// graph.hpp — simple undirected graphs on <= 12 vertices, adjacency as
// per-vertex bitsets, plus the named families used throughout (path, cycle,
// star, complete, lollipop, spider, dandelion).
//
// Vertex labels are 0-based everywhere. The lollipop convention: the path
// occupies vertices 0..path_part, the clique occupies path_part..n-1, and
// vertex path_part is shared by both (1-based label path_part+1).
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"

namespace fsg {

inline constexpr int kMaxOrder = 12;

// n-bit subset of the vertex labels {0,...,n-1}.
struct VertexSet {
    std::uint16_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint16_t b) : bits(b) {}

    static VertexSet full(int n) { return VertexSet(static_cast<std::uint16_t>((1u << n) - 1u)); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits = static_cast<std::uint16_t>(bits | (1u << v)); }
    void remove(int v) { bits = static_cast<std::uint16_t>(bits & ~(1u << v)); }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    int lowest() const { return std::countr_zero(bits); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint16_t b = bits; b != 0; b &= static_cast<std::uint16_t>(b - 1))
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

class Graph {
public:
    explicit Graph(int order) : order_(order) {
        if (order < 1 || order > kMaxOrder)
            throw std::invalid_argument("Graph: order must be in [1, " + std::to_string(kMaxOrder) + "]");
    }

    int order() const { return order_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        adj_[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[static_cast<std::size_t>(v)]);
    }

    int degree(int v) const { return neighbors(v).size(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < order_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_) throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
    }

    int order_;
    std::array<std::uint16_t, kMaxOrder> adj_{};
};

// ---- Named families ----

inline Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: order must be >= 3");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

// Star with center 0.
inline Graph make_star(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

// Path on vertices 0..path_part, clique on vertices path_part..n-1; the two
// share vertex path_part. Order n = path_part + clique_part.
inline Graph make_lollipop(int path_part, int clique_part) {
    if (clique_part < 2) throw std::invalid_argument("make_lollipop: clique part must be >= 2");
    if (path_part < 0) throw std::invalid_argument("make_lollipop: path part must be >= 0");
    const int n = path_part + clique_part;
    Graph g(n);
    for (int i = 0; i < path_part; ++i) g.add_edge(i, i + 1);
    for (int u = path_part; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Legs attach to center 0; leg i occupies a consecutive label block.
// Lengths must be given non-increasing.
inline Graph make_spider(const std::vector<int>& leg_lengths) {
    if (leg_lengths.empty()) throw std::invalid_argument("make_spider: need at least one leg");
    int total = 1;
    for (std::size_t i = 0; i < leg_lengths.size(); ++i) {
        if (leg_lengths[i] < 1) throw std::invalid_argument("make_spider: leg lengths must be >= 1");
        if (i > 0 && leg_lengths[i] > leg_lengths[i - 1])
            throw std::invalid_argument("make_spider: leg lengths must be non-increasing");
        total += leg_lengths[i];
    }
    Graph g(total);
    int next = 1;
    for (int len : leg_lengths) {
        g.add_edge(0, next);
        for (int j = 1; j < len; ++j) g.add_edge(next + j - 1, next + j);
        next += len;
    }
    return g;
}

// Spider with legs (path_part, 1, ..., 1) relabeled to match make_lollipop:
// path on 0..path_part, star center at path_part, leaves path_part+1..n-1.
// Every edge is an edge of make_lollipop(path_part, star_part).
inline Graph make_dandelion(int path_part, int star_part) {
    if (star_part < 2) throw std::invalid_argument("make_dandelion: star part must be >= 2");
    if (path_part < 0) throw std::invalid_argument("make_dandelion: path part must be >= 0");
    const int n = path_part + star_part;
    Graph g(n);
    for (int i = 0; i < path_part; ++i) g.add_edge(i, i + 1);
    for (int v = path_part + 1; v < n; ++v) g.add_edge(path_part, v);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.has_edge(u, v)) g.add_edge(u, v);
    const int off = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.has_edge(u, v)) g.add_edge(off + u, off + v);
    return g;
}

// ---- Subgraphs and connectivity ----

// Subgraph induced by s, relabeled to 0..|s|-1 preserving the sorted order of s.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: subset must be non-empty");
    const std::vector<int> verts = s.to_vector();
    if (verts.back() >= g.order()) throw std::invalid_argument("induced_subgraph: subset exceeds graph order");
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

// Component of `start` inside the subgraph induced by `within` (bitset BFS).
inline VertexSet component_within(const Graph& g, VertexSet within, int start) {
    if (!within.contains(start)) throw std::invalid_argument("component_within: start not in subset");
    std::uint16_t visited = static_cast<std::uint16_t>(1u << start);
    std::uint16_t frontier = visited;
    while (frontier != 0) {
        std::uint16_t next = 0;
        for (std::uint16_t f = frontier; f != 0; f &= static_cast<std::uint16_t>(f - 1))
            next |= g.neighbors(std::countr_zero(f)).bits;
        frontier = static_cast<std::uint16_t>(next & within.bits & ~visited);
        visited = static_cast<std::uint16_t>(visited | frontier);
    }
    return VertexSet(visited);
}

// True iff the subgraph induced by `within` is connected. Empty subsets are rejected.
inline bool connected_within(const Graph& g, VertexSet within) {
    if (within.empty()) throw std::invalid_argument("connected_within: subset must be non-empty");
    return component_within(g, within, within.lowest()) == within;
}

inline bool is_connected(const Graph& g) { return connected_within(g, VertexSet::full(g.order())); }

inline int min_degree(const Graph& g) {
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// True iff removing every (level-1)-subset of vertices leaves a connected graph.
inline bool is_l_removal_robust(const Graph& g, int level) {
    const int n = g.order();
    if (level < 1 || level > n)
        throw std::invalid_argument("is_l_removal_robust: level must be in [1, order]");
    const VertexSet all = VertexSet::full(n);
    return for_each_k_subset_colex(n, level - 1, [&](std::uint16_t removed) {
        return connected_within(g, VertexSet(static_cast<std::uint16_t>(all.bits & ~removed)));
    });
}

// ---- Edge bitmask view (colex pair slots, as in graph6's bit order) ----

// Slot of the unordered pair {u, v} in colex order: (0,1) (0,2) (1,2) (0,3) ...
inline int pair_slot(int u, int v) {
    if (u == v) throw std::invalid_argument("pair_slot: u != v required");
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

inline std::uint64_t edge_mask(const Graph& g) {
    if (g.order() > 11) throw std::invalid_argument("edge_mask: order must be <= 11");
    std::uint64_t mask = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) mask |= std::uint64_t{1} << pair_slot(u, v);
    return mask;
}

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n > 11) throw std::invalid_argument("graph_from_edge_mask: order must be <= 11");
    Graph g(n);
    const std::uint64_t limit = std::uint64_t{1} << binomial(n, 2);
    if (mask >= limit) throw std::invalid_argument("graph_from_edge_mask: mask exceeds C(n,2) bits");
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_slot(u, v)) & 1u) g.add_edge(u, v);
    return g;
}

// X-edges as sorted (a, b) pairs with a < b; fixes sweep and BFS tie-breaking.
inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    return edges;
}

}  // namespace fsg
