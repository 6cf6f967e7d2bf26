// fs.hpp — explicit friends-and-strangers graph machinery: neighbor
// generation, component computation over all n! bijections, and BFS
// reachability with swap-sequence extraction.
//
// FS(X, Y) has one vertex per bijection V(X) -> V(Y); two bijections are
// adjacent when they differ by one swap across an X-edge whose images are
// Y-adjacent. Vertices are indexed by Lehmer rank.
#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bijection.hpp"
#include "graph.hpp"
#include "parallel.hpp"

namespace fsg {

inline constexpr int kComponentCapDefault = 9;
inline constexpr int kComponentCapMax = 10;

struct FsOptions {
    int cap = kComponentCapDefault;  // refuse component sweeps above this order
    int workers = 1;
};

// One FS edge traversal: swap the persons at positions a and b.
struct SwapMove {
    int a = 0;
    int b = 0;
    std::pair<int, int> persons{0, 0};  // (sigma(a), sigma(b)) at time of swap
};

inline std::uint64_t fs_vertex_count(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("fs_vertex_count: n must be in [1, 20]");
    return factorial(n);
}

namespace detail {

inline void check_fs_pair(const Graph& x, const Graph& y) {
    if (x.order() != y.order())
        throw std::invalid_argument("FS(X,Y): order mismatch (" + std::to_string(x.order()) + " vs " +
                                    std::to_string(y.order()) + ")");
}

inline void check_component_cap(int n, const FsOptions& opts) {
    if (opts.cap < 1 || opts.cap > kComponentCapMax)
        throw std::invalid_argument("FS component cap must be in [1, " + std::to_string(kComponentCapMax) + "]");
    if (n > opts.cap)
        throw std::runtime_error("FS component sweep refused: order " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(opts.cap) + " (" + std::to_string(factorial(n)) +
                                 " bijections); raise --cap or FS_LOLLIPOP_CAP up to " +
                                 std::to_string(kComponentCapMax));
}

// Concurrent union-find. Roots are always the minimum index of their class,
// so the final partition is canonical regardless of merge order or thread
// interleaving. Path halving keeps chains short.
class MinUnionFind {
public:
    explicit MinUnionFind(std::uint32_t n)
        : parent_(std::make_unique<std::atomic<std::uint32_t>[]>(n)), n_(n), live_(n) {
        for (std::uint32_t i = 0; i < n; ++i) parent_[i].store(i, std::memory_order_relaxed);
    }

    std::uint32_t find(std::uint32_t x) const {
        for (;;) {
            std::uint32_t p = parent_[x].load(std::memory_order_relaxed);
            if (p == x) return x;
            const std::uint32_t gp = parent_[p].load(std::memory_order_relaxed);
            if (gp != p) parent_[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
            x = gp;
        }
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        for (;;) {
            std::uint32_t ra = find(a);
            std::uint32_t rb = find(b);
            if (ra == rb) return false;
            if (ra > rb) std::swap(ra, rb);
            std::uint32_t expected = rb;
            if (parent_[rb].compare_exchange_strong(expected, ra, std::memory_order_relaxed)) {
                live_.fetch_sub(1, std::memory_order_relaxed);
                return true;
            }
        }
    }

    std::uint32_t live() const { return live_.load(std::memory_order_relaxed); }

    // Fully compressed parent array: parent[i] = smallest index of i's class.
    std::vector<std::uint32_t> finalize(std::uint32_t& component_count) const {
        std::vector<std::uint32_t> out(n_);
        component_count = 0;
        for (std::uint32_t i = 0; i < n_; ++i) {
            const std::uint32_t p = parent_[i].load(std::memory_order_relaxed);
            out[i] = (p == i) ? i : out[p];  // p < i for non-roots
            if (p == i) ++component_count;
        }
        return out;
    }

private:
    std::unique_ptr<std::atomic<std::uint32_t>[]> parent_;
    std::uint32_t n_;
    std::atomic<std::uint32_t> live_;
};

}  // namespace detail

// Component structure of FS(X, Y); indices are Lehmer ranks, roots are the
// smallest index in each class.
class FsComponents {
public:
    FsComponents(int n, std::vector<std::uint32_t> parent, std::uint32_t count)
        : n_(n), parent_(std::move(parent)), count_(count) {}

    int order() const { return n_; }
    std::uint64_t size() const { return parent_.size(); }
    std::uint32_t component_count() const { return count_; }

    std::uint32_t root(std::uint64_t index) const {
        if (index >= parent_.size()) throw std::out_of_range("FsComponents: index out of range");
        return parent_[index];
    }

    std::uint32_t root_of(const Bijection& b) const { return root(rank(b)); }

    bool same_component(const Bijection& a, const Bijection& b) const { return root_of(a) == root_of(b); }

    const std::vector<std::uint32_t>& parents() const { return parent_; }

private:
    int n_;
    std::vector<std::uint32_t> parent_;
    std::uint32_t count_;
};

// Neighbors of s in FS(X, Y), in ascending X-edge order.
inline std::vector<std::pair<SwapMove, Bijection>> fs_neighbors(const Graph& x, const Graph& y, const Bijection& s) {
    detail::check_fs_pair(x, y);
    if (s.size() != x.order()) throw std::invalid_argument("fs_neighbors: bijection size mismatch");
    std::vector<std::pair<SwapMove, Bijection>> out;
    for (const auto& [a, b] : edge_list(x)) {
        const int pa = s[a], pb = s[b];
        if (!y.has_edge(pa, pb)) continue;
        Bijection t = s;
        t.swap_positions(a, b);
        out.push_back({SwapMove{a, b, {pa, pb}}, std::move(t)});
    }
    return out;
}

inline FsComponents fs_components(const Graph& x, const Graph& y, const FsOptions& opts = {}) {
    detail::check_fs_pair(x, y);
    const int n = x.order();
    detail::check_component_cap(n, opts);
    const std::uint64_t total = factorial(n);
    const auto xedges = edge_list(x);

    detail::MinUnionFind uf(static_cast<std::uint32_t>(total));
    parallel_blocks(total, opts.workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if ((idx & 0xff) == 0 && uf.live() == 1) return;
            Bijection b = unrank(idx, n);
            for (const auto& [a, c] : xedges) {
                if (!y.has_edge(b[a], b[c])) continue;
                b.swap_positions(a, c);
                uf.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(rank(b)));
                b.swap_positions(a, c);
            }
        }
    });

    std::uint32_t count = 0;
    std::vector<std::uint32_t> parent = uf.finalize(count);
    return FsComponents(n, std::move(parent), count);
}

inline bool fs_is_connected(const Graph& x, const Graph& y, const FsOptions& opts = {}) {
    return fs_components(x, y, opts).component_count() == 1;
}

// Shortest swap sequence from src to dst, or nullopt if unreachable.
// Neighbors are expanded in ascending X-edge order, so the result is
// reproducible; moves carry the persons swapped at each step.
inline std::optional<std::vector<SwapMove>> fs_reach(const Graph& x, const Graph& y, const Bijection& src,
                                                     const Bijection& dst, const FsOptions& opts = {}) {
    detail::check_fs_pair(x, y);
    const int n = x.order();
    if (src.size() != n || dst.size() != n) throw std::invalid_argument("fs_reach: bijection size mismatch");
    detail::check_component_cap(n, opts);
    if (src == dst) return std::vector<SwapMove>{};

    const std::uint64_t total = factorial(n);
    const auto xedges = edge_list(x);
    constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> prev(total, kUnseen);
    std::vector<std::uint8_t> via_edge(total, 0);

    const std::uint32_t start = static_cast<std::uint32_t>(rank(src));
    const std::uint32_t goal = static_cast<std::uint32_t>(rank(dst));
    std::vector<std::uint32_t> queue;
    queue.push_back(start);
    prev[start] = start;
    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const std::uint32_t cur = queue[head];
        Bijection b = unrank(cur, n);
        for (std::size_t e = 0; e < xedges.size(); ++e) {
            const auto [a, c] = xedges[e];
            if (!y.has_edge(b[a], b[c])) continue;
            b.swap_positions(a, c);
            const std::uint32_t nxt = static_cast<std::uint32_t>(rank(b));
            b.swap_positions(a, c);
            if (prev[nxt] != kUnseen) continue;
            prev[nxt] = cur;
            via_edge[nxt] = static_cast<std::uint8_t>(e);
            if (nxt == goal) {
                found = true;
                break;
            }
            queue.push_back(nxt);
        }
    }
    if (!found) return std::nullopt;

    std::vector<std::uint8_t> path;
    for (std::uint32_t cur = goal; cur != start; cur = prev[cur]) path.push_back(via_edge[cur]);

    std::vector<SwapMove> moves;
    moves.reserve(path.size());
    Bijection b = src;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const auto [a, c] = xedges[*it];
        const int pa = b[a], pc = b[c];
        if (!y.has_edge(pa, pc)) throw std::logic_error("fs_reach: replay produced an invalid move");
        moves.push_back(SwapMove{a, c, {pa, pc}});
        b.swap_positions(a, c);
    }
    if (!(b == dst)) throw std::logic_error("fs_reach: replay did not land on dst");
    return moves;
}

// Precomputed neighbor table for one X, reusable across many Y of the same
// order: entry (idx, e) holds the neighbor's rank and the colex slot of the
// swapped person pair. A Y is then just an edge-mask filter over the slots.
class SwapTable {
public:
    static SwapTable build(const Graph& x) {
        if (x.order() > 7) throw std::invalid_argument("SwapTable: order must be <= 7");
        SwapTable t;
        t.n_ = x.order();
        t.total_ = factorial(t.n_);
        t.xedges_ = edge_list(x);
        const std::size_t stride = t.xedges_.size();
        t.neighbor_.resize(static_cast<std::size_t>(t.total_) * stride);
        t.person_slot_.resize(static_cast<std::size_t>(t.total_) * stride);
        for (std::uint64_t idx = 0; idx < t.total_; ++idx) {
            Bijection b = unrank(idx, t.n_);
            for (std::size_t e = 0; e < stride; ++e) {
                const auto [a, c] = t.xedges_[e];
                const int pa = b[a], pc = b[c];
                b.swap_positions(a, c);
                t.neighbor_[idx * stride + e] = static_cast<std::uint32_t>(rank(b));
                b.swap_positions(a, c);
                t.person_slot_[idx * stride + e] = static_cast<std::uint8_t>(pair_slot(pa, pc));
            }
        }
        return t;
    }

    int order() const { return n_; }

    FsComponents components(const Graph& y) const {
        const std::uint64_t ymask = filter_mask(y);
        detail::MinUnionFind uf(static_cast<std::uint32_t>(total_));
        sweep(uf, ymask);
        std::uint32_t count = 0;
        std::vector<std::uint32_t> parent = uf.finalize(count);
        return FsComponents(n_, std::move(parent), count);
    }

    bool connected_with(const Graph& y) const {
        const std::uint64_t ymask = filter_mask(y);
        detail::MinUnionFind uf(static_cast<std::uint32_t>(total_));
        sweep(uf, ymask);
        return uf.live() == 1;
    }

private:
    std::uint64_t filter_mask(const Graph& y) const {
        if (y.order() != n_) throw std::invalid_argument("SwapTable: Y order mismatch");
        return edge_mask(y);
    }

    void sweep(detail::MinUnionFind& uf, std::uint64_t ymask) const {
        const std::size_t stride = xedges_.size();
        for (std::uint64_t idx = 0; idx < total_; ++idx) {
            if ((idx & 0xff) == 0 && uf.live() == 1) return;
            const std::size_t base = idx * stride;
            for (std::size_t e = 0; e < stride; ++e) {
                if ((ymask >> person_slot_[base + e]) & 1u)
                    uf.unite(static_cast<std::uint32_t>(idx), neighbor_[base + e]);
            }
        }
    }

    int n_ = 0;
    std::uint64_t total_ = 0;
    std::vector<std::pair<int, int>> xedges_;
    std::vector<std::uint32_t> neighbor_;
    std::vector<std::uint8_t> person_slot_;
};

}  // namespace fsg
