// theory.hpp — the k-subset connectivity characterization of
// FS(Lollipop_{n-k,k}, Y) and its certificate machinery.
//
// Decision rule: FS(Lollipop_{n-k,k}, Y) is connected iff every k-vertex
// induced subgraph of Y is connected (equivalently, Y stays connected after
// removing any n-k vertices). When some k-subset is disconnected, a
// DisconnectionWitness splits it into parts A and B with no crossing Y-edge,
// and the special/non-special classification of bijections yields two
// concrete configurations in different FS components.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "combinat.hpp"
#include "fs.hpp"
#include "graph.hpp"

namespace fsg {

// A k-subset of V(Y) split into non-empty parts with no crossing Y-edge.
struct DisconnectionWitness {
    int n = 0;  // order of Y
    VertexSet subset;
    VertexSet part_a;
    VertexSet part_b;

    int k() const { return subset.size(); }
};

inline void validate_witness(const Graph& y, const DisconnectionWitness& w) {
    if (w.n != y.order()) throw std::invalid_argument("witness: order mismatch with Y");
    if ((w.part_a.bits & w.part_b.bits) != 0) throw std::invalid_argument("witness: parts overlap");
    if ((w.part_a.bits | w.part_b.bits) != w.subset.bits) throw std::invalid_argument("witness: parts do not partition subset");
    if (w.part_a.empty() || w.part_b.empty()) throw std::invalid_argument("witness: both parts must be non-empty");
    if (w.subset.size() < 2 || w.subset.size() > y.order()) throw std::invalid_argument("witness: subset size out of range");
    for (int u : w.part_a.to_vector())
        for (int v : w.part_b.to_vector())
            if (y.has_edge(u, v))
                throw std::invalid_argument("witness: crossing edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

// Special configuration paired with a non-special one for the same witness;
// the two lie in different components of FS(Lollipop_{n-k,k}, Y).
struct CertificatePair {
    Bijection special;
    Bijection nonspecial;
    DisconnectionWitness witness;
};

inline void check_k_range(const Graph& y, int k, const char* who) {
    if (k < 2 || k > y.order()) throw std::invalid_argument(std::string(who) + ": need 2 <= k <= order(Y)");
}

// Scans k-subsets in colex order, short-circuiting on the first disconnected one.
inline bool every_k_subset_connected(const Graph& y, int k) {
    check_k_range(y, k, "every_k_subset_connected");
    return for_each_k_subset_colex(y.order(), k, [&](std::uint16_t mask) {
        return connected_within(y, VertexSet(mask));
    });
}

inline bool decide_lollipop_fs_connected(const Graph& y, int k) {
    check_k_range(y, k, "decide_lollipop_fs_connected");
    return every_k_subset_connected(y, k);
}

// Colex-first disconnected k-subset; part_a is the component of the smallest
// vertex of the subset, part_b the rest.
inline std::optional<DisconnectionWitness> find_disconnected_k_subset(const Graph& y, int k) {
    check_k_range(y, k, "find_disconnected_k_subset");
    std::optional<DisconnectionWitness> found;
    for_each_k_subset_colex(y.order(), k, [&](std::uint16_t mask) {
        const VertexSet subset(mask);
        const VertexSet comp = component_within(y, subset, subset.lowest());
        if (comp == subset) return true;
        found = DisconnectionWitness{y.order(), subset, comp,
                                     VertexSet(static_cast<std::uint16_t>(subset.bits & ~comp.bits))};
        return false;
    });
    return found;
}

// A configuration is special when, walking positions 0..n-k (the path part,
// identification vertex included), some member of A appears before any member
// of B. Equivalently: the first A-or-B person on the path part is in A.
inline bool is_special(const Bijection& s, const DisconnectionWitness& w) {
    if (s.size() != w.n) throw std::invalid_argument("is_special: bijection size mismatch with witness");
    const int path_end = w.n - w.k();  // internal label of the identification vertex
    for (int p = 0; p <= path_end; ++p) {
        const int person = s[p];
        if (w.part_a.contains(person)) return true;
        if (w.part_b.contains(person)) return false;
    }
    return false;
}

// Deterministic pair: smallest member of A (resp. B) at position 0, everyone
// else in ascending person order.
inline CertificatePair build_certificate(const Graph& y, int k, const DisconnectionWitness& w) {
    check_k_range(y, k, "build_certificate");
    validate_witness(y, w);
    if (w.k() != k) throw std::invalid_argument("build_certificate: witness subset size differs from k");
    const int n = y.order();
    const auto lead_with = [n](int person) {
        std::vector<int> values;
        values.reserve(static_cast<std::size_t>(n));
        values.push_back(person);
        for (int v = 0; v < n; ++v)
            if (v != person) values.push_back(v);
        return Bijection::from_values(values);
    };
    CertificatePair pair{lead_with(w.part_a.lowest()), lead_with(w.part_b.lowest()), w};
    if (!is_special(pair.special, w) || is_special(pair.nonspecial, w))
        throw std::logic_error("build_certificate: classification check failed");
    return pair;
}

// Exhaustive sweep over all n! configurations: true iff no FS edge joins a
// special and a non-special one. X must be the lollipop matching the witness.
inline bool check_no_crossing_edges(const Graph& x, const Graph& y, const DisconnectionWitness& w,
                                    const FsOptions& opts = {}) {
    validate_witness(y, w);
    const int n = y.order();
    const int k = w.k();
    if (!(x == make_lollipop(n - k, k)))
        throw std::invalid_argument("check_no_crossing_edges: X is not Lollipop_{n-k,k} for this witness");
    detail::check_component_cap(n, opts);
    const auto xedges = edge_list(x);
    const std::uint64_t total = factorial(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Bijection b = unrank(idx, n);
        const bool special = is_special(b, w);
        for (const auto& [a, c] : xedges) {
            if (!y.has_edge(b[a], b[c])) continue;
            b.swap_positions(a, c);
            const bool neighbor_special = is_special(b, w);
            b.swap_positions(a, c);
            if (neighbor_special != special) return false;
        }
    }
    return true;
}

// ---- Forbidden 5-vertex patterns (min degree n-4, clique part 5) ----

enum class InducedPattern { k3_plus_p2, p3_plus_p2 };

inline const Graph& pattern_graph(InducedPattern p) {
    static const Graph k3p2 = disjoint_union(make_complete(3), make_path(2));
    static const Graph p3p2 = disjoint_union(make_path(3), make_path(2));
    return p == InducedPattern::k3_plus_p2 ? k3p2 : p3p2;
}

// Labeled-exhaustive isomorphism test; fine for the orders this library caps at.
inline bool isomorphic_brute_force(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool has_induced_pattern(const Graph& y, InducedPattern p) {
    if (y.order() < 5) throw std::invalid_argument("has_induced_pattern: order(Y) must be >= 5");
    const Graph& target = pattern_graph(p);
    bool found = false;
    for_each_k_subset_colex(y.order(), 5, [&](std::uint16_t mask) {
        if (isomorphic_brute_force(induced_subgraph(y, VertexSet(mask)), target)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

// Characterization at clique part 5 for min degree exactly n-4: connected iff
// neither forbidden pattern occurs. The hypothesis is enforced, not assumed.
inline bool corollary_k5_predicate(const Graph& y) {
    const int n = y.order();
    if (n < 5) throw std::invalid_argument("corollary_k5_predicate: order(Y) must be >= 5");
    if (min_degree(y) != n - 4)
        throw std::domain_error("corollary hypothesis violated: min degree " + std::to_string(min_degree(y)) +
                                " != n-4 = " + std::to_string(n - 4));
    return !has_induced_pattern(y, InducedPattern::k3_plus_p2) && !has_induced_pattern(y, InducedPattern::p3_plus_p2);
}

// Necessary degree bound: a connected verdict requires min degree >= n-k+1.
inline bool check_necessary_degree(const Graph& y, int k) {
    check_k_range(y, k, "check_necessary_degree");
    return min_degree(y) >= y.order() - k + 1;
}

// ---- FS-component coverage property for general connected X ----

enum class LemmaStatus { holds, fails, hypothesis_not_met };

struct LemmaReport {
    LemmaStatus status = LemmaStatus::holds;
    std::string detail;
};

// Checks: for every bijection s, position x and person y0 there is some s' in
// s's FS-component with s'(x) = y0. Hypotheses (X, Y connected, max degree of
// X = k >= 2, every k-subset of Y connected) are verified first and reported
// separately from a genuine failure.
inline LemmaReport verify_lemma_any(const Graph& x, const Graph& y, const FsOptions& opts = {}) {
    if (x.order() != y.order()) return {LemmaStatus::hypothesis_not_met, "order mismatch"};
    const int n = x.order();
    if (n > 6) throw std::invalid_argument("verify_lemma_any: order must be <= 6");
    if (!is_connected(x)) return {LemmaStatus::hypothesis_not_met, "X is not connected"};
    if (!is_connected(y)) return {LemmaStatus::hypothesis_not_met, "Y is not connected"};
    const int k = max_degree(x);
    if (k < 2) return {LemmaStatus::hypothesis_not_met, "max degree of X is " + std::to_string(k) + " (< 2)"};
    if (!every_k_subset_connected(y, k))
        return {LemmaStatus::hypothesis_not_met, "some " + std::to_string(k) + "-subset of Y is disconnected"};

    const FsComponents comps = fs_components(x, y, opts);
    const std::uint64_t total = comps.size();
    const std::uint64_t full = (n * n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n * n)) - 1);
    std::vector<std::uint64_t> coverage;  // root -> bitset over (x, y) pairs
    std::vector<std::uint32_t> roots;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const std::uint32_t r = comps.root(idx);
        std::size_t slot = roots.size();
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == r) { slot = i; break; }
        if (slot == roots.size()) {
            roots.push_back(r);
            coverage.push_back(0);
        }
        const Bijection b = unrank(idx, n);
        for (int p = 0; p < n; ++p) coverage[slot] |= std::uint64_t{1} << (p * n + b[p]);
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (coverage[i] != full) {
            const int missing = std::countr_one(coverage[i]);  // first unreached (x, y) pair
            return {LemmaStatus::fails, "component with root " + std::to_string(roots[i]) + " never maps position " +
                                            std::to_string(missing / n) + " to person " + std::to_string(missing % n)};
        }
    }
    return {LemmaStatus::holds, ""};
}

}  // namespace fsg
