// Decision rule, witnesses, certificates, patterns, degree bounds, coverage.
#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>
#include <vector>

#include "fsg/fs.hpp"
#include "fsg/graph.hpp"
#include "fsg/lab.hpp"
#include "fsg/rng.hpp"
#include "fsg/theory.hpp"

using namespace fsg;

namespace {

// Lex-order subset enumeration over induced subgraphs; independent of the
// library's colex/bitset scan.
bool every_k_oracle(const Graph& y, int k) {
    const int n = y.order();
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        VertexSet s;
        for (int v : pick) s.add(v);
        if (!is_connected(induced_subgraph(y, s))) return false;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return true;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// Recursive-backtracking isomorphism oracle for 5-vertex graphs.
bool iso_oracle(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int u) -> bool {
        if (u == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            bool ok = true;
            for (int prev = 0; prev < u && ok; ++prev)
                if (a.has_edge(prev, u) != b.has_edge(image[prev], w)) ok = false;
            if (!ok) continue;
            image[u] = w;
            used[w] = true;
            if (place(u + 1)) return true;
            used[w] = false;
            image[u] = -1;
        }
        return false;
    };
    return place(0);
}

bool pattern_oracle(const Graph& y, const Graph& target) {
    const int n = y.order();
    std::vector<int> pick(5);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        VertexSet s;
        for (int v : pick) s.add(v);
        if (iso_oracle(induced_subgraph(y, s), target)) return true;
        int i = 4;
        while (i >= 0 && pick[i] == n - 5 + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < 5; ++j) pick[j] = pick[j - 1] + 1;
    }
}

Graph complement(const Graph& g) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

const Graph k3p2 = disjoint_union(make_complete(3), make_path(2));

}  // namespace

TEST_CASE("every_k_subset_connected") {
    for (int k = 2; k <= 6; ++k) REQUIRE(every_k_subset_connected(make_complete(6), k));
    REQUIRE_FALSE(every_k_subset_connected(make_path(5), 2));
    REQUIRE(every_k_subset_connected(make_cycle(5), 4));
    REQUIRE_FALSE(every_k_subset_connected(make_cycle(5), 3));
    REQUIRE_THROWS_AS(every_k_subset_connected(make_path(4), 1), std::invalid_argument);
    REQUIRE_THROWS_AS(every_k_subset_connected(make_path(4), 5), std::invalid_argument);

    // full agreement with the lex-order oracle at order 5
    enumerate_labeled_graphs(5, [&](const Graph& y) {
        for (int k = 2; k <= 5; ++k) REQUIRE(every_k_subset_connected(y, k) == every_k_oracle(y, k));
    });
}

TEST_CASE("k-subset rule bridges to removal robustness") {
    for (int n = 2; n <= 6; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& y) {
            for (int k = 2; k <= n; ++k)
                REQUIRE(every_k_subset_connected(y, k) == is_l_removal_robust(y, n - k + 1));
        });
    }
    CounterRng rng(41, 11);
    for (int trial = 0; trial < 1500; ++trial) {
        const Graph y = graph_from_edge_mask(7, rng.next() & ((1u << 21) - 1));
        for (int k = 2; k <= 7; ++k)
            REQUIRE(every_k_subset_connected(y, k) == is_l_removal_robust(y, 7 - k + 1));
    }
}

TEST_CASE("connected verdicts are monotone in the clique part") {
    for (int n = 3; n <= 6; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& y) {
            for (int k = 2; k < n; ++k)
                if (decide_lollipop_fs_connected(y, k)) REQUIRE(decide_lollipop_fs_connected(y, k + 1));
        });
    }
}

TEST_CASE("degenerate clique parts recover the classical characterizations") {
    for (int n = 2; n <= 5; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& y) {
            REQUIRE(decide_lollipop_fs_connected(y, 2) == (y == make_complete(n)));
            REQUIRE(decide_lollipop_fs_connected(y, n) == is_connected(y));
        });
    }
}

TEST_CASE("find_disconnected_k_subset") {
    for (int k = 2; k <= 5; ++k) REQUIRE_FALSE(find_disconnected_k_subset(make_complete(5), k).has_value());

    const auto whole = find_disconnected_k_subset(k3p2, 5);
    REQUIRE(whole.has_value());
    REQUIRE(whole->subset == VertexSet::full(5));
    REQUIRE(whole->part_a == VertexSet::of({0, 1, 2}));
    REQUIRE(whole->part_b == VertexSet::of({3, 4}));
    REQUIRE_NOTHROW(validate_witness(k3p2, *whole));

    // colex-first disconnected 3-subset of Cycle_6 is {0,1,3}
    const auto c6 = find_disconnected_k_subset(make_cycle(6), 3);
    REQUIRE(c6.has_value());
    REQUIRE(c6->subset == VertexSet::of({0, 1, 3}));
    REQUIRE(c6->part_a == VertexSet::of({0, 1}));
    REQUIRE(c6->part_b == VertexSet::of({3}));

    // witness invariants hold wherever a witness exists (all Y at order 5)
    enumerate_labeled_graphs(5, [&](const Graph& y) {
        for (int k = 2; k <= 5; ++k) {
            const auto w = find_disconnected_k_subset(y, k);
            REQUIRE(w.has_value() != every_k_subset_connected(y, k));
            if (w.has_value()) REQUIRE_NOTHROW(validate_witness(y, *w));
        }
    });
}

TEST_CASE("witness validation rejects corrupted input") {
    DisconnectionWitness w{5, VertexSet::full(5), VertexSet::of({0, 1, 2}), VertexSet::of({3, 4})};
    REQUIRE_NOTHROW(validate_witness(k3p2, w));

    DisconnectionWitness crossing = w;
    crossing.part_a = VertexSet::of({0, 1, 3});
    crossing.part_b = VertexSet::of({2, 4});
    REQUIRE_THROWS_AS(validate_witness(k3p2, crossing), std::invalid_argument);  // {1,2} is an edge

    DisconnectionWitness empty_part = w;
    empty_part.part_a = VertexSet::full(5);
    empty_part.part_b = VertexSet{};
    REQUIRE_THROWS_AS(validate_witness(k3p2, empty_part), std::invalid_argument);

    DisconnectionWitness overlap = w;
    overlap.part_b = VertexSet::of({2, 3, 4});
    REQUIRE_THROWS_AS(validate_witness(k3p2, overlap), std::invalid_argument);
}

TEST_CASE("is_special classifies by the first A-or-B person on the path part") {
    const DisconnectionWitness w{5, VertexSet::full(5), VertexSet::of({0, 1, 2}), VertexSet::of({3, 4})};
    // k = n = 5: only position 0 is on the path part
    for (std::uint64_t i = 0; i < factorial(5); ++i) {
        const Bijection b = unrank(i, 5);
        REQUIRE(is_special(b, w) == w.part_a.contains(b[0]));
    }

    // position-0 rule holds for every witness over every Y at orders 3..4
    for (int n = 3; n <= 4; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& y) {
            for (int k = 2; k <= n; ++k) {
                const auto witness = find_disconnected_k_subset(y, k);
                if (!witness.has_value()) continue;
                for (std::uint64_t i = 0; i < factorial(n); ++i) {
                    const Bijection b = unrank(i, n);
                    if (witness->part_a.contains(b[0])) REQUIRE(is_special(b, *witness));
                    if (witness->part_b.contains(b[0])) REQUIRE_FALSE(is_special(b, *witness));
                }
            }
        });
    }

    // a B-person sitting between position 0 and the A-person blocks specialness
    const DisconnectionWitness w23{5, VertexSet::of({0, 1, 3}), VertexSet::of({0, 1}), VertexSet::of({3})};
    REQUIRE(is_special(Bijection::from_values({2, 0, 4, 1, 3}), w23));        // A at position 1, nothing before
    REQUIRE_FALSE(is_special(Bijection::from_values({2, 3, 0, 1, 4}), w23));  // B at position 1 blocks A at 2
    REQUIRE_FALSE(is_special(Bijection::from_values({2, 4, 3, 1, 0}), w23));  // first A/B on path is B
}

TEST_CASE("build_certificate") {
    const DisconnectionWitness w{5, VertexSet::full(5), VertexSet::of({0, 1, 2}), VertexSet::of({3, 4})};
    const CertificatePair cert = build_certificate(k3p2, 5, w);
    REQUIRE(cert.special == Bijection::from_values({0, 1, 2, 3, 4}));
    REQUIRE(cert.nonspecial == Bijection::from_values({3, 0, 1, 2, 4}));
    REQUIRE(is_special(cert.special, w));
    REQUIRE_FALSE(is_special(cert.nonspecial, w));

    // certificate members always classify (special, non-special); orders 3..4 exhaustive
    for (int n = 3; n <= 4; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& y) {
            for (int k = 2; k <= n; ++k) {
                const auto witness = find_disconnected_k_subset(y, k);
                if (!witness.has_value()) continue;
                const CertificatePair c = build_certificate(y, k, *witness);
                REQUIRE(is_special(c.special, *witness));
                REQUIRE_FALSE(is_special(c.nonspecial, *witness));
                // and the two land in different FS components
                const auto comps = fs_components(make_lollipop(n - k, k), y);
                REQUIRE_FALSE(comps.same_component(c.special, c.nonspecial));
            }
        });
    }
}

TEST_CASE("no FS edge joins special and non-special configurations (order 4)") {
    enumerate_labeled_graphs(4, [&](const Graph& y) {
        for (int k = 2; k <= 4; ++k) {
            const auto witness = find_disconnected_k_subset(y, k);
            if (!witness.has_value()) continue;
            REQUIRE(check_no_crossing_edges(make_lollipop(4 - k, k), y, *witness));
        }
    });
    // X must match the witness's lollipop
    const auto w = find_disconnected_k_subset(make_cycle(6), 3);
    REQUIRE_THROWS_AS(check_no_crossing_edges(make_path(6), make_cycle(6), *w), std::invalid_argument);
}

TEST_CASE("induced pattern detection") {
    REQUIRE(has_induced_pattern(k3p2, InducedPattern::k3_plus_p2));
    REQUIRE_FALSE(has_induced_pattern(k3p2, InducedPattern::p3_plus_p2));
    REQUIRE_FALSE(has_induced_pattern(make_complete(6), InducedPattern::k3_plus_p2));
    REQUIRE_FALSE(has_induced_pattern(make_complete(6), InducedPattern::p3_plus_p2));
    REQUIRE_THROWS_AS(has_induced_pattern(make_complete(4), InducedPattern::k3_plus_p2), std::invalid_argument);

    const Graph c7c = complement(make_cycle(7));
    REQUIRE(min_degree(c7c) == 4);
    REQUIRE(has_induced_pattern(c7c, InducedPattern::k3_plus_p2) ==
            pattern_oracle(c7c, pattern_graph(InducedPattern::k3_plus_p2)));
    REQUIRE(has_induced_pattern(c7c, InducedPattern::p3_plus_p2) ==
            pattern_oracle(c7c, pattern_graph(InducedPattern::p3_plus_p2)));

    // double-enumeration oracle over random order-7 graphs
    CounterRng rng(61, 13);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph y = graph_from_edge_mask(7, rng.next() & ((1u << 21) - 1));
        for (const auto pat : {InducedPattern::k3_plus_p2, InducedPattern::p3_plus_p2})
            REQUIRE(has_induced_pattern(y, pat) == pattern_oracle(y, pattern_graph(pat)));
    }
}

TEST_CASE("corollary predicate at min degree n-4") {
    REQUIRE_THROWS_AS(corollary_k5_predicate(make_complete(8)), std::domain_error);  // delta = n-1
    REQUIRE_THROWS_AS(corollary_k5_predicate(make_complete(4)), std::invalid_argument);

    // agrees with the k-subset rule on min-degree-4 samples at order 8
    for (int i = 0; i < 100; ++i) {
        const Graph y = sample_graph_with_min_degree(8, 4, derive_seed(77, static_cast<std::uint64_t>(i)));
        REQUIRE(corollary_k5_predicate(y) == every_k_subset_connected(y, 5));
    }
}

TEST_CASE("necessary degree bound") {
    for (int k = 2; k <= 6; ++k) REQUIRE(check_necessary_degree(make_complete(6), k));
    REQUIRE_FALSE(check_necessary_degree(make_star(6), 3));

    // no enumerated graph at order 5 violates connected => degree bound
    enumerate_labeled_graphs(5, [&](const Graph& y) {
        for (int k = 2; k <= 5; ++k)
            if (decide_lollipop_fs_connected(y, k)) REQUIRE(check_necessary_degree(y, k));
    });
}

TEST_CASE("component coverage check (verify_lemma_any)") {
    REQUIRE(verify_lemma_any(make_path(4), make_complete(4)).status == LemmaStatus::holds);

    const auto not_met = verify_lemma_any(make_lollipop(2, 3), make_path(5));
    REQUIRE(not_met.status == LemmaStatus::hypothesis_not_met);  // {0,2,4} is a disconnected 3-subset

    // K4 minus a perfect matching is Cycle_4: hypotheses hold, property holds
    Graph c4 = make_cycle(4);
    REQUIRE(verify_lemma_any(make_lollipop(1, 3), c4).status == LemmaStatus::holds);

    REQUIRE(verify_lemma_any(make_path(3), make_path(4)).status == LemmaStatus::hypothesis_not_met);
    REQUIRE(verify_lemma_any(make_path(2), make_path(2)).status == LemmaStatus::hypothesis_not_met);  // max degree 1
    REQUIRE_THROWS_AS(verify_lemma_any(make_complete(7), make_complete(7)), std::invalid_argument);
}
