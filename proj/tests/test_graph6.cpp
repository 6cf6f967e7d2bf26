// graph6 encoding: fixtures against an independent decoder, round trips, errors.
#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "fsg/graph.hpp"
#include "fsg/graph6.hpp"
#include "fsg/lab.hpp"
#include "fsg/rng.hpp"

using namespace fsg;

namespace {

// Independent decoder: expands all body bytes into one flat bit vector first,
// then reads the upper triangle column by column.
Graph reference_decode(const std::string& s) {
    const int n = static_cast<unsigned char>(s.at(0)) - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int chunk = static_cast<unsigned char>(s[i]) - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((chunk >> b) & 1);
    }
    Graph g(n);
    std::size_t pos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++pos)
            if (bits.at(pos)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 fixtures") {
    REQUIRE(parse_graph6("D~{").order() == 5);
    REQUIRE(parse_graph6("D~{") == make_complete(5));
    REQUIRE(parse_graph6("DhC") == make_path(5));
    REQUIRE(parse_graph6("Cs") == make_star(4));
    REQUIRE(parse_graph6("DwC") == disjoint_union(make_complete(3), make_path(2)));
    REQUIRE(parse_graph6("@") == Graph(1));

    REQUIRE(write_graph6(make_complete(5)) == "D~{");
    REQUIRE(write_graph6(make_path(5)) == "DhC");
    REQUIRE(write_graph6(make_star(4)) == "Cs");

    for (const std::string s : {"D~{", "DhC", "Cs", "DwC", "@", "A_", "B?", "BW"}) {
        REQUIRE(parse_graph6(s) == reference_decode(s));
        REQUIRE(write_graph6(parse_graph6(s)) == s);
    }
    REQUIRE(parse_graph6(">>graph6<<D~{") == make_complete(5));
}

TEST_CASE("graph6 round-trips every labeled graph up to order 6") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& g) {
            const std::string s = write_graph6(g);
            REQUIRE(parse_graph6(s) == g);
            REQUIRE(reference_decode(s) == g);
        });
    }
}

TEST_CASE("graph6 round-trips random graphs up to the order cap") {
    CounterRng rng(11, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 7 + static_cast<int>(rng.below(6));  // 7..12
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin(0.5)) g.add_edge(u, v);
        const std::string s = write_graph6(g);
        REQUIRE(parse_graph6(s) == g);
        REQUIRE(reference_decode(s) == g);
    }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    REQUIRE_THROWS_AS(parse_graph6(""), Graph6Error);
    REQUIRE_THROWS_AS(parse_graph6("D"), Graph6Error);      // truncated body
    REQUIRE_THROWS_AS(parse_graph6("D~{x"), Graph6Error);   // trailing bytes
    REQUIRE_THROWS_AS(parse_graph6("A~"), Graph6Error);     // non-zero padding
    REQUIRE_THROWS_AS(parse_graph6("?"), Graph6Error);      // order 0
    REQUIRE_THROWS_AS(parse_graph6("M????????????????"), Graph6Error);  // order 14 > cap
    REQUIRE_THROWS_AS(parse_graph6("~??B?"), Graph6Error);  // long form
    REQUIRE_THROWS_AS(parse_graph6(":Fa@x^"), Graph6Error); // sparse6
    REQUIRE_THROWS_AS(parse_graph6("B\x07?"), Graph6Error); // byte below range

    try {
        parse_graph6("A~");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        REQUIRE(e.offset == 1);
    }
    try {
        parse_graph6("D");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        REQUIRE(e.offset == 1);
    }
}
