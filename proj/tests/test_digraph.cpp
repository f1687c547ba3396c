#include <doctest.h>

#include "builders.hpp"
#include "oracles.hpp"
#include "treelift/digraph.hpp"
#include "treelift/errors.hpp"
#include "treelift/matrix.hpp"
#include "treelift/prng.hpp"

using namespace treelift;

TEST_CASE("parse the documented format") {
    Digraph g = Digraph::parse("graph 2\nedge 0 1 1/2\nedge 1 0 1/2\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges().size() == 2);
    CHECK(*g.edge_weight(0, 1) == builders::q(1, 2));

    Digraph s = Digraph::parse("graph 3\nedge 0 1 sym\nedge 1 2 2\nedge 2 0 1\n");
    CHECK(*s.edge_weight(0, 1) == Weight::variable("x_0_1"));
    CHECK(is_symbolic(s));

    // comments, blank lines, named variables, diag and vweight
    Digraph h = Digraph::parse("# a comment\n\ngraph 2\nedge 0 1 a # trailing\nedge 1 0 3\n"
                               "diag 0 1/4\nvweight 1 sym\n");
    CHECK(*h.edge_weight(0, 1) == Weight::variable("a"));
    CHECK(h.diagonal(0) == builders::q(1, 4));
    CHECK(h.vertex_weight(1) == Weight::variable("y_1"));
    CHECK(h.has_vertex_weights());
}

TEST_CASE("parse rejections carry line numbers") {
    CHECK_THROWS_WITH_AS(Digraph::parse("graph 2\nedge 0 1 1\nedge 0 1 2\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(Digraph::parse("graph 2\nedge 1 1 1\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(Digraph::parse("graph 2\nedge 0 5 1\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_AS(Digraph::parse("edge 0 1 1\n"), ParseError);  // no graph line
    CHECK_THROWS_AS(Digraph::parse("graph 2\nfoo 1 2\n"), ParseError);
    CHECK_THROWS_AS(Digraph::parse("graph 2\nedge 0 1 1/0\n"), ParseError);
    CHECK_THROWS_AS(Digraph::parse(""), ParseError);
    CHECK_THROWS_AS(Digraph::parse("graph 0\n"), ParseError);
    CHECK_THROWS_AS(Digraph::parse("graph 2\ndiag 0 1\ndiag 0 2\n"), ParseError);
}

TEST_CASE("parse serialize parse is the identity on canonical form") {
    const char* texts[] = {
        "graph 2\nedge 0 1 1/2\nedge 1 0 1/2\n",
        "graph 3\nedge 0 1 x_0_1\nedge 1 2 2\nedge 2 0 1\ndiag 1 1/3\n",
        "graph 2\nedge 0 1 1\nedge 1 0 1\nvweight 0 y_0\nvweight 1 0\n",
    };
    for (const char* t : texts) {
        Digraph g = Digraph::parse(t);
        std::string canon = g.serialize();
        CHECK(Digraph::parse(canon).serialize() == canon);
    }
    // "sym" normalizes to the canonical variable name
    Digraph g = Digraph::parse("graph 2\nedge 0 1 sym\nedge 1 0 sym\n");
    CHECK(g.serialize() == "graph 2\nedge 0 1 x_0_1\nedge 1 0 x_1_0\n");

    // weights without a single-token form cannot be serialized
    Digraph h(2);
    h.add_edge(0, 1, Weight::variable("a") + Weight(1));
    h.add_edge(1, 0, Weight(1));
    CHECK_THROWS_AS(h.serialize(), DomainError);
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(builders::cycle(3)));
    CHECK(is_strongly_connected(builders::complete(4)));
    Digraph path(3);
    path.add_edge(0, 1, Weight(1));
    path.add_edge(1, 2, Weight(1));
    CHECK_FALSE(is_strongly_connected(path));
    Digraph single(1);
    CHECK(is_strongly_connected(single));
}

TEST_CASE("induced subgraphs") {
    Digraph k3 = builders::complete(3);
    Digraph sub = induced_subgraph(k3, VertexSet::of({0, 1}));
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.edges().size() == 2);
    CHECK(is_strongly_connected(sub));
    CHECK_THROWS_AS(induced_subgraph(k3, VertexSet()), DomainError);
}

TEST_CASE("strongly connected subsets, canonical order") {
    // directed 3-cycle: V and the singletons only
    auto subs = strongly_connected_subsets(builders::cycle(3));
    REQUIRE(subs.size() == 4);
    CHECK(subs[0] == VertexSet::of({0, 1, 2}));
    CHECK(subs[1] == VertexSet::of({0}));
    CHECK(subs[2] == VertexSet::of({1}));
    CHECK(subs[3] == VertexSet::of({2}));

    // complete digraph on 3 vertices: all 7 nonempty subsets
    CHECK(strongly_connected_subsets(builders::complete(3)).size() == 7);

    Digraph single(1);
    auto one = strongly_connected_subsets(single);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == VertexSet::of({0}));
}

TEST_CASE("strongly connected subsets match the closure oracle") {
    Prng rng(21);
    for (int round = 0; round < 30; ++round) {
        int n = static_cast<int>(rng.range(2, 5)); // full check through |V| = 5
        Digraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng.range(0, 1) == 0) g.add_edge(u, v, Weight(1));
        auto subs = strongly_connected_subsets(g);
        for (std::uint64_t m = 1; m < (1ull << n); ++m) {
            VertexSet w(m);
            bool listed = std::find(subs.begin(), subs.end(), w) != subs.end();
            bool oracle = w.count() == 1 || oracles::strongly_connected_by_closure(g, w);
            CHECK(listed == oracle);
        }
    }
}

TEST_CASE("walk support table on the uniform K3 chain") {
    Digraph g = builders::uniform_k3();
    WalkSupportTable t = closed_walk_support_sums(g, 3);
    // length 2: each unordered pair carries 2 * (1/4)
    for (auto pair : {VertexSet::of({0, 1}), VertexSet::of({0, 2}), VertexSet::of({1, 2})}) {
        REQUIRE(t.get(2, pair) != nullptr);
        CHECK(*t.get(2, pair) == builders::q(1, 2));
    }
    CHECK(t.total(2) == builders::q(3, 2)); // trace(P^2)
    CHECK(t.get(2, VertexSet::of({0})) == nullptr);
}

TEST_CASE("walk support table basics") {
    // any graph, length 1 entries are the diagonal
    Digraph g = builders::cycle(2);
    g.set_diagonal(0, builders::q(1, 3));
    WalkSupportTable t = closed_walk_support_sums(g, 2);
    REQUIRE(t.get(1, VertexSet::of({0})) != nullptr);
    CHECK(*t.get(1, VertexSet::of({0})) == builders::q(1, 3));
    CHECK(t.get(1, VertexSet::of({1})) == nullptr);

    // directed 3-cycle, length 3: single support with the three rotations
    WalkSupportTable c = closed_walk_support_sums(builders::cycle(3), 3);
    REQUIRE(c.get(3, VertexSet::of({0, 1, 2})) != nullptr);
    CHECK(*c.get(3, VertexSet::of({0, 1, 2})) == builders::q(3));
    CHECK(c.total(1).is_zero());
    CHECK(c.total(2).is_zero());

    CHECK_THROWS_AS(closed_walk_support_sums(g, 0), DomainError);
}

TEST_CASE("walk totals equal matrix power traces") {
    Prng rng(22);
    for (int round = 0; round < 10; ++round) {
        int n = static_cast<int>(rng.range(2, 4));
        Digraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng.range(0, 1) == 0) g.add_edge(u, v, Weight(rng.rational(1, 6)));
        if (rng.range(0, 1) == 0) g.set_diagonal(0, Weight(rng.rational(1, 6)));
        int max_len = 5;
        WalkSupportTable t = closed_walk_support_sums(g, max_len);
        RingMatrix m = weight_matrix(g);
        RingMatrix power = m;
        for (int len = 1; len <= max_len; ++len) {
            CHECK(t.total(len) == power.trace());
            power = multiply(power, m);
        }
    }
}

TEST_CASE("walk table against the explicit enumeration oracle") {
    Prng rng(23);
    for (int round = 0; round < 8; ++round) {
        Digraph shape = builders::complete(3);
        Digraph g = with_random_rational_weights(shape, rng, 1, 5);
        if (round % 2 == 0) g.set_diagonal(1, Weight(rng.rational(1, 5)));
        WalkSupportTable t = closed_walk_support_sums(g, 4);
        auto oracle = oracles::walk_sums_explicit(g, 4);
        CHECK(t.entries.size() == oracle.size());
        for (const auto& [key, w] : oracle) {
            REQUIRE(t.get(key.first, key.second) != nullptr);
            CHECK(*t.get(key.first, key.second) == w);
        }
    }
}

TEST_CASE("row stochastic detection") {
    CHECK(is_row_stochastic(builders::cycle(3)));
    CHECK(is_row_stochastic(builders::uniform_k3()));
    CHECK_FALSE(is_row_stochastic(builders::complete(3))); // rows sum to 2
    Digraph g = builders::cycle(2);
    g.set_diagonal(0, builders::q(1, 4));
    CHECK_FALSE(is_row_stochastic(g)); // row 0 sums to 5/4
    Prng rng(24);
    Digraph r = with_row_stochastic_weights(builders::complete(3), rng, true);
    CHECK(is_row_stochastic(r));
    CHECK_FALSE(is_symbolic(r));
}

TEST_CASE("vertex set helpers") {
    VertexSet w = VertexSet::of({0, 2, 3});
    CHECK(w.count() == 3);
    CHECK(w.contains(2));
    CHECK_FALSE(w.contains(1));
    CHECK(w.complement(4) == VertexSet::of({1}));
    CHECK(w.str() == "{0,2,3}");
    CHECK(VertexSet::of({0, 1}).subset_of(w) == false);
    CHECK(VertexSet::of({0, 3}).subset_of(w));
    CHECK(canonical_subset_less(VertexSet::of({0, 1}), VertexSet::of({2})));
    CHECK(canonical_subset_less(VertexSet::of({0, 3}), VertexSet::of({1, 2})));
}
