#include <doctest.h>

#include "builders.hpp"
#include "treelift/errors.hpp"
#include "treelift/lift.hpp"
#include "treelift/prng.hpp"

using namespace treelift;
using builders::q;

TEST_CASE("lift of the directed 3-cycle is a 3-cycle") {
    Digraph c3 = with_symbolic_weights(builders::cycle(3));
    LiftGraph lg = build_lift(c3);
    REQUIRE(lg.size() == 3);
    CHECK(lg.graph.edges().size() == 3);
    CHECK(is_strongly_connected(lg.graph));
    // roots in order, one tree each
    CHECK(lg.root_of == std::vector<int>{0, 1, 2});
    // the lift edge out of the tree rooted at 0 goes to the tree rooted at 1
    // and carries x_0_1
    auto outs = lg.graph.out_edges(0);
    REQUIRE(outs.size() == 1);
    CHECK(lg.root_of[static_cast<std::size_t>(outs[0].to)] == 1);
    CHECK(outs[0].w == Weight::variable("x_0_1"));
}

TEST_CASE("lift of K3") {
    Digraph k3 = builders::complete(3);
    LiftGraph lg = build_lift(k3);
    REQUIRE(lg.size() == 9);
    CHECK(lg.graph.edges().size() == 18);
    CHECK(is_strongly_connected(lg.graph));
    for (int t = 0; t < 9; ++t) {
        CHECK(lg.graph.out_edges(t).size() == 2); // out-degree matches the root's
        CHECK(is_valid_arborescence(k3, lg.tree_of[static_cast<std::size_t>(t)]));
    }
    // every lift vertex rooted at i has edges exactly to trees rooted at j != i
    for (int t = 0; t < 9; ++t)
        for (const Edge& e : lg.graph.out_edges(t))
            CHECK(lg.root_of[static_cast<std::size_t>(e.to)] !=
                  lg.root_of[static_cast<std::size_t>(t)]);
}

TEST_CASE("lift of the 2-cycle is isomorphic to it") {
    Digraph c2 = builders::cycle(2);
    LiftGraph lg = build_lift(c2);
    REQUIRE(lg.size() == 2);
    CHECK(lg.graph.edges().size() == 2);
    CHECK(lg.graph.serialize() == c2.serialize());
}

TEST_CASE("transfer rule invariants hold edge by edge") {
    Prng rng(41);
    Digraph g = with_random_rational_weights(builders::complete(3), rng);
    LiftGraph lg = build_lift(g);
    for (const Edge& e : lg.graph.edges()) {
        const Arborescence& ti = lg.tree_of[static_cast<std::size_t>(e.from)];
        const Arborescence& tj = lg.tree_of[static_cast<std::size_t>(e.to)];
        int i = lg.root_of[static_cast<std::size_t>(e.from)];
        int j = lg.root_of[static_cast<std::size_t>(e.to)];
        // t_j = t_i + (i,j) - outgoing edge of j
        CHECK(transfer_tree(ti, j) == tj);
        CHECK(e.w == *g.edge_weight(i, j));
    }
}

TEST_CASE("lift size prediction and cap") {
    CHECK(predicted_lift_size(builders::complete(3)) == 9);
    CHECK(predicted_lift_size(builders::complete(4)) == 64);
    CHECK_THROWS_AS(build_lift(builders::complete(4), 10), CapExceeded);
    Digraph path(2);
    path.add_edge(0, 1, Weight(1));
    CHECK_THROWS_AS(build_lift(path), DomainError); // not strongly connected
}

TEST_CASE("iterated lift size is consistent on the 3-cycle") {
    Digraph c3 = builders::cycle(3);
    LiftGraph lg = build_lift(c3);
    // the lift is again a 3-cycle, so its own arborescence count is 3
    CHECK(predicted_lift_size(lg.graph) == 3);
    LiftGraph lg2 = build_lift(lg.graph);
    CHECK(lg2.size() == 3);
}

TEST_CASE("lifted matrix carries weights and diagonal by root") {
    Digraph k3 = builders::uniform_k3();
    k3.set_diagonal(1, q(1, 8)); // make row sums unequal on purpose
    LiftGraph lg = build_lift(k3);
    RingMatrix ph = lift_matrix(k3, lg);
    REQUIRE(ph.size() == 9);
    for (std::size_t t = 0; t < 9; ++t) {
        int root = lg.root_of[t];
        CHECK(ph.at(t, t) == k3.diagonal(root));
        for (const Edge& e : lg.graph.out_edges(static_cast<int>(t)))
            CHECK(ph.at(t, static_cast<std::size_t>(e.to)) ==
                  *k3.edge_weight(root, lg.root_of[static_cast<std::size_t>(e.to)]));
    }
}

TEST_CASE("row stochastic inputs lift to row stochastic matrices") {
    Prng rng(42);
    Digraph g = with_row_stochastic_weights(builders::complete(3), rng, true);
    LiftGraph lg = build_lift(g);
    CHECK(is_row_stochastic(lg.graph));
}

TEST_CASE("schrodinger matrices on the 2-cycle") {
    Digraph c2(2);
    c2.add_edge(0, 1, Weight::variable("x_0_1"));
    c2.add_edge(1, 0, Weight::variable("x_1_0"));
    c2.set_vertex_weight(0, Weight::variable("y_0"));
    c2.set_vertex_weight(1, Weight::variable("y_1"));
    LiftGraph lg = build_lift(c2);
    SchrodingerPair pair = lift_schrodinger(c2, lg);
    // H = [[x_0_1 + y_0, -x_0_1], [-x_1_0, x_1_0 + y_1]] and the lift agrees
    Weight x01 = Weight::variable("x_0_1"), x10 = Weight::variable("x_1_0");
    Weight y0 = Weight::variable("y_0"), y1 = Weight::variable("y_1");
    CHECK(pair.base.at(0, 0) == x01 + y0);
    CHECK(pair.base.at(0, 1) == -x01);
    CHECK(pair.base.at(1, 0) == -x10);
    CHECK(pair.base.at(1, 1) == x10 + y1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(pair.lifted.at(i, j) == pair.base.at(i, j));
}

TEST_CASE("lifted edge-weight laplacian has zero row sums") {
    Digraph k3 = with_symbolic_weights(builders::complete(3));
    LiftGraph lg = build_lift(k3);
    RingMatrix qhat = laplacian(lg.graph); // y = 0 case of the lifted Schrodinger matrix
    for (std::size_t i = 0; i < qhat.size(); ++i) {
        Weight sum;
        for (std::size_t j = 0; j < qhat.size(); ++j) sum += qhat.at(i, j);
        CHECK(sum.is_zero());
    }
    // with no vertex weights the Schrodinger matrix is exactly that laplacian
    CHECK(schrodinger_matrix(lg.graph) == qhat);
}

TEST_CASE("closed walk lifts are counted by rooted forests") {
    // 3-cycle: each closed walk lifts uniquely
    Digraph c3 = builders::cycle(3);
    WalkLiftReport r3 = count_walk_lifts(c3, build_lift(c3), 6);
    CHECK(r3.all_ok);
    for (const auto& rec : r3.records)
        CHECK(rec.lift_count == 1);

    Digraph k3 = builders::complete(3);
    WalkLiftReport rk = count_walk_lifts(k3, build_lift(k3), 3);
    CHECK(rk.all_ok);
    bool saw_pair = false, saw_triangle = false;
    for (const auto& rec : rk.records) {
        if (rec.walk == std::vector<int>{0, 1}) {
            CHECK(rec.lift_count == 2); // k({0,1}) = 2
            saw_pair = true;
        }
        if (rec.walk == std::vector<int>{0, 1, 2}) {
            CHECK(rec.lift_count == 1); // k(V) = 1
            saw_triangle = true;
        }
    }
    CHECK(saw_pair);
    CHECK(saw_triangle);
}

TEST_CASE("walk lifts with self transitions") {
    Digraph c2 = builders::cycle(2);
    c2.set_diagonal(0, q(1, 4));
    LiftGraph lg = build_lift(c2);
    WalkLiftReport rep = count_walk_lifts(c2, lg, 4);
    CHECK(rep.all_ok);
    // the pure self-loop walk at 0 lifts once per tree rooted at 0
    bool saw_loop = false;
    for (const auto& rec : rep.records)
        if (rec.walk == std::vector<int>{0}) {
            CHECK(rec.lift_count == 1);
            CHECK(rec.forest_count == 1);
            saw_loop = true;
        }
    CHECK(saw_loop);
}

TEST_CASE("lifts larger than 64 vertices build and serialize") {
    // complete digraph on 5 vertices: 125 arborescences per root
    Digraph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) k5.add_edge(u, v, Weight(1));
    CHECK(predicted_lift_size(k5) == 625);
    LiftGraph lg = build_lift(k5);
    CHECK(lg.size() == 625);
    CHECK(lg.graph.edges().size() == 625 * 4);
    for (int t = 0; t < 625; ++t)
        CHECK(lg.graph.out_edges(t).size() == 4);
    // round trips through the file format
    std::string text = lg.graph.serialize();
    CHECK(Digraph::parse(text).serialize() == text);
    LiftFileCheck ok = check_lift_files(k5, text, lift_label_map(lg));
    CHECK(ok.ok);
}

TEST_CASE("lift serialization round trip and tamper detection") {
    Digraph k3 = builders::uniform_k3();
    LiftGraph lg = build_lift(k3);
    std::string graph_text = lg.graph.serialize();
    std::string sidecar = lift_label_map(lg);

    LiftFileCheck ok = check_lift_files(k3, graph_text, sidecar);
    CHECK(ok.ok);

    // corrupt one weight
    std::string bad = graph_text;
    std::size_t pos = bad.find("1/2");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 3, "1/3");
    LiftFileCheck tampered = check_lift_files(k3, bad, sidecar);
    CHECK_FALSE(tampered.ok);

    // corrupt the sidecar
    std::string badcar = sidecar;
    badcar.replace(badcar.find(" 0 "), 3, " 2 ");
    LiftFileCheck tampered2 = check_lift_files(k3, graph_text, badcar);
    CHECK_FALSE(tampered2.ok);
}
