#include <doctest.h>

#include "builders.hpp"
#include "oracles.hpp"
#include "treelift/arborescence.hpp"
#include "treelift/errors.hpp"
#include "treelift/matrix.hpp"
#include "treelift/prng.hpp"
#include "treelift/series.hpp"

using namespace treelift;

namespace {

RingMatrix random_constant_matrix(Prng& rng, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    RingMatrix m(labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long num = static_cast<long>(rng.range(0, 12)) - 6;
            m.at(i, j) = Weight(Rational(num, static_cast<long>(rng.range(1, 4))));
        }
    return m;
}

RingMatrix random_poly_matrix(Prng& rng, std::size_t n, const std::vector<std::string>& vars) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    RingMatrix m(labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Weight w(Rational(static_cast<long>(rng.range(0, 4)) - 2));
            for (const auto& v : vars)
                if (rng.range(0, 2) == 0)
                    w += Weight::variable(v) *
                         Weight(Rational(static_cast<long>(rng.range(1, 3))));
            m.at(i, j) = w;
        }
    return m;
}

} // namespace

TEST_CASE("determinant conventions") {
    CHECK(det(RingMatrix()) == Weight(1)); // 0x0: empty product
    CHECK(det(RingMatrix::identity({"a", "b", "c"})) == Weight(1));
    // [[1, -s], [-s, 1]] over polynomials
    RingMatrix m = RingMatrix::identity({"0", "1"});
    Weight s = Weight::variable("s");
    m.at(0, 1) = -s;
    m.at(1, 0) = -s;
    CHECK(det(m) == Weight(1) - s * s);
}

TEST_CASE("matrix labels must be unique") {
    CHECK_THROWS_AS(RingMatrix({"a", "a"}), DomainError);
}

TEST_CASE("minor by label") {
    Digraph c3 = builders::cycle(3);
    RingMatrix lap = laplacian(c3);
    CHECK(minor_matrix(lap, {}) == lap);
    CHECK(minor_matrix(lap, {"0", "1", "2"}).size() == 0);
    CHECK(det(minor_matrix(lap, {"0", "1", "2"})) == Weight(1));
    RingMatrix m = minor_matrix(lap, {"1"});
    CHECK(m.labels() == std::vector<std::string>{"0", "2"});
    CHECK(m.at(0, 0) == Weight(1));
    CHECK(m.at(0, 1) == Weight(0));
    CHECK(m.at(1, 0) == builders::q(-1));
    CHECK(m.at(1, 1) == Weight(1));
    // det equals the single forest rooted at {1}
    CHECK(det(m) == Weight(1));
    CHECK_THROWS_AS(minor_matrix(lap, {"7"}), DomainError);
}

TEST_CASE("bareiss determinant against the cofactor oracle") {
    Prng rng(11);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int round = 0; round < 12; ++round) {
            RingMatrix m = random_constant_matrix(rng, n);
            CHECK(det(m) == oracles::det_cofactor(m));
        }
    }
}

TEST_CASE("symbolic determinant against the cofactor oracle") {
    Prng rng(12);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int round = 0; round < 8; ++round) {
            RingMatrix m = random_poly_matrix(rng, n, {"x", "y"});
            CHECK(det(m) == oracles::det_cofactor(m));
        }
    }
}

TEST_CASE("determinant commutes with evaluation on random 4x4 polynomial matrices") {
    Prng rng(13);
    for (int round = 0; round < 8; ++round) {
        RingMatrix m = random_poly_matrix(rng, 4, {"x", "y", "z"});
        std::map<std::string, Rational> point{
            {"x", rng.rational(1, 50)}, {"y", rng.rational(1, 50)}, {"z", rng.rational(1, 50)}};
        RingMatrix me(m.labels());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) me.at(i, j) = Weight(m.at(i, j).evaluate(point));
        CHECK(det(m).evaluate(point) == det(me).constant_value());
    }
}

TEST_CASE("pencil determinant matches the symbolic route") {
    Prng rng(14);
    for (int round = 0; round < 6; ++round) {
        RingMatrix a = random_constant_matrix(rng, 4);
        RingMatrix b = random_constant_matrix(rng, 4);
        UniPoly p = det_pencil(a, b);
        // symbolic det(A + s*B)
        RingMatrix m(a.labels());
        Weight s = Weight::variable("s");
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = a.at(i, j) + s * b.at(i, j);
        CHECK(p.to_multipoly("s") == det(m));
    }
}

TEST_CASE("matrix products and traces") {
    Digraph k3 = builders::uniform_k3();
    RingMatrix p = weight_matrix(k3);
    RingMatrix p2 = multiply(p, p);
    CHECK(p2.trace() == Weight(Rational(3, 2))); // trace(P^2) = 3/2
    std::vector<Weight> ones(3, Weight(1));
    std::vector<Weight> row = row_times_matrix(ones, p);
    for (const auto& w : row) CHECK(w == Weight(1)); // doubly stochastic here
}

TEST_CASE("series exp/log/inverse basics") {
    TruncatedSeries zero(4);
    CHECK(zero.exp().coeff(0) == Rational(1));
    for (int k = 1; k <= 4; ++k) CHECK(zero.exp().coeff(static_cast<std::size_t>(k)).is_zero());

    // log(1/(1-s)) = s + s^2/2 + s^3/3 + s^4/4
    TruncatedSeries geo(4);
    for (int k = 0; k <= 4; ++k) geo.set_coeff(static_cast<std::size_t>(k), Rational(1));
    TruncatedSeries lg = geo.log();
    CHECK(lg.coeff(0).is_zero());
    CHECK(lg.coeff(1) == Rational(1));
    CHECK(lg.coeff(2) == Rational(1, 2));
    CHECK(lg.coeff(3) == Rational(1, 3));
    CHECK(lg.coeff(4) == Rational(1, 4));

    // inverse of det(I - sP) for the uniform K3 chain
    TruncatedSeries den(3);
    den.set_coeff(0, Rational(1));
    den.set_coeff(2, Rational(-3, 4));
    den.set_coeff(3, Rational(-1, 4));
    TruncatedSeries inv = den.inverse();
    CHECK(inv.coeff(0) == Rational(1));
    CHECK(inv.coeff(1).is_zero());
    CHECK(inv.coeff(2) == Rational(3, 4));
    CHECK(inv.coeff(3) == Rational(1, 4));
    TruncatedSeries prod = den * inv;
    CHECK(prod.coeff(0) == Rational(1));
    for (int k = 1; k <= 3; ++k) CHECK(prod.coeff(static_cast<std::size_t>(k)).is_zero());
}

TEST_CASE("series preconditions") {
    TruncatedSeries s(3);
    CHECK_THROWS_AS(s.inverse(), DomainError); // zero constant term
    CHECK_THROWS_AS(s.log(), DomainError);     // needs constant term 1
    TruncatedSeries t(3);
    t.set_coeff(0, Rational(1));
    CHECK_THROWS_AS(t.exp(), DomainError); // needs constant term 0
}

TEST_CASE("series exp/log round trip on random inputs") {
    Prng rng(15);
    for (int round = 0; round < 20; ++round) {
        TruncatedSeries f(8);
        f.set_coeff(0, Rational(1));
        for (int k = 1; k <= 8; ++k)
            f.set_coeff(static_cast<std::size_t>(k),
                        Rational(static_cast<long>(rng.range(0, 12)) - 6,
                                 static_cast<long>(rng.range(1, 6))));
        CHECK(f.log().exp() == f);
        TruncatedSeries g(8);
        for (int k = 1; k <= 8; ++k)
            g.set_coeff(static_cast<std::size_t>(k),
                        Rational(static_cast<long>(rng.range(0, 12)) - 6,
                                 static_cast<long>(rng.range(1, 6))));
        CHECK(g.exp().log() == g);
        // exp(g) * exp(-g) = 1
        TruncatedSeries prod = g.exp() * (-g).exp();
        CHECK(prod.coeff(0) == Rational(1));
        for (int k = 1; k <= 8; ++k) CHECK(prod.coeff(static_cast<std::size_t>(k)).is_zero());
    }
}

TEST_CASE("series derivative") {
    TruncatedSeries f(3);
    f.set_coeff(0, Rational(5));
    f.set_coeff(1, Rational(1, 2));
    f.set_coeff(2, Rational(3));
    f.set_coeff(3, Rational(-1));
    TruncatedSeries d = f.derivative();
    CHECK(d.order() == 2);
    CHECK(d.coeff(0) == Rational(1, 2));
    CHECK(d.coeff(1) == Rational(6));
    CHECK(d.coeff(2) == Rational(-3));
}
