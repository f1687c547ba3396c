#include <doctest.h>

#include "treelift/errors.hpp"
#include "treelift/multipoly.hpp"
#include "treelift/prng.hpp"
#include "treelift/rational.hpp"
#include "treelift/unipoly.hpp"

using namespace treelift;

namespace {

MultiPoly random_poly(Prng& rng, const std::vector<std::string>& vars, int terms) {
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
        MultiPoly mono(Rational(static_cast<long>(rng.range(1, 9)),
                                static_cast<long>(rng.range(1, 9))));
        for (const auto& v : vars) {
            long e = static_cast<long>(rng.range(0, 2));
            if (e > 0) mono *= MultiPoly::variable(v).pow(e);
        }
        p += mono;
    }
    return p;
}

} // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, -4).denominator() == 2); // positive denominator
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(0).pow(4) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("multipoly basics") {
    MultiPoly x = MultiPoly::variable("x");
    MultiPoly y = MultiPoly::variable("y");
    CHECK((x + y).str() == "x + y");
    CHECK((x - x).is_zero());
    CHECK((x * y + y * x).str() == "2*x*y");
    CHECK(MultiPoly(Rational(0)).is_zero());
    CHECK(MultiPoly(1).is_one());
    CHECK((x + Weight(1)).term_count() == 2);
    // registry shrinks when a variable cancels out
    MultiPoly z = x * y - x * y + x;
    CHECK(z.variables() == std::vector<std::string>{"x"});
}

TEST_CASE("multipoly evaluate") {
    MultiPoly x = MultiPoly::variable("x");
    MultiPoly y = MultiPoly::variable("y");
    CHECK((x + y).evaluate({{"x", Rational(1)}, {"y", Rational(2)}}) == Rational(3));
    CHECK(MultiPoly(Rational(5, 7)).evaluate({}) == Rational(5, 7));
    // tau of the unit-weight 3-cycle: ab + bc + ca at a=b=c=1
    MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b"),
              c = MultiPoly::variable("c");
    MultiPoly tau3 = a * b + b * c + c * a;
    CHECK(tau3.evaluate({{"a", Rational(1)}, {"b", Rational(1)}, {"c", Rational(1)}}) ==
          Rational(3));
    CHECK_THROWS_AS((x + y).evaluate({{"x", Rational(1)}}), DomainError);
}

TEST_CASE("multipoly exact division") {
    MultiPoly x = MultiPoly::variable("x");
    MultiPoly s = MultiPoly::variable("s");
    // (1 - s^2) / (1 - s) = 1 + s
    MultiPoly one(1);
    CHECK((one - s * s).divide_exact(one - s) == one + s);
    CHECK(x.divide_exact(x).is_one());
    // (ab + bc + ca) / (ab + bc + ca) = 1
    MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b"),
              c = MultiPoly::variable("c");
    MultiPoly tau3 = a * b + b * c + c * a;
    CHECK(tau3.divide_exact(tau3).is_one());
    CHECK_THROWS_AS((x + one).divide_exact(x * x), InexactDivision);
    CHECK_THROWS_AS(x.divide_exact(MultiPoly()), DomainError);
}

TEST_CASE("multipoly ring laws on random samples") {
    Prng rng(42);
    for (int round = 0; round < 30; ++round) {
        MultiPoly p = random_poly(rng, {"x", "y"}, 3);
        MultiPoly q = random_poly(rng, {"y", "z"}, 3);
        MultiPoly r = random_poly(rng, {"x", "z"}, 2);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("multipoly exact division round-trip on random samples") {
    Prng rng(7);
    for (int round = 0; round < 30; ++round) {
        MultiPoly a = random_poly(rng, {"x", "y"}, 3);
        MultiPoly b = random_poly(rng, {"x", "y"}, 2) + MultiPoly(1);
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("multipoly coefficient extraction") {
    MultiPoly s = MultiPoly::variable("s");
    MultiPoly x = MultiPoly::variable("x");
    MultiPoly p = s * s * x + s * (x + MultiPoly(1)) + MultiPoly(3);
    CHECK(p.coefficient_of("s", 0) == MultiPoly(3));
    CHECK(p.coefficient_of("s", 1) == x + MultiPoly(1));
    CHECK(p.coefficient_of("s", 2) == x);
    CHECK(p.coefficient_of("s", 3).is_zero());
    CHECK(p.degree_in("s") == 2);
}

TEST_CASE("unipoly arithmetic and division") {
    UniPoly one{Rational(1)};
    UniPoly s = UniPoly::monomial(Rational(1), 1);
    CHECK((one - s * s).divide_exact(one - s) == one + s);
    CHECK_THROWS_AS(one.divide_exact(s), InexactDivision);
    CHECK_THROWS_AS((one + s).divide_exact(UniPoly()), DomainError);
    UniPoly p = (one + s).pow(3);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(3));
    CHECK(p.coeff(2) == Rational(3));
    CHECK(p.coeff(3) == Rational(1));
    CHECK(p.derivative().coeff(0) == Rational(3));
    CHECK(p.evaluate(Rational(1)) == Rational(8));
}

TEST_CASE("unipoly interpolation") {
    // p(x) = x^2 - x/2 + 3
    UniPoly p{std::vector<Rational>{Rational(3), Rational(-1, 2), Rational(1)}};
    std::vector<Rational> xs, ys;
    for (long i = 0; i <= 2; ++i) {
        xs.push_back(Rational(i));
        ys.push_back(p.evaluate(Rational(i)));
    }
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("unipoly multipoly conversions") {
    MultiPoly s = MultiPoly::variable("s");
    MultiPoly p = s * s * MultiPoly(Rational(3, 4)) + MultiPoly(1);
    UniPoly u = UniPoly::from_multipoly(p, "s");
    CHECK(u.coeff(0) == Rational(1));
    CHECK(u.coeff(2) == Rational(3, 4));
    CHECK(u.to_multipoly("s") == p);
    MultiPoly mixed = s * MultiPoly::variable("x");
    CHECK_THROWS_AS(UniPoly::from_multipoly(mixed, "s"), DomainError);
}
