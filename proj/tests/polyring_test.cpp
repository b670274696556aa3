#include "trisector/groebner.hpp" // SplitMix64
#include "trisector/polynomial.hpp"
#include "trisector/univariate.hpp"

#include <doctest.h>

#include <map>
#include <vector>

using namespace trisector;

namespace {

Polynomial var(const ContextPtr& ctx, const char* name) {
    return Polynomial::variable(ctx, name);
}

Polynomial random_poly(const ContextPtr& ctx, SplitMix64& rng, int max_terms = 5,
                       int max_exp = 3) {
    std::vector<Polynomial::Term> terms;
    const int nterms = rng.next_in(0, max_terms);
    for (int i = 0; i < nterms; ++i) {
        std::vector<int> e(ctx->arity());
        for (auto& x : e) x = rng.next_in(0, max_exp);
        int num = rng.next_in(-9, 9);
        int den = rng.next_in(1, 5);
        terms.emplace_back(Monomial(std::move(e)), Rational(num, den));
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

Monomial random_monomial(std::size_t arity, SplitMix64& rng, int max_exp = 4) {
    std::vector<int> e(arity);
    for (auto& x : e) x = rng.next_in(0, max_exp);
    return Monomial(std::move(e));
}

} // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational::from_string("25/64") == Rational(25, 64));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational::from_string("25/64").to_string() == "25/64");
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));

    Rational root;
    CHECK(Rational(9, 4).is_square(&root));
    CHECK(root == Rational(3, 2));
    CHECK_FALSE(Rational(2).is_square());
    CHECK_FALSE(Rational(-4).is_square());
}

TEST_CASE("polynomial arithmetic examples") {
    auto ctx = make_context({"x", "y"});
    const Polynomial x = var(ctx, "x"), y = var(ctx, "y");

    SUBCASE("difference of squares") {
        CHECK((x + y) * (x - y) == x * x - y * y);
    }
    SUBCASE("empty product") {
        CHECK((x + Rational(1)).pow(0) == Polynomial::constant(ctx, Rational(1)));
    }
    SUBCASE("boundary factor product, expanded by hand") {
        // (y^2 - 2x - 1)(y^2 + 2x - 1) = (y^2-1)^2 - 4x^2 = y^4 - 2y^2 + 1 - 4x^2
        const Polynomial lhs =
            (y * y - Rational(2) * x - Rational(1)) * (y * y + Rational(2) * x - Rational(1));
        const Polynomial rhs = (y * y - Rational(1)).pow(2) - Rational(4) * x * x;
        const Polynomial byhand = y.pow(4) - Rational(2) * y * y + Rational(1) - Rational(4) * x * x;
        CHECK(lhs == rhs);
        CHECK(lhs == byhand);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    auto ctx = make_context({"x", "y", "z"});
    SplitMix64 rng(7);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = random_poly(ctx, rng), b = random_poly(ctx, rng), c = random_poly(ctx, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial::zero(ctx));
    }
}

TEST_CASE("term order totality and multiplicativity") {
    SplitMix64 rng(11);
    for (const TermOrder& ord :
         {TermOrder::lex(), TermOrder::grevlex(), TermOrder::block(2)}) {
        for (int i = 0; i < 200; ++i) {
            Monomial m1 = random_monomial(4, rng), m2 = random_monomial(4, rng),
                     n = random_monomial(4, rng);
            const int c12 = ord.compare(m1, m2);
            const int c21 = ord.compare(m2, m1);
            CHECK(c12 == -c21);
            CHECK((c12 == 0) == (m1 == m2));
            if (c12 < 0) CHECK(ord.compare(m1 * n, m2 * n) < 0);
            // the unit is minimal
            CHECK(ord.compare(m1 * n, m1) >= 0);
        }
    }
}

TEST_CASE("substitution") {
    SUBCASE("half-angle substitution at t=1 gives c=0, s=1") {
        auto ctx = make_context({"t"});
        const Polynomial t = var(ctx, "t");
        const Rational den = (Rational(1) + t * t).evaluate({Rational(1)}); // 1 + t^2 = 2
        CHECK((Rational(1) - t * t).evaluate({Rational(1)}) / den == Rational(0));
        CHECK((Rational(2) * t).evaluate({Rational(1)}) / den == Rational(1));
    }
    SUBCASE("identity binding") {
        auto ctx = make_context({"x", "y"});
        const Polynomial p = var(ctx, "x") * var(ctx, "y") + Rational(3);
        CHECK(p.substitute({{"x", var(ctx, "x")}}, ctx) == p);
    }
    SUBCASE("node membership: F1 vanishes at (0,1,0) when s=1, c=0") {
        auto ctx = make_context({"x", "y", "z"});
        const Polynomial x = var(ctx, "x"), y = var(ctx, "y"), z = var(ctx, "z");
        const Rational s(1), c(0);
        const Polynomial F1 = y * y - (x * s - y * c).pow(2) + Rational(2) * z - Rational(1);
        CHECK(F1.evaluate({Rational(0), Rational(1), Rational(0)}) == Rational(0));
    }
    SUBCASE("polynomial binding with caller context") {
        auto ctx = make_context({"x", "y"});
        auto yctx = make_context({"y"});
        const Polynomial p = var(ctx, "x") * var(ctx, "x") - var(ctx, "y");
        const Polynomial image = p.substitute({{"x", var(yctx, "y")}}, yctx);
        CHECK(image == Polynomial::zero(yctx) + var(yctx, "y") * var(yctx, "y") - var(yctx, "y"));
    }
}

TEST_CASE("homogenize and dehomogenize") {
    auto ctx = make_context({"x", "y", "z"});
    const Polynomial x = var(ctx, "x"), y = var(ctx, "y"), z = var(ctx, "z");
    // F1 at t = 1/2: c = 3/5, s = 4/5
    const Rational c(3, 5), s(4, 5);
    const Polynomial F1 = y * y - (x * s - y * c).pow(2) + Rational(2) * z - Rational(1);

    SUBCASE("F1 homogenizes to the projective bisector") {
        const Polynomial F1h = F1.homogenize("W");
        CHECK(F1h.is_homogeneous());
        CHECK(F1h.total_degree() == 2);
        auto hctx = F1h.context();
        const Polynomial X = var(hctx, "x"), Y = var(hctx, "y"), Z = var(hctx, "z"),
                         W = var(hctx, "W");
        CHECK(F1h == Y * Y - (X * s - Y * c).pow(2) + Rational(2) * Z * W - W * W);
        SUBCASE("round trip") {
            CHECK(F1h.dehomogenize("W", Rational(1)).in_context(ctx) == F1);
        }
    }
    SUBCASE("homogenizing a homogeneous polynomial is a no-op up to W^0") {
        const Polynomial h = x * x + y * z;
        const Polynomial hh = h.homogenize("W");
        CHECK(hh.dehomogenize("W", Rational(1)).in_context(ctx) == h);
        for (const auto& t : hh.terms()) CHECK(t.first.exponent(3) == 0);
    }
    SUBCASE("name collisions are rejected") {
        CHECK_THROWS_AS(F1.homogenize("z"), std::invalid_argument);
    }
    SUBCASE("random round trips") {
        SplitMix64 rng(23);
        for (int i = 0; i < 30; ++i) {
            Polynomial p = random_poly(ctx, rng);
            if (p.is_zero()) continue;
            CHECK(p.homogenize("W").dehomogenize("W", Rational(1)).in_context(ctx) == p);
            CHECK(p.homogenize("W").is_homogeneous());
        }
    }
}

TEST_CASE("partial derivatives") {
    SUBCASE("dF1h/dW in the chart Z=1 is 2 - 2W") {
        auto ctx = make_context({"X", "Y", "W"});
        const Polynomial X = var(ctx, "X"), Y = var(ctx, "Y"), W = var(ctx, "W");
        const Rational c(3, 5), s(4, 5);
        const Polynomial F1_chart =
            Y * Y - (X * s - Y * c).pow(2) + Rational(2) * W - W * W;
        CHECK(F1_chart.partial_derivative("W") == Rational(2) - Rational(2) * W + Polynomial::zero(ctx));
    }
    SUBCASE("derivative of a constant") {
        auto ctx = make_context({"x"});
        CHECK(Polynomial::constant(ctx, Rational(5)).partial_derivative("x").is_zero());
    }
    SUBCASE("gradient of F1 at the k=1 node, (R,t)=(1,1)") {
        auto ctx = make_context({"x", "y", "z"});
        const Polynomial x = var(ctx, "x"), y = var(ctx, "y"), z = var(ctx, "z");
        const Rational s(1), c(0);
        const Polynomial F1 = y * y - (x * s - y * c).pow(2) + Rational(2) * z - Rational(1);
        // p+ = (Rc, Rs, (1-R^2 s^2)/2) = (0, 1, 0); expected gradient (0, 2Rs, 2) = (0, 2, 2)
        const std::vector<Rational> p{Rational(0), Rational(1), Rational(0)};
        CHECK(F1.partial_derivative("x").evaluate(p) == Rational(0));
        CHECK(F1.partial_derivative("y").evaluate(p) == Rational(2));
        CHECK(F1.partial_derivative("z").evaluate(p) == Rational(2));
    }
}

TEST_CASE("canonical text form") {
    auto ctx = make_context({"X", "Y", "Z", "W"});
    const Polynomial p = Rational(2) * var(ctx, "X") * var(ctx, "Y") +
                         Rational(5) * var(ctx, "Z") * var(ctx, "W");
    CHECK(p.to_string() == "2*X*Y + 5*Z*W");
    CHECK(parse_polynomial(ctx, "2*X*Y + 5*Z*W") == p);

    SplitMix64 rng(31);
    for (int i = 0; i < 40; ++i) {
        Polynomial q = random_poly(ctx, rng);
        CHECK(parse_polynomial(ctx, q.to_string()) == q);
    }
    CHECK(parse_polynomial(ctx, "0").is_zero());
    CHECK(parse_polynomial(ctx, "X - 1/2*W^2").to_string() == "-1/2*W^2 + X");
}

TEST_CASE("sylvester resultant") {
    const UnivariatePoly u = UnivariatePoly::x();
    SUBCASE("distinct linear roots") {
        CHECK(sylvester_resultant(u - UnivariatePoly::constant(Rational(1)),
                                  u + UnivariatePoly::constant(Rational(1))) == Rational(2));
    }
    SUBCASE("shared root") {
        CHECK(sylvester_resultant(u * u, u) == Rational(0));
    }
    SUBCASE("slope-chart pair at (k,t)=(2,1)") {
        // g = 2u^2 - 1, q = (1 - u^2)/2; by the root-product form the value is
        // lc(q)^2 * g(1) * g(-1) = 1/4 -- no common root.
        const UnivariatePoly g({Rational(-1), Rational(0), Rational(2)});
        const UnivariatePoly q({Rational(1, 2), Rational(0), Rational(-1, 2)});
        const Rational res = sylvester_resultant(g, q);
        CHECK(res != Rational(0));
        CHECK(res.abs() == Rational(1, 4));
    }
    SUBCASE("vanishes exactly when a factor is shared") {
        SplitMix64 rng(41);
        for (int i = 0; i < 25; ++i) {
            const Rational r1(rng.next_in(-5, 5)), r2(rng.next_in(-5, 5)), r3(rng.next_in(-5, 5));
            UnivariatePoly f = (u - UnivariatePoly::constant(r1)) * (u - UnivariatePoly::constant(r2));
            UnivariatePoly shared = (u - UnivariatePoly::constant(r1)) * (u - UnivariatePoly::constant(r3));
            UnivariatePoly apart = (u - UnivariatePoly::constant(r1 + Rational(11))) *
                                   (u - UnivariatePoly::constant(r3 + Rational(13)));
            CHECK(sylvester_resultant(f, shared) == Rational(0));
            CHECK(sylvester_resultant(f, apart) != Rational(0));
            CHECK((gcd(f, shared).degree() > 0));
            CHECK((gcd(f, apart).degree() == 0));
        }
    }
    SUBCASE("both zero throws") {
        CHECK_THROWS_AS(sylvester_resultant(UnivariatePoly(), UnivariatePoly()),
                        std::invalid_argument);
    }
}

TEST_CASE("sturm real root counting") {
    SUBCASE("Z^2 + 125 has no real root") {
        const UnivariatePoly p({Rational(125), Rational(0), Rational(1)});
        CHECK(sturm_real_root_count(p) == 0);
    }
    SUBCASE("Z^2 - 1 has two") {
        const UnivariatePoly p({Rational(-1), Rational(0), Rational(1)});
        CHECK(sturm_real_root_count(p) == 2);
    }
    SUBCASE("2u^2 - 1 has one root in [0, 1]") {
        const UnivariatePoly p({Rational(-1), Rational(0), Rational(2)});
        CHECK(sturm_real_root_count(p, RootInterval::closed(Rational(0), Rational(1))) == 1);
    }
    SUBCASE("closed endpoints count") {
        const UnivariatePoly u = UnivariatePoly::x();
        const UnivariatePoly p = u * (u - UnivariatePoly::constant(Rational(1)));
        CHECK(sturm_real_root_count(p, RootInterval::closed(Rational(0), Rational(1))) == 2);
        CHECK(sturm_real_root_count(p, RootInterval::closed(Rational(0), Rational(0))) == 1);
    }
    SUBCASE("multiple roots count once") {
        const UnivariatePoly u = UnivariatePoly::x();
        const UnivariatePoly sq = (u - UnivariatePoly::constant(Rational(1))) *
                                  (u - UnivariatePoly::constant(Rational(1)));
        CHECK(sturm_real_root_count(sq) == 1);
    }
    SUBCASE("agreement with construction on random cubics with rational roots") {
        SplitMix64 rng(53);
        const UnivariatePoly u = UnivariatePoly::x();
        for (int i = 0; i < 40; ++i) {
            Rational r1(rng.next_in(-6, 6), rng.next_in(1, 3));
            Rational r2(rng.next_in(-6, 6), rng.next_in(1, 3));
            Rational r3(rng.next_in(-6, 6), rng.next_in(1, 3));
            UnivariatePoly f = (u - UnivariatePoly::constant(r1)) *
                               (u - UnivariatePoly::constant(r2)) *
                               (u - UnivariatePoly::constant(r3)) *
                               UnivariatePoly::constant(Rational(rng.next_in(1, 4)));
            std::vector<Rational> roots{r1, r2, r3};
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            CHECK(sturm_real_root_count(f) == static_cast<long>(roots.size()));
            // interval [min, max] contains them all; [max+1, max+2] none
            CHECK(sturm_real_root_count(f, RootInterval::closed(roots.front(), roots.back())) ==
                  static_cast<long>(roots.size()));
            CHECK(sturm_real_root_count(
                      f, RootInterval::closed(roots.back() + Rational(1),
                                              roots.back() + Rational(2))) == 0);
            CHECK(rational_roots(f) == roots);
        }
    }
    SUBCASE("zero polynomial throws") {
        CHECK_THROWS_AS(sturm_real_root_count(UnivariatePoly()), std::invalid_argument);
    }
}

TEST_CASE("univariate division and helpers") {
    const UnivariatePoly u = UnivariatePoly::x();
    const UnivariatePoly f = u * u * u - UnivariatePoly::constant(Rational(1)); // u^3 - 1
    auto [q, r] = f.divmod(u - UnivariatePoly::constant(Rational(1)));
    CHECK(r.is_zero());
    CHECK(q == u * u + u + UnivariatePoly::constant(Rational(1)));

    SUBCASE("extended gcd and modular inverse") {
        const UnivariatePoly g({Rational(-1), Rational(0), Rational(2)}); // 2u^2 - 1
        const UnivariatePoly dg = g.derivative();
        const UnivariatePoly inv = inverse_mod(dg, g);
        CHECK((inv * dg).mod(g) == UnivariatePoly::constant(Rational(1)));
    }
    SUBCASE("from_polynomial rejects mixed support") {
        auto ctx = make_context({"x", "y"});
        const Polynomial mixed = var(ctx, "x") * var(ctx, "y");
        CHECK_THROWS_AS(UnivariatePoly::from_polynomial(mixed, "x"), std::invalid_argument);
        const Polynomial pure = var(ctx, "x") * var(ctx, "x") - Rational(2);
        const UnivariatePoly extracted = UnivariatePoly::from_polynomial(pure, "x");
        CHECK(extracted.degree() == 2);
        CHECK(extracted.coefficient(0) == Rational(-2));
    }
}
