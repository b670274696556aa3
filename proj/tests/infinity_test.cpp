#include "trisector/infinity.hpp"

#include <doctest.h>

using namespace trisector;

namespace {

Polynomial var(const ContextPtr& ctx, const char* name) {
    return Polynomial::variable(ctx, name);
}

ParameterPoint admissible_sample(SplitMix64& rng, int regime) {
    auto positive = [&]() { return Rational(rng.next_in(1, 9), rng.next_in(1, 4)); };
    Rational k;
    if (regime < 0) k = -positive();
    else if (regime > 0) k = Rational(1) + positive();
    else {
        int den = rng.next_in(2, 9);
        k = Rational(rng.next_in(1, den - 1), den);
    }
    Rational t = positive();
    if (rng.next_in(0, 1)) t = -t;
    return ParameterPoint(k, positive(), t);
}

} // namespace

TEST_CASE("series solution of the first bisector") {
    SUBCASE("quadratic part at t=1 is (X^2 - Y^2)/2") {
        ParameterPoint w(Rational(1, 2), Rational(1), Rational(1));
        TruncatedSeries omega = solve_W_series(w, 10);
        auto ctx = omega.poly.context();
        const Polynomial X = var(ctx, "X"), Y = var(ctx, "Y");
        CHECK(omega.poly.homogeneous_part(2) == (X * X - Y * Y) * Rational(1, 2));
        SUBCASE("degree-4 part is (X^2 - Y^2)^2 / 8, one fixed-point step by hand") {
            CHECK(omega.poly.homogeneous_part(4) == (X * X - Y * Y).pow(2) * Rational(1, 8));
        }
        SUBCASE("no odd-degree terms") {
            CHECK(omega.poly.homogeneous_part(3).is_zero());
            CHECK(omega.poly.homogeneous_part(5).is_zero());
        }
    }
    SUBCASE("residual vanishes to the truncation order for random parameters") {
        SplitMix64 rng(43);
        for (int i = 0; i < 10; ++i) {
            ParameterPoint p = admissible_sample(rng, rng.next_in(-1, 1));
            CHECK_NOTHROW(solve_W_series(p, 12)); // residual check is built in
        }
    }
    SUBCASE("order below 4 is rejected") {
        ParameterPoint w(Rational(1, 2), Rational(1), Rational(1));
        CHECK_THROWS_AS(solve_W_series(w, 3), std::invalid_argument);
    }
}

TEST_CASE("tangent form at infinity") {
    SUBCASE("(k,t) = (2,1): E = -X^2 + 2Y^2, Delta_Q = 8") {
        TangentForm f = tangent_form(ParameterPoint(Rational(2), Rational(1), Rational(1)));
        CHECK(f.a == Rational(-1));
        CHECK(f.b == Rational(0));
        CHECK(f.c2 == Rational(2));
        CHECK(f.delta == Rational(8));
    }
    SUBCASE("(k,t) = (1/2,1): E = X^2/2 + Y^2/2, Delta_Q = -1") {
        TangentForm f = tangent_form(ParameterPoint(Rational(1, 2), Rational(1), Rational(1)));
        CHECK(f.a == Rational(1, 2));
        CHECK(f.b == Rational(0));
        CHECK(f.c2 == Rational(1, 2));
        CHECK(f.delta == Rational(-1));
    }
    SUBCASE("(k,t) = (-1,1): E = 2X^2 - Y^2, Delta_Q = 8") {
        TangentForm f = tangent_form(ParameterPoint(Rational(-1), Rational(1), Rational(1)));
        CHECK(f.a == Rational(2));
        CHECK(f.b == Rational(0));
        CHECK(f.c2 == Rational(-1));
        CHECK(f.delta == Rational(8));
    }
    SUBCASE("initial-form and discriminant identities at 25 seeded points") {
        SplitMix64 rng(47);
        for (int i = 0; i < 25; ++i) {
            ParameterPoint p = admissible_sample(rng, (i % 3) - 1);
            TangentForm f = tangent_form(p); // throws if the initial form is not E^2
            CHECK(f.delta == Rational(4) * p.k * p.s * p.s * (p.k - Rational(1)));
            // sign dichotomy
            const bool outer = p.k.sign() < 0 || p.k > Rational(1);
            CHECK((f.delta.sign() > 0) == outer);
            CHECK((f.delta.sign() < 0) == !outer);
        }
    }
}

TEST_CASE("slope-chart reduction") {
    SUBCASE("(k,R,t) = (2,1,1): g = 2u^2 - 1, q = (1 - u^2)/2") {
        SlopeReduction sr = slope_reduction(ParameterPoint(Rational(2), Rational(1), Rational(1)));
        CHECK(sr.g == UnivariatePoly({Rational(-1), Rational(0), Rational(2)}));
        CHECK(sr.q == UnivariatePoly({Rational(1, 2), Rational(0), Rational(-1, 2)}));
    }
    SUBCASE("(k,R,t) = (1/2,1,1): g = 1/2 + u^2/2 is strictly positive") {
        SlopeReduction sr =
            slope_reduction(ParameterPoint(Rational(1, 2), Rational(1), Rational(1)));
        CHECK(sr.g == UnivariatePoly({Rational(1, 2), Rational(0), Rational(1, 2)}));
    }
    SUBCASE("H(0,u) = -4R^2(1+u^2)q^2 modulo g: the quotient-ring certificate") {
        SplitMix64 rng(51);
        for (int i = 0; i < 12; ++i) {
            ParameterPoint p = admissible_sample(rng, (i % 3) - 1);
            SlopeReduction sr = slope_reduction(p);
            const UnivariatePoly one_plus_u2({Rational(1), Rational(0), Rational(1)});
            const UnivariatePoly rhs =
                one_plus_u2 * sr.q * sr.q * (Rational(-4) * p.R * p.R);
            CHECK(sr.h0.mod(sr.g) == rhs.mod(sr.g));
            CHECK(sylvester_resultant(sr.g, sr.q) != Rational(0));
        }
    }
}

TEST_CASE("branch classification") {
    SUBCASE("(2,1,1): two real crossings, u^2 = 1/2, lambda = 3/64") {
        BranchClassification c =
            classify_branches(ParameterPoint(Rational(2), Rational(1), Rational(1)));
        CHECK(c.kind == BranchKind::TwoRealCrossings);
        CHECK(c.delta == Rational(8));
        CHECK(c.res_g_dg != Rational(0));
        CHECK(c.res_g_q != Rational(0));
        REQUIRE(c.u_plus_sq.has_value());
        CHECK(*c.u_plus_sq == Rational(1, 2));
        REQUIRE(c.lambda_plus.has_value());
        REQUIRE(c.lambda_minus.has_value());
        CHECK(*c.lambda_plus == Rational(3, 64));
        CHECK(*c.lambda_minus == Rational(3, 64));
    }
    SUBCASE("(1/2,1,1): no real branch, min g = 1/2") {
        BranchClassification c =
            classify_branches(ParameterPoint(Rational(1, 2), Rational(1), Rational(1)));
        CHECK(c.kind == BranchKind::NoRealBranch);
        REQUIRE(c.min_g.has_value());
        CHECK(*c.min_g == Rational(1, 2));
    }
    SUBCASE("(-1,1,1): two real crossings with u^2 = 2") {
        BranchClassification c =
            classify_branches(ParameterPoint(Rational(-1), Rational(1), Rational(1)));
        CHECK(c.kind == BranchKind::TwoRealCrossings);
        REQUIRE(c.u_plus_sq.has_value());
        CHECK(*c.u_plus_sq == Rational(2));
    }
    SUBCASE("walls are rejected as degenerate") {
        CHECK(classify_branches(ParameterPoint(Rational(0), Rational(1), Rational(1))).kind ==
              BranchKind::WallDegenerate);
        CHECK(classify_branches(ParameterPoint(Rational(1), Rational(1), Rational(1))).kind ==
              BranchKind::WallDegenerate);
    }
    SUBCASE("kind depends only on the chamber, not on R or |t|") {
        SplitMix64 rng(59);
        for (int regime : {-1, 0, 1}) {
            const BranchKind expected =
                regime == 0 ? BranchKind::NoRealBranch : BranchKind::TwoRealCrossings;
            for (int i = 0; i < 15; ++i) {
                ParameterPoint p = admissible_sample(rng, regime);
                CHECK(classify_branches(p).kind == expected);
            }
        }
    }
    SUBCASE("rational roots when the discriminant is a perfect square") {
        // k = 4/3, t = 1: g = (4/3)u^2 - 1/3, roots u = ±1/2, Delta = 16/9.
        BranchClassification c =
            classify_branches(ParameterPoint(Rational(4, 3), Rational(1), Rational(1)));
        CHECK(c.kind == BranchKind::TwoRealCrossings);
        CHECK(c.delta == Rational(16, 9));
        REQUIRE(c.u_plus_sq.has_value());
        REQUIRE(c.u_minus_sq.has_value());
        CHECK(*c.u_plus_sq == Rational(1, 4));
        CHECK(*c.u_minus_sq == Rational(1, 4));
        CHECK(c.lambda_plus.has_value());
        CHECK(c.lambda_minus.has_value());
    }
}

TEST_CASE("infinity points") {
    SUBCASE("witness (1/2,1,1): unique point [0:0:1:0] of degree 8") {
        InfinityReport r = infinity_points(ParameterPoint(Rational(1, 2), Rational(1), Rational(1)));
        CHECK(r.unique_point);
        CHECK(r.x_in_radical);
        CHECK(r.y_in_radical);
        CHECK(r.infinity_degree == 8);
        CHECK(r.x4_in_ideal);
    }
    SUBCASE("every chamber witness agrees") {
        for (long kk : {-2L, 4L}) {
            InfinityReport r =
                infinity_points(ParameterPoint(Rational(kk, 2), Rational(1), Rational(-1)));
            CHECK(r.unique_point);
            CHECK(r.infinity_degree == 8);
        }
    }
}
