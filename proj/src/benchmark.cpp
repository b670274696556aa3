#include "trisector/benchmark.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trisector {

namespace {

ContextPtr proj_context() {
    static ContextPtr ctx = make_context({"X", "Y", "Z", "W"});
    return ctx;
}

// Degenerate witness polynomials from the cubic-plus-line benchmark,
// taken as given: a = 2, (u, v) = (10, -4), (alpha, beta) = (2, 0).
Polynomial degenerate_f12h(const ContextPtr& ctx) {
    return parse_polynomial(ctx, "2*X*Y + 5*Z*W");
}

Polynomial degenerate_f13h(const ContextPtr& ctx) {
    return parse_polynomial(ctx, "3*X^2 - 4*Y^2 + Z^2 - 4*X*Y + 4*X*Z + 20*X*W"
                                 " - 40*Y*W - 50*Z*W - 175*W^2");
}

} // namespace

ThreeLineConfig ThreeLineConfig::generic_witness() {
    return {Rational(2), Rational(1), Rational(2), Rational(1), Rational(1)};
}

Polynomial three_line_f12h(const ThreeLineConfig& cfg, const ContextPtr& ctx) {
    const Polynomial X = Polynomial::variable(ctx, "X");
    const Polynomial Y = Polynomial::variable(ctx, "Y");
    const Polynomial Z = Polynomial::variable(ctx, "Z");
    const Polynomial W = Polynomial::variable(ctx, "W");
    return Z * W * (Rational(1) + cfg.a * cfg.a) + cfg.a * (X * Y);
}

Polynomial three_line_f13h(const ThreeLineConfig& cfg, const ContextPtr& ctx) {
    const Polynomial X = Polynomial::variable(ctx, "X");
    const Polynomial Y = Polynomial::variable(ctx, "Y");
    const Polynomial Z = Polynomial::variable(ctx, "Z");
    const Polynomial W = Polynomial::variable(ctx, "W");
    const Rational u2v2 = cfg.u * cfg.u + cfg.v * cfg.v;
    return (cfg.u * cfg.u + cfg.v * cfg.v) * (X * X) +
           (cfg.alpha * cfg.alpha + cfg.v * cfg.v) * (Y * Y) -
           (cfg.u * cfg.u + cfg.alpha * cfg.alpha) * (Z * Z) -
           Rational(2) * cfg.u * cfg.alpha * (X * Y) -
           Rational(2) * cfg.v * cfg.alpha * (X * Z) - Rational(2) * cfg.u * cfg.v * (Y * Z) +
           Rational(2) * cfg.beta * u2v2 * (X * W) -
           Rational(2) * cfg.a * cfg.beta * u2v2 * (Y * W);
}

ThreeLineGenericReport three_line_generic(const ThreeLineConfig& cfg, std::uint64_t seed,
                                          const Budget& budget) {
    ThreeLineGenericReport report;
    const ContextPtr ctx = proj_context();
    const Polynomial F12h = three_line_f12h(cfg, ctx);
    const Polynomial F13h = three_line_f13h(cfg, ctx);
    const Polynomial W = Polynomial::variable(ctx, "W");

    Ideal I_proj = saturate_by_poly(Ideal(ctx, {F12h, F13h}), W, budget);
    report.degree = projective_degree(I_proj, seed, budget);

    std::vector<Polynomial> sing = I_proj.generators;
    std::vector<Polynomial> minors = jacobian_minors(I_proj.generators, ctx->variables(), 2);
    sing.insert(sing.end(), minors.begin(), minors.end());
    Ideal sing_affine = saturate_by_poly(Ideal(ctx, std::move(sing)), W, budget);
    report.affine_smooth = is_unit_ideal(sing_affine, budget);

    const Rational common = cfg.alpha * cfg.alpha + cfg.beta * cfg.beta + Rational(1);
    const Rational one_a2 = Rational(1) + cfg.a * cfg.a;
    report.delta_x = Rational(4) * cfg.a * cfg.a * one_a2 * common;
    report.delta_y = Rational(4) * one_a2 * common;

    report.passed = report.degree == 4 && report.affine_smooth &&
                    report.delta_x.sign() > 0 && report.delta_y.sign() > 0;
    return report;
}

namespace {

// Coefficient system for one ruling family: substitute the parametrized line
//   point(p, q) = p * base_p(lambda, mu) + q * base_q(lambda, mu)
// into F13h and require the quadratic form in (p, q) to vanish.
struct RulingFamily {
    char name;
    // base vectors as functions of (lambda, mu), expressed over (l, m, p, q)
    std::vector<Polynomial> point; // X, Y, Z, W coordinates
    ContextPtr ctx;
};

RulingFamily make_family(char name) {
    RulingFamily fam;
    fam.name = name;
    fam.ctx = make_context({"l", "m", "p", "q"});
    const Polynomial l = Polynomial::variable(fam.ctx, "l");
    const Polynomial m = Polynomial::variable(fam.ctx, "m");
    const Polynomial pp = Polynomial::variable(fam.ctx, "p");
    const Polynomial qq = Polynomial::variable(fam.ctx, "q");
    if (name == 'A') {
        // V(m X - l Z, 2 l Y + 5 m W): spanned by (l,0,m,0) and (0,5m,0,-2l)
        fam.point = {l * pp, Rational(5) * m * qq, m * pp, Rational(-2) * l * qq};
    } else {
        // V(m X - l W, 2 l Y + 5 m Z): spanned by (l,0,0,m) and (0,5m,-2l,0)
        fam.point = {l * pp, Rational(5) * m * qq, Rational(-2) * l * qq, m * pp};
    }
    return fam;
}

std::pair<Polynomial, Polynomial> family_forms(char name, const Rational& lambda,
                                               const Rational& mu, const ContextPtr& ctx) {
    const Polynomial X = Polynomial::variable(ctx, "X");
    const Polynomial Y = Polynomial::variable(ctx, "Y");
    const Polynomial Z = Polynomial::variable(ctx, "Z");
    const Polynomial W = Polynomial::variable(ctx, "W");
    Polynomial f1, f2;
    if (name == 'A') {
        f1 = mu * X - lambda * Z;
        f2 = Rational(2) * lambda * Y + Rational(5) * mu * W;
    } else {
        f1 = mu * X - lambda * W;
        f2 = Rational(2) * lambda * Y + Rational(5) * mu * Z;
    }
    return {f1.is_zero() ? f1 : f1.monic(), f2.is_zero() ? f2 : f2.monic()};
}

// Coefficients of p^2, p q, q^2 as univariates in lambda (chart mu = 1),
// plus their values at (lambda, mu) = (1, 0).
struct CoefficientSystem {
    std::vector<UnivariatePoly> chart; // in lambda
    std::vector<Rational> at_infinity; // at (1, 0)
};

CoefficientSystem coefficient_system(const RulingFamily& fam, const Polynomial& f13h) {
    const ContextPtr& ctx = fam.ctx;
    std::map<std::string, Polynomial> bind;
    const char* names[4] = {"X", "Y", "Z", "W"};
    for (int i = 0; i < 4; ++i) bind.emplace(names[i], fam.point[static_cast<std::size_t>(i)]);
    const Polynomial composed = f13h.substitute(bind, ctx);

    // Split composed = A(l,m) p^2 + B(l,m) p q + C(l,m) q^2.
    auto pq_part = [&](int pe, int qe) {
        std::vector<Polynomial::Term> kept;
        auto pi = ctx->index_of("p"), qi = ctx->index_of("q");
        for (const auto& [mono, coeff] : composed.terms()) {
            if (mono.exponent(*pi) == pe && mono.exponent(*qi) == qe) {
                std::vector<int> e = mono.exponents();
                e[*pi] = 0;
                e[*qi] = 0;
                kept.emplace_back(Monomial(std::move(e)), coeff);
            }
        }
        return Polynomial::from_terms(ctx, std::move(kept));
    };

    CoefficientSystem sys;
    for (auto [pe, qe] : {std::pair<int, int>{2, 0}, {1, 1}, {0, 2}}) {
        Polynomial coeff = pq_part(pe, qe);
        Polynomial chart = coeff.substitute_values({{"m", Rational(1)}});
        ContextPtr lctx = make_context({"l"});
        sys.chart.push_back(UnivariatePoly::from_polynomial(chart.in_context(lctx), "l"));
        sys.at_infinity.push_back(
            coeff.evaluate({Rational(1), Rational(0), Rational(0), Rational(0)}));
    }
    return sys;
}

} // namespace

std::vector<RulingLine> find_ruling_line(const Budget& budget) {
    const ContextPtr ctx = proj_context();
    const Polynomial f12h = degenerate_f12h(ctx);
    const Polynomial f13h = degenerate_f13h(ctx);

    std::vector<RulingLine> found;
    for (char name : {'A', 'B'}) {
        RulingFamily fam = make_family(name);
        CoefficientSystem sys = coefficient_system(fam, f13h);

        std::vector<std::pair<Rational, Rational>> candidates;
        // Chart mu = 1: common rational roots of the three coefficients.
        UnivariatePoly g = sys.chart[0];
        for (int i = 1; i < 3; ++i) g = gcd(g, sys.chart[i]);
        if (g.is_zero()) {
            throw std::logic_error("find_ruling_line: whole ruling lies on the quartic");
        }
        for (const auto& root : rational_roots(g)) candidates.emplace_back(root, Rational(1));
        // The point at infinity of the parameter line: (lambda : mu) = (1 : 0).
        if (sys.at_infinity[0].is_zero() && sys.at_infinity[1].is_zero() &&
            sys.at_infinity[2].is_zero())
            candidates.emplace_back(Rational(1), Rational(0));

        for (const auto& [lambda, mu] : candidates) {
            auto [f1, f2] = family_forms(name, lambda, mu, ctx);
            if (f1.is_zero() || f2.is_zero()) continue;
            GroebnerBasis line_gb = buchberger(Ideal(ctx, {f1, f2}), budget);
            // Certificate: the line lies on both surfaces.
            if (!normal_form(f12h, line_gb).is_zero()) continue;
            if (!normal_form(f13h, line_gb).is_zero()) continue;
            found.push_back(RulingLine{name, lambda, mu, f1, f2});
        }
    }
    if (found.empty()) throw std::logic_error("find_ruling_line: no rational line found");
    return found;
}

namespace {

// A projective scheme is empty iff its ideal dehomogenizes to the unit ideal
// in every coordinate chart.
bool projectively_empty(const Ideal& I, const Budget& budget) {
    const ContextPtr& ctx = I.ctx;
    for (const auto& var : ctx->variables()) {
        std::vector<std::string> rest;
        for (const auto& v : ctx->variables())
            if (v != var) rest.push_back(v);
        ContextPtr cctx = make_context(rest);
        std::vector<Polynomial> gens;
        gens.reserve(I.generators.size());
        for (const auto& g : I.generators)
            gens.push_back(g.dehomogenize(var, Rational(1)).in_context(cctx));
        if (!is_unit_ideal(Ideal(cctx, std::move(gens)), budget)) return false;
    }
    return true;
}

// True when the chart ideal certifiably has no real point: some elimination
// to a single variable yields a nonzero univariate with no real root.
bool chart_has_no_real_point(const Ideal& I, const Budget& budget) {
    if (is_unit_ideal(I, budget)) return true;
    const auto& vars = I.ctx->variables();
    for (const auto& keep : vars) {
        std::vector<std::string> drop;
        for (const auto& v : vars)
            if (v != keep) drop.push_back(v);
        Ideal elim = elimination_ideal(I, drop, budget);
        if (elim.generators.empty()) continue;
        ContextPtr uctx = make_context({keep});
        UnivariatePoly u =
            UnivariatePoly::from_polynomial(elim.generators.front().in_context(uctx), keep);
        if (!u.is_zero() && sturm_real_root_count(u) == 0) return true;
    }
    return false;
}

} // namespace

ThreeLineDegenerateReport three_line_degenerate(std::uint64_t seed, const Budget& budget) {
    ThreeLineDegenerateReport report;
    const ContextPtr ctx = proj_context();
    const Polynomial f12h = degenerate_f12h(ctx);
    const Polynomial f13h = degenerate_f13h(ctx);
    const Polynomial W = Polynomial::variable(ctx, "W");

    Ideal I_proj = saturate_by_poly(Ideal(ctx, {f12h, f13h}), W, budget);
    report.lines = find_ruling_line(budget);
    Ideal line_ideal(ctx, {report.lines.front().form1, report.lines.front().form2});

    Ideal residual = saturate_by_ideal(I_proj, line_ideal, budget);
    report.residual_degree = projective_degree(residual, seed, budget);

    std::vector<Polynomial> sing = residual.generators;
    std::vector<Polynomial> minors = jacobian_minors(residual.generators, ctx->variables(), 2);
    sing.insert(sing.end(), minors.begin(), minors.end());
    report.residual_smooth = projectively_empty(Ideal(ctx, std::move(sing)), budget);

    // Intersection of the cubic with the line.
    std::vector<Polynomial> igens = residual.generators;
    igens.insert(igens.end(), line_ideal.generators.begin(), line_ideal.generators.end());
    Ideal intersection(ctx, std::move(igens));

    // Affine chart W = 1: eliminate X, Y down to a univariate in Z.
    ContextPtr actx = make_context({"X", "Y", "Z"});
    std::vector<Polynomial> agens;
    for (const auto& g : intersection.generators)
        agens.push_back(g.dehomogenize("W", Rational(1)).in_context(actx));
    Ideal affine(actx, std::move(agens));
    report.intersection_zero_dimensional =
        is_zero_dimensional(affine, budget).kind == ZeroDimensionality::Kind::ZeroDimensional;

    Ideal elim_z = elimination_ideal(affine, {"X", "Y"}, budget);
    if (elim_z.generators.empty())
        throw std::logic_error("three_line_degenerate: empty elimination ideal");
    ContextPtr zctx = make_context({"Z"});
    UnivariatePoly elim =
        UnivariatePoly::from_polynomial(elim_z.generators.front().in_context(zctx), "Z");
    report.elimination_poly = elim.to_string("Z");
    const UnivariatePoly expected({Rational(125), Rational(0), Rational(1)}); // Z^2 + 125
    report.elim_proportional_to_expected = (elim.monic() == expected);
    report.real_intersection_count = sturm_real_root_count(elim);

    // No real intersection points on the plane at infinity either.
    std::vector<Polynomial> infgens = intersection.generators;
    infgens.push_back(W);
    Ideal at_infinity(ctx, std::move(infgens));
    bool no_real_infinity = true;
    for (const auto& chart_var : {"X", "Y", "Z"}) {
        std::vector<std::string> rest;
        for (const auto& v : ctx->variables())
            if (v != chart_var) rest.push_back(v);
        ContextPtr cctx = make_context(rest);
        std::vector<Polynomial> cgens;
        for (const auto& g : at_infinity.generators)
            cgens.push_back(g.dehomogenize(chart_var, Rational(1)).in_context(cctx));
        if (!chart_has_no_real_point(Ideal(cctx, std::move(cgens)), budget)) {
            no_real_infinity = false;
            break;
        }
    }
    report.no_real_points_at_infinity = no_real_infinity;

    report.passed = report.residual_degree == 3 && report.residual_smooth &&
                    report.intersection_zero_dimensional &&
                    report.elim_proportional_to_expected &&
                    report.real_intersection_count == 0 && report.no_real_points_at_infinity &&
                    !report.lines.empty();
    return report;
}

} // namespace trisector
