#include "trisector/infinity.hpp"

#include <stdexcept>

namespace trisector {

namespace {

ContextPtr series_context() {
    static ContextPtr ctx = make_context({"X", "Y"});
    return ctx;
}

// F2h(X, Y, 1, w) for a series w in (X, Y), truncated at `order`.
Polynomial f2h_on_series(const ParameterPoint& p, const Polynomial& w, long order) {
    const ContextPtr& ctx = w.context();
    const Polynomial X = Polynomial::variable(ctx, "X");
    const Polynomial Y = Polynomial::variable(ctx, "Y");
    const Polynomial core =
        (X * X - Rational(2) * p.k * w + (p.R * p.R + p.k * p.k) * (w * w).truncated(order))
            .truncated(order);
    return ((core * core).truncated(order) -
            (Rational(4) * p.R * p.R * (w * w).truncated(order) * (X * X + Y * Y)).truncated(order))
        .truncated(order);
}

} // namespace

TruncatedSeries solve_W_series(const ParameterPoint& p, long order) {
    if (order < 4) throw std::invalid_argument("solve_W_series: order must be >= 4");
    const ContextPtr ctx = series_context();
    const Polynomial X = Polynomial::variable(ctx, "X");
    const Polynomial Y = Polynomial::variable(ctx, "Y");
    // 2 h W = (X s - Y c)^2 - Y^2 + h^2 W^2, solved by fixed-point iteration;
    // each pass doubles the correct order.
    const Polynomial quad = (X * p.s - Y * p.c).pow(2) - Y * Y;
    const Rational half_h = (Rational(2) * p.h).inverse();
    Polynomial w = Polynomial::zero(ctx);
    for (long pass = 0; pass < order; ++pass) {
        Polynomial next =
            ((quad + p.h * p.h * (w * w).truncated(order)) * half_h).truncated(order);
        if (next == w) break;
        w = std::move(next);
    }
    // Defining property: F1h(X, Y, 1, w) = 0 mod degree `order`.
    const Polynomial residual =
        (Y * Y - (X * p.s - Y * p.c).pow(2) + Rational(2) * p.h * w - p.h * p.h * (w * w))
            .truncated(order);
    if (!residual.is_zero())
        throw std::logic_error("solve_W_series: residual not zero at truncation order");
    return {std::move(w), order};
}

TangentForm tangent_form(const ParameterPoint& p, long series_order) {
    if (series_order < 8) throw std::invalid_argument("tangent_form: series order must be >= 8");
    if (p.h != Rational(1))
        throw std::invalid_argument("tangent_form requires the canonical normalization h = 1");
    TruncatedSeries w = solve_W_series(p, series_order);
    const Polynomial composed = f2h_on_series(p, w.poly, series_order);
    if (composed.is_zero()) throw std::logic_error("tangent_form: composition vanished");

    long low = composed.total_degree();
    for (const auto& t : composed.terms()) low = std::min(low, t.first.total_degree());
    const Polynomial initial = composed.homogeneous_part(low);

    TangentForm form;
    form.a = Rational(1) - p.k * p.s * p.s;
    form.b = Rational(2) * p.k * p.s * p.c;
    form.c2 = p.k * p.s * p.s;
    form.delta = form.b * form.b - Rational(4) * form.a * form.c2;

    const ContextPtr& ctx = w.poly.context();
    const Polynomial X = Polynomial::variable(ctx, "X");
    const Polynomial Y = Polynomial::variable(ctx, "Y");
    const Polynomial E = form.a * (X * X) + form.b * (X * Y) + form.c2 * (Y * Y);
    if (low != 4 || initial != E * E)
        throw std::logic_error("tangent_form: initial form is not E(X,Y)^2");

    const Rational expected = Rational(4) * p.k * p.s * p.s * (p.k - Rational(1));
    if (form.delta != expected)
        throw std::logic_error("tangent_form: discriminant mismatch with 4ks^2(k-1)");
    return form;
}

namespace {

// Substitute Y = uX into a series in (X, Y) and divide by X^4: the term
// c X^a Y^b becomes c u^b X^(a+b-4).
void slope_coefficients(const Polynomial& series, std::vector<Rational>& a0,
                        std::vector<Rational>& a1, bool& odd_powers) {
    a0.assign(1, Rational(0));
    a1.assign(1, Rational(0));
    odd_powers = false;
    for (const auto& [mono, coeff] : series.terms()) {
        const long total = mono.total_degree();
        const int b = mono.exponent(1);
        const long xpow = total - 4;
        if (xpow < 0) throw std::logic_error("slope_coefficients: term below degree 4");
        if (xpow % 2 == 1) {
            odd_powers = true;
            continue;
        }
        std::vector<Rational>* target = nullptr;
        if (xpow == 0) target = &a0;
        else if (xpow == 2) target = &a1;
        else continue;
        if (static_cast<std::size_t>(b) >= target->size())
            target->resize(static_cast<std::size_t>(b) + 1, Rational(0));
        (*target)[static_cast<std::size_t>(b)] += coeff;
    }
}

SlopeReduction closed_forms(const ParameterPoint& p) {
    if (p.h != Rational(1))
        throw std::invalid_argument("slope analysis requires the canonical normalization h = 1");
    SlopeReduction r;
    // g(u) = (1 - k s^2) + 2 k s c u + k s^2 u^2
    r.g = UnivariatePoly({Rational(1) - p.k * p.s * p.s, Rational(2) * p.k * p.s * p.c,
                          p.k * p.s * p.s});
    // q(u) = (s^2 - 2 s c u - s^2 u^2) / 2
    r.q = UnivariatePoly({p.s * p.s * Rational(1, 2), -(p.s * p.c),
                          -(p.s * p.s) * Rational(1, 2)});
    // Exact X^2 coefficient of the reduced slope equation:
    //   H(0, u) = 2 (R^2 + k^2 - k) g q^2 - 4 R^2 (1 + u^2) q^2.
    // The series solution contributes -2k g q^2 through its degree-4 term
    // omega_4 = Q^2/2; that contribution is a multiple of g, so at every root
    // of g the value is still -4 R^2 (1 + u^2) q^2 < 0.
    const UnivariatePoly q2 = r.q * r.q;
    const UnivariatePoly one_plus_u2({Rational(1), Rational(0), Rational(1)});
    r.h0 = r.g * q2 * (Rational(2) * (p.R * p.R + p.k * p.k - p.k)) -
           one_plus_u2 * q2 * (Rational(4) * p.R * p.R);
    return r;
}

void verify_expansion(const ParameterPoint& p, const SlopeReduction& closed, long order) {
    TruncatedSeries w = solve_W_series(p, order);
    const Polynomial composed = f2h_on_series(p, w.poly, order);
    std::vector<Rational> a0, a1;
    bool odd = false;
    slope_coefficients(composed, a0, a1, odd);
    if (odd) throw std::logic_error("slope_reduction: odd X-powers in the reduced equation");
    if (UnivariatePoly(a0) != closed.g * closed.g)
        throw std::logic_error("slope_reduction: X^0 coefficient is not g(u)^2");
    if (UnivariatePoly(a1) != closed.h0)
        throw std::logic_error("slope_reduction: X^2 coefficient mismatch with H(0,u)");
}

} // namespace

SlopeReduction slope_reduction(const ParameterPoint& p, long series_order) {
    if (series_order < 8)
        throw std::invalid_argument("slope_reduction: series order must be >= 8");
    SlopeReduction closed = closed_forms(p);
    // Stability: the expansion must agree at the requested order and at +2.
    verify_expansion(p, closed, series_order);
    verify_expansion(p, closed, series_order + 2);
    return closed;
}

std::string branch_kind_name(BranchKind kind) {
    switch (kind) {
        case BranchKind::TwoRealCrossings: return "two_real_crossings";
        case BranchKind::NoRealBranch: return "no_real_branch";
        case BranchKind::WallDegenerate: return "wall_degenerate";
    }
    return "?";
}

BranchClassification classify_branches(const ParameterPoint& p) {
    BranchClassification out;
    SlopeReduction forms = closed_forms(p);
    const UnivariatePoly& g = forms.g;
    const UnivariatePoly dg = g.derivative();
    out.delta = Rational(4) * p.k * p.s * p.s * (p.k - Rational(1));
    out.res_g_dg = sylvester_resultant(g, dg);
    out.res_g_q = sylvester_resultant(g, forms.q);

    if (p.k.is_zero() || p.k == p.h) {
        out.kind = BranchKind::WallDegenerate;
        return out;
    }

    if (out.delta.sign() > 0) {
        out.kind = BranchKind::TwoRealCrossings;
        if (out.res_g_dg.is_zero() || out.res_g_q.is_zero())
            throw std::logic_error("classify_branches: resultant certificate failed");
        // lambda(u) = 4 R^2 (1 + u^2) q(u)^2 / g'(u)^2 evaluated at the roots
        // of g, carried out in Q[u]/(g) so irrational roots never appear.
        const UnivariatePoly one_plus_u2({Rational(1), Rational(0), Rational(1)});
        const UnivariatePoly numerator =
            (one_plus_u2 * forms.q * forms.q * (Rational(4) * p.R * p.R)).mod(g);
        const UnivariatePoly dg2_inv = inverse_mod((dg * dg).mod(g), g);
        const UnivariatePoly lambda_residue = (numerator * dg2_inv).mod(g);

        Rational root;
        const Rational a2 = g.coefficient(2), a1 = g.coefficient(1), a0 = g.coefficient(0);
        if (out.delta.is_square(&root)) {
            // Rational roots: evaluate everything directly.
            const Rational up = (-a1 + root) / (Rational(2) * a2);
            const Rational um = (-a1 - root) / (Rational(2) * a2);
            out.u_plus_sq = up * up;
            out.u_minus_sq = um * um;
            auto lam = [&](const Rational& u) {
                const Rational qu = forms.q.evaluate(u);
                const Rational dgu = dg.evaluate(u);
                return Rational(4) * p.R * p.R * (Rational(1) + u * u) * qu * qu /
                       (dgu * dgu);
            };
            out.lambda_plus = lam(up);
            out.lambda_minus = lam(um);
        } else {
            if (a1.is_zero()) {
                // Even quadratic: both roots share the rational square -a0/a2.
                out.u_plus_sq = -a0 / a2;
                out.u_minus_sq = out.u_plus_sq;
            }
            if (lambda_residue.degree() <= 0) {
                const Rational v = lambda_residue.is_zero() ? Rational(0)
                                                            : lambda_residue.coefficient(0);
                out.lambda_plus = v;
                out.lambda_minus = v;
            }
        }
    } else if (out.delta.sign() < 0) {
        out.kind = BranchKind::NoRealBranch;
        // Leading coefficient k s^2 > 0 on 0 < k < 1, so g has the positive
        // minimum  a0 - a1^2/(4 a2)  at its vertex.
        const Rational a2 = g.coefficient(2), a1 = g.coefficient(1), a0 = g.coefficient(0);
        if (a2.sign() <= 0)
            throw std::logic_error("classify_branches: unexpected leading sign of g");
        const Rational vertex = a0 - a1 * a1 / (Rational(4) * a2);
        if (vertex.sign() <= 0)
            throw std::logic_error("classify_branches: vertex bound not positive");
        out.min_g = vertex;
    } else {
        out.kind = BranchKind::WallDegenerate;
    }
    return out;
}

InfinityReport infinity_points(const ParameterPoint& p, const Budget& budget) {
    TrisectorSystem sys = build_trisector(p);
    const ContextPtr& ctx = sys.proj_ctx;
    const Polynomial W = Polynomial::variable(ctx, "W");
    const Polynomial X = Polynomial::variable(ctx, "X");
    const Polynomial Y = Polynomial::variable(ctx, "Y");

    Ideal I_proj = saturate_by_poly(Ideal(ctx, {sys.F1h, sys.F2h}), W, budget);
    std::vector<Polynomial> gens = I_proj.generators;
    gens.push_back(W);
    Ideal I_inf(ctx, std::move(gens));

    InfinityReport report{};
    report.x_in_radical = in_radical(X, I_inf, budget);
    report.y_in_radical = in_radical(Y, I_inf, budget);

    GroebnerBasis gb_inf = buchberger(I_inf, budget);
    report.x4_in_ideal = normal_form(X.pow(4), gb_inf).is_zero();

    // Chart Z = 1: the support lies at the origin of (X, Y, W), so the
    // standard-monomial count is the degree of the infinity scheme.
    std::vector<Polynomial> chart;
    chart.reserve(I_inf.generators.size());
    ContextPtr cctx = make_context({"X", "Y", "W"});
    for (const auto& g : I_inf.generators)
        chart.push_back(g.dehomogenize("Z", Rational(1)).in_context(cctx));
    ZeroDimensionality z = is_zero_dimensional(Ideal(cctx, std::move(chart)), budget);
    report.infinity_degree =
        (z.kind == ZeroDimensionality::Kind::ZeroDimensional) ? z.standard_monomial_count : 0;
    report.unique_point =
        report.x_in_radical && report.y_in_radical && report.infinity_degree > 0;
    return report;
}

} // namespace trisector
