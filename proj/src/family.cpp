#include "trisector/family.hpp"

#include <sstream>
#include <stdexcept>

namespace trisector {

namespace {

const Rational kOne(1);

ContextPtr affine_context() {
    static ContextPtr ctx = make_context({"x", "y", "z"});
    return ctx;
}

ContextPtr projective_context() {
    static ContextPtr ctx = make_context({"X", "Y", "Z", "W"});
    return ctx;
}

ContextPtr lifted_context() {
    static ContextPtr ctx = make_context({"x", "y", "z", "u", "v"});
    return ctx;
}

} // namespace

ParameterPoint::ParameterPoint(Rational k_, Rational R_, Rational t_, Rational h_)
    : k(std::move(k_)), R(std::move(R_)), t(std::move(t_)), h(std::move(h_)) {
    if (R.sign() <= 0) throw std::invalid_argument("ParameterPoint: R must be positive");
    if (t.is_zero()) throw std::invalid_argument("ParameterPoint: t must be nonzero");
    if (h.is_zero()) throw std::invalid_argument("ParameterPoint: h must be nonzero");
    const Rational t2 = t * t;
    const Rational den = (kOne + t2).inverse();
    c = (kOne - t2) * den;
    s = Rational(2) * t * den;
}

std::string ParameterPoint::describe() const {
    std::ostringstream os;
    os << "k=" << k << ", R=" << R << ", t=" << t;
    if (h != kOne) os << ", h=" << h;
    return os.str();
}

TrisectorSystem build_trisector(const ParameterPoint& p) {
    TrisectorSystem sys;
    sys.affine_ctx = affine_context();
    sys.proj_ctx = projective_context();
    const ContextPtr& a = sys.affine_ctx;
    const ContextPtr& h4 = sys.proj_ctx;

    const Polynomial x = Polynomial::variable(a, "x");
    const Polynomial y = Polynomial::variable(a, "y");
    const Polynomial z = Polynomial::variable(a, "z");
    // F1 = y^2 - (x s - y c)^2 + 2 z h - h^2
    sys.F1 = y * y - (x * p.s - y * p.c).pow(2) + Rational(2) * p.h * z - Polynomial::constant(a, p.h * p.h);
    // F2 = (x^2 - 2 k z + R^2 + k^2)^2 - 4 R^2 (x^2 + y^2)
    const Polynomial core = x * x - Rational(2) * p.k * z + Polynomial::constant(a, p.R * p.R + p.k * p.k);
    sys.F2 = core.pow(2) - Rational(4) * p.R * p.R * (x * x + y * y);

    const Polynomial X = Polynomial::variable(h4, "X");
    const Polynomial Y = Polynomial::variable(h4, "Y");
    const Polynomial Z = Polynomial::variable(h4, "Z");
    const Polynomial W = Polynomial::variable(h4, "W");
    sys.F1h = Y * Y - (X * p.s - Y * p.c).pow(2) + Rational(2) * p.h * Z * W - p.h * p.h * W * W;
    const Polynomial coreh =
        X * X - Rational(2) * p.k * Z * W + (p.R * p.R + p.k * p.k) * W * W;
    sys.F2h = coreh.pow(2) - Rational(4) * p.R * p.R * W * W * (X * X + Y * Y);
    return sys;
}

LiftedSystem build_lifted_system(const ParameterPoint& p) {
    LiftedSystem sys;
    sys.ctx = lifted_context();
    const ContextPtr& L = sys.ctx;
    const Polynomial x = Polynomial::variable(L, "x");
    const Polynomial y = Polynomial::variable(L, "y");
    const Polynomial z = Polynomial::variable(L, "z");
    const Polynomial u = Polynomial::variable(L, "u");
    const Polynomial v = Polynomial::variable(L, "v");

    sys.F1 = y * y - (x * p.s - y * p.c).pow(2) + Rational(2) * p.h * z -
             Polynomial::constant(L, p.h * p.h);
    sys.F2 = (x - u).pow(2) + (y - v).pow(2) + (z - Polynomial::constant(L, p.k)).pow(2) -
             (y * y + z * z);
    sys.F3 = u * u + v * v - Polynomial::constant(L, p.R * p.R);
    sys.F4 = y * u - x * v;
    return sys;
}

bool certify_affine_smooth(const ParameterPoint& p, const Budget& budget) {
    TrisectorSystem sys = build_trisector(p);
    const ContextPtr& ctx = sys.proj_ctx;
    const Polynomial W = Polynomial::variable(ctx, "W");

    Ideal I_proj = saturate_by_poly(Ideal(ctx, {sys.F1h, sys.F2h}), W, budget);
    std::vector<Polynomial> sing = I_proj.generators;
    std::vector<Polynomial> minors =
        jacobian_minors(I_proj.generators, ctx->variables(), 2);
    sing.insert(sing.end(), minors.begin(), minors.end());
    Ideal sing_affine = saturate_by_poly(Ideal(ctx, std::move(sing)), W, budget);
    return is_unit_ideal(sing_affine, budget);
}

Rational affine_discriminant_eval(const ParameterPoint& p) {
    const Rational inner = p.h * p.k - p.k * p.k - p.R * p.R;
    const Rational bracket = p.h * p.h * p.R * p.R + p.s * p.s * inner * inner;
    return p.h * p.k * p.R * p.R * (p.h - p.k) * bracket;
}

Rational smoothness_factor_eval(const ParameterPoint& p) {
    const Rational inner = p.k - p.k * p.k - p.R * p.R;
    return p.R * p.R + p.s * p.s * inner * inner;
}

namespace {

// Deterministic admissible-looking sample points on a factor's zero locus,
// used to cross-check the symbolic elimination against the closed form.
std::vector<std::vector<Rational>> factor_locus_samples(int factor, int count,
                                                        SplitMix64& rng) {
    // point layout: (h, k, R, c, s)
    std::vector<std::vector<Rational>> points;
    while (static_cast<int>(points.size()) < count) {
        auto nonzero_rational = [&]() {
            int num = 0;
            while (num == 0) num = rng.next_in(-12, 12);
            int den = rng.next_in(1, 6);
            return Rational(num, den);
        };
        Rational t = nonzero_rational();
        Rational den = (kOne + t * t).inverse();
        Rational c = (kOne - t * t) * den;
        Rational s = Rational(2) * t * den;
        Rational h = nonzero_rational(), k = nonzero_rational(), R = nonzero_rational();
        switch (factor) {
            case 0: h = Rational(0); break;              // factor h
            case 1: k = Rational(0); break;              // factor k
            case 2: R = Rational(0); break;              // factor R^2
            case 3: k = h; break;                        // factor (h - k)
            case 4: h = Rational(0); c = Rational(rng.next_in(0, 1) == 0 ? 1 : -1);
                    s = Rational(0); break;              // bracket: h = 0, s = 0
        }
        points.push_back({h, k, R, c, s});
    }
    return points;
}

} // namespace

ParametricEliminationResult parametric_elimination(const Budget& budget) {
    ParametricEliminationResult result;
    ContextPtr ctx = make_context({"h", "k", "R", "c", "s", "x", "y", "z", "u", "v"});
    const Polynomial h = Polynomial::variable(ctx, "h");
    const Polynomial k = Polynomial::variable(ctx, "k");
    const Polynomial R = Polynomial::variable(ctx, "R");
    const Polynomial c = Polynomial::variable(ctx, "c");
    const Polynomial s = Polynomial::variable(ctx, "s");
    const Polynomial x = Polynomial::variable(ctx, "x");
    const Polynomial y = Polynomial::variable(ctx, "y");
    const Polynomial z = Polynomial::variable(ctx, "z");
    const Polynomial u = Polynomial::variable(ctx, "u");
    const Polynomial v = Polynomial::variable(ctx, "v");

    const Polynomial F1 = y * y - (x * s - y * c).pow(2) + Rational(2) * z * h - h * h;
    const Polynomial F2 = (x - u).pow(2) + (y - v).pow(2) + (z - k).pow(2) - (y * y + z * z);
    const Polynomial F3 = u * u + v * v - R * R;
    const Polynomial F4 = y * u - x * v;
    const Polynomial F5 = c * c + s * s - Polynomial::constant(ctx, Rational(1));

    std::vector<Polynomial> gens{F1, F2, F3, F4, F5};
    std::vector<Polynomial> minors =
        jacobian_minors({F1, F2, F3, F4}, {"x", "y", "z", "u", "v"}, 4);
    gens.insert(gens.end(), minors.begin(), minors.end());

    Ideal sing(ctx, std::move(gens));
    try {
        Ideal eliminated = elimination_ideal(sing, {"x", "y", "z", "u", "v"}, budget);
        result.completed = true;
        result.generators = eliminated.generators;
    } catch (const BudgetExceeded& e) {
        result.completed = false;
        result.work = e.work_counter();
        return result;
    }

    // Cross-check: every generator vanishes on each factor's zero locus
    // (points drawn with c^2 + s^2 = 1).
    SplitMix64 rng(0x51ab5u);
    bool ok = true;
    // Generators come back in (h, k, R, c, s), matching the sample layout.
    for (int factor = 0; factor < 5 && ok; ++factor) {
        for (const auto& pt : factor_locus_samples(factor, 50, rng)) {
            for (const auto& g : result.generators) {
                if (!g.evaluate(pt).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
    }
    result.sampling_check_ok = ok;

    // Does the closed-form discriminant divide some generator? Verified at the
    // level of normal forms modulo the principal ideal it generates.
    ContextPtr pctx = make_context({"h", "k", "R", "c", "s"});
    const Polynomial hh = Polynomial::variable(pctx, "h");
    const Polynomial kk = Polynomial::variable(pctx, "k");
    const Polynomial RR = Polynomial::variable(pctx, "R");
    const Polynomial cc = Polynomial::variable(pctx, "c");
    const Polynomial ss = Polynomial::variable(pctx, "s");
    const Polynomial inner = hh * kk - kk * kk - RR * RR;
    const Polynomial delta =
        hh * kk * RR * RR * (hh - kk) * (hh * hh * RR * RR + ss * ss * inner * inner);
    GroebnerBasis delta_gb = buchberger(Ideal(pctx, {delta}), budget);
    for (const auto& g : result.generators) {
        if (g.is_zero()) continue;
        if (normal_form(g.in_context(pctx), delta_gb).is_zero()) {
            result.discriminant_divides_generator = true;
            break;
        }
    }
    return result;
}

namespace {

// z on the line-line bisector (h = 1): z = ((x s - y c)^2 - y^2 + 1) / 2.
Polynomial z_on_bisector(const ContextPtr& ctx, const ParameterPoint& p) {
    const Polynomial x = Polynomial::variable(ctx, "x");
    const Polynomial y = Polynomial::variable(ctx, "y");
    return ((x * p.s - y * p.c).pow(2) - y * y + Rational(1)) * Rational(1, 2);
}

} // namespace

BoundarySplit boundary_split(int k_wall, const Rational& R, const Rational& t) {
    if (k_wall != 0 && k_wall != 1)
        throw std::invalid_argument("boundary_split: wall must be k=0 or k=1");
    const ParameterPoint p(Rational(k_wall), R, t);
    const ContextPtr ctx = affine_context();
    const Polynomial x = Polynomial::variable(ctx, "x");
    const Polynomial y = Polynomial::variable(ctx, "y");

    BoundarySplit split;
    TrisectorSystem sys = build_trisector(p);
    if (k_wall == 0) {
        // F2 itself factors: (x^2 + 2Ry - R^2)(x^2 - 2Ry - R^2).
        split.factor_a = x * x + Rational(2) * R * y - Polynomial::constant(ctx, R * R);
        split.factor_b = x * x - Rational(2) * R * y - Polynomial::constant(ctx, R * R);
        split.identity_ok = (split.factor_a * split.factor_b == sys.F2);
    } else {
        // Project F2 onto the bisector F1 = 0 before splitting.
        const Polynomial rot = x * p.c + y * p.s;   // (x c + y s)
        const Polynomial anti = x * p.s - y * p.c;  // (x s - y c)
        split.factor_a = rot.pow(2) - Rational(2) * R * anti - Polynomial::constant(ctx, R * R);
        split.factor_b = rot.pow(2) + Rational(2) * R * anti - Polynomial::constant(ctx, R * R);
        const Polynomial projected =
            sys.F2.substitute({{"z", z_on_bisector(ctx, p)}}, ctx);
        split.identity_ok = (split.factor_a * split.factor_b == projected);
    }
    if (!split.identity_ok)
        throw std::logic_error("boundary_split: product identity failed");
    return split;
}

std::vector<NodeCertificate> node_points(int k_wall, const Rational& R, const Rational& t) {
    if (k_wall != 0 && k_wall != 1)
        throw std::invalid_argument("node_points: wall must be k=0 or k=1");
    const ParameterPoint p(Rational(k_wall), R, t);
    TrisectorSystem sys = build_trisector(p);
    BoundarySplit split = boundary_split(k_wall, R, t);

    std::vector<std::array<Rational, 3>> pts;
    if (k_wall == 1) {
        const Rational zc = (Rational(1) - R * R * p.s * p.s) * Rational(1, 2);
        pts.push_back({R * p.c, R * p.s, zc});
        pts.push_back({-(R * p.c), -(R * p.s), zc});
    } else {
        const Rational zc = (Rational(1) + R * R * p.s * p.s) * Rational(1, 2);
        pts.push_back({R, Rational(0), zc});
        pts.push_back({-R, Rational(0), zc});
    }

    std::vector<Polynomial> grads_f1, grads_a, grads_b;
    for (const char* v : {"x", "y", "z"}) {
        grads_f1.push_back(sys.F1.partial_derivative(v));
        grads_a.push_back(split.factor_a.partial_derivative(v));
        grads_b.push_back(split.factor_b.partial_derivative(v));
    }

    const Rational expected_det = Rational(16) * R * R;
    std::vector<NodeCertificate> out;
    for (const auto& pt : pts) {
        const std::vector<Rational> at{pt[0], pt[1], pt[2]};
        NodeCertificate cert;
        cert.point = pt;
        cert.residuals = {sys.F1.evaluate(at), sys.F2.evaluate(at)};
        if (!cert.residuals[0].is_zero() || !cert.residuals[1].is_zero())
            throw std::logic_error("node_points: nonzero residual at a node point");

        std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
        for (int col = 0; col < 3; ++col) {
            m[0][static_cast<std::size_t>(col)] = grads_f1[static_cast<std::size_t>(col)].evaluate(at);
            m[1][static_cast<std::size_t>(col)] = grads_a[static_cast<std::size_t>(col)].evaluate(at);
            m[2][static_cast<std::size_t>(col)] = grads_b[static_cast<std::size_t>(col)].evaluate(at);
        }
        // 3x3 determinant, expanded directly.
        cert.gradient_determinant =
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        cert.transversal = !cert.gradient_determinant.is_zero();
        if (cert.gradient_determinant.abs() != expected_det)
            throw std::logic_error("node_points: |det| != 16 R^2");
        out.push_back(std::move(cert));
    }
    return out;
}

} // namespace trisector
