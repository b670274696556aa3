#include "trisector/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace trisector {

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::BudgetExhausted: return "budget_exceeded";
    }
    return "?";
}

std::string ChamberLabel::text() const {
    std::string k;
    switch (regime) {
        case KRegime::Below: k = "k<0"; break;
        case KRegime::Middle: k = "0<k<1"; break;
        case KRegime::Above: k = "k>1"; break;
    }
    return k + (t_positive ? ",t>0" : ",t<0");
}

bool ChamberReport::passed() const {
    for (const auto& c : checks)
        if (c.status != CheckStatus::Pass) return false;
    return true;
}

bool ChamberReport::budget_exhausted() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::BudgetExhausted) return true;
    return false;
}

bool BoundaryReport::passed() const {
    for (const auto& s : samples)
        if (!s.passed) return false;
    return !samples.empty();
}

WallSpec candidate_walls() {
    WallSpec walls;

    // Direction-form discriminant, symbolically: with a = 1 - k s^2,
    // b = 2 k s c, c2 = k s^2, the difference disc - 4ks^2(k-1) must reduce
    // to zero modulo c^2 + s^2 - 1.
    ContextPtr ring = make_context({"k", "c", "s"});
    const Polynomial k = Polynomial::variable(ring, "k");
    const Polynomial c = Polynomial::variable(ring, "c");
    const Polynomial s = Polynomial::variable(ring, "s");
    const Polynomial a = Polynomial::constant(ring, Rational(1)) - k * s * s;
    const Polynomial b = Rational(2) * k * s * c;
    const Polynomial c2 = k * s * s;
    const Polynomial disc = b * b - Rational(4) * a * c2;
    const Polynomial closed = Rational(4) * k * s * s * (k - Polynomial::constant(ring, Rational(1)));
    GroebnerBasis circle = buchberger(Ideal(ring, {c * c + s * s - Polynomial::constant(ring, Rational(1))}));
    walls.delta_q_identity = normal_form(disc - closed, circle).is_zero();

    // Under s != 0 the k-part of the discriminant is 4 s^2 (k^2 - k).
    UnivariatePoly k_part({Rational(0), Rational(-1), Rational(1)}); // k^2 - k
    walls.infinity_roots = rational_roots(k_part);

    // Affine side: S - R^2 is an explicit square, so S >= R^2 > 0 on the
    // admissible region and no affine wall exists.
    ContextPtr aring = make_context({"k", "R", "s"});
    const Polynomial ka = Polynomial::variable(aring, "k");
    const Polynomial Ra = Polynomial::variable(aring, "R");
    const Polynomial sa = Polynomial::variable(aring, "s");
    const Polynomial inner = ka - ka * ka - Ra * Ra;
    const Polynomial S = Ra * Ra + sa * sa * inner * inner;
    walls.affine_wall_free = (S - Ra * Ra == (sa * inner).pow(2));

    walls.values = walls.infinity_roots;
    return walls;
}

std::vector<Chamber> enumerate_chambers() {
    auto mk = [](KRegime r, bool tp, long kk) {
        ChamberLabel label{r, tp};
        ChamberLabel mirror{r, !tp};
        ParameterPoint w(Rational(kk, 2), Rational(1), Rational(tp ? 1 : -1));
        return Chamber{label, w, mirror};
    };
    // Witnesses (-1, 1, ±1), (1/2, 1, ±1), (2, 1, ±1); kk is 2k.
    return {
        mk(KRegime::Below, true, -2),  mk(KRegime::Below, false, -2),
        mk(KRegime::Middle, true, 1),  mk(KRegime::Middle, false, 1),
        mk(KRegime::Above, true, 4),   mk(KRegime::Above, false, 4),
    };
}

ContextPtr witness_constraint_context() {
    static ContextPtr ctx = make_context({"k", "R", "t"});
    return ctx;
}

namespace {

struct Interval {
    Rational lo, hi;
};

Interval iv_pow(const Interval& a, int e) {
    if (e == 0) return {Rational(1), Rational(1)};
    if (e == 1) return a;
    Rational plo = a.lo.pow(static_cast<unsigned long>(e));
    Rational phi = a.hi.pow(static_cast<unsigned long>(e));
    if (e % 2 == 1) return {plo, phi};
    // even power
    if (a.lo.sign() >= 0) return {plo, phi};
    if (a.hi.sign() <= 0) return {phi, plo};
    return {Rational(0), std::max(plo, phi)};
}

Interval iv_mul(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval eval_interval(const Polynomial& p, const std::vector<Interval>& box) {
    Interval acc{Rational(0), Rational(0)};
    for (const auto& [mono, coeff] : p.terms()) {
        Interval term{coeff, coeff};
        for (std::size_t i = 0; i < box.size(); ++i) {
            const int e = mono.exponent(i);
            if (e > 0) term = iv_mul(term, iv_pow(box[i], e));
        }
        acc.lo += term.lo;
        acc.hi += term.hi;
    }
    return acc;
}

} // namespace

ParameterPoint find_witness(const std::vector<Polynomial>& strict_positive) {
    ContextPtr ctx = witness_constraint_context();
    std::vector<Polynomial> cs;
    cs.reserve(strict_positive.size());
    for (const auto& p : strict_positive) cs.push_back(p.in_context(ctx));

    const Rational half(1, 2);
    bool depth_exhausted = false;
    constexpr int kMaxDepth = 20;

    for (int expansion = 0; expansion <= 4; ++expansion) {
        const Rational w = Rational(1 << expansion);
        struct Box {
            std::vector<Interval> iv;
            int depth;
        };
        std::deque<Box> queue;
        queue.push_back({{{-w, w}, {-w, w}, {-w, w}}, 0});
        while (!queue.empty()) {
            Box box = std::move(queue.front());
            queue.pop_front();
            // Exact pruning: a constraint with a nonpositive upper bound over
            // the whole box rules the box out.
            bool pruned = false;
            for (const auto& p : cs) {
                if (eval_interval(p, box.iv).hi.sign() <= 0) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            // Candidate: the dyadic center, validated by exact evaluation.
            std::vector<Rational> center{(box.iv[0].lo + box.iv[0].hi) * half,
                                         (box.iv[1].lo + box.iv[1].hi) * half,
                                         (box.iv[2].lo + box.iv[2].hi) * half};
            bool ok = true;
            for (const auto& p : cs)
                if (p.evaluate(center).sign() <= 0) {
                    ok = false;
                    break;
                }
            if (ok) return ParameterPoint(center[0], center[1], center[2]);
            if (box.depth >= kMaxDepth) {
                depth_exhausted = true;
                continue;
            }
            const std::size_t axis = static_cast<std::size_t>(box.depth % 3);
            const Rational mid = (box.iv[axis].lo + box.iv[axis].hi) * half;
            Box left = box, right = box;
            left.iv[axis].hi = mid;
            right.iv[axis].lo = mid;
            left.depth = right.depth = box.depth + 1;
            queue.push_back(std::move(left));
            queue.push_back(std::move(right));
        }
    }
    throw WitnessInfeasible(depth_exhausted);
}

namespace {

BranchKind expected_kind(KRegime regime) {
    return regime == KRegime::Middle ? BranchKind::NoRealBranch : BranchKind::TwoRealCrossings;
}

// Deterministic extra witnesses inside a chamber, for the local-constancy
// evidence. R is always positive, t matches the chamber sign.
ParameterPoint sample_in_chamber(const ChamberLabel& label, SplitMix64& rng) {
    auto positive = [&]() { return Rational(rng.next_in(1, 9), rng.next_in(1, 4)); };
    Rational k;
    switch (label.regime) {
        case KRegime::Below: k = -positive(); break;
        case KRegime::Middle: {
            int den = rng.next_in(2, 9);
            int num = rng.next_in(1, den - 1);
            k = Rational(num, den);
            break;
        }
        case KRegime::Above: k = Rational(1) + positive(); break;
    }
    Rational R = positive();
    Rational t = positive();
    if (!label.t_positive) t = -t;
    return ParameterPoint(k, R, t);
}

} // namespace

ChamberReport certify_chamber(const Chamber& chamber, const PipelineConfig& config) {
    ChamberReport report{chamber.label, chamber.paired_with, chamber.witness, {}, {}};
    const ParameterPoint& w = chamber.witness;

    auto run = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
        try {
            auto [ok, detail] = f();
            report.checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
        } catch (const BudgetExceeded& e) {
            report.checks.push_back({name, CheckStatus::BudgetExhausted, e.what()});
        } catch (const std::exception& e) {
            report.checks.push_back({name, CheckStatus::Fail, e.what()});
        }
    };

    run("affine_smooth", [&]() -> std::pair<bool, std::string> {
        const bool smooth = certify_affine_smooth(w, config.gb_budget);
        return {smooth, smooth ? "SingAffine = <1>" : "affine singular locus nonempty"};
    });
    run("projective_degree", [&]() -> std::pair<bool, std::string> {
        TrisectorSystem sys = build_trisector(w);
        const Polynomial W = Polynomial::variable(sys.proj_ctx, "W");
        Ideal I_proj =
            saturate_by_poly(Ideal(sys.proj_ctx, {sys.F1h, sys.F2h}), W, config.gb_budget);
        const long deg = projective_degree(I_proj, config.seed, config.gb_budget);
        return {deg == 8, "degree=" + std::to_string(deg)};
    });
    run("infinity_points", [&]() -> std::pair<bool, std::string> {
        InfinityReport inf = infinity_points(w, config.gb_budget);
        std::ostringstream os;
        os << "unique=[0:0:1:0]:" << (inf.unique_point ? "yes" : "no")
           << " degree=" << inf.infinity_degree;
        return {inf.unique_point && inf.infinity_degree == 8, os.str()};
    });
    run("tangent_form", [&]() -> std::pair<bool, std::string> {
        TangentForm form = tangent_form(w, config.series_order);
        const bool sign_matches = (chamber.label.regime == KRegime::Middle)
                                      ? form.delta.sign() < 0
                                      : form.delta.sign() > 0;
        return {sign_matches, "delta=" + form.delta.to_string()};
    });
    run("slope_reduction", [&]() -> std::pair<bool, std::string> {
        SlopeReduction sr = slope_reduction(w, config.series_order);
        return {true, "g=" + sr.g.to_string("u")};
    });
    run("branch_classification", [&]() -> std::pair<bool, std::string> {
        BranchClassification cls = classify_branches(w);
        report.classification = cls;
        const bool ok = cls.kind == expected_kind(chamber.label.regime);
        return {ok, branch_kind_name(cls.kind)};
    });
    run("local_constancy", [&]() -> std::pair<bool, std::string> {
        SplitMix64 rng(config.seed ^ (0xc4a5u + static_cast<std::uint64_t>(chamber.label.regime) * 67 +
                                      (chamber.label.t_positive ? 1 : 0)));
        for (int i = 0; i < config.extra_chamber_samples; ++i) {
            ParameterPoint extra = sample_in_chamber(chamber.label, rng);
            BranchClassification cls = classify_branches(extra);
            if (cls.kind != expected_kind(chamber.label.regime))
                return {false, "classification changed at " + extra.describe()};
        }
        return {true, std::to_string(config.extra_chamber_samples) + " extra witnesses"};
    });
    return report;
}

BoundarySampleReport certify_boundary(int k_wall, const Rational& R, const Rational& t) {
    BoundarySampleReport sample;
    sample.R = R;
    sample.t = t;
    try {
        BoundarySplit split = boundary_split(k_wall, R, t);
        sample.identity_ok = split.identity_ok;
        sample.nodes = node_points(k_wall, R, t);
        bool nodes_ok = sample.nodes.size() == 2;
        for (const auto& n : sample.nodes) nodes_ok = nodes_ok && n.transversal;
        sample.passed = sample.identity_ok && nodes_ok;
        sample.detail = "|det|=" + (Rational(16) * R * R).to_string();
    } catch (const std::exception& e) {
        sample.passed = false;
        sample.detail = e.what();
    }
    return sample;
}

CertificationReport assemble_transition_report(const PipelineConfig& config) {
    CertificationReport report;
    report.seed = config.seed;
    report.gb_budget = config.gb_budget.max_pair_reductions;
    report.series_order = config.series_order;
    report.walls = candidate_walls();

    if (config.run_parametric_elimination) {
        ParametricSection section;
        ParametricEliminationResult r = parametric_elimination(config.parametric_budget);
        section.status = r.completed ? CheckStatus::Pass : CheckStatus::BudgetExhausted;
        section.work = r.work;
        section.generator_count = r.generators.size();
        section.sampling_check_ok = r.sampling_check_ok;
        section.discriminant_divides_generator = r.discriminant_divides_generator;
        report.parametric = section;
    }

    for (const auto& chamber : enumerate_chambers())
        report.chambers.push_back(certify_chamber(chamber, config));

    SplitMix64 rng(config.seed ^ 0xb0a7u);
    for (int wall : {0, 1}) {
        BoundaryReport boundary;
        boundary.k_wall = wall;
        boundary.samples.push_back(certify_boundary(wall, Rational(1), Rational(1)));
        for (int i = 0; i < config.extra_boundary_samples; ++i) {
            Rational R(rng.next_in(1, 9), rng.next_in(1, 4));
            Rational t(0);
            while (t.is_zero()) t = Rational(rng.next_in(-6, 6), rng.next_in(1, 3));
            boundary.samples.push_back(certify_boundary(wall, R, t));
        }
        report.boundaries.push_back(std::move(boundary));
    }

    if (config.run_benchmarks) {
        BenchmarkSection bench;
        try {
            bench.generic = three_line_generic(ThreeLineConfig::generic_witness(), config.seed,
                                               config.gb_budget);
            bench.degenerate = three_line_degenerate(config.seed, config.gb_budget);
        } catch (const BudgetExceeded&) {
            bench.budget_exhausted = true;
        }
        report.benchmarks = std::move(bench);
    }

    report.status = overall_status(report);
    return report;
}

std::string overall_status(const CertificationReport& report) {
    bool any_budget = false;
    bool any_fail = false;

    if (!report.walls.affine_wall_free || !report.walls.delta_q_identity) any_fail = true;
    if (report.walls.values != std::vector<Rational>{Rational(0), Rational(1)}) any_fail = true;

    for (const auto& ch : report.chambers) {
        for (const auto& c : ch.checks) {
            if (c.status == CheckStatus::Fail) any_fail = true;
            if (c.status == CheckStatus::BudgetExhausted) any_budget = true;
        }
    }
    for (const auto& b : report.boundaries)
        if (!b.passed()) any_fail = true;
    if (report.benchmarks) {
        if (report.benchmarks->budget_exhausted) any_budget = true;
        if (report.benchmarks->generic && !report.benchmarks->generic->passed) any_fail = true;
        if (report.benchmarks->degenerate && !report.benchmarks->degenerate->passed)
            any_fail = true;
    }
    // Parametric elimination is optional: budget exhaustion there is accepted.
    if (any_fail) return "fail";
    if (any_budget) return "budget_exceeded";
    return "pass";
}

} // namespace trisector
