#include "trisector/report.hpp"

#include <sstream>
#include <stdexcept>

namespace trisector {

namespace {

using jsn = nlohmann::ordered_json;

jsn rat(const Rational& r) { return r.to_string(); }
Rational unrat(const jsn& j) { return Rational::from_string(j.get<std::string>()); }

jsn opt_rat(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return rat(*r);
}
std::optional<Rational> un_opt_rat(const jsn& j) {
    if (j.is_null()) return std::nullopt;
    return unrat(j);
}

CheckStatus parse_status(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "budget_exceeded") return CheckStatus::BudgetExhausted;
    throw std::invalid_argument("report: unknown check status '" + s + "'");
}

ChamberLabel parse_label(const std::string& s) {
    ChamberLabel label{};
    if (s.rfind("k<0", 0) == 0) label.regime = KRegime::Below;
    else if (s.rfind("0<k<1", 0) == 0) label.regime = KRegime::Middle;
    else if (s.rfind("k>1", 0) == 0) label.regime = KRegime::Above;
    else throw std::invalid_argument("report: unknown chamber label '" + s + "'");
    label.t_positive = s.find("t>0") != std::string::npos;
    return label;
}

BranchKind parse_kind(const std::string& s) {
    if (s == "two_real_crossings") return BranchKind::TwoRealCrossings;
    if (s == "no_real_branch") return BranchKind::NoRealBranch;
    if (s == "wall_degenerate") return BranchKind::WallDegenerate;
    throw std::invalid_argument("report: unknown branch kind '" + s + "'");
}

jsn witness_to_json(const ParameterPoint& w) {
    jsn j;
    j["k"] = rat(w.k);
    j["R"] = rat(w.R);
    j["t"] = rat(w.t);
    j["h"] = rat(w.h);
    return j;
}

ParameterPoint witness_from_json(const jsn& j) {
    return ParameterPoint(unrat(j.at("k")), unrat(j.at("R")), unrat(j.at("t")),
                          unrat(j.at("h")));
}

jsn classification_to_json(const BranchClassification& c) {
    jsn j;
    j["kind"] = branch_kind_name(c.kind);
    j["delta"] = rat(c.delta);
    j["res_g_dg"] = rat(c.res_g_dg);
    j["res_g_q"] = rat(c.res_g_q);
    j["min_g"] = opt_rat(c.min_g);
    j["u_plus_sq"] = opt_rat(c.u_plus_sq);
    j["u_minus_sq"] = opt_rat(c.u_minus_sq);
    j["lambda_plus"] = opt_rat(c.lambda_plus);
    j["lambda_minus"] = opt_rat(c.lambda_minus);
    return j;
}

BranchClassification classification_from_json(const jsn& j) {
    BranchClassification c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    c.delta = unrat(j.at("delta"));
    c.res_g_dg = unrat(j.at("res_g_dg"));
    c.res_g_q = unrat(j.at("res_g_q"));
    c.min_g = un_opt_rat(j.at("min_g"));
    c.u_plus_sq = un_opt_rat(j.at("u_plus_sq"));
    c.u_minus_sq = un_opt_rat(j.at("u_minus_sq"));
    c.lambda_plus = un_opt_rat(j.at("lambda_plus"));
    c.lambda_minus = un_opt_rat(j.at("lambda_minus"));
    return c;
}

jsn node_to_json(const NodeCertificate& n) {
    jsn j;
    j["point"] = jsn::array({rat(n.point[0]), rat(n.point[1]), rat(n.point[2])});
    j["residuals"] = jsn::array({rat(n.residuals[0]), rat(n.residuals[1])});
    j["gradient_determinant"] = rat(n.gradient_determinant);
    j["transversal"] = n.transversal;
    return j;
}

NodeCertificate node_from_json(const jsn& j) {
    NodeCertificate n;
    for (int i = 0; i < 3; ++i) n.point[static_cast<std::size_t>(i)] = unrat(j.at("point").at(static_cast<std::size_t>(i)));
    for (int i = 0; i < 2; ++i) n.residuals[static_cast<std::size_t>(i)] = unrat(j.at("residuals").at(static_cast<std::size_t>(i)));
    n.gradient_determinant = unrat(j.at("gradient_determinant"));
    n.transversal = j.at("transversal").get<bool>();
    return n;
}

ContextPtr report_proj_context() {
    static ContextPtr ctx = make_context({"X", "Y", "Z", "W"});
    return ctx;
}

jsn ruling_to_json(const RulingLine& line) {
    jsn j;
    j["family"] = std::string(1, line.family);
    j["lambda"] = rat(line.lambda);
    j["mu"] = rat(line.mu);
    j["form1"] = line.form1.to_string();
    j["form2"] = line.form2.to_string();
    return j;
}

RulingLine ruling_from_json(const jsn& j) {
    RulingLine line;
    line.family = j.at("family").get<std::string>().at(0);
    line.lambda = unrat(j.at("lambda"));
    line.mu = unrat(j.at("mu"));
    line.form1 = parse_polynomial(report_proj_context(), j.at("form1").get<std::string>());
    line.form2 = parse_polynomial(report_proj_context(), j.at("form2").get<std::string>());
    return line;
}

} // namespace

nlohmann::ordered_json report_to_json(const CertificationReport& report) {
    jsn j;

    jsn walls;
    jsn values = jsn::array();
    for (const auto& v : report.walls.values) values.push_back("k=" + v.to_string());
    walls["values"] = values;
    jsn affine;
    affine["wall_free"] = report.walls.affine_wall_free;
    if (report.parametric) {
        jsn pe;
        pe["status"] = check_status_name(report.parametric->status);
        pe["work"] = report.parametric->work;
        pe["generator_count"] = report.parametric->generator_count;
        pe["sampling_check_ok"] = report.parametric->sampling_check_ok;
        pe["discriminant_divides_generator"] =
            report.parametric->discriminant_divides_generator;
        affine["parametric_elimination"] = pe;
    } else {
        affine["parametric_elimination"] = nullptr;
    }
    walls["affine"] = affine;
    jsn inf;
    inf["delta_q_identity"] = report.walls.delta_q_identity;
    jsn roots = jsn::array();
    for (const auto& r : report.walls.infinity_roots) roots.push_back(rat(r));
    inf["roots"] = roots;
    walls["infinity"] = inf;
    j["walls"] = walls;

    jsn chambers = jsn::array();
    for (const auto& ch : report.chambers) {
        jsn c;
        c["label"] = ch.label.text();
        c["paired_with"] = ch.paired_with.text();
        c["witness"] = witness_to_json(ch.witness);
        jsn checks = jsn::array();
        for (const auto& chk : ch.checks) {
            jsn e;
            e["name"] = chk.name;
            e["status"] = check_status_name(chk.status);
            e["detail"] = chk.detail;
            checks.push_back(e);
        }
        c["checks"] = checks;
        c["classification"] =
            ch.classification ? classification_to_json(*ch.classification) : jsn(nullptr);
        chambers.push_back(c);
    }
    j["chambers"] = chambers;

    jsn boundaries = jsn::array();
    for (const auto& b : report.boundaries) {
        jsn e;
        e["k_wall"] = b.k_wall;
        jsn samples = jsn::array();
        for (const auto& s : b.samples) {
            jsn sj;
            sj["R"] = rat(s.R);
            sj["t"] = rat(s.t);
            sj["identity_ok"] = s.identity_ok;
            jsn nodes = jsn::array();
            for (const auto& n : s.nodes) nodes.push_back(node_to_json(n));
            sj["nodes"] = nodes;
            sj["passed"] = s.passed;
            sj["detail"] = s.detail;
            samples.push_back(sj);
        }
        e["samples"] = samples;
        boundaries.push_back(e);
    }
    j["boundaries"] = boundaries;

    if (report.benchmarks) {
        jsn b;
        if (report.benchmarks->generic) {
            const auto& g = *report.benchmarks->generic;
            jsn gj;
            gj["degree"] = g.degree;
            gj["affine_smooth"] = g.affine_smooth;
            gj["delta_x"] = rat(g.delta_x);
            gj["delta_y"] = rat(g.delta_y);
            gj["passed"] = g.passed;
            b["generic"] = gj;
        } else {
            b["generic"] = nullptr;
        }
        if (report.benchmarks->degenerate) {
            const auto& d = *report.benchmarks->degenerate;
            jsn dj;
            jsn lines = jsn::array();
            for (const auto& line : d.lines) lines.push_back(ruling_to_json(line));
            dj["lines"] = lines;
            dj["residual_degree"] = d.residual_degree;
            dj["residual_smooth"] = d.residual_smooth;
            dj["intersection_zero_dimensional"] = d.intersection_zero_dimensional;
            dj["elimination_poly"] = d.elimination_poly;
            dj["elim_proportional_to_expected"] = d.elim_proportional_to_expected;
            dj["real_intersection_count"] = d.real_intersection_count;
            dj["no_real_points_at_infinity"] = d.no_real_points_at_infinity;
            dj["passed"] = d.passed;
            b["degenerate"] = dj;
        } else {
            b["degenerate"] = nullptr;
        }
        b["budget_exhausted"] = report.benchmarks->budget_exhausted;
        j["benchmarks"] = b;
    } else {
        j["benchmarks"] = nullptr;
    }

    j["seed"] = report.seed;
    jsn budgets;
    budgets["gb_max_pair_reductions"] = report.gb_budget;
    budgets["series_order"] = report.series_order;
    j["budgets"] = budgets;
    j["status"] = report.status;
    return j;
}

CertificationReport report_from_json(const nlohmann::ordered_json& j) {
    CertificationReport report;

    const jsn& walls = j.at("walls");
    for (const auto& v : walls.at("values")) {
        std::string s = v.get<std::string>();
        if (s.rfind("k=", 0) != 0) throw std::invalid_argument("report: bad wall value");
        report.walls.values.push_back(Rational::from_string(s.substr(2)));
    }
    report.walls.affine_wall_free = walls.at("affine").at("wall_free").get<bool>();
    const jsn& pe = walls.at("affine").at("parametric_elimination");
    if (!pe.is_null()) {
        ParametricSection section;
        section.status = parse_status(pe.at("status").get<std::string>());
        section.work = pe.at("work").get<long>();
        section.generator_count = pe.at("generator_count").get<std::size_t>();
        section.sampling_check_ok = pe.at("sampling_check_ok").get<bool>();
        section.discriminant_divides_generator =
            pe.at("discriminant_divides_generator").get<bool>();
        report.parametric = section;
    }
    report.walls.delta_q_identity = walls.at("infinity").at("delta_q_identity").get<bool>();
    for (const auto& r : walls.at("infinity").at("roots"))
        report.walls.infinity_roots.push_back(unrat(r));

    for (const auto& c : j.at("chambers")) {
        ChamberReport ch{parse_label(c.at("label").get<std::string>()),
                         parse_label(c.at("paired_with").get<std::string>()),
                         witness_from_json(c.at("witness")),
                         {},
                         {}};
        for (const auto& chk : c.at("checks"))
            ch.checks.push_back({chk.at("name").get<std::string>(),
                                 parse_status(chk.at("status").get<std::string>()),
                                 chk.at("detail").get<std::string>()});
        if (!c.at("classification").is_null())
            ch.classification = classification_from_json(c.at("classification"));
        report.chambers.push_back(std::move(ch));
    }

    for (const auto& b : j.at("boundaries")) {
        BoundaryReport br;
        br.k_wall = b.at("k_wall").get<int>();
        for (const auto& s : b.at("samples")) {
            BoundarySampleReport sample;
            sample.R = unrat(s.at("R"));
            sample.t = unrat(s.at("t"));
            sample.identity_ok = s.at("identity_ok").get<bool>();
            for (const auto& n : s.at("nodes")) sample.nodes.push_back(node_from_json(n));
            sample.passed = s.at("passed").get<bool>();
            sample.detail = s.at("detail").get<std::string>();
            br.samples.push_back(std::move(sample));
        }
        report.boundaries.push_back(std::move(br));
    }

    if (!j.at("benchmarks").is_null()) {
        const jsn& b = j.at("benchmarks");
        BenchmarkSection bench;
        if (!b.at("generic").is_null()) {
            const jsn& g = b.at("generic");
            ThreeLineGenericReport gr;
            gr.degree = g.at("degree").get<long>();
            gr.affine_smooth = g.at("affine_smooth").get<bool>();
            gr.delta_x = unrat(g.at("delta_x"));
            gr.delta_y = unrat(g.at("delta_y"));
            gr.passed = g.at("passed").get<bool>();
            bench.generic = gr;
        }
        if (!b.at("degenerate").is_null()) {
            const jsn& d = b.at("degenerate");
            ThreeLineDegenerateReport dr;
            for (const auto& line : d.at("lines")) dr.lines.push_back(ruling_from_json(line));
            dr.residual_degree = d.at("residual_degree").get<long>();
            dr.residual_smooth = d.at("residual_smooth").get<bool>();
            dr.intersection_zero_dimensional =
                d.at("intersection_zero_dimensional").get<bool>();
            dr.elimination_poly = d.at("elimination_poly").get<std::string>();
            dr.elim_proportional_to_expected =
                d.at("elim_proportional_to_expected").get<bool>();
            dr.real_intersection_count = d.at("real_intersection_count").get<long>();
            dr.no_real_points_at_infinity = d.at("no_real_points_at_infinity").get<bool>();
            dr.passed = d.at("passed").get<bool>();
            bench.degenerate = dr;
        }
        bench.budget_exhausted = b.at("budget_exhausted").get<bool>();
        report.benchmarks = std::move(bench);
    }

    report.seed = j.at("seed").get<std::uint64_t>();
    report.gb_budget = j.at("budgets").at("gb_max_pair_reductions").get<long>();
    report.series_order = j.at("budgets").at("series_order").get<long>();
    report.status = j.at("status").get<std::string>();
    return report;
}

std::string report_to_text(const CertificationReport& report) {
    std::ostringstream os;
    os << "certified transition set: Sigma = {";
    for (std::size_t i = 0; i < report.walls.values.size(); ++i) {
        if (i) os << ", ";
        os << "k=" << report.walls.values[i];
    }
    os << "}\n";
    os << "affine wall: none (S >= R^2 > 0 certificate "
       << (report.walls.affine_wall_free ? "ok" : "FAILED") << ")\n";
    os << "infinity discriminant identity: "
       << (report.walls.delta_q_identity ? "ok" : "FAILED") << "\n";
    if (report.parametric) {
        os << "parametric elimination: " << check_status_name(report.parametric->status)
           << "\n";
    }
    for (const auto& ch : report.chambers) {
        os << "chamber " << ch.label.text() << " (witness " << ch.witness.describe() << "): "
           << (ch.passed() ? "pass" : (ch.budget_exhausted() ? "budget_exceeded" : "fail"))
           << "\n";
        for (const auto& c : ch.checks)
            os << "  " << c.name << ": " << check_status_name(c.status)
               << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
    for (const auto& b : report.boundaries) {
        os << "boundary k=" << b.k_wall << ": " << (b.passed() ? "pass" : "fail") << "\n";
        for (const auto& s : b.samples) {
            os << "  (R=" << s.R << ", t=" << s.t << "): "
               << (s.passed ? "pass" : "fail");
            if (!s.nodes.empty()) {
                os << ", nodes:";
                for (const auto& n : s.nodes)
                    os << " (" << n.point[0] << "," << n.point[1] << "," << n.point[2] << ")";
                os << ", det=" << s.nodes.front().gradient_determinant;
            }
            os << "\n";
        }
    }
    if (report.benchmarks) {
        if (report.benchmarks->generic)
            os << "benchmark generic: " << (report.benchmarks->generic->passed ? "pass" : "fail")
               << " (degree=" << report.benchmarks->generic->degree
               << ", delta_x=" << report.benchmarks->generic->delta_x
               << ", delta_y=" << report.benchmarks->generic->delta_y << ")\n";
        if (report.benchmarks->degenerate)
            os << "benchmark degenerate: "
               << (report.benchmarks->degenerate->passed ? "pass" : "fail")
               << " (residual degree=" << report.benchmarks->degenerate->residual_degree
               << ", elim=" << report.benchmarks->degenerate->elimination_poly << ")\n";
        if (report.benchmarks->budget_exhausted) os << "benchmarks: budget_exceeded\n";
    }
    os << "status: " << report.status << "\n";
    return os.str();
}

} // namespace trisector
