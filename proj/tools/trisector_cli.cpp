// Command-line front end for the trisector transition-set certifier.

#include "trisector/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace trisector;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInvalidInput = 3;

std::optional<long> env_long(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    try {
        return std::stol(v);
    } catch (...) {
        return std::nullopt;
    }
}

struct CommonOptions {
    std::uint64_t seed = 0;
    long gb_budget = 2'000'000;
    long series_order = 10;

    void apply_env() {
        if (auto s = env_long("TRISECTOR_SEED")) seed = static_cast<std::uint64_t>(*s);
        if (auto b = env_long("TRISECTOR_GB_BUDGET")) gb_budget = *b;
        if (auto o = env_long("TRISECTOR_SERIES_ORDER")) series_order = *o;
    }

    PipelineConfig config() const {
        PipelineConfig cfg;
        cfg.seed = seed;
        cfg.gb_budget = Budget{gb_budget};
        cfg.series_order = series_order;
        return cfg;
    }
};

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expected) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(Rational::from_string(piece));
    if (out.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " comma-separated rationals, got '" + text + "'");
    return out;
}

int status_to_exit(const std::string& status) {
    if (status == "pass") return kExitPass;
    if (status == "budget_exceeded") return kExitBudget;
    return kExitCheckFailed;
}

int exit_from_checks(const std::vector<CheckOutcome>& checks) {
    bool budget = false;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return kExitCheckFailed;
        if (c.status == CheckStatus::BudgetExhausted) budget = true;
    }
    return budget ? kExitBudget : kExitPass;
}

ChamberLabel label_for(const ParameterPoint& w) {
    ChamberLabel label{};
    if (w.k.sign() < 0) label.regime = KRegime::Below;
    else if (w.k < Rational(1)) label.regime = KRegime::Middle;
    else label.regime = KRegime::Above;
    label.t_positive = w.t.sign() > 0;
    return label;
}

int run_walls() {
    WallSpec walls = candidate_walls();
    std::cout << "candidate walls: Sigma = {";
    for (std::size_t i = 0; i < walls.values.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << "k=" << walls.values[i];
    }
    std::cout << "}\n";
    std::cout << "  affine contribution: none (sum-of-squares certificate "
              << (walls.affine_wall_free ? "ok" : "FAILED") << ")\n";
    std::cout << "  infinity contribution: roots of Delta_Q = 4ks^2(k-1) in k (identity "
              << (walls.delta_q_identity ? "ok" : "FAILED") << ")\n";
    return (walls.affine_wall_free && walls.delta_q_identity &&
            walls.values == std::vector<Rational>{Rational(0), Rational(1)})
               ? kExitPass
               : kExitCheckFailed;
}

int run_certify(const CommonOptions& common, const std::string& witness) {
    std::vector<Rational> krt = parse_rational_list(witness, 3);
    ParameterPoint w(krt[0], krt[1], krt[2]);
    if (!w.admissible()) {
        std::cerr << "witness lies on a wall (k = 0 or k = 1); use the boundary command\n";
        return kExitInvalidInput;
    }
    ChamberLabel label = label_for(w);
    Chamber chamber{label, w, ChamberLabel{label.regime, !label.t_positive}};
    ChamberReport report = certify_chamber(chamber, common.config());
    std::cout << "chamber " << report.label.text() << ", witness " << w.describe() << "\n";
    for (const auto& c : report.checks)
        std::cout << "  " << c.name << ": " << check_status_name(c.status)
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    if (report.classification)
        std::cout << "  classification: " << branch_kind_name(report.classification->kind)
                  << "\n";
    return exit_from_checks(report.checks);
}

int run_infinity(const CommonOptions& common, const std::string& witness) {
    std::vector<Rational> krt = parse_rational_list(witness, 3);
    ParameterPoint w(krt[0], krt[1], krt[2]);
    PipelineConfig cfg = common.config();
    InfinityReport inf = infinity_points(w, cfg.gb_budget);
    std::cout << "point at infinity: " << (inf.unique_point ? "[0:0:1:0] (unique)" : "NOT unique")
              << "\n"
              << "  X in radical: " << (inf.x_in_radical ? "yes" : "no") << "\n"
              << "  Y in radical: " << (inf.y_in_radical ? "yes" : "no") << "\n"
              << "  infinity-scheme degree (chart Z=1): " << inf.infinity_degree << "\n"
              << "  X^4 in ideal: " << (inf.x4_in_ideal ? "yes" : "no") << "\n";
    if (w.admissible()) {
        TangentForm form = tangent_form(w, cfg.series_order);
        std::cout << "tangent form E = (" << form.a << ")*X^2 + (" << form.b << ")*X*Y + ("
                  << form.c2 << ")*Y^2, Delta_Q = " << form.delta << "\n";
        BranchClassification cls = classify_branches(w);
        std::cout << "branch classification: " << branch_kind_name(cls.kind) << "\n";
        if (cls.min_g) std::cout << "  min g = " << *cls.min_g << "\n";
        if (cls.lambda_plus) std::cout << "  lambda+ = " << *cls.lambda_plus << "\n";
        if (cls.lambda_minus) std::cout << "  lambda- = " << *cls.lambda_minus << "\n";
    }
    return inf.unique_point && inf.infinity_degree == 8 ? kExitPass : kExitCheckFailed;
}

int run_boundary(const std::string& k, const std::string& R, const std::string& t) {
    const Rational kv = Rational::from_string(k);
    int wall;
    if (kv.is_zero()) wall = 0;
    else if (kv == Rational(1)) wall = 1;
    else {
        std::cerr << "boundary wall must be k=0 or k=1\n";
        return kExitInvalidInput;
    }
    BoundarySampleReport sample =
        certify_boundary(wall, Rational::from_string(R), Rational::from_string(t));
    std::cout << "boundary k=" << wall << " at (R=" << sample.R << ", t=" << sample.t << ")\n";
    std::cout << "  product identity: " << (sample.identity_ok ? "ok" : "FAILED") << "\n";
    for (const auto& n : sample.nodes)
        std::cout << "  node (" << n.point[0] << ", " << n.point[1] << ", " << n.point[2]
                  << "): residuals (" << n.residuals[0] << ", " << n.residuals[1]
                  << "), det = " << n.gradient_determinant << "\n";
    std::cout << "  " << (sample.passed ? "pass" : "fail")
              << (sample.detail.empty() ? "" : " (" + sample.detail + ")") << "\n";
    return sample.passed ? kExitPass : kExitCheckFailed;
}

int run_bench(const CommonOptions& common) {
    PipelineConfig cfg = common.config();
    int rc = kExitPass;
    try {
        ThreeLineGenericReport g =
            three_line_generic(ThreeLineConfig::generic_witness(), cfg.seed, cfg.gb_budget);
        std::cout << "three-line generic: " << (g.passed ? "pass" : "fail")
                  << " (degree=" << g.degree << ", affine_smooth=" << (g.affine_smooth ? "yes" : "no")
                  << ", delta_x=" << g.delta_x << ", delta_y=" << g.delta_y << ")\n";
        if (!g.passed) rc = kExitCheckFailed;
        ThreeLineDegenerateReport d = three_line_degenerate(cfg.seed, cfg.gb_budget);
        std::cout << "three-line degenerate: " << (d.passed ? "pass" : "fail") << "\n";
        for (const auto& line : d.lines)
            std::cout << "  ruling line (family " << line.family << ", lambda=" << line.lambda
                      << ", mu=" << line.mu << "): V(" << line.form1.to_string() << ", "
                      << line.form2.to_string() << ")\n";
        std::cout << "  residual degree=" << d.residual_degree
                  << ", smooth=" << (d.residual_smooth ? "yes" : "no")
                  << ", elimination=" << d.elimination_poly
                  << ", real roots=" << d.real_intersection_count << "\n";
        if (!d.passed) rc = kExitCheckFailed;
    } catch (const BudgetExceeded& e) {
        std::cout << "benchmarks: " << e.what() << "\n";
        rc = kExitBudget;
    }
    return rc;
}

int run_report(const CommonOptions& common, const std::string& out_path, bool all,
               bool benchmarks, bool parametric) {
    PipelineConfig cfg = common.config();
    cfg.run_benchmarks = benchmarks || all;
    cfg.run_parametric_elimination = parametric || all;
    CertificationReport report = assemble_transition_report(cfg);
    std::cout << report_to_text(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output path '" << out_path << "'\n";
            return kExitInvalidInput;
        }
        out << report_to_json(report).dump(2) << "\n";
        std::cout << "report written to " << out_path << "\n";
    }
    return status_to_exit(report.status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of the line-line-circle trisector transition set"};
    app.require_subcommand(1);

    CommonOptions common;
    common.apply_env();
    app.add_option("--seed", common.seed, "deterministic seed for random slices");
    app.add_option("--gb-budget", common.gb_budget, "Groebner pair-reduction budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--series-order", common.series_order, "series truncation order (>= 8)")
        ->check(CLI::Range(8l, 64l));

    app.add_subcommand("walls", "derive the candidate transition walls");

    auto* certify = app.add_subcommand("certify", "certify one chamber witness");
    std::string witness = "1/2,1,1";
    certify->add_option("--witness", witness, "witness point k,R,t (rationals)")->required();

    auto* infinity_cmd = app.add_subcommand("infinity", "analyze the point at infinity");
    std::string inf_witness = "1/2,1,1";
    infinity_cmd->add_option("--witness", inf_witness, "witness point k,R,t")->required();

    auto* boundary = app.add_subcommand("boundary", "certify a boundary wall");
    std::string bk = "1", bR = "1", bt = "1";
    boundary->add_option("--k", bk, "wall (0 or 1)")->required();
    boundary->add_option("--R", bR, "circle radius (positive rational)");
    boundary->add_option("--t", bt, "half-angle parameter (nonzero rational)");

    app.add_subcommand("bench", "run the three-line control benchmarks");

    auto* report = app.add_subcommand("report", "full certification report");
    std::string out_path;
    bool all = false, benchmarks = false, parametric = false;
    report->add_option("--out", out_path, "output path for the JSON report");
    report->add_flag("--all", all, "enable benchmarks and parametric elimination");
    report->add_flag("--benchmarks", benchmarks, "include the three-line benchmarks");
    report->add_flag("--parametric-elimination", parametric,
                     "attempt the optional symbolic elimination");

    // Let --seed/--gb-budget/--series-order appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (app.got_subcommand("walls")) return run_walls();
        if (app.got_subcommand("certify")) return run_certify(common, witness);
        if (app.got_subcommand("infinity")) return run_infinity(common, inf_witness);
        if (app.got_subcommand("boundary")) return run_boundary(bk, bR, bt);
        if (app.got_subcommand("bench")) return run_bench(common);
        if (app.got_subcommand("report"))
            return run_report(common, out_path, all, benchmarks, parametric);
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInvalidInput;
}
