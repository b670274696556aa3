#ifndef TRISECTOR_PIPELINE_HPP
#define TRISECTOR_PIPELINE_HPP

#include "trisector/benchmark.hpp"
#include "trisector/infinity.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisector {

enum class CheckStatus { Pass, Fail, BudgetExhausted };
std::string check_status_name(CheckStatus s);

struct CheckOutcome {
    std::string name;
    CheckStatus status;
    std::string detail;
};

enum class KRegime { Below, Middle, Above }; // k<0, 0<k<1, k>1

struct ChamberLabel {
    KRegime regime;
    bool t_positive;
    std::string text() const;
    bool operator==(const ChamberLabel& o) const {
        return regime == o.regime && t_positive == o.t_positive;
    }
};

struct Chamber {
    ChamberLabel label;
    ParameterPoint witness;
    ChamberLabel paired_with; // the t-mirrored chamber
};

/// The two candidate walls, with their provenance: the affine side is empty
/// (sum-of-squares positivity of the non-excluded factor), the infinity side
/// contributes the roots of the direction discriminant in k.
struct WallSpec {
    std::vector<Rational> values;         // {0, 1}
    bool affine_wall_free = false;        // S = R^2 + (s(k-k^2-R^2))^2 verified
    bool delta_q_identity = false;        // disc(E) == 4ks^2(k-1) mod c^2+s^2-1
    std::vector<Rational> infinity_roots; // roots of Delta_Q in k
};

struct PipelineConfig {
    std::uint64_t seed = 0;
    long series_order = 10;
    Budget gb_budget{};
    int extra_chamber_samples = 5;  // local-constancy evidence per chamber
    int extra_boundary_samples = 3; // random (R, t) per wall besides (1, 1)
    bool run_benchmarks = false;
    bool run_parametric_elimination = false;
    Budget parametric_budget{200'000};
};

struct ChamberReport {
    ChamberLabel label;
    ChamberLabel paired_with;
    ParameterPoint witness;
    std::vector<CheckOutcome> checks;
    std::optional<BranchClassification> classification;

    bool passed() const;
    bool budget_exhausted() const;
};

struct BoundarySampleReport {
    Rational R, t;
    bool identity_ok = false;
    std::vector<NodeCertificate> nodes;
    bool passed = false;
    std::string detail;
};

struct BoundaryReport {
    int k_wall;
    std::vector<BoundarySampleReport> samples;
    bool passed() const;
};

struct BenchmarkSection {
    std::optional<ThreeLineGenericReport> generic;
    std::optional<ThreeLineDegenerateReport> degenerate;
    bool budget_exhausted = false;
};

struct ParametricSection {
    CheckStatus status = CheckStatus::BudgetExhausted;
    long work = 0;
    std::size_t generator_count = 0;
    bool sampling_check_ok = false;
    bool discriminant_divides_generator = false;
};

/// Machine-readable record of the whole certification run.
struct CertificationReport {
    WallSpec walls;
    std::optional<ParametricSection> parametric; // reported under the affine wall
    std::vector<ChamberReport> chambers;
    std::vector<BoundaryReport> boundaries;
    std::optional<BenchmarkSection> benchmarks;
    std::uint64_t seed = 0;
    long gb_budget = 0;
    long series_order = 0;
    std::string status; // "pass" | "fail" | "budget_exceeded"
};

class WitnessInfeasible : public std::runtime_error {
public:
    explicit WitnessInfeasible(bool depth_exhausted)
        : std::runtime_error(depth_exhausted
                                 ? "witness search: depth exhausted before a point was found"
                                 : "witness search: region certified empty within the search box"),
          depth_exhausted_(depth_exhausted) {}
    bool depth_exhausted() const { return depth_exhausted_; }

private:
    bool depth_exhausted_;
};

/// Sigma = {k=0} U {k=1}: the affine side contributes no wall and the
/// infinity side contributes exactly the roots of the direction
/// discriminant. Both facts are re-derived, not hard-coded.
WallSpec candidate_walls();

/// The six chambers cut out by the walls and the sign of t, with the
/// canonical witnesses, mirror-paired.
std::vector<Chamber> enumerate_chambers();

/// A rational point satisfying every strict inequality `p > 0` (polynomials
/// in (k, R, t)), found by deterministic dyadic bisection with exact interval
/// pruning over an expanding box. Prefers small denominators.
ParameterPoint find_witness(const std::vector<Polynomial>& strict_positive);

/// Context (k, R, t) used by find_witness constraints.
ContextPtr witness_constraint_context();

ChamberReport certify_chamber(const Chamber& chamber, const PipelineConfig& config);

BoundarySampleReport certify_boundary(int k_wall, const Rational& R, const Rational& t);

CertificationReport assemble_transition_report(const PipelineConfig& config);

/// Overall status from the individual checks; parametric-elimination budget
/// exhaustion is an accepted outcome and never degrades the status.
std::string overall_status(const CertificationReport& report);

} // namespace trisector

#endif
