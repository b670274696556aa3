#ifndef TRISECTOR_BENCHMARK_HPP
#define TRISECTOR_BENCHMARK_HPP

#include "trisector/groebner.hpp"
#include "trisector/univariate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trisector {

/// Three-skew-line configuration: L1: y = ax, z = 1; L2: y = -ax, z = -1;
/// L3 through (u, v, 0) with direction (alpha, beta, 1).
struct ThreeLineConfig {
    Rational a, u, v, alpha, beta;

    static ThreeLineConfig generic_witness(); // a=2, u=1, v=2, alpha=1, beta=1
};

/// A line on one ruling of the pencil quadric, cut out by two linear forms.
struct RulingLine {
    char family; // 'A' or 'B'
    Rational lambda, mu;
    Polynomial form1, form2; // in (X, Y, Z, W), monic
};

struct ThreeLineGenericReport {
    long degree = 0;          // expected 4
    bool affine_smooth = false;
    Rational delta_x, delta_y; // asymptotic discriminants, both positive
    bool passed = false;
};

struct ThreeLineDegenerateReport {
    std::vector<RulingLine> lines;  // rational ruling lines on the trisector
    long residual_degree = 0;       // expected 3
    bool residual_smooth = false;   // projective singular locus empty
    bool intersection_zero_dimensional = false;
    std::string elimination_poly;   // univariate in Z, canonical text
    bool elim_proportional_to_expected = false; // ~ Z^2 + 125
    long real_intersection_count = -1;          // Sturm count, expected 0
    bool no_real_points_at_infinity = false;
    bool passed = false;
};

/// Homogenized bisectors of the generic configuration.
Polynomial three_line_f12h(const ThreeLineConfig& cfg, const ContextPtr& ctx);
Polynomial three_line_f13h(const ThreeLineConfig& cfg, const ContextPtr& ctx);

/// Generic witness: degree 4, empty affine singular locus, positive
/// asymptotic discriminants.
ThreeLineGenericReport three_line_generic(const ThreeLineConfig& cfg, std::uint64_t seed,
                                          const Budget& budget = {});

/// All rational lines of the two rulings of 2XY + 5ZW = 0 that lie on the
/// degenerate partner surface; the witness yields V(X - 5W, Z + 2Y).
std::vector<RulingLine> find_ruling_line(const Budget& budget = {});

/// Degenerate witness: cubic + line splitting with no real intersection.
ThreeLineDegenerateReport three_line_degenerate(std::uint64_t seed, const Budget& budget = {});

} // namespace trisector

#endif
