#ifndef TRISECTOR_INFINITY_HPP
#define TRISECTOR_INFINITY_HPP

#include "trisector/family.hpp"
#include "trisector/univariate.hpp"

#include <optional>

namespace trisector {

/// Power-series data truncated at total degree `order` (exclusive).
struct TruncatedSeries {
    Polynomial poly; // in (X, Y)
    long order;
};

/// Quadratic direction form E = a X^2 + b XY + c2 Y^2 at the point at
/// infinity, with delta = b^2 - 4 a c2.
struct TangentForm {
    Rational a, b, c2;
    Rational delta;
};

/// g and the X^2-coefficient H(0, u) of the reduced slope-chart equation
/// G(X, u) = g(u)^2 + X^2 H(X, u).
struct SlopeReduction {
    UnivariatePoly g;
    UnivariatePoly h0;
    UnivariatePoly q;
};

enum class BranchKind { TwoRealCrossings, NoRealBranch, WallDegenerate };

struct BranchClassification {
    BranchKind kind;
    Rational delta;    // discriminant of the direction form
    Rational res_g_dg; // Res(g, g'): nonzero certifies simple roots
    Rational res_g_q;  // Res(g, q): nonzero certifies q != 0 at the roots
    std::optional<Rational> min_g; // positive vertex value when no real branch
    std::optional<Rational> u_plus_sq, u_minus_sq;
    std::optional<Rational> lambda_plus, lambda_minus;
};

std::string branch_kind_name(BranchKind kind);

/// Certified data for the intersection with the plane at infinity.
struct InfinityReport {
    bool unique_point;   // the support is exactly [0:0:1:0]
    bool x_in_radical;
    bool y_in_radical;
    long infinity_degree; // standard-monomial count in the chart Z = 1
    bool x4_in_ideal;
};

/// Unique local solution W = omega(X, Y) of F1h(X, Y, 1, W) = 0 with
/// omega(0,0) = 0, computed to the requested truncation order (>= 4).
TruncatedSeries solve_W_series(const ParameterPoint& params, long order);

/// Substitutes omega into F2h and certifies that the lowest homogeneous part
/// equals E(X, Y)^2 for the closed-form direction form; also cross-checks
/// delta against 4 k s^2 (k - 1). Mismatch throws.
TangentForm tangent_form(const ParameterPoint& params, long series_order = 10);

/// Slope-chart reduction Y = uX: returns the closed forms of g and H(0, u),
/// each verified against the direct series expansion at two truncation
/// orders. Mismatch throws.
SlopeReduction slope_reduction(const ParameterPoint& params, long series_order = 10);

/// Chamber-local branch pattern at infinity, fully certified by resultants
/// and rational lower bounds; walls k in {0, 1} report WallDegenerate.
BranchClassification classify_branches(const ParameterPoint& params);

/// Certifies that the projective closure meets W = 0 exactly in [0:0:1:0]
/// and reports the degree of the infinity scheme in the chart Z = 1.
InfinityReport infinity_points(const ParameterPoint& params, const Budget& budget = {});

} // namespace trisector

#endif
