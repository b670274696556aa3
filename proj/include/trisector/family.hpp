#ifndef TRISECTOR_FAMILY_HPP
#define TRISECTOR_FAMILY_HPP

#include "trisector/groebner.hpp"
#include "trisector/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace trisector {

/// A point of the canonical family: circle-plane height k, circle radius R,
/// half-angle parameter t = tan(alpha/2), and the second-line plane height h
/// (h = 1 for the canonical normalization). c and s are the rational cosine
/// and sine coming from the half-angle substitution, so c^2 + s^2 = 1 holds
/// identically.
struct ParameterPoint {
    Rational k, R, t;
    Rational h;
    Rational c, s;

    ParameterPoint(Rational k_, Rational R_, Rational t_, Rational h_ = Rational(1));

    /// Strictly inside the open parameter region: k off both walls.
    bool admissible() const { return !k.is_zero() && k != h; }

    std::string describe() const;
};

/// The two instantiated bisectors and their homogenizations. F1 is the
/// quadratic line-line bisector, F2 the quartic line-circle bisector.
struct TrisectorSystem {
    ContextPtr affine_ctx; // (x, y, z)
    ContextPtr proj_ctx;   // (X, Y, Z, W)
    Polynomial F1, F2;
    Polynomial F1h, F2h;
};

/// Lifted polynomial model in (x, y, z, u, v): the circle constraint is
/// replaced by an incidence system with the nearest circle point (u, v).
struct LiftedSystem {
    ContextPtr ctx;
    Polynomial F1, F2, F3, F4;
};

/// Exact witness that a boundary intersection point is an ordinary node:
/// both defining polynomials vanish and the three surface gradients span.
struct NodeCertificate {
    std::array<Rational, 3> point;
    std::array<Rational, 2> residuals;
    Rational gradient_determinant;
    bool transversal;
};

struct BoundarySplit {
    Polynomial factor_a, factor_b; // in (x, y, z)
    bool identity_ok;
};

struct ParametricEliminationResult {
    bool completed = false; // false: budget exhausted before the elimination finished
    long work = 0;
    std::vector<Polynomial> generators; // in (h, k, R, c, s) when completed
    bool sampling_check_ok = false;
    bool discriminant_divides_generator = false;
};

TrisectorSystem build_trisector(const ParameterPoint& params);

LiftedSystem build_lifted_system(const ParameterPoint& params);

/// Projective-route smoothness certificate: saturate the homogeneous pair by
/// W, adjoin the 2x2 Jacobian minors, saturate by W again, and test for the
/// unit ideal. True means the affine trisector is smooth.
bool certify_affine_smooth(const ParameterPoint& params, const Budget& budget = {});

/// Closed form h*k*R^2*(h-k)*[h^2 R^2 + s^2 (hk - k^2 - R^2)^2].
Rational affine_discriminant_eval(const ParameterPoint& params);

/// The non-excluded factor S = R^2 + s^2 (k - k^2 - R^2)^2 at h = 1;
/// S >= R^2 > 0 on the whole admissible region.
Rational smoothness_factor_eval(const ParameterPoint& params);

/// Best-effort symbolic reproduction of the parametric elimination over
/// (h, k, R, c, s, x, y, z, u, v). Budget exhaustion is an accepted outcome.
ParametricEliminationResult parametric_elimination(const Budget& budget = {});

/// Boundary factor pair at a wall (canonical family, h = 1), with the exact
/// product identity re-verified by expansion. k_wall must be 0 or 1.
BoundarySplit boundary_split(int k_wall, const Rational& R, const Rational& t);

/// The two explicit intersection points at a wall with exact residual and
/// transversality certificates; |det| must equal 16 R^2.
std::vector<NodeCertificate> node_points(int k_wall, const Rational& R, const Rational& t);

} // namespace trisector

#endif
