#ifndef TRISECTOR_UNIVARIATE_HPP
#define TRISECTOR_UNIVARIATE_HPP

#include "trisector/polynomial.hpp"
#include "trisector/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace trisector {

/// Dense univariate polynomial over Q, coefficients stored low degree first,
/// leading coefficient nonzero unless the polynomial is zero.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);
    static UnivariatePoly constant(Rational c);
    static UnivariatePoly x();

    /// Extracts a univariate from a multivariate polynomial whose support
    /// lies in the single variable `var`.
    static UnivariatePoly from_polynomial(const Polynomial& p, std::string_view var);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const Rational& leading_coefficient() const;

    Rational evaluate(const Rational& x) const;
    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;

    UnivariatePoly operator-() const;
    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const Rational& c);
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UnivariatePoly& a, const UnivariatePoly& b) { return !(a == b); }

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& divisor) const;
    UnivariatePoly mod(const UnivariatePoly& divisor) const { return divmod(divisor).second; }

    /// Exact division by a rational root factor (x - r); throws if r is not a root.
    UnivariatePoly deflate(const Rational& root) const;

    std::string to_string(std::string_view var = "x") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b); // monic gcd
UnivariatePoly squarefree_part(const UnivariatePoly& f);

/// Extended Euclid: returns (g, s, t) monic g = gcd with s*a + t*b = g.
struct ExtendedGcd {
    UnivariatePoly g, s, t;
};
ExtendedGcd extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Inverse of a modulo m (gcd must be constant); throws otherwise.
UnivariatePoly inverse_mod(const UnivariatePoly& a, const UnivariatePoly& m);

/// Determinant of the Sylvester matrix. Zero iff f and g share a root over
/// the algebraic closure (for nonconstant inputs). Throws when both are zero.
Rational sylvester_resultant(const UnivariatePoly& f, const UnivariatePoly& g);

struct RootInterval {
    std::optional<Rational> lo, hi; // absent endpoint = unbounded side
    static RootInterval whole_line() { return {}; }
    static RootInterval closed(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
};

/// Number of distinct real roots in the interval (closed endpoints when
/// present), by Sturm sign-variation counts. Throws on the zero polynomial.
long sturm_real_root_count(const UnivariatePoly& f, const RootInterval& interval = {});

/// All rational roots, ascending, each listed once.
std::vector<Rational> rational_roots(const UnivariatePoly& f);

} // namespace trisector

#endif
