#ifndef TRISECTOR_POLYNOMIAL_HPP
#define TRISECTOR_POLYNOMIAL_HPP

#include "trisector/monomial.hpp"
#include "trisector/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trisector {

/// Sparse multivariate polynomial over Q. Terms are kept in strictly
/// decreasing monomial order with no zero coefficients, so equality is
/// plain term-by-term comparison.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    static Polynomial zero(ContextPtr ctx);
    static Polynomial constant(ContextPtr ctx, Rational c);
    static Polynomial variable(ContextPtr ctx, std::string_view name);
    static Polynomial monomial_term(ContextPtr ctx, Monomial m, Rational c);
    /// Sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].first.is_one(); }
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const; // -1 for the zero polynomial

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    /// Coefficient of the given monomial (zero if absent).
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& c);
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }
    friend Polynomial operator+(const Polynomial& a, const Rational& c);
    friend Polynomial operator-(const Polynomial& a, const Rational& c);
    friend Polynomial operator+(const Rational& c, const Polynomial& a) { return a + c; }
    friend Polynomial operator-(const Rational& c, const Polynomial& a) { return (-a) + c; }
    Polynomial pow(unsigned e) const;

    /// *this += c * shift * g. The workhorse of polynomial reduction.
    void add_scaled(const Polynomial& g, const Rational& c, const Monomial& shift);

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Substitutes bound variables by polynomials living in `result_ctx`.
    /// When `result_ctx` is null it is derived as the unbound remainder of
    /// the current context. Unbound variables map by name.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings,
                          ContextPtr result_ctx = nullptr) const;
    Polynomial substitute_values(const std::map<std::string, Rational>& bindings,
                                 ContextPtr result_ctx = nullptr) const;

    /// Full evaluation; point[i] is the value of context variable i.
    Rational evaluate(const std::vector<Rational>& point) const;

    Polynomial homogenize(std::string_view new_var) const;
    Polynomial dehomogenize(std::string_view var, const Rational& value) const;

    Polynomial partial_derivative(std::string_view var) const;

    /// True when the polynomial actually uses variable i.
    std::vector<bool> used_variables() const;

    /// Re-expresses the polynomial in another context, matching variables by
    /// name; every used variable must exist in the target.
    Polynomial in_context(ContextPtr target) const;
    /// Positional re-context (same arity); exponents are copied verbatim.
    Polynomial map_positional(ContextPtr target) const;

    /// True iff every term has the same total degree (zero counts as
    /// homogeneous).
    bool is_homogeneous() const;
    /// Sum of the terms of exact total degree d.
    Polynomial homogeneous_part(long d) const;
    /// Drops every term of total degree >= bound.
    Polynomial truncated(long bound) const;

    Polynomial monic() const;

    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::vector<Term> terms_;

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    void normalize(); // sort desc, merge, drop zeros
    void require_same_context(const Polynomial& o) const;
};

/// Parses the canonical text form, e.g. "2*X*Y + 5*Z*W - 1/2*W^2".
Polynomial parse_polynomial(ContextPtr ctx, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace trisector

#endif
