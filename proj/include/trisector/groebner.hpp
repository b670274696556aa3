#ifndef TRISECTOR_GROEBNER_HPP
#define TRISECTOR_GROEBNER_HPP

#include "trisector/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisector {

/// Polynomial ideal: a context plus generators (zero generators dropped).
struct Ideal {
    ContextPtr ctx;
    std::vector<Polynomial> generators;

    Ideal(ContextPtr c, std::vector<Polynomial> gens);
    static Ideal of(ContextPtr c, std::initializer_list<Polynomial> gens);
};

/// Work limit for basis computations, counted in S-pair reductions.
struct Budget {
    long max_pair_reductions = 2'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(long work)
        : std::runtime_error("Groebner budget exceeded after " + std::to_string(work) +
                             " pair reductions"),
          work_(work) {}
    long work_counter() const { return work_; }

private:
    long work_;
};

class DegenerateSlices : public std::runtime_error {
public:
    DegenerateSlices() : std::runtime_error("projective_degree: slice agreement never reached") {}
};

/// Reduced Groebner basis: monic elements, no head term divisible by another
/// head, every S-polynomial reduces to zero.
class GroebnerBasis {
public:
    GroebnerBasis(ContextPtr ctx, std::vector<Polynomial> elems, long work);

    const ContextPtr& context() const { return ctx_; }
    const TermOrder& order() const { return ctx_->order(); }
    const std::vector<Polynomial>& elements() const { return elems_; }
    long work_counter() const { return work_; }

    bool is_unit() const;

private:
    ContextPtr ctx_;
    std::vector<Polynomial> elems_;
    long work_;
};

/// Remainder of p under multivariate division by the basis; no term of the
/// result is divisible by any head term of gb.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Reduced Groebner basis w.r.t. `order` (normal pair-selection strategy,
/// Gebauer-Moeller pair elimination); deterministic for fixed input.
GroebnerBasis buchberger(const Ideal& I, const TermOrder& order, const Budget& budget = {});
/// Same, using the order already carried by the ideal's context.
GroebnerBasis buchberger(const Ideal& I, const Budget& budget = {});

bool is_unit_ideal(const Ideal& I, const Budget& budget = {});

/// I ∩ Q[remaining variables], computed with a block order eliminating
/// `drop`; the result lives in the context of the remaining variables.
Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& drop,
                        const Budget& budget = {});

/// I : f^∞ via the auxiliary-variable method (single elimination call).
Ideal saturate_by_poly(const Ideal& I, const Polynomial& f, const Budget& budget = {});

/// I ∩ J via t·I + (1-t)·J and elimination of t.
Ideal ideal_intersection(const Ideal& I, const Ideal& J, const Budget& budget = {});

/// I : J^∞ = ∩_{g ∈ J} (I : g^∞).
Ideal saturate_by_ideal(const Ideal& I, const Ideal& J, const Budget& budget = {});

struct ZeroDimensionality {
    enum class Kind { Empty, ZeroDimensional, PositiveDimensional };
    Kind kind;
    long standard_monomial_count = 0; // meaningful when ZeroDimensional
};

/// Leading-term criterion: zero-dimensional iff every variable has a pure
/// power among the head terms; Empty flags the unit ideal distinctly.
ZeroDimensionality is_zero_dimensional(const Ideal& I, const Budget& budget = {});

/// Degree of a projective scheme of dimension <= 1 via a seeded random
/// rational coordinate change (entries in {-9..9}), one hyperplane slice when
/// the scheme is a curve, and a standard-monomial count in the affine chart.
/// Two independent changes must agree; retries up to 5 times.
long projective_degree(const Ideal& I_homogeneous, std::uint64_t seed, const Budget& budget = {});

/// All minor_size x minor_size minors of the Jacobian of polys w.r.t. vars;
/// zero minors are dropped.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& polys,
                                        const std::vector<std::string>& vars, int minor_size);

/// Determinant by cofactor expansion (entries in one shared context).
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m);

/// Post-hoc full Buchberger criterion; used by the verification tests.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Ideal equality via mutual normal-form membership of generators.
bool same_ideal(const Ideal& I, const Ideal& J, const Budget& budget = {});

/// Radical membership: f ∈ √I tested by the auxiliary-variable trick
/// (1 - y·f adjoined; unit ideal iff member).
bool in_radical(const Polynomial& f, const Ideal& I, const Budget& budget = {});

/// Deterministic 64-bit generator used for seeded random slices.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform-ish value in [lo, hi] (small ranges only).
    int next_in(int lo, int hi);

private:
    std::uint64_t state_;
};

} // namespace trisector

#endif
