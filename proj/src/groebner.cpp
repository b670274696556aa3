#include "trisector/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace trisector {

Ideal::Ideal(ContextPtr c, std::vector<Polynomial> gens) : ctx(std::move(c)) {
    generators.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_context(g.context(), ctx))
            throw std::invalid_argument("Ideal: generator context mismatch");
        generators.push_back(std::move(g));
    }
}

Ideal Ideal::of(ContextPtr c, std::initializer_list<Polynomial> gens) {
    return Ideal(std::move(c), std::vector<Polynomial>(gens));
}

GroebnerBasis::GroebnerBasis(ContextPtr ctx, std::vector<Polynomial> elems, long work)
    : ctx_(std::move(ctx)), elems_(std::move(elems)), work_(work) {}

bool GroebnerBasis::is_unit() const {
    return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero();
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int SplitMix64::next_in(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

namespace {

// Shared work accounting. Elementary division steps are folded into the
// pair-reduction counter at a coarse rate so a single runaway reduction
// still trips the budget deterministically.
struct WorkCounter {
    long pairs = 0;
    long steps = 0;
    long limit;

    explicit WorkCounter(const Budget& b) : limit(b.max_pair_reductions) {}
    long effective() const { return pairs + steps / 1024; }
    void charge_pair() {
        ++pairs;
        check();
    }
    void charge_step() {
        ++steps;
        if ((steps & 1023) == 0) check();
    }
    void check() const {
        if (effective() > limit) throw BudgetExceeded(effective());
    }
};

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       WorkCounter* work) {
    if (basis.empty()) return p;
    const ContextPtr& ctx = p.context();
    Polynomial rest = p;
    std::vector<Polynomial::Term> head; // irreducible prefix, already sorted desc
    while (!rest.is_zero()) {
        const Monomial& lm = rest.leading_monomial();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Rational c = -(rest.leading_coefficient() / reducer->leading_coefficient());
            rest.add_scaled(*reducer, c, reducer->leading_monomial().divide_into(lm));
            if (work) work->charge_step();
        } else {
            head.emplace_back(rest.terms().front());
            rest -= Polynomial::monomial_term(ctx, lm, rest.leading_coefficient());
        }
    }
    return Polynomial::from_terms(ctx, std::move(head));
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// Normal selection: minimal lcm total degree, ties by the term order on the
// lcm, then by indices.
std::size_t select_pair(const std::vector<Pair>& pairs, const TermOrder& ord) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const Pair& a = pairs[k];
        const Pair& b = pairs[best];
        if (a.lcm.total_degree() != b.lcm.total_degree()) {
            if (a.lcm.total_degree() < b.lcm.total_degree()) best = k;
            continue;
        }
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) {
            if (c < 0) best = k;
            continue;
        }
        if (a.i != b.i ? a.i < b.i : a.j < b.j) best = k;
    }
    return best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
    const Monomial mf = f.leading_monomial().divide_into(lcm);
    const Monomial mg = g.leading_monomial().divide_into(lcm);
    Polynomial s = Polynomial::zero(f.context());
    s.add_scaled(f, f.leading_coefficient().inverse(), mf);
    s.add_scaled(g, -(g.leading_coefficient().inverse()), mg);
    return s;
}

// Gebauer-Moeller update: prune new pairs by the M/F criteria and the
// product criterion, old pairs by the chain criterion, then install h.
void update_pairs(std::vector<Polynomial>& basis, std::vector<Pair>& pairs, Polynomial h,
                  const TermOrder& ord) {
    const std::size_t t = basis.size();
    const Monomial& lmh = h.leading_monomial();

    std::vector<Pair> cand;
    cand.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
        cand.push_back(Pair{i, t, basis[i].leading_monomial().lcm(lmh)});
    std::sort(cand.begin(), cand.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.total_degree() != b.lcm.total_degree())
            return a.lcm.total_degree() < b.lcm.total_degree();
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.i < b.i;
    });
    // M and F: keep a pair only if no kept pair's lcm divides its lcm
    // (divisors sort earlier, so one pass suffices).
    std::vector<Pair> kept;
    for (auto& c : cand) {
        bool dominated = false;
        for (const auto& k : kept) {
            if (k.lcm.divides(c.lcm)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(c));
    }
    // Product criterion: coprime head terms reduce to zero.
    std::vector<Pair> fresh;
    for (auto& k : kept)
        if (!basis[k.i].leading_monomial().coprime(lmh)) fresh.push_back(std::move(k));
    // Chain criterion on the old queue.
    std::vector<Pair> surviving;
    surviving.reserve(pairs.size());
    for (auto& p : pairs) {
        const bool chained = lmh.divides(p.lcm) &&
                             basis[p.i].leading_monomial().lcm(lmh) != p.lcm &&
                             basis[p.j].leading_monomial().lcm(lmh) != p.lcm;
        if (!chained) surviving.push_back(std::move(p));
    }
    pairs = std::move(surviving);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    basis.push_back(std::move(h));
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const TermOrder& ord,
                                     WorkCounter* work) {
    // Minimal: drop elements whose head is divisible by another head.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Reduced: tail-reduce each element against the others; repeat to a fixed
    // point in case a tail reduction changes a reducer.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = reduce_full(minimal[i], others, work).monic();
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return minimal;
}

} // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
    return reduce_full(p, basis, nullptr);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (!same_context(p.context(), gb.context()))
        throw std::invalid_argument("normal_form: context mismatch");
    return reduce_full(p, gb.elements(), nullptr);
}

GroebnerBasis buchberger(const Ideal& I, const TermOrder& order, const Budget& budget) {
    if (I.ctx->arity() == 0) throw std::invalid_argument("buchberger: empty context");
    ContextPtr ctx = (I.ctx->order() == order)
                         ? I.ctx
                         : make_context(I.ctx->variables(), order);
    WorkCounter work(budget);

    std::vector<Polynomial> input;
    input.reserve(I.generators.size());
    for (const auto& g : I.generators) {
        Polynomial h = same_context(g.context(), ctx) ? g : g.map_positional(ctx);
        if (!h.is_zero()) input.push_back(h.monic());
    }
    std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
        int c = order.compare(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return a.term_count() < b.term_count();
    });

    std::vector<Polynomial> basis;
    std::vector<Pair> pairs;
    for (const auto& g : input) {
        Polynomial r = reduce_full(g, basis, &work);
        if (!r.is_zero()) update_pairs(basis, pairs, r.monic(), order);
    }

    while (!pairs.empty()) {
        const std::size_t k = select_pair(pairs, order);
        Pair p = std::move(pairs[k]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
        work.charge_pair();
        Polynomial s = s_polynomial(basis[p.i], basis[p.j], p.lcm);
        Polynomial r = reduce_full(s, basis, &work);
        if (!r.is_zero()) update_pairs(basis, pairs, r.monic(), order);
    }

    std::vector<Polynomial> reduced = reduce_basis(std::move(basis), order, &work);
    return GroebnerBasis(ctx, std::move(reduced), work.effective());
}

GroebnerBasis buchberger(const Ideal& I, const Budget& budget) {
    return buchberger(I, I.ctx->order(), budget);
}

bool is_unit_ideal(const Ideal& I, const Budget& budget) {
    return buchberger(I, budget).is_unit();
}

namespace {

std::string fresh_variable(const ContextPtr& ctx, const std::string& stem) {
    for (int i = 0;; ++i) {
        std::string name = stem + std::to_string(i);
        if (!ctx->index_of(name)) return name;
    }
}

TermOrder result_order(const ContextPtr& source, std::size_t remaining_arity) {
    const TermOrder& o = source->order();
    if (!o.is_block() && remaining_arity > 0) return o;
    return TermOrder::grevlex();
}

} // namespace

Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& drop,
                        const Budget& budget) {
    const std::size_t n = I.ctx->arity();
    std::vector<bool> dropped(n, false);
    for (const auto& name : drop) {
        auto idx = I.ctx->index_of(name);
        if (!idx) throw std::invalid_argument("elimination_ideal: unknown variable '" + name + "'");
        dropped[*idx] = true;
    }
    std::vector<std::string> front, back;
    for (std::size_t i = 0; i < n; ++i)
        (dropped[i] ? front : back).push_back(I.ctx->variable(i));
    if (front.empty())
        return Ideal(I.ctx, buchberger(I, budget).elements());
    if (back.empty())
        throw std::invalid_argument("elimination_ideal: cannot drop every variable");

    std::vector<std::string> ordered = front;
    ordered.insert(ordered.end(), back.begin(), back.end());
    ContextPtr ectx = make_context(ordered, TermOrder::block(front.size()));
    std::vector<Polynomial> lifted;
    lifted.reserve(I.generators.size());
    for (const auto& g : I.generators) lifted.push_back(g.in_context(ectx));
    GroebnerBasis gb = buchberger(Ideal(ectx, std::move(lifted)), budget);

    ContextPtr rctx = make_context(back, result_order(I.ctx, back.size()));
    std::vector<Polynomial> kept;
    for (const auto& e : gb.elements()) {
        std::vector<bool> used = e.used_variables();
        bool touches_front = false;
        for (std::size_t i = 0; i < front.size(); ++i)
            if (used[i]) {
                touches_front = true;
                break;
            }
        if (!touches_front) kept.push_back(e.in_context(rctx));
    }
    return Ideal(rctx, std::move(kept));
}

Ideal saturate_by_poly(const Ideal& I, const Polynomial& f, const Budget& budget) {
    if (f.is_zero()) throw std::invalid_argument("saturate_by_poly: zero polynomial");
    const std::string aux = fresh_variable(I.ctx, "_y");
    std::vector<std::string> vars{aux};
    for (const auto& v : I.ctx->variables()) vars.push_back(v);
    ContextPtr ectx = make_context(vars, TermOrder::block(1));
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size() + 1);
    for (const auto& g : I.generators) gens.push_back(g.in_context(ectx));
    gens.push_back(Polynomial::constant(ectx, Rational(1)) -
                   Polynomial::variable(ectx, aux) * f.in_context(ectx));
    GroebnerBasis gb = buchberger(Ideal(ectx, std::move(gens)), budget);

    std::vector<Polynomial> kept;
    for (const auto& e : gb.elements()) {
        if (e.used_variables()[0]) continue; // still involves the auxiliary
        kept.push_back(e.in_context(I.ctx));
    }
    return Ideal(I.ctx, std::move(kept));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (!same_context(I.ctx, J.ctx))
        throw std::invalid_argument("ideal_intersection: context mismatch");
    const std::string aux = fresh_variable(I.ctx, "_t");
    std::vector<std::string> vars{aux};
    for (const auto& v : I.ctx->variables()) vars.push_back(v);
    ContextPtr ectx = make_context(vars, TermOrder::block(1));
    const Polynomial t = Polynomial::variable(ectx, aux);
    const Polynomial one_minus_t = Polynomial::constant(ectx, Rational(1)) - t;
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size() + J.generators.size());
    for (const auto& g : I.generators) gens.push_back(t * g.in_context(ectx));
    for (const auto& h : J.generators) gens.push_back(one_minus_t * h.in_context(ectx));
    GroebnerBasis gb = buchberger(Ideal(ectx, std::move(gens)), budget);

    std::vector<Polynomial> kept;
    for (const auto& e : gb.elements()) {
        if (e.used_variables()[0]) continue;
        kept.push_back(e.in_context(I.ctx));
    }
    return Ideal(I.ctx, std::move(kept));
}

Ideal saturate_by_ideal(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (J.generators.empty()) throw std::invalid_argument("saturate_by_ideal: empty ideal J");
    std::optional<Ideal> acc;
    for (const auto& g : J.generators) {
        Ideal part = saturate_by_poly(I, g, budget);
        acc = acc ? ideal_intersection(*acc, part, budget) : std::move(part);
    }
    return *acc;
}

namespace {

long count_standard_monomials(const std::vector<Monomial>& heads, const std::vector<int>& box) {
    // Walk the exponent box, counting monomials below every head term.
    const std::size_t n = box.size();
    std::vector<int> e(n, 0);
    long count = 0;
    while (true) {
        Monomial m{std::vector<int>(e)};
        bool divisible = false;
        for (const auto& h : heads)
            if (h.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
        std::size_t i = 0;
        while (i < n && ++e[i] >= box[i]) e[i++] = 0;
        if (i == n) break;
    }
    return count;
}

} // namespace

ZeroDimensionality is_zero_dimensional(const Ideal& I, const Budget& budget) {
    GroebnerBasis gb = buchberger(I, budget);
    if (gb.is_unit()) return {ZeroDimensionality::Kind::Empty, 0};
    const std::size_t n = I.ctx->arity();
    std::vector<int> box(n, -1);
    for (const auto& e : gb.elements()) {
        const Monomial& lm = e.leading_monomial();
        for (std::size_t i = 0; i < n; ++i) {
            if (lm.exponent(i) == lm.total_degree() && lm.total_degree() > 0 &&
                lm.exponent(i) > 0) {
                // pure power of variable i
                if (box[i] < 0 || lm.exponent(i) < box[i]) box[i] = lm.exponent(i);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (box[i] < 0) return {ZeroDimensionality::Kind::PositiveDimensional, 0};
    std::vector<Monomial> heads;
    heads.reserve(gb.elements().size());
    for (const auto& e : gb.elements()) heads.push_back(e.leading_monomial());
    return {ZeroDimensionality::Kind::ZeroDimensional, count_standard_monomials(heads, box)};
}

namespace {

Rational rational_matrix_determinant(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<Rational>> a = m;
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> random_invertible_matrix(SplitMix64& rng, std::size_t n) {
    while (true) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& v : row) v = Rational(rng.next_in(-9, 9));
        if (!rational_matrix_determinant(m).is_zero()) return m;
    }
}

Ideal apply_linear_change(const Ideal& I, const std::vector<std::vector<Rational>>& m) {
    const ContextPtr& ctx = I.ctx;
    const std::size_t n = ctx->arity();
    std::map<std::string, Polynomial> bindings;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial image = Polynomial::zero(ctx);
        for (std::size_t j = 0; j < n; ++j)
            image += Polynomial::variable(ctx, ctx->variable(j)) * m[i][j];
        bindings.emplace(ctx->variable(i), std::move(image));
    }
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(g.substitute(bindings, ctx));
    return Ideal(ctx, std::move(gens));
}

std::optional<long> degree_in_chart(const Ideal& J, SplitMix64& rng, const Budget& budget) {
    const ContextPtr& ctx = J.ctx;
    const std::size_t n = ctx->arity();
    const std::string& last = ctx->variable(n - 1);

    auto chart_count = [&](const Ideal& ideal) -> std::optional<long> {
        std::vector<Polynomial> gens;
        gens.reserve(ideal.generators.size());
        for (const auto& g : ideal.generators) gens.push_back(g.dehomogenize(last, Rational(1)));
        std::vector<std::string> avars(ctx->variables().begin(), ctx->variables().end() - 1);
        ContextPtr actx = make_context(avars, TermOrder::grevlex());
        std::vector<Polynomial> mapped;
        for (auto& g : gens) mapped.push_back(g.in_context(actx));
        ZeroDimensionality z = is_zero_dimensional(Ideal(actx, std::move(mapped)), budget);
        switch (z.kind) {
            case ZeroDimensionality::Kind::Empty: return 0;
            case ZeroDimensionality::Kind::ZeroDimensional: return z.standard_monomial_count;
            case ZeroDimensionality::Kind::PositiveDimensional: return std::nullopt;
        }
        return std::nullopt;
    };

    if (auto c = chart_count(J)) return c;
    // Positive-dimensional: the scheme is a curve, add one hyperplane slice.
    Polynomial slice = Polynomial::zero(ctx);
    while (slice.is_zero()) {
        slice = Polynomial::zero(ctx);
        for (std::size_t j = 0; j < n; ++j)
            slice += Polynomial::variable(ctx, ctx->variable(j)) * Rational(rng.next_in(-9, 9));
    }
    std::vector<Polynomial> gens = J.generators;
    gens.push_back(slice);
    return chart_count(Ideal(ctx, std::move(gens)));
}

} // namespace

long projective_degree(const Ideal& I_homogeneous, std::uint64_t seed, const Budget& budget) {
    for (const auto& g : I_homogeneous.generators)
        if (!g.is_homogeneous())
            throw std::invalid_argument("projective_degree: generators must be homogeneous");
    const std::size_t n = I_homogeneous.ctx->arity();
    for (int attempt = 0; attempt < 5; ++attempt) {
        SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(attempt) + 1);
        std::optional<long> d1 =
            degree_in_chart(apply_linear_change(I_homogeneous, random_invertible_matrix(rng, n)),
                            rng, budget);
        std::optional<long> d2 =
            degree_in_chart(apply_linear_change(I_homogeneous, random_invertible_matrix(rng, n)),
                            rng, budget);
        if (d1 && d2 && *d1 == *d2) return *d1;
    }
    throw DegenerateSlices();
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("polynomial_determinant: empty matrix");
    if (n == 1) return m[0][0];
    const ContextPtr& ctx = m[0][0].context();
    Polynomial det = Polynomial::zero(ctx);
    // Laplace expansion along the first row.
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * polynomial_determinant(sub);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& polys,
                                        const std::vector<std::string>& vars, int minor_size) {
    if (polys.empty()) throw std::invalid_argument("jacobian_minors: no polynomials");
    const std::size_t rows = polys.size(), cols = vars.size();
    if (minor_size <= 0 || static_cast<std::size_t>(minor_size) > std::min(rows, cols))
        throw std::invalid_argument("jacobian_minors: size out of range");
    std::vector<std::vector<Polynomial>> jac(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& v : vars) jac[r].push_back(polys[r].partial_derivative(v));

    auto combinations = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            out.push_back(idx);
            std::size_t i = k;
            while (i-- > 0) {
                if (idx[i] != i + n - k) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) return out;
            }
        }
    };

    const auto k = static_cast<std::size_t>(minor_size);
    std::vector<Polynomial> minors;
    for (const auto& rsel : combinations(rows, k)) {
        for (const auto& csel : combinations(cols, k)) {
            std::vector<std::vector<Polynomial>> sub(k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub[a].push_back(jac[rsel[a]][csel[b]]);
            Polynomial d = polynomial_determinant(sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
        }
    }
    return minors;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& els = gb.elements();
    for (const auto& e : els) {
        if (e.is_zero()) return false;
        if (!e.leading_coefficient().is_one()) return false;
    }
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            const Monomial lcm = els[i].leading_monomial().lcm(els[j].leading_monomial());
            Polynomial s = s_polynomial(els[i], els[j], lcm);
            if (!normal_form(s, els).is_zero()) return false;
        }
    return true;
}

bool same_ideal(const Ideal& I, const Ideal& J, const Budget& budget) {
    if (!same_context(I.ctx, J.ctx)) return false;
    GroebnerBasis gi = buchberger(I, budget);
    GroebnerBasis gj = buchberger(J, budget);
    for (const auto& g : I.generators)
        if (!normal_form(g, gj).is_zero()) return false;
    for (const auto& g : J.generators)
        if (!normal_form(g, gi).is_zero()) return false;
    return true;
}

bool in_radical(const Polynomial& f, const Ideal& I, const Budget& budget) {
    const std::string aux = fresh_variable(I.ctx, "_r");
    std::vector<std::string> vars = I.ctx->variables();
    vars.push_back(aux);
    ContextPtr ectx = make_context(vars, TermOrder::grevlex());
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size() + 1);
    for (const auto& g : I.generators) gens.push_back(g.in_context(ectx));
    gens.push_back(Polynomial::constant(ectx, Rational(1)) -
                   Polynomial::variable(ectx, aux) * f.in_context(ectx));
    return is_unit_ideal(Ideal(ectx, std::move(gens)), budget);
}

} // namespace trisector
