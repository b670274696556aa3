#include "trisector/univariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trisector {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UnivariatePoly UnivariatePoly::constant(Rational c) {
    return UnivariatePoly(std::vector<Rational>{std::move(c)});
}

UnivariatePoly UnivariatePoly::x() {
    return UnivariatePoly({Rational(0), Rational(1)});
}

UnivariatePoly UnivariatePoly::from_polynomial(const Polynomial& p, std::string_view var) {
    auto idx = p.context()->index_of(var);
    if (!idx) throw std::invalid_argument("from_polynomial: unknown variable");
    std::vector<Rational> coeffs;
    for (const auto& [mono, coeff] : p.terms()) {
        if (mono.total_degree() != mono.exponent(*idx))
            throw std::invalid_argument("from_polynomial: support not univariate in '" +
                                        std::string(var) + "'");
        std::size_t e = static_cast<std::size_t>(mono.exponent(*idx));
        if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
        coeffs[e] = coeff;
    }
    return UnivariatePoly(std::move(coeffs));
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UnivariatePoly::leading_coefficient() const {
    if (coeffs_.empty()) throw std::logic_error("UnivariatePoly: leading coefficient of zero");
    return coeffs_.back();
}

Rational UnivariatePoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return UnivariatePoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (coeffs_.empty()) return *this;
    return *this * coeffs_.back().inverse();
}

UnivariatePoly UnivariatePoly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const Rational& c) {
    if (c.is_zero()) return UnivariatePoly();
    std::vector<Rational> r(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i] * c;
    return UnivariatePoly(std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("UnivariatePoly: division by zero");
    UnivariatePoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UnivariatePoly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
    const Rational lc_inv = divisor.leading_coefficient().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const long shift = rem.degree() - divisor.degree();
        Rational f = rem.leading_coefficient() * lc_inv;
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rem.coeffs_[static_cast<std::size_t>(shift) + i] -= f * divisor.coeffs_[i];
        rem.trim();
    }
    return {UnivariatePoly(std::move(q)), rem};
}

UnivariatePoly UnivariatePoly::deflate(const Rational& root) const {
    auto [q, r] = divmod(UnivariatePoly({-root, Rational(1)}));
    if (!r.is_zero()) throw std::invalid_argument("deflate: not a root");
    return q;
}

std::string UnivariatePoly::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (i == 0 || !a.is_one()) {
            os << a.to_string();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly f = a, g = b;
    while (!g.is_zero()) {
        UnivariatePoly r = f.mod(g);
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

UnivariatePoly squarefree_part(const UnivariatePoly& f) {
    if (f.degree() <= 1) return f;
    UnivariatePoly g = gcd(f, f.derivative());
    if (g.degree() <= 0) return f;
    return f.divmod(g).first;
}

ExtendedGcd extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly r0 = a, r1 = b;
    UnivariatePoly s0 = UnivariatePoly::constant(Rational(1)), s1;
    UnivariatePoly t0, t1 = UnivariatePoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UnivariatePoly s = s0 - q * s1;
        UnivariatePoly t = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s;
        t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational scale = r0.leading_coefficient().inverse();
    return {r0 * scale, s0 * scale, t0 * scale};
}

UnivariatePoly inverse_mod(const UnivariatePoly& a, const UnivariatePoly& m) {
    ExtendedGcd e = extended_gcd(a, m);
    if (e.g.degree() != 0)
        throw std::invalid_argument("inverse_mod: inputs share a nontrivial factor");
    return e.s.mod(m);
}

Rational sylvester_resultant(const UnivariatePoly& f, const UnivariatePoly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("sylvester_resultant: both inputs zero");
    if (f.is_zero() || g.is_zero()) return Rational(0);
    const long m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) return f.leading_coefficient().pow(static_cast<unsigned long>(n));
    if (n == 0) return g.leading_coefficient().pow(static_cast<unsigned long>(m));

    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, Rational(0)));
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] =
                f.coefficient(static_cast<std::size_t>(m - i));
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i)
            a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] =
                g.coefficient(static_cast<std::size_t>(n - i));

    // Exact Gaussian elimination.
    Rational det(1);
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && a[pivot][col].is_zero()) ++pivot;
        if (pivot == size) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < size; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] * inv;
            for (std::size_t c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

namespace {

int sign_at_pos_infinity(const UnivariatePoly& p) {
    return p.is_zero() ? 0 : p.leading_coefficient().sign();
}

int sign_at_neg_infinity(const UnivariatePoly& p) {
    if (p.is_zero()) return 0;
    int s = p.leading_coefficient().sign();
    return (p.degree() % 2 == 0) ? s : -s;
}

long variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& f) {
    std::vector<UnivariatePoly> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        const UnivariatePoly& a = chain[chain.size() - 2];
        const UnivariatePoly& b = chain.back();
        chain.push_back(-(a.mod(b)));
    }
    chain.pop_back();
    return chain;
}

} // namespace

long sturm_real_root_count(const UnivariatePoly& f, const RootInterval& interval) {
    if (f.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
    if (interval.lo && interval.hi && *interval.lo > *interval.hi) return 0;
    UnivariatePoly g = squarefree_part(f);
    long count = 0;
    // Closed endpoints: peel off endpoint roots so Sturm sees a half-open
    // interval with non-root boundary values.
    if (interval.lo && g.evaluate(*interval.lo).is_zero()) {
        ++count;
        g = g.deflate(*interval.lo);
    }
    if (interval.hi && !g.is_zero() && g.degree() >= 1 && g.evaluate(*interval.hi).is_zero() &&
        !(interval.lo && *interval.lo == *interval.hi)) {
        ++count;
        g = g.deflate(*interval.hi);
    }
    if (g.degree() <= 0) return count;

    auto chain = sturm_chain(g);
    std::vector<int> lo_signs, hi_signs;
    lo_signs.reserve(chain.size());
    hi_signs.reserve(chain.size());
    for (const auto& p : chain) {
        lo_signs.push_back(interval.lo ? p.evaluate(*interval.lo).sign() : sign_at_neg_infinity(p));
        hi_signs.push_back(interval.hi ? p.evaluate(*interval.hi).sign() : sign_at_pos_infinity(p));
    }
    return count + variations(lo_signs) - variations(hi_signs);
}

namespace {

void divisors_of(const mpz_class& n, std::vector<mpz_class>& out) {
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            mpz_class q = a / d;
            if (q != d) out.push_back(q);
        }
    }
}

} // namespace

std::vector<Rational> rational_roots(const UnivariatePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    UnivariatePoly g = squarefree_part(f);
    if (g.coefficient(0).is_zero()) {
        roots.emplace_back(0);
        g = g.deflate(Rational(0));
    }
    if (g.degree() == 1) {
        roots.push_back(-g.coefficient(0) / g.coefficient(1));
    } else if (g.degree() == 2) {
        const Rational a = g.coefficient(2), b = g.coefficient(1), c = g.coefficient(0);
        Rational disc = b * b - Rational(4) * a * c, root;
        if (disc.is_square(&root)) {
            roots.push_back((-b + root) / (Rational(2) * a));
            roots.push_back((-b - root) / (Rational(2) * a));
        }
    } else if (g.degree() >= 3) {
        // Integer-coefficient candidates p/q with p | a0, q | an.
        mpz_class den_lcm = 1;
        for (const auto& c : g.coefficients())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> ints;
        for (const auto& c : g.coefficients())
            ints.push_back(c.numerator() * (den_lcm / c.denominator()));
        mpz_class a0 = ints.front(), an = ints.back();
        std::vector<mpz_class> ps, qs;
        divisors_of(a0, ps);
        divisors_of(an, qs);
        for (const auto& p : ps)
            for (const auto& q : qs) {
                for (int sgn : {1, -1}) {
                    Rational cand(mpq_class(sgn * p, q));
                    if (g.evaluate(cand).is_zero()) roots.push_back(cand);
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace trisector
