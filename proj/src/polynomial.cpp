#include "trisector/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trisector {

Polynomial Polynomial::zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

Polynomial Polynomial::constant(ContextPtr ctx, Rational c) {
    Polynomial p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(p.ctx_->arity()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
    auto idx = ctx->index_of(name);
    if (!idx) throw std::invalid_argument("Polynomial: unknown variable '" + std::string(name) + "'");
    std::vector<int> e(ctx->arity(), 0);
    e[*idx] = 1;
    Polynomial p(std::move(ctx));
    p.terms_.emplace_back(Monomial(std::move(e)), Rational(1));
    return p;
}

Polynomial Polynomial::monomial_term(ContextPtr ctx, Monomial m, Rational c) {
    if (m.arity() != ctx->arity()) throw std::invalid_argument("Polynomial: monomial arity mismatch");
    Polynomial p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    Polynomial p(std::move(ctx));
    for (const auto& t : terms)
        if (t.first.arity() != p.ctx_->arity())
            throw std::invalid_argument("Polynomial: term arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    const TermOrder& ord = ctx_->order();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.first, b.first) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

void Polynomial::require_same_context(const Polynomial& o) const {
    if (!same_context(ctx_, o.ctx_))
        throw std::invalid_argument("Polynomial: context mismatch");
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!terms_[0].first.is_one())
        throw std::logic_error("Polynomial: not a constant");
    return terms_[0].second;
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
    return terms_[0].first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
    return terms_[0].second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    const TermOrder& ord = ctx_->order();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term& t, const Monomial& key) {
        return ord.compare(t.first, key) > 0;
    });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, -t.second);
    return r;
}

namespace {

// Merge of two descending term lists.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b,
                                          const TermOrder& ord, bool negate_b) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.compare(a[i].first, b[j].first);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
            ++j;
        } else {
            Rational s = negate_b ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_context(o);
    terms_ = merge_terms(terms_, o.terms_, ctx_->order(), false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_context(o);
    terms_ = merge_terms(terms_, o.terms_, ctx_->order(), true);
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r += b;
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r -= b;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_context(b);
    std::vector<Polynomial::Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            prods.emplace_back(ta.first * tb.first, ta.second * tb.second);
    return Polynomial::from_terms(a.ctx_, std::move(prods));
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c.is_zero()) return Polynomial::zero(a.ctx_);
    Polynomial r(a.ctx_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.emplace_back(t.first, t.second * c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Rational& c) {
    return a + Polynomial::constant(a.ctx_, c);
}

Polynomial operator-(const Polynomial& a, const Rational& c) {
    return a + Polynomial::constant(a.ctx_, -c);
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ctx_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

void Polynomial::add_scaled(const Polynomial& g, const Rational& c, const Monomial& shift) {
    require_same_context(g);
    std::vector<Term> shifted;
    shifted.reserve(g.terms_.size());
    for (const auto& t : g.terms_) shifted.emplace_back(t.first * shift, t.second * c);
    terms_ = merge_terms(terms_, shifted, ctx_->order(), false);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings,
                                  ContextPtr result_ctx) const {
    const std::size_t n = ctx_->arity();
    std::vector<const Polynomial*> bound(n, nullptr);
    for (const auto& [name, value] : bindings) {
        auto idx = ctx_->index_of(name);
        if (!idx) throw std::invalid_argument("substitute: unknown variable '" + name + "'");
        bound[*idx] = &value;
    }
    if (!result_ctx) {
        std::vector<std::string> remaining;
        for (std::size_t i = 0; i < n; ++i)
            if (!bound[i]) remaining.push_back(ctx_->variable(i));
        TermOrder ord = ctx_->order();
        if (ord.is_block() && (ord.block_size() == 0 || ord.block_size() >= remaining.size()))
            ord = TermOrder::grevlex();
        if (remaining.empty()) ord = TermOrder::grevlex();
        result_ctx = make_context(std::move(remaining), ord);
    }
    for (const auto& [name, value] : bindings) {
        if (!same_context(value.context(), result_ctx))
            throw std::invalid_argument("substitute: binding for '" + name +
                                        "' not in the result context");
    }
    // Position of each unbound variable in the result context.
    std::vector<std::size_t> target(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (bound[i]) continue;
        auto idx = result_ctx->index_of(ctx_->variable(i));
        if (!idx)
            throw std::invalid_argument("substitute: result context lacks variable '" +
                                        ctx_->variable(i) + "'");
        target[i] = *idx;
    }
    // Power cache per bound variable.
    std::vector<std::vector<Polynomial>> powers(n);
    auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(result_ctx, Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * (*bound[i]));
        return cache[e];
    };

    Polynomial acc = zero(result_ctx);
    for (const auto& [mono, coeff] : terms_) {
        std::vector<int> rest(result_ctx->arity(), 0);
        Polynomial piece = constant(result_ctx, coeff);
        for (std::size_t i = 0; i < n; ++i) {
            int e = mono.exponent(i);
            if (e == 0) continue;
            if (bound[i])
                piece = piece * power_of(i, e);
            else
                rest[target[i]] += e;
        }
        acc += piece * monomial_term(result_ctx, Monomial(std::move(rest)), Rational(1));
    }
    return acc;
}

Polynomial Polynomial::substitute_values(const std::map<std::string, Rational>& bindings,
                                         ContextPtr result_ctx) const {
    std::map<std::string, Polynomial> polys;
    // Resolve the result context first so constants live in the right ring.
    if (!result_ctx) {
        std::vector<std::string> remaining;
        for (std::size_t i = 0; i < ctx_->arity(); ++i)
            if (!bindings.count(ctx_->variable(i))) remaining.push_back(ctx_->variable(i));
        TermOrder ord = ctx_->order();
        if (remaining.empty() ||
            (ord.is_block() && (ord.block_size() == 0 || ord.block_size() >= remaining.size())))
            ord = TermOrder::grevlex();
        result_ctx = make_context(std::move(remaining), ord);
    }
    for (const auto& [name, value] : bindings) polys.emplace(name, constant(result_ctx, value));
    return substitute(polys, result_ctx);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ctx_->arity())
        throw std::invalid_argument("evaluate: wrong point dimension");
    Rational acc(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational v = coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            int e = mono.exponent(i);
            if (e > 0) v *= point[i].pow(static_cast<unsigned long>(e));
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::homogenize(std::string_view new_var) const {
    if (ctx_->index_of(new_var))
        throw std::invalid_argument("homogenize: variable '" + std::string(new_var) +
                                    "' already in context");
    std::vector<std::string> vars = ctx_->variables();
    vars.emplace_back(new_var);
    ContextPtr hctx = make_context(std::move(vars), ctx_->order());
    const long d = total_degree();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [mono, coeff] : terms_) {
        std::vector<int> e = mono.exponents();
        e.push_back(static_cast<int>(d - mono.total_degree()));
        out.emplace_back(Monomial(std::move(e)), coeff);
    }
    return from_terms(hctx, std::move(out));
}

Polynomial Polynomial::dehomogenize(std::string_view var, const Rational& value) const {
    return substitute_values({{std::string(var), value}});
}

Polynomial Polynomial::partial_derivative(std::string_view var) const {
    auto idx = ctx_->index_of(var);
    if (!idx) throw std::invalid_argument("partial_derivative: unknown variable '" +
                                          std::string(var) + "'");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [mono, coeff] : terms_) {
        int e = mono.exponent(*idx);
        if (e == 0) continue;
        std::vector<int> ex = mono.exponents();
        ex[*idx] = e - 1;
        out.emplace_back(Monomial(std::move(ex)), coeff * Rational(e));
    }
    return from_terms(ctx_, std::move(out));
}

std::vector<bool> Polynomial::used_variables() const {
    std::vector<bool> used(ctx_->arity(), false);
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < used.size(); ++i)
            if (t.first.exponent(i) > 0) used[i] = true;
    return used;
}

Polynomial Polynomial::in_context(ContextPtr target) const {
    std::vector<std::size_t> map(ctx_->arity());
    std::vector<bool> used = used_variables();
    for (std::size_t i = 0; i < ctx_->arity(); ++i) {
        auto idx = target->index_of(ctx_->variable(i));
        if (!idx) {
            if (used[i])
                throw std::invalid_argument("in_context: target lacks variable '" +
                                            ctx_->variable(i) + "'");
            map[i] = 0;
        } else {
            map[i] = *idx;
        }
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [mono, coeff] : terms_) {
        std::vector<int> e(target->arity(), 0);
        for (std::size_t i = 0; i < ctx_->arity(); ++i)
            if (mono.exponent(i) > 0) e[map[i]] += mono.exponent(i);
        out.emplace_back(Monomial(std::move(e)), coeff);
    }
    return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::map_positional(ContextPtr target) const {
    if (target->arity() != ctx_->arity())
        throw std::invalid_argument("map_positional: arity mismatch");
    std::vector<Term> out = terms_;
    return from_terms(std::move(target), std::move(out));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const long d = terms_[0].first.total_degree();
    for (const auto& t : terms_)
        if (t.first.total_degree() != d) return false;
    return true;
}

Polynomial Polynomial::homogeneous_part(long d) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.first.total_degree() == d) out.push_back(t);
    return from_terms(ctx_, std::move(out));
}

Polynomial Polynomial::truncated(long bound) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.first.total_degree() < bound) out.push_back(t);
    return from_terms(ctx_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_coefficient().inverse();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (mono.is_one() || !c.is_one()) {
            os << c.to_string();
            printed_coeff = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < ctx_->arity(); ++i) {
            int e = mono.exponent(i);
            if (e == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << ctx_->variable(i);
            if (e > 1) os << "^" << e;
            first_var = false;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    std::string take_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            std::size_t save = pos;
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) pos = save; // '/' not followed by digits
        }
        return std::string(s.substr(start, pos - start));
    }
    std::string take_identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

Polynomial parse_polynomial(ContextPtr ctx, std::string_view text) {
    Lexer lx{text};
    std::vector<Polynomial::Term> terms;
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            if (expect_term) {
                if (c == '-') sign = -sign;
            } else {
                sign = (c == '-') ? -1 : 1;
                expect_term = true;
            }
            continue;
        }
        if (!expect_term) throw std::invalid_argument("parse_polynomial: expected '+' or '-'");
        // One term: optional coefficient, then '*'-joined variable powers.
        Rational coeff(1);
        std::vector<int> exps(ctx->arity(), 0);
        bool more = true;
        bool any_factor = false;
        while (more) {
            if (lx.eof()) break;
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                coeff *= Rational::from_string(lx.take_number());
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = lx.take_identifier();
                auto idx = ctx->index_of(name);
                if (!idx)
                    throw std::invalid_argument("parse_polynomial: unknown variable '" + name + "'");
                int e = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    lx.take();
                    std::string num = lx.take_number();
                    if (num.empty()) throw std::invalid_argument("parse_polynomial: bad exponent");
                    e = std::stoi(num);
                }
                exps[*idx] += e;
                any_factor = true;
            } else {
                throw std::invalid_argument(std::string("parse_polynomial: unexpected '") + p + "'");
            }
            if (!lx.eof() && lx.peek() == '*')
                lx.take();
            else
                more = false;
        }
        if (!any_factor) throw std::invalid_argument("parse_polynomial: empty term");
        if (sign < 0) coeff = -coeff;
        terms.emplace_back(Monomial(std::move(exps)), std::move(coeff));
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !terms.empty())
        throw std::invalid_argument("parse_polynomial: trailing operator");
    return Polynomial::from_terms(std::move(ctx), std::move(terms));
}

} // namespace trisector
