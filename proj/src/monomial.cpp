#include "trisector/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trisector {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    r.degree_ = degree_ + o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = o.exps_[i] - exps_[i];
    r.degree_ = o.degree_ - degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] = std::max(exps_[i], o.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] = std::min(exps_[i], o.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

Monomial Monomial::pow(unsigned e) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] * static_cast<int>(e);
    r.degree_ = degree_ * static_cast<long>(e);
    return r;
}

namespace {

int cmp_lex(const int* a, const int* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex(const int* a, const int* b, std::size_t n) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    // equal degree: rightmost nonzero of a-b negative  =>  a > b
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_piece(OrderKind k, const int* a, const int* b, std::size_t n) {
    return k == OrderKind::Lex ? cmp_lex(a, b, n) : cmp_grevlex(a, b, n);
}

} // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.arity();
    if (n != b.arity()) throw std::invalid_argument("TermOrder: arity mismatch");
    const int* pa = a.exponents().data();
    const int* pb = b.exponents().data();
    switch (kind_) {
        case Kind::Lex:
            return cmp_lex(pa, pb, n);
        case Kind::Grevlex:
            return cmp_grevlex(pa, pb, n);
        case Kind::Block: {
            if (block_ == 0 || block_ >= n)
                throw std::invalid_argument("TermOrder: block size out of range");
            if (int c = cmp_piece(front_, pa, pb, block_)) return c;
            return cmp_piece(back_, pa + block_, pb + block_, n - block_);
        }
    }
    return 0;
}

std::string TermOrder::describe() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: return "grevlex";
        case Kind::Block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

VarContext::VarContext(std::vector<std::string> variables, TermOrder order)
    : vars_(std::move(variables)), order_(order) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw std::invalid_argument("VarContext: duplicate variable '" + vars_[i] + "'");
    if (order_.is_block() && (order_.block_size() == 0 || order_.block_size() >= vars_.size()))
        throw std::invalid_argument("VarContext: block elimination count out of range");
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> variables, TermOrder order) {
    return std::make_shared<VarContext>(std::move(variables), order);
}

} // namespace trisector
