#ifndef TRISECTOR_MONOMIAL_HPP
#define TRISECTOR_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trisector {

/// Exponent vector of fixed length (the context arity).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(std::size_t arity) { return Monomial(std::vector<int>(arity, 0)); }

    std::size_t arity() const { return exps_.size(); }
    int exponent(std::size_t i) const { return exps_[i]; }
    long total_degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Quotient o / this; caller guarantees divisibility.
    Monomial divide_into(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial pow(unsigned e) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> exps_;
    long degree_ = 0;
};

enum class OrderKind { Lex, Grevlex };

/// Total multiplicative monomial order: lexicographic, graded reverse
/// lexicographic, or a block (elimination) order that compares a leading
/// block of variables first.
class TermOrder {
public:
    static TermOrder lex() { return TermOrder(Kind::Lex, 0, OrderKind::Lex, OrderKind::Lex); }
    static TermOrder grevlex() { return TermOrder(Kind::Grevlex, 0, OrderKind::Grevlex, OrderKind::Grevlex); }
    static TermOrder block(std::size_t elim_count,
                           OrderKind front = OrderKind::Grevlex,
                           OrderKind back = OrderKind::Grevlex) {
        return TermOrder(Kind::Block, elim_count, front, back);
    }

    bool is_block() const { return kind_ == Kind::Block; }
    bool is_lex() const { return kind_ == Kind::Lex; }
    std::size_t block_size() const { return block_; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const TermOrder& o) const {
        return kind_ == o.kind_ && block_ == o.block_ && front_ == o.front_ && back_ == o.back_;
    }

    std::string describe() const;

private:
    enum class Kind { Lex, Grevlex, Block };
    TermOrder(Kind k, std::size_t b, OrderKind f, OrderKind bk)
        : kind_(k), block_(b), front_(f), back_(bk) {}

    Kind kind_;
    std::size_t block_;
    OrderKind front_, back_;
};

/// Ordered list of distinct variable names plus the term order used for
/// every polynomial living in this ring.
class VarContext {
public:
    VarContext(std::vector<std::string> variables, TermOrder order);

    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(std::size_t i) const { return vars_[i]; }
    const TermOrder& order() const { return order_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarContext& o) const {
        return vars_ == o.vars_ && order_ == o.order_;
    }

private:
    std::vector<std::string> vars_;
    TermOrder order_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> variables, TermOrder order = TermOrder::grevlex());

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace trisector

#endif
