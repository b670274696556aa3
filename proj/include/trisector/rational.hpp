#ifndef TRISECTOR_RATIONAL_HPP
#define TRISECTOR_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace trisector {

/// Arbitrary-precision rational, always kept in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v);
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
    static Rational from_string(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned long e) const;

    /// True when this is the square of a rational; if so *root (when non-null)
    /// receives the non-negative square root.
    bool is_square(Rational* root = nullptr) const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

private:
    mpq_class v_;
    void canonicalize() { v_.canonicalize(); }
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace trisector

#endif
