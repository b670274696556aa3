#include "trisector/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace trisector {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { canonicalize(); }

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::string s(text);
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(r); // canonical since the base is
}

bool Rational::is_square(Rational* root) const {
    if (sign() < 0) return false;
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rational(mpq_class(rn, rd));
    }
    return true;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace trisector
