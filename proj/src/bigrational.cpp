#include "symcrit/bigrational.hpp"

#include <functional>
#include <ostream>

#include "symcrit/errors.hpp"

namespace symcrit {

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational::BigRational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    mpz_class num;
    mpz_class den = 1;
    try {
        if (slash == std::string::npos) {
            num = mpz_class(s, 10);
        } else {
            num = mpz_class(s.substr(0, slash), 10);
            den = mpz_class(s.substr(slash + 1), 10);
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal '" + s + "'");
    }
    return BigRational(num, den);
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    BigRational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

BigRational BigRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BigRational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational r;
    mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

std::size_t BigRational::hash() const {
    const std::size_t a = mpz_get_si(q_.get_num_mpz_t());
    const std::size_t b = mpz_get_si(q_.get_den_mpz_t());
    return a * 1000003u ^ b;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

}  // namespace symcrit
