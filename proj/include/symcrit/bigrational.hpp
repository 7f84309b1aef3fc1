#ifndef SYMCRIT_BIGRATIONAL_HPP
#define SYMCRIT_BIGRATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace symcrit {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class that hides
/// the gmpxx expression templates (they do not mix well with Eigen).
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}  // NOLINT: implicit from integer literals is intended
    BigRational(long num, long den);
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const mpz_class& v) : q_(v) {}
    explicit BigRational(const mpq_class& v);

    /// Parses "a" or "a/b" with optional leading sign.
    static BigRational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational inverse() const;
    BigRational pow(long e) const;

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    std::string str() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }
    std::size_t hash() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

inline bool is_zero(const BigRational& q) { return q.is_zero(); }

}  // namespace symcrit

namespace Eigen {

template <>
struct NumTraits<symcrit::BigRational> : GenericNumTraits<symcrit::BigRational> {
    using Real = symcrit::BigRational;
    using NonInteger = symcrit::BigRational;
    using Nested = symcrit::BigRational;
    using Literal = symcrit::BigRational;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };

    // Exact arithmetic: nothing is ever "approximately" equal.
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SYMCRIT_BIGRATIONAL_HPP
